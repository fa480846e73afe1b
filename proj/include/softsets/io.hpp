#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "softsets/analysis.hpp"
#include "softsets/core.hpp"
#include "softsets/hierarchy.hpp"
#include "softsets/mcdm.hpp"
#include "softsets/variants.hpp"

namespace softsets {

using nlohmann::json;

struct FamilyDocument {
    SoftFamily family;
    std::optional<SoftFamily> second;  // present for bitopology checks
};

struct StructureDocument {
    FiniteStructureTable table;
    std::optional<SoftSet> soft;
    std::optional<SoftSet> sub;  // soft subset of `soft` for subrelation checks
};

struct DecisionDocument {
    DecisionInstance instance;
    Method method = Method::Topsis;
    std::optional<double> v;
};

struct SoftFunctionDocument {
    SoftFunctionPair pair;
    SoftSet forward;   // over the source universe
    SoftSet backward;  // over the target universe
};

using DocumentBody =
    std::variant<SoftSet, TValuedSoftSet, HyperSoftInstance, SuperHyperSoftInstance,
                 MNSuperHyperSoftInstance, TypeNSoftInstance, NSoftInstance,
                 ProbabilisticSoftInstance, DSoftInstance, RandomSoftInstance,
                 CapacitarySoftInstance, PosetSoftInstance, FiltrationSoftInstance,
                 CoverSoftInstance, WeightedSoftInstance, BijectiveSoftInstance,
                 DoubleFramedSoftInstance, IntersectionalSoftInstance, ContraSoftInstance,
                 HesiSoftInstance, MultipolarSoftInstance, DynamicSoftInstance,
                 RankedSoftInstance, RefinedSoftInstance, SoftExpertInstance, NArySoftInstance,
                 TreeSoftInstance, ForestSoftInstance, GraphicSoftInstance, CycleSoftInstance,
                 ClusterSoftInstance, DagSoftInstance, SoftFunctionDocument, FamilyDocument,
                 SoftMatroidInstance, SoftMetricInstance, StructureDocument, StatDatabase,
                 SoftGraphInstance, DecisionDocument, AhpHierarchy>;

struct Document {
    std::string kind;
    DocumentBody body;
};

inline constexpr int kDocumentVersion = 1;

// Throws SchemaError on malformed JSON, exponent literals, unknown fields or bad shapes,
// and UnknownIdentifier when a name does not resolve.
Document parse_document(const std::string& text);
Document document_from_json(const json& j);
// "-" reads standard input. Throws IoError when the source cannot be read.
Document load_document(const std::string& path);

json to_json(const Document& doc);

// Sorted keys, two-space indent, scalar arrays on one line, numbers with up to 12 significant
// digits and never in exponent form.
std::string dump_canonical(const json& j);
std::string format_number(double x);

ValidationReport validate_document(const Document& doc);
ValidationReport validate(const SoftFunctionDocument& doc);

json report_json(const ValidationReport& report);
json subset_json(const Universe& universe, const Subset& s);

}  // namespace softsets
