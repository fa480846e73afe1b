#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "softsets/core.hpp"

namespace softsets {

struct AttributeDomain {
    std::string name;
    std::vector<std::string> values;
    bool operator==(const AttributeDomain&) const = default;
};

using Tags = std::map<std::string, std::vector<std::string>>;  // object -> one value per domain
using SetTuple = std::vector<std::vector<std::string>>;       // one value subset per domain

struct HyperSoftInstance {
    Universe universe;
    std::vector<AttributeDomain> domains;
    std::map<TupleKey, Subset> entries;
    std::optional<Tags> tags;
};

struct SuperHyperSoftInstance {
    Universe universe;
    std::vector<AttributeDomain> domains;
    std::map<SetTuple, Subset> entries;  // keys canonicalized to domain order
    std::optional<Tags> tags;
};

struct MNSuperHyperSoftInstance {
    Universe universe;
    std::vector<AttributeDomain> domains;
    std::size_t outputArity = 1;
    std::map<SetTuple, std::vector<Subset>> entries;
};

// Sorts each coordinate into domain order and rejects values outside the domain.
SetTuple canonical_set_tuple(const std::vector<AttributeDomain>& domains, const SetTuple& key);

const Subset& eval_keyed(const HyperSoftInstance& inst, const TupleKey& key);
const Subset& eval_keyed(const SuperHyperSoftInstance& inst, const SetTuple& key);
const std::vector<Subset>& eval_keyed(const MNSuperHyperSoftInstance& inst, const SetTuple& key);

// Entries for every tuple with a nonempty result, plus each requested tuple.
HyperSoftInstance build_hypersoft_from_tags(const Universe& universe,
                                            const std::vector<AttributeDomain>& domains,
                                            const Tags& tags,
                                            const std::vector<TupleKey>& requested = {});
// Entries only for the requested keys: objects whose i-th tag lies in coordinate i.
SuperHyperSoftInstance build_superhypersoft_from_tags(const Universe& universe,
                                                      const std::vector<AttributeDomain>& domains,
                                                      const Tags& tags,
                                                      const std::vector<SetTuple>& requested);

struct TypeNNode {
    std::map<std::string, Subset> leaves;
    std::map<std::string, std::shared_ptr<const TypeNNode>> children;
};

struct TypeNSoftInstance {
    Universe universe;
    std::size_t depth = 1;
    TypeNNode root;
};

const Subset& eval_typen_chain(const TypeNSoftInstance& inst, const std::vector<std::string>& chain);

struct NSoftInstance {
    Universe universe;
    int N = 2;
    std::vector<std::string> params;
    // (param, object) -> grades listed for that pair; a valid instance has exactly one.
    std::map<std::pair<std::string, std::string>, std::vector<int>> grades;
};

int nsoft_grade(const NSoftInstance& inst, const std::string& param, const std::string& object);
// Objects graded at least r under param.
Subset nsoft_projection(const NSoftInstance& inst, const std::string& param, int r);

struct ProbabilisticSoftInstance {
    Universe universe;
    std::map<std::string, std::vector<double>> dist;  // per param, indexed by universe order
};

struct DSoftInstance {
    Universe universe;
    std::map<std::string, std::map<Subset, double>> masses;
};

double dsoft_unassigned_mass(const DSoftInstance& inst, const std::string& param);

struct RandomOutcome {
    std::string name;
    double probability = 0.0;
    SoftSet slice;
};

struct RandomSoftInstance {
    Universe universe;
    std::vector<std::string> params;
    std::vector<RandomOutcome> outcomes;
};

double random_membership_probability(const RandomSoftInstance& inst, const std::string& param,
                                     const std::string& object);

inline constexpr std::size_t kMaxCapacityUniverse = 12;

struct CapacitarySoftInstance {
    Universe universe;
    std::map<std::string, std::map<Subset, double>> capacities;
};

struct NonadditivityWitness {
    Subset s;
    Subset t;
    double joint = 0.0;  // nu(S u T)
    double sum = 0.0;    // nu(S) + nu(T)
};

double capacity_query(const CapacitarySoftInstance& inst, const std::string& param,
                      const Subset& subset);
std::vector<NonadditivityWitness> nonadditivity_witnesses(const CapacitarySoftInstance& inst,
                                                          const std::string& param);

struct PosetSoftInstance {
    SoftSet soft;
    std::set<std::pair<std::string, std::string>> order;  // listed pairs; reflexive pairs implied
    bool leq(const std::string& a, const std::string& b) const {
        return a == b || order.count({a, b}) != 0;
    }
};

// x <= y iff every parameter containing x also contains y. Pairs are (x, y) object names.
std::set<std::pair<std::string, std::string>> posetsoft_preorder(const PosetSoftInstance& inst);

struct FiltrationSoftInstance {
    Universe universe;
    std::size_t depth = 1;
    std::map<std::string, std::vector<Subset>> chains;
};

const Subset& filtration_stage(const FiltrationSoftInstance& inst, const std::string& param,
                               std::size_t i);

struct CoverSoftInstance {
    Universe universe;
    std::map<std::string, std::map<std::string, Subset>> covers;  // param -> block name -> block
};

std::vector<std::string> cover_neighborhoods(const CoverSoftInstance& inst,
                                             const std::string& param, const std::string& object);

struct WeightedSoftInstance {
    SoftSet soft;
    std::map<std::string, double> weights;
};

double weighted_score(const WeightedSoftInstance& inst, const std::string& object);

struct BijectiveSoftInstance {
    SoftSet soft;
};

using OperationTable = std::map<std::pair<std::string, std::string>, std::string>;

struct DoubleFramedSoftInstance {
    Universe universe;
    std::vector<std::string> params;
    OperationTable operation;
    std::map<std::string, Subset> alpha;
    std::map<std::string, Subset> beta;
};

struct IntersectionalSoftInstance {
    SoftSet soft;
    OperationTable operation;
};

using UnorderedPair = std::pair<std::string, std::string>;  // stored with first <= second
UnorderedPair unordered(const std::string& a, const std::string& b);

struct ContraSoftInstance {
    SoftSet soft;
    std::map<UnorderedPair, double> contradiction;
};

double contra_degree(const ContraSoftInstance& inst, const std::string& a, const std::string& b);

struct HesiSoftInstance {
    SoftSet soft;
    std::map<UnorderedPair, std::vector<double>> hesitancy;  // sorted ascending, no duplicates
};

const std::vector<double>& hesitancy_of(const HesiSoftInstance& inst, const std::string& a,
                                        const std::string& b);

struct MultipolarSoftInstance {
    Universe universe;
    std::size_t poles = 2;
    std::map<std::string, std::vector<Subset>> values;
};

enum class PoleMode { Consensus, Any };

Subset multipolar_aggregate(const MultipolarSoftInstance& inst, const std::string& param,
                            PoleMode mode);

struct DynamicSoftInstance {
    Universe universe;
    std::vector<std::pair<std::string, SoftSet>> slices;
};

const SoftSet& dynamic_slice(const DynamicSoftInstance& inst, const std::string& index);

struct RankedSoftInstance {
    Universe universe;
    std::map<std::string, std::vector<Subset>> partitions;  // V^0 .. V^k
};

const std::vector<Subset>& ranked_lookup(const RankedSoftInstance& inst, const std::string& param);
std::size_t rank_of(const RankedSoftInstance& inst, const std::string& param,
                    const std::string& object);

struct RefinedSoftInstance {
    Universe universe;
    std::vector<std::string> params;
    std::map<std::string, SoftSet> evaluators;
};

Subset refined_consensus(const RefinedSoftInstance& inst, const std::string& param, std::size_t k);

struct ExpertEntry {
    std::string param;
    std::string expert;
    int opinion = 1;
    Subset value;
};

struct SoftExpertInstance {
    Universe universe;
    std::vector<std::string> params;
    std::vector<std::string> experts;
    std::vector<ExpertEntry> entries;
};

// Union of G over entries matching the given fields; empty optionals match anything.
Subset expert_filter(const SoftExpertInstance& inst, const std::optional<std::string>& param,
                     const std::optional<std::string>& expert, int opinion);
// Number of distinct (param, expert) pairs whose approval set contains the object.
std::size_t expert_approval_count(const SoftExpertInstance& inst, const std::string& object);

struct NArySoftInstance {
    std::vector<Universe> components;
    std::map<std::string, std::vector<Subset>> values;
};

// i is 1-based.
SoftSet nary_project(const NArySoftInstance& inst, std::size_t i);
NArySoftInstance nary_assemble(const std::vector<SoftSet>& projections);

ValidationReport validate(const HyperSoftInstance& inst);
ValidationReport validate(const SuperHyperSoftInstance& inst);
ValidationReport validate(const MNSuperHyperSoftInstance& inst);
ValidationReport validate(const TypeNSoftInstance& inst);
ValidationReport validate(const NSoftInstance& inst);
ValidationReport validate(const ProbabilisticSoftInstance& inst);
ValidationReport validate(const DSoftInstance& inst);
ValidationReport validate(const RandomSoftInstance& inst);
ValidationReport validate(const CapacitarySoftInstance& inst);
ValidationReport validate(const PosetSoftInstance& inst);
ValidationReport validate(const FiltrationSoftInstance& inst);
ValidationReport validate(const CoverSoftInstance& inst);
ValidationReport validate(const WeightedSoftInstance& inst);
ValidationReport validate(const BijectiveSoftInstance& inst);
ValidationReport validate(const DoubleFramedSoftInstance& inst);
ValidationReport validate(const IntersectionalSoftInstance& inst);
ValidationReport validate(const ContraSoftInstance& inst);
ValidationReport validate(const HesiSoftInstance& inst);
ValidationReport validate(const MultipolarSoftInstance& inst);
ValidationReport validate(const DynamicSoftInstance& inst);
ValidationReport validate(const RankedSoftInstance& inst);
ValidationReport validate(const RefinedSoftInstance& inst);
ValidationReport validate(const SoftExpertInstance& inst);
ValidationReport validate(const NArySoftInstance& inst);

}  // namespace softsets
