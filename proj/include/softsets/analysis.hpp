#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "softsets/core.hpp"

namespace softsets {

struct RoughPair {
    Subset lower;
    Subset upper;
};

RoughPair rough_approx(const SoftSet& space, const Subset& target);

struct SoftFamily {
    Universe universe;
    std::vector<std::string> params;
    std::vector<std::pair<std::string, SoftSet>> members;
};

inline constexpr std::size_t kMaxFamily = 20;

ValidationReport check_soft_topology(const SoftFamily& family);
ValidationReport check_soft_algebra(const SoftFamily& family);
// Two topologies over the same universe and parameters.
ValidationReport check_soft_bitopology(const SoftFamily& first, const SoftFamily& second);

struct SoftMatroidInstance {
    SoftSet ground;
    std::vector<std::pair<std::string, SoftSet>> members;
};

inline constexpr std::size_t kMaxMatroidPoints = 16;

ValidationReport check_soft_matroid(const SoftMatroidInstance& inst);

using Choice = std::map<std::string, std::string>;  // param -> object

struct SoftMetricInstance {
    Universe universe;
    std::vector<std::string> params;
    std::vector<std::pair<std::string, Choice>> elements;
    // Keyed by element-name pairs with first < second; the diagonal is implicitly zero.
    std::map<std::pair<std::string, std::string>, std::map<std::string, double>> distances;
};

ValidationReport check_soft_metric(const SoftMetricInstance& inst);

enum class StructureKind { Semigroup, Group, Ring, Field };

std::string to_string(StructureKind k);
std::optional<StructureKind> structure_kind_from(const std::string& s);

// Operation tables are indexed by carrier position. Semigroups and groups use `op`;
// rings and fields use `add` and `mul`.
struct FiniteStructureTable {
    std::vector<std::string> carrier;
    StructureKind kind = StructureKind::Group;
    std::vector<std::vector<std::size_t>> op;
    std::vector<std::vector<std::size_t>> add;
    std::vector<std::vector<std::size_t>> mul;
    std::optional<std::size_t> identity;
    std::optional<std::size_t> zero;
    std::optional<std::size_t> one;
};

// Axioms of the declared kind over the full carrier.
ValidationReport validate(const FiniteStructureTable& table);
ValidationReport check_substructure(const FiniteStructureTable& table, const SoftSet& soft,
                                    StructureKind kind);
bool check_soft_subrelation(const SoftSet& sub, const SoftSet& super,
                            const FiniteStructureTable& table, StructureKind kind);

struct StatDatabase {
    std::vector<int> indicators;  // event indicator per outcome
    std::size_t window = 1;       // m
    std::size_t startLow = 1;     // admissible window starts, 1-based and inclusive
    std::size_t startHigh = 1;
};

struct Interval {
    double low = 0.0;
    double high = 0.0;
};

Interval soft_probability_interval(const StatDatabase& db);

using VertexEdge = std::pair<std::size_t, std::size_t>;  // first < second

struct SoftGraphInstance {
    Universe vertices;
    std::set<VertexEdge> edges;
    std::map<std::string, Subset> vertexSets;
    std::map<std::string, std::set<VertexEdge>> edgeSets;
};

ValidationReport check_soft_graph(const SoftGraphInstance& inst);

ValidationReport validate(const SoftFamily& family);
ValidationReport validate(const SoftMatroidInstance& inst);
ValidationReport validate(const SoftMetricInstance& inst);
ValidationReport validate(const StatDatabase& db);
ValidationReport validate(const SoftGraphInstance& inst);

}  // namespace softsets
