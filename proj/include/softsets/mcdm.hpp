#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "softsets/core.hpp"
#include "softsets/variants.hpp"

namespace softsets {

inline constexpr double kTieTolerance = 1e-9;
inline constexpr double kPowerTolerance = 1e-12;
inline constexpr std::size_t kPowerMaxIterations = 10000;
inline constexpr double kConsistencyTolerance = 1e-6;

enum class Orientation { Benefit, Cost };

// A criterion is a plain parameter, a value tuple, or a tuple of value subsets.
using Criterion = std::variant<std::string, TupleKey, SetTuple>;

struct DecisionInstance {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    std::vector<std::vector<double>> matrix;  // alternatives x criteria
    std::vector<double> weights;
    std::vector<Orientation> orientations;
};

enum class Method { Score, Topsis, Ahp, Vikor };

struct Diagnostics {
    std::map<std::string, std::vector<double>> vectors;
    std::map<std::string, double> scalars;
    std::map<std::string, bool> flags;
    std::map<std::string, std::vector<std::size_t>> groups;
};

struct RankingResult {
    std::string method;
    std::vector<std::string> alternatives;
    std::vector<double> scores;
    std::vector<std::vector<std::size_t>> ordering;  // tie groups, best first
    Diagnostics diagnostics;
};

// Groups indices whose scores lie within kTieTolerance of the group's first score.
// Groups are ordered best first; members keep input order.
std::vector<std::vector<std::size_t>> tie_groups(const std::vector<double>& scores,
                                                 bool higher_is_better);

RankingResult soft_score_select(const SoftSet& soft, const std::map<std::string, double>& weights);
RankingResult score_rank(const DecisionInstance& inst);
RankingResult topsis_rank(const DecisionInstance& inst);
RankingResult vikor_rank(const DecisionInstance& inst, double v);

struct AhpPriority {
    std::vector<double> priority;
    double lambdaMax = 0.0;
    bool consistent = false;
    std::size_t iterations = 0;
};

AhpPriority ahp_priority(const std::vector<std::vector<double>>& matrix);
ValidationReport validate_reciprocal(const std::vector<std::vector<double>>& matrix,
                                     const std::string& path);

struct AhpHierarchy {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    std::vector<std::vector<double>> criteriaMatrix;
    std::vector<std::vector<std::vector<double>>> alternativeMatrices;  // one per criterion
};

RankingResult ahp_global_rank(const AhpHierarchy& h);

// Replaces each value by its singleton set; a plain parameter becomes a one-coordinate tuple.
SetTuple singleton_embed(const Criterion& c);
DecisionInstance singleton_embed(const DecisionInstance& inst);
AhpHierarchy singleton_embed(const AhpHierarchy& h);

// 0/1 matrix with x_ij = 1 exactly when alternative i lies in the value of criterion j.
DecisionInstance decision_from_soft(const SoftSet& soft, const std::vector<std::string>& criteria,
                                    const std::vector<double>& weights);
DecisionInstance decision_from_hypersoft(const HyperSoftInstance& inst,
                                         const std::vector<TupleKey>& criteria,
                                         const std::vector<double>& weights);

ValidationReport validate(const DecisionInstance& inst, Method method);
ValidationReport validate(const AhpHierarchy& h);

std::string to_string(Method m);
std::optional<Method> method_from(const std::string& s);

}  // namespace softsets
