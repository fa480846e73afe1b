#include "softsets/mcdm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace softsets {

std::string to_string(Method m) {
    switch (m) {
        case Method::Score: return "score";
        case Method::Topsis: return "topsis";
        case Method::Ahp: return "ahp";
        case Method::Vikor: return "vikor";
    }
    return "score";
}

std::optional<Method> method_from(const std::string& s) {
    if (s == "score") return Method::Score;
    if (s == "topsis") return Method::Topsis;
    if (s == "ahp") return Method::Ahp;
    if (s == "vikor") return Method::Vikor;
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> tie_groups(const std::vector<double>& scores,
                                                 bool higher_is_better) {
    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return higher_is_better ? scores[a] > scores[b] : scores[a] < scores[b];
    });
    std::vector<std::vector<std::size_t>> groups;
    double leader = 0.0;
    for (auto i : idx) {
        if (groups.empty() || std::fabs(scores[i] - leader) > kTieTolerance) {
            groups.push_back({});
            leader = scores[i];
        }
        groups.back().push_back(i);
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    return groups;
}

RankingResult soft_score_select(const SoftSet& soft, const std::map<std::string, double>& weights) {
    for (const auto& [p, w] : weights) {
        if (!soft.values.count(p)) throw UnknownIdentifier("weight for unknown parameter '" + p + "'");
        if (w < 0.0) throw NegativeWeight("weight of '" + p + "' is negative");
    }
    RankingResult r;
    r.method = "score";
    r.alternatives = soft.universe.objects();
    r.scores.assign(soft.universe.size(), 0.0);
    for (const auto& [param, value] : soft.values) {
        auto w = weights.find(param);
        if (w == weights.end()) throw MissingParameter("no weight for parameter '" + param + "'");
        for (auto u : value) r.scores[u] += w->second;
    }
    r.ordering = tie_groups(r.scores, true);
    r.diagnostics.groups["argmax"] = r.ordering.front();
    return r;
}

static void require_valid(const DecisionInstance& inst, Method method) {
    ValidationReport rep = validate(inst, method);
    if (!rep.passed())
        throw SchemaError("invalid decision instance: " + rep.violations.front().code + " " +
                          rep.violations.front().message);
}

RankingResult score_rank(const DecisionInstance& inst) {
    require_valid(inst, Method::Score);
    RankingResult r;
    r.method = "score";
    r.alternatives = inst.alternatives;
    for (const auto& row : inst.matrix) {
        double s = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) s += inst.weights[j] * row[j];
        r.scores.push_back(s);
    }
    r.ordering = tie_groups(r.scores, true);
    r.diagnostics.groups["argmax"] = r.ordering.front();
    return r;
}

RankingResult topsis_rank(const DecisionInstance& inst) {
    require_valid(inst, Method::Topsis);
    std::size_t n = inst.alternatives.size(), m = inst.criteria.size();
    const auto& X = inst.matrix;

    std::vector<double> norm(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) ss += X[i][j] * X[i][j];
        norm[j] = std::sqrt(ss);
    }
    std::vector<std::vector<double>> V(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            V[i][j] = inst.weights[j] * (norm[j] == 0.0 ? 0.0 : X[i][j] / norm[j]);

    std::vector<double> best(m), worst(m);
    for (std::size_t j = 0; j < m; ++j) {
        double hi = V[0][j], lo = V[0][j];
        for (std::size_t i = 1; i < n; ++i) {
            hi = std::max(hi, V[i][j]);
            lo = std::min(lo, V[i][j]);
        }
        bool benefit = inst.orientations[j] == Orientation::Benefit;
        best[j] = benefit ? hi : lo;
        worst[j] = benefit ? lo : hi;
    }

    RankingResult r;
    r.method = "topsis";
    r.alternatives = inst.alternatives;
    std::vector<double> sp(n), sm(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = 0.0, b = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            a += (V[i][j] - best[j]) * (V[i][j] - best[j]);
            b += (V[i][j] - worst[j]) * (V[i][j] - worst[j]);
        }
        sp[i] = std::sqrt(a);
        sm[i] = std::sqrt(b);
        r.scores.push_back(sp[i] + sm[i] == 0.0 ? 0.5 : sm[i] / (sp[i] + sm[i]));
    }
    r.ordering = tie_groups(r.scores, true);
    r.diagnostics.vectors["column_norms"] = norm;
    r.diagnostics.vectors["ideal_best"] = best;
    r.diagnostics.vectors["ideal_worst"] = worst;
    r.diagnostics.vectors["separation_best"] = sp;
    r.diagnostics.vectors["separation_worst"] = sm;
    return r;
}

RankingResult vikor_rank(const DecisionInstance& inst, double v) {
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidCoefficient("v must lie in [0,1]");
    require_valid(inst, Method::Vikor);
    std::size_t n = inst.alternatives.size(), m = inst.criteria.size();
    const auto& f = inst.matrix;

    std::vector<double> fbest(m), fworst(m);
    for (std::size_t j = 0; j < m; ++j) {
        double hi = f[0][j], lo = f[0][j];
        for (std::size_t i = 1; i < n; ++i) {
            hi = std::max(hi, f[i][j]);
            lo = std::min(lo, f[i][j]);
        }
        bool benefit = inst.orientations[j] == Orientation::Benefit;
        fbest[j] = benefit ? hi : lo;
        fworst[j] = benefit ? lo : hi;
    }

    std::vector<double> S(n, 0.0), R(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            double d = 0.0;
            if (fbest[j] != fworst[j])
                d = inst.orientations[j] == Orientation::Benefit
                        ? (fbest[j] - f[i][j]) / (fbest[j] - fworst[j])
                        : (f[i][j] - fbest[j]) / (fworst[j] - fbest[j]);
            S[i] += inst.weights[j] * d;
            R[i] = std::max(R[i], inst.weights[j] * d);
        }

    double s_star = *std::min_element(S.begin(), S.end());
    double s_minus = *std::max_element(S.begin(), S.end());
    double r_star = *std::min_element(R.begin(), R.end());
    double r_minus = *std::max_element(R.begin(), R.end());

    RankingResult r;
    r.method = "vikor";
    r.alternatives = inst.alternatives;
    for (std::size_t i = 0; i < n; ++i) {
        double qs = s_minus == s_star ? 0.0 : (S[i] - s_star) / (s_minus - s_star);
        double qr = r_minus == r_star ? 0.0 : (R[i] - r_star) / (r_minus - r_star);
        r.scores.push_back(v * qs + (1.0 - v) * qr);
    }
    const auto& Q = r.scores;
    r.ordering = tie_groups(Q, false);

    auto& dg = r.diagnostics;
    dg.vectors["ideal_best"] = fbest;
    dg.vectors["ideal_worst"] = fworst;
    dg.vectors["S"] = S;
    dg.vectors["R"] = R;
    dg.vectors["Q"] = Q;
    dg.scalars["S_star"] = s_star;
    dg.scalars["S_minus"] = s_minus;
    dg.scalars["R_star"] = r_star;
    dg.scalars["R_minus"] = r_minus;
    dg.scalars["v"] = v;
    dg.flags["compromise_optional"] = true;

    if (n == 1) {
        dg.flags["compromise_applicable"] = false;
        dg.groups["compromise_set"] = {0};
        return r;
    }
    dg.flags["compromise_applicable"] = true;
    double dq = 1.0 / static_cast<double>(n - 1);
    dg.scalars["DQ"] = dq;

    std::vector<std::size_t> flat;
    for (const auto& g : r.ordering) flat.insert(flat.end(), g.begin(), g.end());
    std::size_t first = flat[0], second = flat[1];
    bool advantage = Q[second] - Q[first] >= dq - kTieTolerance;
    bool stability = S[first] <= s_star + kTieTolerance || R[first] <= r_star + kTieTolerance;
    dg.flags["acceptable_advantage"] = advantage;
    dg.flags["acceptable_stability"] = stability;
    dg.flags["unique_compromise"] = advantage && stability;

    std::vector<std::size_t> set;
    if (advantage && stability) {
        set = {first};
    } else if (!advantage) {
        for (auto i : flat)
            if (Q[i] - Q[first] < dq - kTieTolerance || i == first) set.push_back(i);
    } else {
        set = {first, second};
    }
    dg.groups["compromise_set"] = set;
    return r;
}

ValidationReport validate_reciprocal(const std::vector<std::vector<double>>& a,
                                     const std::string& path) {
    ValidationReport r{"reciprocal", {}};
    std::size_t n = a.size();
    if (n == 0) {
        r.add("NOT_SQUARE", path, {}, "matrix is empty");
        return r;
    }
    for (const auto& row : a)
        if (row.size() != n) {
            r.add("NOT_SQUARE", path, {}, "matrix is not square");
            return r;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string at = path + "/" + std::to_string(i) + "/" + std::to_string(j);
            if (!(a[i][j] > 0.0) || !std::isfinite(a[i][j])) {
                r.add("NONPOSITIVE", at, {}, "entries must be positive and finite");
                continue;
            }
            if (i == j && std::fabs(a[i][j] - 1.0) > kEpsilon)
                r.add("DIAGONAL", at, {}, "diagonal entries must be 1");
            if (i < j && std::fabs(a[i][j] * a[j][i] - 1.0) > kEpsilon)
                r.add("RECIPROCAL", at, {}, "a_ij * a_ji must equal 1");
        }
    return r;
}

AhpPriority ahp_priority(const std::vector<std::vector<double>>& a) {
    ValidationReport rep = validate_reciprocal(a, "");
    if (!rep.passed())
        throw SchemaError("not a positive reciprocal matrix: " + rep.violations.front().code);
    std::size_t n = a.size();
    AhpPriority out;
    std::vector<double> x(n, 1.0 / static_cast<double>(n)), y(n);
    bool converged = false;
    for (std::size_t it = 1; it <= kPowerMaxIterations; ++it) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
            y[i] = s;
            sum += s;
        }
        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] /= sum;
            diff = std::max(diff, std::fabs(y[i] - x[i]));
        }
        x.swap(y);
        out.iterations = it;
        if (diff < kPowerTolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) throw NonConvergence("power iteration did not converge");

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ax = 0.0;
        for (std::size_t j = 0; j < n; ++j) ax += a[i][j] * x[j];
        num += x[i] * ax;
        den += x[i] * x[i];
    }
    out.priority = x;
    out.lambdaMax = num / den;
    out.consistent = true;
    for (std::size_t i = 0; i < n && out.consistent; ++i)
        for (std::size_t j = 0; j < n && out.consistent; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (std::fabs(a[i][j] * a[j][k] - a[i][k]) > kConsistencyTolerance) {
                    out.consistent = false;
                    break;
                }
    return out;
}

RankingResult ahp_global_rank(const AhpHierarchy& h) {
    ValidationReport rep = validate(h);
    if (!rep.passed())
        throw SchemaError("invalid AHP hierarchy: " + rep.violations.front().code + " at " +
                          rep.violations.front().path);
    AhpPriority top = ahp_priority(h.criteriaMatrix);
    RankingResult r;
    r.method = "ahp";
    r.alternatives = h.alternatives;
    r.scores.assign(h.alternatives.size(), 0.0);
    auto& dg = r.diagnostics;
    dg.vectors["criteria_weights"] = top.priority;
    dg.scalars["lambda_max_criteria"] = top.lambdaMax;
    dg.flags["consistent_criteria"] = top.consistent;
    for (std::size_t j = 0; j < h.criteria.size(); ++j) {
        AhpPriority local = ahp_priority(h.alternativeMatrices[j]);
        std::string tag = std::to_string(j + 1);
        dg.vectors["local_priorities_" + tag] = local.priority;
        dg.scalars["lambda_max_" + tag] = local.lambdaMax;
        dg.flags["consistent_" + tag] = local.consistent;
        for (std::size_t i = 0; i < r.scores.size(); ++i)
            r.scores[i] += top.priority[j] * local.priority[i];
    }
    r.ordering = tie_groups(r.scores, true);
    return r;
}

SetTuple singleton_embed(const Criterion& c) {
    if (const auto* p = std::get_if<std::string>(&c)) return {{*p}};
    if (const auto* t = std::get_if<TupleKey>(&c)) {
        SetTuple out;
        for (const auto& v : *t) out.push_back({v});
        return out;
    }
    throw SchemaError("criterion is already set-valued");
}

DecisionInstance singleton_embed(const DecisionInstance& inst) {
    DecisionInstance out = inst;
    for (auto& c : out.criteria) c = singleton_embed(c);
    return out;
}

AhpHierarchy singleton_embed(const AhpHierarchy& h) {
    AhpHierarchy out = h;
    for (auto& c : out.criteria) c = singleton_embed(c);
    return out;
}

DecisionInstance decision_from_soft(const SoftSet& soft, const std::vector<std::string>& criteria,
                                    const std::vector<double>& weights) {
    if (weights.size() != criteria.size()) throw ArityMismatch("one weight per criterion is required");
    DecisionInstance d;
    d.alternatives = soft.universe.objects();
    for (const auto& c : criteria) d.criteria.push_back(c);
    d.weights = weights;
    d.orientations.assign(criteria.size(), Orientation::Benefit);
    for (std::size_t i = 0; i < soft.universe.size(); ++i) {
        std::vector<double> row;
        for (const auto& c : criteria) row.push_back(value_of(soft, c).count(i) ? 1.0 : 0.0);
        d.matrix.push_back(std::move(row));
    }
    return d;
}

DecisionInstance decision_from_hypersoft(const HyperSoftInstance& inst,
                                         const std::vector<TupleKey>& criteria,
                                         const std::vector<double>& weights) {
    if (weights.size() != criteria.size()) throw ArityMismatch("one weight per criterion is required");
    DecisionInstance d;
    d.alternatives = inst.universe.objects();
    for (const auto& c : criteria) d.criteria.push_back(c);
    d.weights = weights;
    d.orientations.assign(criteria.size(), Orientation::Benefit);
    std::vector<const Subset*> cols;
    for (const auto& c : criteria) cols.push_back(&eval_keyed(inst, c));
    for (std::size_t i = 0; i < inst.universe.size(); ++i) {
        std::vector<double> row;
        for (const auto* col : cols) row.push_back(col->count(i) ? 1.0 : 0.0);
        d.matrix.push_back(std::move(row));
    }
    return d;
}

ValidationReport validate(const DecisionInstance& inst, Method method) {
    ValidationReport r{"decision", {}};
    std::size_t n = inst.alternatives.size(), m = inst.criteria.size();
    if (n == 0) r.add("NO_ALTERNATIVES", "/alternatives", {}, "at least one alternative is required");
    if (m == 0) r.add("NO_CRITERIA", "/criteria", {}, "at least one criterion is required");
    std::set<std::string> seen;
    for (const auto& a : inst.alternatives)
        if (!seen.insert(a).second)
            r.add("DUPLICATE_ALTERNATIVE", "/alternatives", {a}, "alternative repeated");
    if (inst.matrix.size() != n) {
        r.add("MATRIX_SHAPE", "/matrix", {}, "one matrix row per alternative is required");
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (inst.matrix[i].size() != m) {
                r.add("MATRIX_SHAPE", "/matrix/" + std::to_string(i), {}, "row length differs from criteria count");
                continue;
            }
            for (std::size_t j = 0; j < m; ++j)
                if (!(inst.matrix[i][j] >= 0.0) || !std::isfinite(inst.matrix[i][j]))
                    r.add("NEGATIVE_ENTRY", "/matrix/" + std::to_string(i) + "/" + std::to_string(j), {},
                          "matrix entries must be finite and nonnegative");
        }
    }
    if (inst.weights.size() != m) r.add("WEIGHTS_SHAPE", "/weights", {}, "one weight per criterion is required");
    if (inst.orientations.size() != m)
        r.add("ORIENTATIONS_SHAPE", "/orientations", {}, "one orientation per criterion is required");
    if (!r.passed()) return r;

    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double w = inst.weights[j];
        std::string at = "/weights/" + std::to_string(j);
        sum += w;
        if (method == Method::Score && !(w >= 0.0))
            r.add("WEIGHT_NEGATIVE", at, {}, "weights must be nonnegative");
        if ((method == Method::Topsis || method == Method::Ahp) && !(w > 0.0))
            r.add("WEIGHT_NONPOSITIVE", at, {}, "weights must be positive");
        if (method == Method::Vikor && !(w >= 0.0 && w <= 1.0))
            r.add("WEIGHT_RANGE", at, {}, "weights must lie in [0,1]");
    }
    if (method != Method::Score && std::fabs(sum - 1.0) > kEpsilon)
        r.add("WEIGHT_SUM", "/weights", {}, "weights must sum to 1");
    return r;
}

ValidationReport validate(const AhpHierarchy& h) {
    ValidationReport r{"ahp", {}};
    std::size_t n = h.alternatives.size(), m = h.criteria.size();
    if (n == 0) r.add("NO_ALTERNATIVES", "/alternatives", {}, "at least one alternative is required");
    if (m == 0) r.add("NO_CRITERIA", "/criteria", {}, "at least one criterion is required");
    std::set<std::string> seen;
    for (const auto& a : h.alternatives)
        if (!seen.insert(a).second)
            r.add("DUPLICATE_ALTERNATIVE", "/alternatives", {a}, "alternative repeated");
    if (h.criteriaMatrix.size() != m)
        r.add("MATRIX_SHAPE", "/criteriaMatrix", {}, "criteria matrix must be m x m");
    if (h.alternativeMatrices.size() != m)
        r.add("MATRIX_SHAPE", "/alternativeMatrices", {}, "one alternative matrix per criterion is required");
    for (const auto& v : validate_reciprocal(h.criteriaMatrix, "/criteriaMatrix").violations)
        r.violations.push_back(v);
    for (std::size_t j = 0; j < h.alternativeMatrices.size(); ++j) {
        std::string path = "/alternativeMatrices/" + std::to_string(j);
        if (h.alternativeMatrices[j].size() != n)
            r.add("MATRIX_SHAPE", path, {}, "alternative matrices must be n x n");
        for (const auto& v : validate_reciprocal(h.alternativeMatrices[j], path).violations)
            r.violations.push_back(v);
    }
    return r;
}

}  // namespace softsets
