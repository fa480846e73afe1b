#include "softsets/variants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

namespace softsets {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::size_t domain_index(const AttributeDomain& d, const std::string& value) {
    auto it = std::find(d.values.begin(), d.values.end(), value);
    if (it == d.values.end())
        throw UnknownIdentifier("value '" + value + "' is not in domain '" + d.name + "'");
    return static_cast<std::size_t>(it - d.values.begin());
}

void check_tuple(const std::vector<AttributeDomain>& domains, const TupleKey& key) {
    if (key.size() != domains.size())
        throw ArityMismatch("key has " + std::to_string(key.size()) + " coordinates, expected " +
                            std::to_string(domains.size()));
    for (std::size_t i = 0; i < key.size(); ++i) domain_index(domains[i], key[i]);
}

void check_domains(const std::vector<AttributeDomain>& domains, ValidationReport& r) {
    std::map<std::string, std::string> owner;
    std::set<std::string> names;
    for (std::size_t i = 0; i < domains.size(); ++i) {
        const auto& d = domains[i];
        if (!names.insert(d.name).second)
            r.add("DUPLICATE_DOMAIN", "/domains/" + std::to_string(i), {d.name},
                  "domain name repeated");
        if (d.values.empty())
            r.add("EMPTY_DOMAIN", "/domains/" + std::to_string(i), {d.name}, "domain has no values");
        std::set<std::string> seen;
        for (const auto& v : d.values) {
            if (!seen.insert(v).second) {
                r.add("DUPLICATE_VALUE", "/domains/" + std::to_string(i), {d.name, v},
                      "value repeated within a domain");
                continue;
            }
            auto [it, fresh] = owner.emplace(v, d.name);
            if (!fresh)
                r.add("DOMAINS_NOT_DISJOINT", "/domains/" + std::to_string(i), {it->second, d.name, v},
                      "value '" + v + "' appears in two domains");
        }
    }
    if (domains.empty()) r.add("EMPTY_DOMAIN", "/domains", {}, "no attribute domains");
}

void check_tags(const Universe& universe, const std::vector<AttributeDomain>& domains,
                const Tags& tags) {
    for (const auto& object : universe.objects()) {
        auto it = tags.find(object);
        if (it == tags.end()) throw TagArityMismatch("object '" + object + "' has no tag tuple");
        if (it->second.size() != domains.size())
            throw TagArityMismatch("tag tuple of '" + object + "' has " +
                                   std::to_string(it->second.size()) + " values, expected " +
                                   std::to_string(domains.size()));
        for (std::size_t i = 0; i < domains.size(); ++i) domain_index(domains[i], it->second[i]);
    }
    for (const auto& [object, tuple] : tags) universe.index_of(object);
}

Subset objects_matching(const Universe& universe, const Tags& tags, const SetTuple& key) {
    Subset out;
    for (std::size_t u = 0; u < universe.size(); ++u) {
        const auto& tag = tags.at(universe.name(u));
        bool ok = true;
        for (std::size_t i = 0; i < key.size() && ok; ++i)
            ok = std::find(key[i].begin(), key[i].end(), tag[i]) != key[i].end();
        if (ok) out.insert(u);
    }
    return out;
}

SetTuple singleton_tuple(const TupleKey& key) {
    SetTuple out;
    for (const auto& v : key) out.push_back({v});
    return out;
}

std::string describe(const SetTuple& key) {
    std::vector<std::string> parts;
    for (const auto& c : key) parts.push_back("{" + join(c) + "}");
    return "(" + join(parts) + ")";
}

}  // namespace

SetTuple canonical_set_tuple(const std::vector<AttributeDomain>& domains, const SetTuple& key) {
    if (key.size() != domains.size())
        throw ArityMismatch("key has " + std::to_string(key.size()) + " coordinates, expected " +
                            std::to_string(domains.size()));
    SetTuple out(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
        std::vector<std::size_t> idx;
        for (const auto& v : key[i]) idx.push_back(domain_index(domains[i], v));
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw SchemaError("duplicate value in coordinate " + std::to_string(i + 1));
        for (auto j : idx) out[i].push_back(domains[i].values[j]);
    }
    return out;
}

const Subset& eval_keyed(const HyperSoftInstance& inst, const TupleKey& key) {
    check_tuple(inst.domains, key);
    auto it = inst.entries.find(key);
    if (it == inst.entries.end())
        throw MissingParameter("no entry for (" + join(key) + ")");
    return it->second;
}

const Subset& eval_keyed(const SuperHyperSoftInstance& inst, const SetTuple& key) {
    SetTuple canon = canonical_set_tuple(inst.domains, key);
    auto it = inst.entries.find(canon);
    if (it == inst.entries.end()) throw MissingParameter("no entry for " + describe(canon));
    return it->second;
}

const std::vector<Subset>& eval_keyed(const MNSuperHyperSoftInstance& inst, const SetTuple& key) {
    SetTuple canon = canonical_set_tuple(inst.domains, key);
    auto it = inst.entries.find(canon);
    if (it == inst.entries.end()) throw MissingParameter("no entry for " + describe(canon));
    return it->second;
}

HyperSoftInstance build_hypersoft_from_tags(const Universe& universe,
                                            const std::vector<AttributeDomain>& domains,
                                            const Tags& tags,
                                            const std::vector<TupleKey>& requested) {
    check_tags(universe, domains, tags);
    HyperSoftInstance inst{universe, domains, {}, tags};
    for (std::size_t u = 0; u < universe.size(); ++u)
        inst.entries[tags.at(universe.name(u))].insert(u);
    for (const auto& key : requested) {
        check_tuple(domains, key);
        inst.entries[key];
    }
    return inst;
}

SuperHyperSoftInstance build_superhypersoft_from_tags(const Universe& universe,
                                                      const std::vector<AttributeDomain>& domains,
                                                      const Tags& tags,
                                                      const std::vector<SetTuple>& requested) {
    check_tags(universe, domains, tags);
    SuperHyperSoftInstance inst{universe, domains, {}, tags};
    for (const auto& key : requested) {
        SetTuple canon = canonical_set_tuple(domains, key);
        inst.entries[canon] = objects_matching(universe, tags, canon);
    }
    return inst;
}

const Subset& eval_typen_chain(const TypeNSoftInstance& inst,
                               const std::vector<std::string>& chain) {
    if (chain.size() != inst.depth)
        throw ArityMismatch("chain has " + std::to_string(chain.size()) + " steps, expected " +
                            std::to_string(inst.depth));
    const TypeNNode* node = &inst.root;
    for (std::size_t step = 1; step <= chain.size(); ++step) {
        const auto& p = chain[step - 1];
        if (step == chain.size()) {
            auto it = node->leaves.find(p);
            if (it == node->leaves.end())
                throw InvalidChain(step, "'" + p + "' is not a terminal parameter at step " +
                                             std::to_string(step));
            return it->second;
        }
        auto it = node->children.find(p);
        if (it == node->children.end() || !it->second)
            throw InvalidChain(step, "'" + p + "' is not a parameter at step " + std::to_string(step));
        node = it->second.get();
    }
    throw InvalidChain(1, "empty chain");
}

int nsoft_grade(const NSoftInstance& inst, const std::string& param, const std::string& object) {
    if (std::find(inst.params.begin(), inst.params.end(), param) == inst.params.end())
        throw UnknownIdentifier("unknown parameter '" + param + "'");
    inst.universe.index_of(object);
    auto it = inst.grades.find({param, object});
    if (it == inst.grades.end() || it->second.empty())
        throw UnknownIdentifier("no grade for (" + param + ", " + object + ")");
    if (it->second.size() != 1)
        throw SchemaError("several grades for (" + param + ", " + object + ")");
    return it->second.front();
}

Subset nsoft_projection(const NSoftInstance& inst, const std::string& param, int r) {
    Subset out;
    for (std::size_t u = 0; u < inst.universe.size(); ++u)
        if (nsoft_grade(inst, param, inst.universe.name(u)) >= r) out.insert(u);
    return out;
}

double dsoft_unassigned_mass(const DSoftInstance& inst, const std::string& param) {
    auto it = inst.masses.find(param);
    if (it == inst.masses.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
    double total = 0.0;
    for (const auto& [focal, mass] : it->second) total += mass;
    return std::max(0.0, 1.0 - total);
}

double random_membership_probability(const RandomSoftInstance& inst, const std::string& param,
                                     const std::string& object) {
    if (std::find(inst.params.begin(), inst.params.end(), param) == inst.params.end())
        throw UnknownIdentifier("unknown parameter '" + param + "'");
    std::size_t u = inst.universe.index_of(object);
    double p = 0.0;
    for (const auto& o : inst.outcomes)
        if (value_of(o.slice, param).count(u)) p += o.probability;
    return p;
}

double capacity_query(const CapacitarySoftInstance& inst, const std::string& param,
                      const Subset& subset) {
    auto it = inst.capacities.find(param);
    if (it == inst.capacities.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
    auto v = it->second.find(subset);
    if (v == it->second.end())
        throw UnknownSubset("no capacity for {" + subset_key(inst.universe, subset) + "}");
    return v->second;
}

std::vector<NonadditivityWitness> nonadditivity_witnesses(const CapacitarySoftInstance& inst,
                                                          const std::string& param) {
    std::size_t n = inst.universe.size();
    if (n > kMaxCapacityUniverse)
        throw SchemaError("capacity universe exceeds " + std::to_string(kMaxCapacityUniverse));
    std::vector<NonadditivityWitness> out;
    unsigned long long limit = 1ULL << n;
    for (unsigned long long s = 1; s < limit; ++s) {
        for (unsigned long long t = s + 1; t < limit; ++t) {
            if (s & t) continue;
            Subset S = inst.universe.from_mask(s), T = inst.universe.from_mask(t);
            double joint = capacity_query(inst, param, unite(S, T));
            double sum = capacity_query(inst, param, S) + capacity_query(inst, param, T);
            if (std::fabs(joint - sum) > kEpsilon) out.push_back({S, T, joint, sum});
        }
    }
    return out;
}

std::set<std::pair<std::string, std::string>> posetsoft_preorder(const PosetSoftInstance& inst) {
    const auto& U = inst.soft.universe;
    std::set<std::pair<std::string, std::string>> out;
    for (std::size_t x = 0; x < U.size(); ++x) {
        for (std::size_t y = 0; y < U.size(); ++y) {
            bool ok = true;
            for (const auto& [param, value] : inst.soft.values)
                if (value.count(x) && !value.count(y)) {
                    ok = false;
                    break;
                }
            if (ok) out.emplace(U.name(x), U.name(y));
        }
    }
    return out;
}

const Subset& filtration_stage(const FiltrationSoftInstance& inst, const std::string& param,
                               std::size_t i) {
    auto it = inst.chains.find(param);
    if (it == inst.chains.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
    if (i > inst.depth || i >= it->second.size())
        throw StageOutOfRange("stage " + std::to_string(i) + " outside 0.." +
                              std::to_string(inst.depth));
    return it->second[i];
}

std::vector<std::string> cover_neighborhoods(const CoverSoftInstance& inst,
                                             const std::string& param, const std::string& object) {
    auto it = inst.covers.find(param);
    if (it == inst.covers.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
    std::size_t u = inst.universe.index_of(object);
    std::vector<std::string> out;
    for (const auto& [name, block] : it->second)
        if (block.count(u)) out.push_back(name);
    return out;
}

double weighted_score(const WeightedSoftInstance& inst, const std::string& object) {
    std::size_t u = inst.soft.universe.index_of(object);
    double score = 0.0;
    for (const auto& [param, value] : inst.soft.values)
        if (value.count(u)) {
            auto w = inst.weights.find(param);
            if (w == inst.weights.end()) throw MissingParameter("no weight for '" + param + "'");
            score += w->second;
        }
    return score;
}

UnorderedPair unordered(const std::string& a, const std::string& b) {
    return a <= b ? UnorderedPair{a, b} : UnorderedPair{b, a};
}

double contra_degree(const ContraSoftInstance& inst, const std::string& a, const std::string& b) {
    value_of(inst.soft, a);
    value_of(inst.soft, b);
    auto it = inst.contradiction.find(unordered(a, b));
    if (it != inst.contradiction.end()) return it->second;
    if (a == b) return 0.0;
    throw UnknownIdentifier("no contradiction degree for (" + a + ", " + b + ")");
}

const std::vector<double>& hesitancy_of(const HesiSoftInstance& inst, const std::string& a,
                                        const std::string& b) {
    static const std::vector<double> kZero{0.0};
    value_of(inst.soft, a);
    value_of(inst.soft, b);
    auto it = inst.hesitancy.find(unordered(a, b));
    if (it != inst.hesitancy.end()) return it->second;
    if (a == b) return kZero;
    throw UnknownIdentifier("no hesitancy set for (" + a + ", " + b + ")");
}

Subset multipolar_aggregate(const MultipolarSoftInstance& inst, const std::string& param,
                            PoleMode mode) {
    auto it = inst.values.find(param);
    if (it == inst.values.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
    const auto& poles = it->second;
    if (poles.empty()) return mode == PoleMode::Consensus ? inst.universe.full() : Subset{};
    Subset acc = poles.front();
    for (std::size_t i = 1; i < poles.size(); ++i)
        acc = mode == PoleMode::Consensus ? intersect(acc, poles[i]) : unite(acc, poles[i]);
    return acc;
}

const SoftSet& dynamic_slice(const DynamicSoftInstance& inst, const std::string& index) {
    for (const auto& [name, slice] : inst.slices)
        if (name == index) return slice;
    throw UnknownIndex("unknown index '" + index + "'");
}

const std::vector<Subset>& ranked_lookup(const RankedSoftInstance& inst, const std::string& param) {
    auto it = inst.partitions.find(param);
    if (it == inst.partitions.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
    return it->second;
}

std::size_t rank_of(const RankedSoftInstance& inst, const std::string& param,
                    const std::string& object) {
    const auto& blocks = ranked_lookup(inst, param);
    std::size_t u = inst.universe.index_of(object);
    for (std::size_t j = blocks.size(); j-- > 0;)
        if (blocks[j].count(u)) return j;
    throw ObjectUncovered("'" + object + "' lies in no block of '" + param + "'");
}

Subset refined_consensus(const RefinedSoftInstance& inst, const std::string& param, std::size_t k) {
    if (std::find(inst.params.begin(), inst.params.end(), param) == inst.params.end())
        throw UnknownIdentifier("unknown parameter '" + param + "'");
    if (k < 1 || k > inst.evaluators.size())
        throw IndexOutOfRange("k must lie in 1.." + std::to_string(inst.evaluators.size()));
    std::vector<std::size_t> count(inst.universe.size(), 0);
    for (const auto& [name, soft] : inst.evaluators)
        for (auto u : value_of(soft, param)) ++count[u];
    Subset out;
    for (std::size_t u = 0; u < count.size(); ++u)
        if (count[u] >= k) out.insert(u);
    return out;
}

Subset expert_filter(const SoftExpertInstance& inst, const std::optional<std::string>& param,
                     const std::optional<std::string>& expert, int opinion) {
    if (param && std::find(inst.params.begin(), inst.params.end(), *param) == inst.params.end())
        throw UnknownIdentifier("unknown parameter '" + *param + "'");
    if (expert && std::find(inst.experts.begin(), inst.experts.end(), *expert) == inst.experts.end())
        throw UnknownIdentifier("unknown expert '" + *expert + "'");
    if (opinion != 0 && opinion != 1) throw UnknownIdentifier("opinion must be 0 or 1");
    Subset out;
    for (const auto& e : inst.entries) {
        if (param && e.param != *param) continue;
        if (expert && e.expert != *expert) continue;
        if (e.opinion != opinion) continue;
        out = unite(out, e.value);
    }
    return out;
}

std::size_t expert_approval_count(const SoftExpertInstance& inst, const std::string& object) {
    std::size_t u = inst.universe.index_of(object);
    std::set<std::pair<std::string, std::string>> approving;
    for (const auto& e : inst.entries)
        if (e.opinion == 1 && e.value.count(u)) approving.emplace(e.param, e.expert);
    return approving.size();
}

SoftSet nary_project(const NArySoftInstance& inst, std::size_t i) {
    if (i < 1 || i > inst.components.size())
        throw IndexOutOfRange("component index must lie in 1.." +
                              std::to_string(inst.components.size()));
    SoftSet out{inst.components[i - 1], {}};
    for (const auto& [param, tuple] : inst.values) {
        if (tuple.size() != inst.components.size())
            throw ArityMismatch("value of '" + param + "' has the wrong arity");
        out.values[param] = tuple[i - 1];
    }
    return out;
}

NArySoftInstance nary_assemble(const std::vector<SoftSet>& projections) {
    NArySoftInstance inst;
    if (projections.empty()) throw IndexOutOfRange("at least one component is required");
    for (const auto& p : projections) {
        if (p.params() != projections.front().params())
            throw ArityMismatch("components disagree on the parameter list");
        inst.components.push_back(p.universe);
    }
    for (const auto& [param, value] : projections.front().values) {
        auto& tuple = inst.values[param];
        for (const auto& p : projections) tuple.push_back(p.values.at(param));
    }
    return inst;
}

// ---- validation ----

ValidationReport validate(const HyperSoftInstance& inst) {
    ValidationReport r{"hypersoft", {}};
    check_domains(inst.domains, r);
    bool tags_ok = true;
    if (inst.tags) {
        try {
            check_tags(inst.universe, inst.domains, *inst.tags);
        } catch (const Error& e) {
            tags_ok = false;
            r.add("TAG_ARITY", "/tags", {}, e.what());
        }
    }
    for (const auto& [key, value] : inst.entries) {
        try {
            check_tuple(inst.domains, key);
        } catch (const Error& e) {
            r.add("KEY_OUTSIDE_DOMAIN", "/entries", key, e.what());
            continue;
        }
        if (inst.tags && tags_ok &&
            objects_matching(inst.universe, *inst.tags, singleton_tuple(key)) != value)
            r.add("TAG_MISMATCH", "/entries", key, "entry disagrees with the tag table");
    }
    return r;
}

ValidationReport validate(const SuperHyperSoftInstance& inst) {
    ValidationReport r{"superhypersoft", {}};
    check_domains(inst.domains, r);
    bool tags_ok = true;
    if (inst.tags) {
        try {
            check_tags(inst.universe, inst.domains, *inst.tags);
        } catch (const Error& e) {
            tags_ok = false;
            r.add("TAG_ARITY", "/tags", {}, e.what());
        }
    }
    for (const auto& [key, value] : inst.entries) {
        try {
            canonical_set_tuple(inst.domains, key);
        } catch (const Error& e) {
            r.add("KEY_OUTSIDE_DOMAIN", "/entries", {describe(key)}, e.what());
            continue;
        }
        if (inst.tags && tags_ok && objects_matching(inst.universe, *inst.tags, key) != value)
            r.add("TAG_MISMATCH", "/entries", {describe(key)}, "entry disagrees with the tag table");
    }
    return r;
}

ValidationReport validate(const MNSuperHyperSoftInstance& inst) {
    ValidationReport r{"mnsuperhypersoft", {}};
    check_domains(inst.domains, r);
    if (inst.outputArity < 1) r.add("OUTPUT_ARITY", "/outputArity", {}, "output arity must be >= 1");
    for (const auto& [key, value] : inst.entries) {
        try {
            canonical_set_tuple(inst.domains, key);
        } catch (const Error& e) {
            r.add("KEY_OUTSIDE_DOMAIN", "/entries", {describe(key)}, e.what());
        }
        if (value.size() != inst.outputArity)
            r.add("OUTPUT_ARITY", "/entries", {describe(key)},
                  "output tuple has " + std::to_string(value.size()) + " coordinates, expected " +
                      std::to_string(inst.outputArity));
    }
    return r;
}

static void check_typen_node(const TypeNNode& node, std::size_t level, std::size_t depth,
                             const std::string& path, ValidationReport& r) {
    if (level == depth) {
        for (const auto& [p, child] : node.children)
            r.add("DEPTH_MISMATCH", path + "/" + p, {p}, "chain continues past the declared depth");
        return;
    }
    for (const auto& [p, leaf] : node.leaves)
        r.add("DEPTH_MISMATCH", path + "/" + p, {p},
              "chain terminates at level " + std::to_string(level) + " of " + std::to_string(depth));
    for (const auto& [p, child] : node.children) {
        if (child) check_typen_node(*child, level + 1, depth, path + "/" + p, r);
    }
}

ValidationReport validate(const TypeNSoftInstance& inst) {
    ValidationReport r{"typen", {}};
    if (inst.depth < 1) {
        r.add("DEPTH", "/depth", {}, "depth must be >= 1");
        return r;
    }
    check_typen_node(inst.root, 1, inst.depth, "/root", r);
    return r;
}

ValidationReport validate(const NSoftInstance& inst) {
    ValidationReport r{"nsoft", {}};
    if (inst.N < 2) r.add("GRADE_COUNT", "/N", {}, "N must be >= 2");
    std::set<std::string> params(inst.params.begin(), inst.params.end());
    for (const auto& p : inst.params) {
        for (const auto& u : inst.universe.objects()) {
            auto it = inst.grades.find({p, u});
            if (it == inst.grades.end() || it->second.empty()) {
                r.add("GRADE_MISSING", "/grades/" + p, {p, u}, "no grade for this pair");
                continue;
            }
            if (it->second.size() > 1)
                r.add("DUPLICATE_GRADE", "/grades/" + p, {p, u}, "more than one grade for this pair");
            for (int g : it->second)
                if (g < 0 || g >= inst.N)
                    r.add("GRADE_OUT_OF_RANGE", "/grades/" + p, {p, u, std::to_string(g)},
                          "grade outside 0..N-1");
        }
    }
    for (const auto& [key, grades] : inst.grades)
        if (!params.count(key.first) || !inst.universe.contains(key.second))
            r.add("GRADE_EXTRA", "/grades", {key.first, key.second}, "grade for an unknown pair");
    return r;
}

ValidationReport validate(const ProbabilisticSoftInstance& inst) {
    ValidationReport r{"probabilistic", {}};
    for (const auto& [param, row] : inst.dist) {
        if (row.size() != inst.universe.size()) {
            r.add("ROW_SIZE", "/dist/" + param, {param}, "row does not cover the universe");
            continue;
        }
        double sum = 0.0;
        for (std::size_t u = 0; u < row.size(); ++u) {
            if (!(row[u] >= 0.0 && row[u] <= 1.0))
                r.add("PROB_OUT_OF_RANGE", "/dist/" + param, {param, inst.universe.name(u)},
                      "probability outside [0,1]");
            sum += row[u];
        }
        if (std::fabs(sum - 1.0) > kEpsilon)
            r.add("ROW_SUM", "/dist/" + param, {param, num(sum)}, "row sums to " + num(sum));
    }
    return r;
}

ValidationReport validate(const DSoftInstance& inst) {
    ValidationReport r{"dsoft", {}};
    for (const auto& [param, table] : inst.masses) {
        double sum = 0.0;
        for (const auto& [focal, mass] : table) {
            std::string key = subset_key(inst.universe, focal);
            if (focal.empty())
                r.add("EMPTY_FOCAL", "/masses/" + param, {param}, "mass on the empty set");
            if (!(mass >= 0.0 && mass <= 1.0))
                r.add("MASS_OUT_OF_RANGE", "/masses/" + param, {param, key}, "mass outside [0,1]");
            sum += mass;
        }
        if (sum > 1.0 + kEpsilon)
            r.add("MASS_EXCEEDS_ONE", "/masses/" + param, {param, num(sum)},
                  "masses sum to " + num(sum));
    }
    return r;
}

ValidationReport validate(const RandomSoftInstance& inst) {
    ValidationReport r{"random", {}};
    double sum = 0.0;
    std::set<std::string> names;
    for (std::size_t i = 0; i < inst.outcomes.size(); ++i) {
        const auto& o = inst.outcomes[i];
        std::string path = "/outcomes/" + std::to_string(i);
        if (!names.insert(o.name).second)
            r.add("DUPLICATE_OUTCOME", path, {o.name}, "outcome name repeated");
        if (!(o.probability >= 0.0 && o.probability <= 1.0))
            r.add("PROB_OUT_OF_RANGE", path, {o.name}, "probability outside [0,1]");
        sum += o.probability;
        if (!(o.slice.universe == inst.universe))
            r.add("SLICE_UNIVERSE", path, {o.name}, "slice over a different universe");
        auto sp = o.slice.params();
        if (std::set<std::string>(sp.begin(), sp.end()) != std::set<std::string>(inst.params.begin(), inst.params.end()))
            r.add("SLICE_PARAMS", path, {o.name}, "slice parameters differ from the shared list");
    }
    if (inst.outcomes.empty()) r.add("NO_OUTCOMES", "/outcomes", {}, "outcome list is empty");
    if (std::fabs(sum - 1.0) > kEpsilon)
        r.add("PROB_SUM", "/outcomes", {num(sum)}, "outcome probabilities sum to " + num(sum));
    return r;
}

ValidationReport validate(const CapacitarySoftInstance& inst) {
    ValidationReport r{"capacitary", {}};
    std::size_t n = inst.universe.size();
    if (n > kMaxCapacityUniverse) {
        r.add("UNIVERSE_TOO_LARGE", "/universe", {}, "capacity tables need |U| <= 12");
        return r;
    }
    unsigned long long limit = 1ULL << n;
    for (const auto& [param, table] : inst.capacities) {
        std::string path = "/capacities/" + param;
        if (table.size() != limit) {
            r.add("TABLE_INCOMPLETE", path, {param}, "capacity table must cover the full powerset");
            continue;
        }
        Subset empty, all = inst.universe.full();
        if (table.at(empty) != 0.0) r.add("NORMALIZATION_EMPTY", path, {param}, "nu(empty) != 0");
        if (std::fabs(table.at(all) - 1.0) > kEpsilon)
            r.add("NORMALIZATION_FULL", path, {param}, "nu(U) != 1");
        for (const auto& [s, v] : table)
            if (!(v >= 0.0 && v <= 1.0 + kEpsilon))
                r.add("CAPACITY_OUT_OF_RANGE", path, {param, subset_key(inst.universe, s)},
                      "capacity outside [0,1]");
        // Monotonicity along one-element extensions implies it for every comparable pair.
        for (unsigned long long m = 0; m < limit; ++m) {
            Subset s = inst.universe.from_mask(m);
            for (std::size_t x = 0; x < n; ++x) {
                if (m >> x & 1ULL) continue;
                Subset t = inst.universe.from_mask(m | 1ULL << x);
                if (table.at(s) > table.at(t) + kEpsilon)
                    r.add("MONOTONICITY", path,
                          {param, subset_key(inst.universe, s), subset_key(inst.universe, t)},
                          "nu decreases from a set to its superset");
            }
        }
    }
    return r;
}

ValidationReport validate(const PosetSoftInstance& inst) {
    ValidationReport r{"poset", {}};
    auto params = inst.soft.params();
    for (const auto& [a, b] : inst.order)
        if (!inst.soft.values.count(a) || !inst.soft.values.count(b))
            r.add("UNKNOWN_PARAM", "/order", {a, b}, "order pair names an unknown parameter");
    for (const auto& a : params)
        for (const auto& b : params) {
            if (a != b && inst.leq(a, b) && inst.leq(b, a))
                if (a < b) r.add("ANTISYMMETRY", "/order", {a, b}, "distinct parameters below each other");
            if (!inst.leq(a, b)) continue;
            for (const auto& c : params)
                if (inst.leq(b, c) && !inst.leq(a, c))
                    r.add("TRANSITIVITY", "/order", {a, b, c}, "order is not transitive");
            Subset gap = subtract(inst.soft.values.at(a), inst.soft.values.at(b));
            if (!gap.empty()) {
                std::vector<std::string> w{a, b};
                for (const auto& x : inst.soft.universe.names(gap)) w.push_back(x);
                r.add("MONOTONICITY", "/values/" + a, w, "F(a) is not contained in F(b) for a <= b");
            }
        }
    return r;
}

ValidationReport validate(const FiltrationSoftInstance& inst) {
    ValidationReport r{"filtration", {}};
    if (inst.depth < 1) r.add("DEPTH", "/depth", {}, "depth must be >= 1");
    for (const auto& [param, chain] : inst.chains) {
        if (chain.size() != inst.depth + 1) {
            r.add("CHAIN_LENGTH", "/chains/" + param, {param},
                  "chain has " + std::to_string(chain.size()) + " stages, expected " +
                      std::to_string(inst.depth + 1));
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            if (!is_subset(chain[i], chain[i + 1]))
                r.add("NOT_NESTED", "/chains/" + param + "/" + std::to_string(i + 1),
                      {param, std::to_string(i), std::to_string(i + 1)}, "stage is not nested in the next");
    }
    return r;
}

ValidationReport validate(const CoverSoftInstance& inst) {
    ValidationReport r{"cover", {}};
    for (const auto& [param, blocks] : inst.covers) {
        Subset covered;
        for (const auto& [name, block] : blocks) {
            if (block.empty())
                r.add("EMPTY_BLOCK", "/covers/" + param + "/" + name, {param, name}, "block is empty");
            covered = unite(covered, block);
        }
        Subset missing = subtract(inst.universe.full(), covered);
        if (!missing.empty()) {
            std::vector<std::string> w{param};
            for (const auto& x : inst.universe.names(missing)) w.push_back(x);
            r.add("NOT_COVERING", "/covers/" + param, w, "blocks do not cover the universe");
        }
    }
    return r;
}

ValidationReport validate(const WeightedSoftInstance& inst) {
    ValidationReport r{"weighted", {}};
    for (const auto& p : inst.soft.params())
        if (!inst.weights.count(p)) r.add("WEIGHT_MISSING", "/weights", {p}, "no weight for parameter");
    for (const auto& [p, w] : inst.weights) {
        if (!inst.soft.values.count(p))
            r.add("WEIGHT_EXTRA", "/weights", {p}, "weight for an unknown parameter");
        if (!(w >= 0.0 && w <= 1.0))
            r.add("WEIGHT_OUT_OF_RANGE", "/weights/" + p, {p}, "weight outside [0,1]");
    }
    return r;
}

ValidationReport validate(const BijectiveSoftInstance& inst) {
    ValidationReport r{"bijective", {}};
    const auto& s = inst.soft;
    Subset covered;
    for (auto a = s.values.begin(); a != s.values.end(); ++a) {
        if (a->second.empty()) r.add("EMPTY_BLOCK", "/values/" + a->first, {a->first}, "block is empty");
        for (auto b = std::next(a); b != s.values.end(); ++b) {
            Subset common = intersect(a->second, b->second);
            if (!common.empty()) {
                std::vector<std::string> w{a->first, b->first};
                for (const auto& x : s.universe.names(common)) w.push_back(x);
                r.add("OVERLAP", "/values/" + a->first, w, "blocks are not disjoint");
            }
        }
        covered = unite(covered, a->second);
    }
    Subset missing = subtract(s.universe.full(), covered);
    if (!missing.empty())
        r.add("NOT_COVERING", "/values", s.universe.names(missing), "blocks do not cover the universe");
    return r;
}

static void check_operation(const OperationTable& op, const std::set<std::string>& params,
                            ValidationReport& r) {
    for (const auto& [xy, z] : op)
        if (!params.count(xy.first) || !params.count(xy.second) || !params.count(z))
            r.add("OPERATION_DOMAIN", "/operation", {xy.first, xy.second, z},
                  "operation entry names an unknown parameter");
}

ValidationReport validate(const DoubleFramedSoftInstance& inst) {
    ValidationReport r{"doubleframed", {}};
    std::set<std::string> params(inst.params.begin(), inst.params.end());
    for (const auto* frame : {&inst.alpha, &inst.beta}) {
        std::set<std::string> keys;
        for (const auto& kv : *frame) keys.insert(kv.first);
        if (keys != params)
            r.add("FRAME_DOMAIN", frame == &inst.alpha ? "/alpha" : "/beta", {},
                  "frame is not defined exactly on the parameters");
    }
    check_operation(inst.operation, params, r);
    if (!r.passed()) return r;
    for (const auto& [xy, z] : inst.operation) {
        const auto& [x, y] = xy;
        Subset need = intersect(inst.alpha.at(x), inst.alpha.at(y));
        Subset gap = subtract(need, inst.alpha.at(z));
        if (!gap.empty()) {
            std::vector<std::string> w{x, y, z};
            for (const auto& o : inst.universe.names(gap)) w.push_back(o);
            r.add("POSITIVE_FRAME", "/alpha/" + z, w, "alpha(x*y) misses part of alpha(x) n alpha(y)");
        }
        Subset allowed = unite(inst.beta.at(x), inst.beta.at(y));
        Subset extra = subtract(inst.beta.at(z), allowed);
        if (!extra.empty()) {
            std::vector<std::string> w{x, y, z};
            for (const auto& o : inst.universe.names(extra)) w.push_back(o);
            r.add("NEGATIVE_FRAME", "/beta/" + z, w, "beta(x*y) exceeds beta(x) u beta(y)");
        }
    }
    return r;
}

ValidationReport validate(const IntersectionalSoftInstance& inst) {
    ValidationReport r{"intersectional", {}};
    std::set<std::string> params;
    for (const auto& p : inst.soft.params()) params.insert(p);
    check_operation(inst.operation, params, r);
    if (!r.passed()) return r;
    for (const auto& [xy, z] : inst.operation) {
        const auto& v = inst.soft.values;
        Subset gap = subtract(intersect(v.at(xy.first), v.at(xy.second)), v.at(z));
        if (!gap.empty()) {
            std::vector<std::string> w{xy.first, xy.second, z};
            for (const auto& o : inst.soft.universe.names(gap)) w.push_back(o);
            r.add("INTERSECTION_LAW", "/values/" + z, w, "F(x) n F(y) is not contained in F(x*y)");
        }
    }
    return r;
}

template <class Table>
static void check_pair_table(const SoftSet& soft, const Table& table, ValidationReport& r) {
    auto params = soft.params();
    for (const auto& [pair, value] : table)
        if (!soft.values.count(pair.first) || !soft.values.count(pair.second))
            r.add("UNKNOWN_PARAM", "/pairs", {pair.first, pair.second}, "pair names an unknown parameter");
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (!table.count(unordered(params[i], params[j])))
                r.add("PAIR_MISSING", "/pairs", {params[i], params[j]}, "no value for this pair");
}

ValidationReport validate(const ContraSoftInstance& inst) {
    ValidationReport r{"contra", {}};
    check_pair_table(inst.soft, inst.contradiction, r);
    for (const auto& [pair, c] : inst.contradiction) {
        if (!(c >= 0.0 && c <= 1.0))
            r.add("DEGREE_OUT_OF_RANGE", "/contradiction", {pair.first, pair.second},
                  "degree outside [0,1]");
        if (pair.first == pair.second && c != 0.0)
            r.add("SELF_CONTRADICTION", "/contradiction", {pair.first}, "c(e,e) must be 0");
    }
    return r;
}

ValidationReport validate(const HesiSoftInstance& inst) {
    ValidationReport r{"hesi", {}};
    check_pair_table(inst.soft, inst.hesitancy, r);
    for (const auto& [pair, h] : inst.hesitancy) {
        if (h.empty())
            r.add("EMPTY_HESITANCY", "/hesitancy", {pair.first, pair.second}, "hesitancy set is empty");
        for (double x : h)
            if (!(x >= 0.0 && x <= 1.0))
                r.add("HESITANCY_OUT_OF_RANGE", "/hesitancy", {pair.first, pair.second, num(x)},
                      "hesitancy value outside [0,1]");
        if (!std::is_sorted(h.begin(), h.end()) ||
            std::adjacent_find(h.begin(), h.end()) != h.end())
            r.add("NOT_CANONICAL", "/hesitancy", {pair.first, pair.second},
                  "hesitancy set must be sorted without duplicates");
        if (pair.first == pair.second && h != std::vector<double>{0.0})
            r.add("SELF_HESITANCY", "/hesitancy", {pair.first}, "h(e,e) must be {0}");
    }
    return r;
}

ValidationReport validate(const MultipolarSoftInstance& inst) {
    ValidationReport r{"multipolar", {}};
    if (inst.poles < 2) r.add("POLE_COUNT", "/poles", {}, "at least two poles are required");
    for (const auto& [param, tuple] : inst.values)
        if (tuple.size() != inst.poles)
            r.add("POLE_ARITY", "/values/" + param, {param},
                  "tuple has " + std::to_string(tuple.size()) + " poles, expected " +
                      std::to_string(inst.poles));
    return r;
}

ValidationReport validate(const DynamicSoftInstance& inst) {
    ValidationReport r{"dynamic", {}};
    std::set<std::string> seen;
    for (const auto& [index, slice] : inst.slices) {
        if (!seen.insert(index).second)
            r.add("DUPLICATE_INDEX", "/slices", {index}, "index repeated");
        if (!(slice.universe == inst.universe))
            r.add("SLICE_UNIVERSE", "/slices", {index}, "slice over a different universe");
    }
    return r;
}

ValidationReport validate(const RankedSoftInstance& inst) {
    ValidationReport r{"ranked", {}};
    for (const auto& [param, blocks] : inst.partitions) {
        Subset covered;
        for (const auto& b : blocks) covered = unite(covered, b);
        Subset missing = subtract(inst.universe.full(), covered);
        if (!missing.empty()) {
            std::vector<std::string> w{param};
            for (const auto& x : inst.universe.names(missing)) w.push_back(x);
            r.add("NOT_COVERING", "/partitions/" + param, w, "blocks do not cover the universe");
        }
    }
    return r;
}

ValidationReport validate(const RefinedSoftInstance& inst) {
    ValidationReport r{"refined", {}};
    if (inst.evaluators.empty()) r.add("NO_EVALUATORS", "/evaluators", {}, "no evaluators");
    std::vector<std::string> params = inst.params;
    std::sort(params.begin(), params.end());
    for (const auto& [name, soft] : inst.evaluators) {
        if (std::binary_search(params.begin(), params.end(), name))
            r.add("NAME_CLASH", "/evaluators/" + name, {name}, "evaluator name is also a parameter");
        if (soft.params() != params)
            r.add("EVALUATOR_DOMAIN", "/evaluators/" + name, {name},
                  "evaluator does not cover exactly the primary parameters");
        if (!(soft.universe == inst.universe))
            r.add("EVALUATOR_UNIVERSE", "/evaluators/" + name, {name}, "different universe");
    }
    return r;
}

ValidationReport validate(const SoftExpertInstance& inst) {
    ValidationReport r{"softexpert", {}};
    std::set<std::tuple<std::string, std::string, int>> keys;
    for (std::size_t i = 0; i < inst.entries.size(); ++i) {
        const auto& e = inst.entries[i];
        std::string path = "/entries/" + std::to_string(i);
        if (std::find(inst.params.begin(), inst.params.end(), e.param) == inst.params.end())
            r.add("UNKNOWN_PARAM", path, {e.param}, "unknown parameter");
        if (std::find(inst.experts.begin(), inst.experts.end(), e.expert) == inst.experts.end())
            r.add("UNKNOWN_EXPERT", path, {e.expert}, "unknown expert");
        if (e.opinion != 0 && e.opinion != 1)
            r.add("OPINION_RANGE", path, {std::to_string(e.opinion)}, "opinion must be 0 or 1");
        if (!keys.emplace(e.param, e.expert, e.opinion).second)
            r.add("DUPLICATE_KEY", path, {e.param, e.expert, std::to_string(e.opinion)},
                  "key listed twice");
    }
    return r;
}

ValidationReport validate(const NArySoftInstance& inst) {
    ValidationReport r{"nary", {}};
    if (inst.components.empty()) r.add("COMPONENTS", "/components", {}, "need at least one component");
    for (const auto& [param, tuple] : inst.values) {
        if (tuple.size() != inst.components.size()) {
            r.add("ARITY", "/values/" + param, {param}, "tuple arity differs from component count");
            continue;
        }
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (auto x : tuple[i])
                if (x >= inst.components[i].size())
                    r.add("COMPONENT_CONTAINMENT", "/values/" + param, {param, std::to_string(i + 1)},
                          "coordinate leaves its component universe");
    }
    return r;
}

}  // namespace softsets
