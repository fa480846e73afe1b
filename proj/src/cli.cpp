#include "softsets/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

namespace softsets {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string key_string(const json& key) {
    if (!key.is_string()) throw SchemaError("key must be a string");
    return key.get<std::string>();
}

std::vector<std::string> key_strings(const json& key) {
    if (!key.is_array()) throw SchemaError("key must be an array of strings");
    std::vector<std::string> out;
    for (const auto& x : key) {
        if (!x.is_string()) throw SchemaError("key must be an array of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::pair<std::string, std::string> key_pair(const json& key) {
    auto v = key_strings(key);
    if (v.size() != 2) throw SchemaError("key must be a pair of names");
    return {v[0], v[1]};
}

SetTuple key_set_tuple(const json& key) {
    if (!key.is_array()) throw SchemaError("key must be an array of arrays");
    SetTuple out;
    for (const auto& x : key) out.push_back(key_strings(x));
    return out;
}

// [name, n] with a nonnegative integer second element.
std::pair<std::string, std::size_t> key_indexed(const json& key) {
    if (!key.is_array() || key.size() != 2 || !key[0].is_string() || !key[1].is_number_integer() ||
        key[1].get<long long>() < 0)
        throw SchemaError("key must be [name, nonnegative integer]");
    return {key[0].get<std::string>(), key[1].get<std::size_t>()};
}

json setmap(const Universe& u, const std::map<std::string, Subset>& m) {
    json out = json::object();
    for (const auto& [k, s] : m) out[k] = subset_json(u, s);
    return out;
}

json payload_json(const Payload& p) {
    return std::visit([](const auto& x) { return json(x); }, p);
}

std::set<std::string> node_set(const json& key) {
    auto v = key_strings(key);
    return {v.begin(), v.end()};
}

json eval_hyper(const HyperSoftInstance& h, const json& key) {
    TupleKey k = key_strings(key);
    try {
        return subset_json(h.universe, eval_keyed(h, k));
    } catch (const MissingParameter&) {
        // Instances built from tags only list tuples with a nonempty result.
        if (h.tags) return json::array();
        throw;
    }
}

json eval_superhyper(const SuperHyperSoftInstance& h, const json& key) {
    SetTuple k = key_set_tuple(key);
    try {
        return subset_json(h.universe, eval_keyed(h, k));
    } catch (const MissingParameter&) {
        if (!h.tags) throw;
        auto built = build_superhypersoft_from_tags(h.universe, h.domains, *h.tags, {k});
        return subset_json(h.universe, eval_keyed(built, k));
    }
}

json eval_body(const DocumentBody& body, const json& key) {
    return std::visit(
        overloaded{
            [&](const SoftSet& s) -> json { return subset_json(s.universe, value_of(s, key_string(key))); },
            [&](const TValuedSoftSet& tv) -> json {
                auto curried = curry(tv);
                if (key.is_string()) {
                    auto it = curried.find(key.get<std::string>());
                    if (it == curried.end()) throw UnknownIdentifier("unknown parameter '" + key.get<std::string>() + "'");
                    json row = json::object();
                    for (const auto& [obj, p] : it->second) row[obj] = payload_json(p);
                    return row;
                }
                auto [param, obj] = key_pair(key);
                auto it = tv.table.find({param, obj});
                if (it == tv.table.end()) throw UnknownIdentifier("no entry for (" + param + ", " + obj + ")");
                return payload_json(it->second);
            },
            [&](const HyperSoftInstance& h) -> json { return eval_hyper(h, key); },
            [&](const SuperHyperSoftInstance& h) -> json { return eval_superhyper(h, key); },
            [&](const MNSuperHyperSoftInstance& h) -> json {
                json out = json::array();
                for (const auto& s : eval_keyed(h, key_set_tuple(key))) out.push_back(subset_json(h.universe, s));
                return out;
            },
            [&](const TypeNSoftInstance& t) -> json {
                return subset_json(t.universe, eval_typen_chain(t, key_strings(key)));
            },
            [&](const NSoftInstance& n) -> json {
                if (key.is_string()) {
                    json row = json::object();
                    for (const auto& u : n.universe.objects()) row[u] = nsoft_grade(n, key.get<std::string>(), u);
                    return row;
                }
                if (key.is_array() && key.size() == 2 && key[1].is_number_integer()) {
                    auto [param, r] = key_indexed(key);
                    return subset_json(n.universe, nsoft_projection(n, param, static_cast<int>(r)));
                }
                auto [param, obj] = key_pair(key);
                return nsoft_grade(n, param, obj);
            },
            [&](const ProbabilisticSoftInstance& p) -> json {
                std::string param = key.is_string() ? key.get<std::string>() : key_pair(key).first;
                auto it = p.dist.find(param);
                if (it == p.dist.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
                if (key.is_string()) {
                    json row = json::object();
                    for (std::size_t i = 0; i < it->second.size(); ++i) row[p.universe.name(i)] = it->second[i];
                    return row;
                }
                return it->second[p.universe.index_of(key_pair(key).second)];
            },
            [&](const DSoftInstance& d) -> json {
                std::string param = key_string(key);
                auto it = d.masses.find(param);
                if (it == d.masses.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
                json masses = json::object();
                for (const auto& [s, m] : it->second) masses[subset_key(d.universe, s)] = m;
                return {{"masses", masses}, {"unassigned", dsoft_unassigned_mass(d, param)}};
            },
            [&](const RandomSoftInstance& r) -> json {
                auto [param, obj] = key_pair(key);
                return random_membership_probability(r, param, obj);
            },
            [&](const CapacitarySoftInstance& c) -> json {
                if (!key.is_array() || key.size() != 2 || !key[0].is_string())
                    throw SchemaError("key must be [param, [objects]]");
                auto names = key_strings(key[1]);
                for (const auto& n : names)
                    if (!c.universe.contains(n)) throw UnknownIdentifier("unknown object '" + n + "'");
                return capacity_query(c, key[0].get<std::string>(), c.universe.subset(names));
            },
            [&](const PosetSoftInstance& p) -> json {
                if (key.is_string()) return subset_json(p.soft.universe, value_of(p.soft, key.get<std::string>()));
                auto [x, y] = key_pair(key);
                for (const auto& o : {x, y})
                    if (!p.soft.universe.contains(o)) throw UnknownIdentifier("unknown object '" + o + "'");
                return posetsoft_preorder(p).count({x, y}) != 0;
            },
            [&](const FiltrationSoftInstance& f) -> json {
                auto [param, i] = key_indexed(key);
                return subset_json(f.universe, filtration_stage(f, param, i));
            },
            [&](const CoverSoftInstance& c) -> json {
                auto [param, obj] = key_pair(key);
                return cover_neighborhoods(c, param, obj);
            },
            [&](const WeightedSoftInstance& w) -> json { return weighted_score(w, key_string(key)); },
            [&](const BijectiveSoftInstance& b) -> json {
                return subset_json(b.soft.universe, value_of(b.soft, key_string(key)));
            },
            [&](const DoubleFramedSoftInstance& d) -> json {
                std::string param = key_string(key);
                auto a = d.alpha.find(param);
                auto b = d.beta.find(param);
                if (a == d.alpha.end() || b == d.beta.end())
                    throw UnknownIdentifier("unknown parameter '" + param + "'");
                return {{"alpha", subset_json(d.universe, a->second)}, {"beta", subset_json(d.universe, b->second)}};
            },
            [&](const IntersectionalSoftInstance& i) -> json {
                return subset_json(i.soft.universe, value_of(i.soft, key_string(key)));
            },
            [&](const ContraSoftInstance& c) -> json {
                auto [a, b] = key_pair(key);
                return contra_degree(c, a, b);
            },
            [&](const HesiSoftInstance& h) -> json {
                auto [a, b] = key_pair(key);
                return hesitancy_of(h, a, b);
            },
            [&](const MultipolarSoftInstance& m) -> json {
                std::string param = key_string(key);
                json poles = json::array();
                auto it = m.values.find(param);
                if (it == m.values.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
                for (const auto& s : it->second) poles.push_back(subset_json(m.universe, s));
                return {{"poles", poles},
                        {"consensus", subset_json(m.universe, multipolar_aggregate(m, param, PoleMode::Consensus))},
                        {"any", subset_json(m.universe, multipolar_aggregate(m, param, PoleMode::Any))}};
            },
            [&](const DynamicSoftInstance& d) -> json {
                if (key.is_string()) {
                    const SoftSet& s = dynamic_slice(d, key.get<std::string>());
                    return setmap(s.universe, s.values);
                }
                auto [index, param] = key_pair(key);
                const SoftSet& s = dynamic_slice(d, index);
                return subset_json(s.universe, value_of(s, param));
            },
            [&](const RankedSoftInstance& r) -> json {
                if (key.is_string()) {
                    json blocks = json::array();
                    for (const auto& b : ranked_lookup(r, key.get<std::string>())) blocks.push_back(subset_json(r.universe, b));
                    return blocks;
                }
                auto [param, obj] = key_pair(key);
                return rank_of(r, param, obj);
            },
            [&](const RefinedSoftInstance& r) -> json {
                auto [param, k] = key_indexed(key);
                return subset_json(r.universe, refined_consensus(r, param, k));
            },
            [&](const SoftExpertInstance& s) -> json {
                if (key.is_string()) return expert_approval_count(s, key.get<std::string>());
                if (!key.is_object()) throw SchemaError("key must be an object or an object name");
                std::optional<std::string> param, expert;
                int opinion = 1;
                for (auto it = key.begin(); it != key.end(); ++it) {
                    if (it.key() == "param") param = key_string(it.value());
                    else if (it.key() == "expert") expert = key_string(it.value());
                    else if (it.key() == "opinion" && it.value().is_number_integer()) opinion = it.value().get<int>();
                    else throw SchemaError("unexpected key field '" + it.key() + "'");
                }
                return subset_json(s.universe, expert_filter(s, param, expert, opinion));
            },
            [&](const NArySoftInstance& n) -> json {
                if (!key.is_number_integer() || key.get<long long>() < 0) throw SchemaError("key must be a component index");
                SoftSet s = nary_project(n, key.get<std::size_t>());
                return setmap(s.universe, s.values);
            },
            [&](const TreeSoftInstance& t) -> json { return subset_json(t.universe, treesoft_eval(t, node_set(key))); },
            [&](const ForestSoftInstance& f) -> json {
                return subset_json(f.universe, forestsoft_eval(f, node_set(key)));
            },
            [&](const GraphicSoftInstance& g) -> json {
                if (!key.is_object()) throw SchemaError("key must be {\"vertices\": [...], \"edges\": [[a, b], ...]}");
                std::set<std::string> vertices;
                std::vector<Edge> edges;
                for (auto it = key.begin(); it != key.end(); ++it) {
                    if (it.key() == "vertices") vertices = node_set(it.value());
                    else if (it.key() == "edges") {
                        if (!it.value().is_array()) throw SchemaError("edges must be an array");
                        for (const auto& e : it.value()) edges.push_back(key_pair(e));
                    } else throw SchemaError("unexpected key field '" + it.key() + "'");
                }
                return subset_json(g.universe, graphicsoft_eval(g, vertices, edges));
            },
            [&](const CycleSoftInstance& c) -> json { return subset_json(c.universe, cyclesoft_eval(c, node_set(key))); },
            [&](const ClusterSoftInstance& c) -> json {
                return subset_json(c.universe, clustersoft_eval(c, key_string(key)));
            },
            [&](const DagSoftInstance& d) -> json {
                return subset_json(d.soft.universe, value_of(d.soft, key_string(key)));
            },
            [&](const SoftFunctionDocument& d) -> json {
                std::string which = key_string(key);
                if (which == "image") {
                    SoftSet s = soft_image(d.pair, d.forward);
                    return setmap(s.universe, s.values);
                }
                if (which == "preimage") {
                    SoftSet s = soft_preimage(d.pair, d.backward);
                    return setmap(s.universe, s.values);
                }
                throw SchemaError("key must be \"image\" or \"preimage\"");
            },
            [&](const auto&) -> json { throw KindMismatch("eval is not defined for this kind"); },
        },
        body);
}

json parse_key(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        return json(text);
    }
}

json prob_report(const Document& doc, const std::optional<std::string>& param,
                 const std::optional<std::string>& object) {
    json out = {{"kind", doc.kind}};
    std::visit(
        overloaded{
            [&](const StatDatabase& db) {
                Interval iv = soft_probability_interval(db);
                out["low"] = iv.low;
                out["high"] = iv.high;
            },
            [&](const RandomSoftInstance& r) {
                if (param && object) {
                    out["probability"] = random_membership_probability(r, *param, *object);
                    return;
                }
                json table = json::object();
                for (const auto& p : r.params) {
                    if (param && p != *param) continue;
                    for (const auto& u : r.universe.objects())
                        if (!object || u == *object) table[p][u] = random_membership_probability(r, p, u);
                }
                out["membership"] = table;
            },
            [&](const DSoftInstance& d) {
                json table = json::object();
                for (const auto& [p, row] : d.masses)
                    if (!param || p == *param) table[p] = dsoft_unassigned_mass(d, p);
                if (param && table.empty()) throw UnknownIdentifier("unknown parameter '" + *param + "'");
                out["unassigned"] = table;
            },
            [&](const ProbabilisticSoftInstance& p) {
                json sums = json::object();
                for (const auto& [name, row] : p.dist) {
                    if (param && name != *param) continue;
                    double s = 0.0;
                    for (double x : row) s += x;
                    sums[name] = s;
                }
                if (param && sums.empty()) throw UnknownIdentifier("unknown parameter '" + *param + "'");
                out["rowSums"] = sums;
                if (param && object) out["probability"] = p.dist.at(*param).at(p.universe.index_of(*object));
            },
            [&](const CapacitarySoftInstance& c) {
                json all = json::object();
                for (const auto& [p, table] : c.capacities) {
                    if (param && p != *param) continue;
                    json list = json::array();
                    for (const auto& w : nonadditivity_witnesses(c, p))
                        list.push_back({{"s", subset_json(c.universe, w.s)},
                                        {"t", subset_json(c.universe, w.t)},
                                        {"joint", w.joint},
                                        {"sum", w.sum}});
                    all[p] = list;
                }
                if (param && all.empty()) throw UnknownIdentifier("unknown parameter '" + *param + "'");
                out["nonadditivity"] = all;
            },
            [&](const auto&) { throw KindMismatch("prob is not defined for kind '" + doc.kind + "'"); },
        },
        doc.body);
    return out;
}

template <class T>
const T& body_as(const Document& doc, const std::string& verb) {
    if (const T* p = std::get_if<T>(&doc.body)) return *p;
    throw KindMismatch(verb + " is not defined for kind '" + doc.kind + "'");
}

json check_report(const std::string& axioms, const Document& doc) {
    if (axioms == "topology" || axioms == "algebra" || axioms == "bitopology") {
        const auto& d = body_as<FamilyDocument>(doc, "check " + axioms);
        if (axioms == "topology") return report_json(check_soft_topology(d.family));
        if (axioms == "algebra") return report_json(check_soft_algebra(d.family));
        if (!d.second) throw SchemaError("bitopology checks need secondMembers");
        return report_json(check_soft_bitopology(d.family, *d.second));
    }
    if (axioms == "matroid") return report_json(check_soft_matroid(body_as<SoftMatroidInstance>(doc, "check matroid")));
    if (axioms == "metric") return report_json(check_soft_metric(body_as<SoftMetricInstance>(doc, "check metric")));
    if (axioms == "softgraph") return report_json(check_soft_graph(body_as<SoftGraphInstance>(doc, "check softgraph")));
    if (axioms == "dag") {
        DagCheck c = dagsoft_check(body_as<DagSoftInstance>(doc, "check dag"));
        json out = report_json(c.report);
        out["order"] = c.order;
        return out;
    }
    if (auto kind = structure_kind_from(axioms)) {
        const auto& d = body_as<StructureDocument>(doc, "check " + axioms);
        if (!d.soft) {
            if (*kind != d.table.kind) throw KindMismatch("table declares a " + to_string(d.table.kind));
            return report_json(validate(d.table));
        }
        ValidationReport r = check_substructure(d.table, *d.soft, *kind);
        if (d.sub && !check_soft_subrelation(*d.sub, *d.soft, d.table, *kind))
            r.add("SUBRELATION", "/sub", {}, "sub is not a soft sub" + axioms + " of soft");
        return report_json(r);
    }
    throw SchemaError("unknown axiom set '" + axioms + "'");
}

json rank_report(const Document& doc, std::optional<double> v) {
    if (const auto* d = std::get_if<DecisionDocument>(&doc.body)) {
        switch (d->method) {
            case Method::Score: return ranking_json(score_rank(d->instance));
            case Method::Topsis: return ranking_json(topsis_rank(d->instance));
            case Method::Vikor: return ranking_json(vikor_rank(d->instance, v ? *v : d->v.value_or(0.5)));
            case Method::Ahp: break;
        }
        throw SchemaError("AHP documents use kind \"ahp\"");
    }
    if (const auto* h = std::get_if<AhpHierarchy>(&doc.body)) return ranking_json(ahp_global_rank(*h));
    if (const auto* w = std::get_if<WeightedSoftInstance>(&doc.body))
        return ranking_json(soft_score_select(w->soft, w->weights));
    throw KindMismatch("rank is not defined for kind '" + doc.kind + "'");
}

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
    auto scalar = [](const json& x) { return !x.is_array() && !x.is_object(); };
    if (j.is_string()) {
        rows.emplace_back(path, j.get<std::string>());
    } else if (scalar(j)) {
        rows.emplace_back(path, dump_canonical(j));
    } else if (j.is_array() && (j.empty() || std::all_of(j.begin(), j.end(), scalar))) {
        rows.emplace_back(path, dump_canonical(j));
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    } else if (j.empty()) {
        rows.emplace_back(path, "{}");
    } else {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
    }
}

}  // namespace

json evaluate(const Document& doc, const json& key) { return eval_body(doc.body, key); }

json ranking_json(const RankingResult& r) {
    auto names = [&](const std::vector<std::size_t>& idx) {
        json out = json::array();
        for (auto i : idx) out.push_back(r.alternatives.at(i));
        return out;
    };
    json ordering = json::array();
    for (const auto& g : r.ordering) ordering.push_back(names(g));
    json diag = json::object();
    for (const auto& [k, v] : r.diagnostics.vectors) diag[k] = v;
    for (const auto& [k, v] : r.diagnostics.scalars) diag[k] = v;
    for (const auto& [k, v] : r.diagnostics.flags) diag[k] = v;
    for (const auto& [k, v] : r.diagnostics.groups) diag[k] = names(v);
    json scores = json::object();
    for (std::size_t i = 0; i < r.scores.size(); ++i) scores[r.alternatives[i]] = r.scores[i];
    return {{"method", r.method},
            {"alternatives", r.alternatives},
            {"scores", scores},
            {"ordering", ordering},
            {"diagnostics", diag}};
}

std::string render_table(const json& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto& [p, v] : rows) width = std::max(width, p.size());
    std::string out;
    for (const auto& [p, v] : rows) out += p + std::string(width - p.size() + 2, ' ') + v + "\n";
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Soft-set documents: validation, queries, axiom checks and rankings", "softset"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "json";
    bool quiet = false;
    long long seed = 0;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--quiet,-q", quiet, "Suppress the report; only the exit code is meaningful");
    app.add_option("--seed", seed, "Accepted for scripting symmetry; computations are deterministic");

    std::string file, key, target, axioms;
    std::optional<double> v;
    std::optional<std::string> param, object;

    auto* validate_cmd = app.add_subcommand("validate", "Check a document's structural invariants");
    validate_cmd->add_option("file", file, "Document path or - for stdin")->required();
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a query key");
    eval_cmd->add_option("file", file)->required();
    eval_cmd->add_option("--key", key, "Query key as JSON (bare strings allowed)")->required();
    auto* rough_cmd = app.add_subcommand("rough", "Lower and upper approximations of a target set");
    rough_cmd->add_option("file", file)->required();
    rough_cmd->add_option("--target", target, "JSON array of objects")->required();
    auto* rank_cmd = app.add_subcommand("rank", "Rank alternatives");
    rank_cmd->add_option("file", file)->required();
    rank_cmd->add_option("--v", v, "VIKOR strategy weight in [0,1]");
    auto* check_cmd = app.add_subcommand("check", "Check an axiom set");
    check_cmd->add_option("axioms", axioms,
                          "topology|algebra|bitopology|matroid|metric|semigroup|group|ring|field|softgraph|dag")
        ->required();
    check_cmd->add_option("file", file)->required();
    auto* prob_cmd = app.add_subcommand("prob", "Probability queries");
    prob_cmd->add_option("file", file)->required();
    prob_cmd->add_option("--param", param);
    prob_cmd->add_option("--object", object);
    auto* canon_cmd = app.add_subcommand("canon", "Re-emit a document in canonical form");
    canon_cmd->add_option("file", file)->required();

    std::vector<std::string> argv_store{"softset"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    int code = 0;
    json report;
    try {
        Document doc = load_document(file);
        if (canon_cmd->parsed()) {
            report = to_json(doc);
        } else {
            ValidationReport rep = validate_document(doc);
            if (validate_cmd->parsed() || !rep.passed()) {
                report = report_json(rep);
                code = rep.passed() ? 0 : 1;
            } else if (eval_cmd->parsed()) {
                json k = parse_key(key);
                report = {{"kind", doc.kind}, {"key", k}, {"result", evaluate(doc, k)}};
            } else if (rough_cmd->parsed()) {
                const auto& soft = body_as<SoftSet>(doc, "rough");
                json t = parse_key(target);
                std::vector<std::string> names = key_strings(t);
                for (const auto& n : names)
                    if (!soft.universe.contains(n)) throw UnknownIdentifier("unknown object '" + n + "'");
                RoughPair rp = rough_approx(soft, soft.universe.subset(names));
                report = {{"kind", "rough"},
                          {"target", subset_json(soft.universe, soft.universe.subset(names))},
                          {"lower", subset_json(soft.universe, rp.lower)},
                          {"upper", subset_json(soft.universe, rp.upper)}};
            } else if (rank_cmd->parsed()) {
                report = rank_report(doc, v);
            } else if (check_cmd->parsed()) {
                report = check_report(axioms, doc);
                code = report.at("passed").get<bool>() ? 0 : 1;
            } else if (prob_cmd->parsed()) {
                report = prob_report(doc, param, object);
            }
        }
    } catch (const InvalidChain& e) {
        err << "error: " << e.code() << " at step " << e.step() << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (!quiet) out << (format == "table" ? render_table(report) : dump_canonical(report) + "\n");
    return code;
}

}  // namespace softsets
