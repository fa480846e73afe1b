#include "softsets/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace softsets {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw SchemaError((path.empty() ? "/" : path) + ": " + msg);
}

class Fields {
public:
    Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j.is_object()) fail(path_, "expected an object");
    }
    const json& req(const std::string& k) {
        seen_.insert(k);
        auto it = j_.find(k);
        if (it == j_.end()) fail(at(k), "missing field");
        return *it;
    }
    const json* opt(const std::string& k) {
        seen_.insert(k);
        auto it = j_.find(k);
        return it == j_.end() ? nullptr : &*it;
    }
    std::string at(const std::string& k) const { return path_ + "/" + k; }
    void done() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key())) fail(at(it.key()), "unknown field");
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

std::string str(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

double num(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    double x = j.get<double>();
    if (!std::isfinite(x)) fail(path, "number is not finite");
    return x;
}

long long integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    if (j.is_number_unsigned() && j.get<unsigned long long>() > 1ULL << 62) fail(path, "integer too large");
    return j.get<long long>();
}

std::size_t count(const json& j, const std::string& path) {
    long long v = integer(j, path);
    if (v < 0) fail(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

void require_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

std::vector<std::string> strings(const json& j, const std::string& path, bool unique = true) {
    require_array(j, path);
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string s = str(j[i], path + "/" + std::to_string(i));
        if (unique && !seen.insert(s).second) fail(path, "duplicate entry '" + s + "'");
        out.push_back(std::move(s));
    }
    return out;
}

Universe universe_of(const json& j, const std::string& path) {
    auto names = strings(j, path, false);
    try {
        return Universe(names);
    } catch (const SchemaError& e) {
        fail(path, e.what());
    }
}

Subset subset_of(const Universe& u, const json& j, const std::string& path) {
    auto names = strings(j, path);
    for (const auto& n : names)
        if (!u.contains(n)) throw UnknownIdentifier(path + ": unknown object '" + n + "'");
    return u.subset(names);
}

std::map<std::string, Subset> subset_map(const Universe& u, const json& j, const std::string& path) {
    require_object(j, path);
    std::map<std::string, Subset> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = subset_of(u, it.value(), path + "/" + it.key());
    return out;
}

SoftSet soft_over(const Universe& u, const std::vector<std::string>& params, const json& values,
                  const std::string& path) {
    SoftSet s{u, subset_map(u, values, path)};
    std::set<std::string> known(params.begin(), params.end());
    for (const auto& [p, v] : s.values)
        if (!known.count(p)) throw UnknownIdentifier(path + ": value for unknown parameter '" + p + "'");
    for (const auto& p : params)
        if (!s.values.count(p)) fail(path, "no value for parameter '" + p + "'");
    return s;
}

SoftSet loose_soft(const Universe& u, const json& values, const std::string& path) {
    return SoftSet{u, subset_map(u, values, path)};
}

// Reads the common {"params", "values"} pair of a plain soft set.
SoftSet plain_soft(Fields& f, const Universe& u) {
    auto params = strings(f.req("params"), f.at("params"));
    return soft_over(u, params, f.req("values"), f.at("values"));
}

std::vector<std::vector<double>> matrix_of(const json& j, const std::string& path) {
    require_array(j, path);
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string rp = path + "/" + std::to_string(i);
        require_array(j[i], rp);
        std::vector<double> row;
        for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(num(j[i][k], rp + "/" + std::to_string(k)));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<AttributeDomain> domains_of(const json& j, const std::string& path) {
    require_array(j, path);
    std::vector<AttributeDomain> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "/" + std::to_string(i);
        Fields f(j[i], p);
        AttributeDomain d{str(f.req("name"), f.at("name")), strings(f.req("values"), f.at("values"), false)};
        f.done();
        out.push_back(std::move(d));
    }
    return out;
}

SetTuple set_tuple_of(const json& j, const std::string& path) {
    require_array(j, path);
    SetTuple out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(strings(j[i], path + "/" + std::to_string(i), false));
    return out;
}

SetTuple canonical_or_raw(const std::vector<AttributeDomain>& domains, const SetTuple& key) {
    try {
        return canonical_set_tuple(domains, key);
    } catch (const Error&) {
        return key;
    }
}

Tags tags_of(const Universe& u, const json& j, const std::string& path) {
    require_object(j, path);
    Tags out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!u.contains(it.key())) throw UnknownIdentifier(path + ": unknown object '" + it.key() + "'");
        out[it.key()] = strings(it.value(), path + "/" + it.key(), false);
    }
    return out;
}

std::pair<std::string, std::string> name_pair(const json& j, const std::string& path) {
    auto v = strings(j, path, false);
    if (v.size() != 2) fail(path, "expected a pair");
    return {v[0], v[1]};
}

OperationTable operation_of(const json& j, const std::string& path) {
    require_array(j, path);
    OperationTable out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "/" + std::to_string(i);
        auto v = strings(j[i], p, false);
        if (v.size() != 3) fail(p, "expected [x, y, x*y]");
        if (!out.emplace(std::make_pair(v[0], v[1]), v[2]).second) fail(p, "pair listed twice");
    }
    return out;
}

TreeSoftInstance tree_of(const Universe& u, const Subset& base, Fields& f) {
    TreeSoftInstance t;
    t.universe = u;
    t.base = base;
    const json& nodes = f.req("nodes");
    require_array(nodes, f.at("nodes"));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::string p = f.at("nodes") + "/" + std::to_string(i);
        Fields nf(nodes[i], p);
        TreeNode n{str(nf.req("name"), nf.at("name")), std::nullopt};
        if (const json* parent = nf.opt("parent"); parent && !parent->is_null())
            n.parent = str(*parent, nf.at("parent"));
        nf.done();
        t.nodes.push_back(std::move(n));
    }
    if (const json* a = f.opt("assignment")) t.assignment = subset_map(u, *a, f.at("assignment"));
    if (const json* r = f.opt("rule")) t.rule = str(*r, f.at("rule"));
    return t;
}

TypeNNode typen_node(const Universe& u, const json& j, const std::string& path) {
    require_object(j, path);
    TypeNNode n;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string p = path + "/" + it.key();
        if (it.value().is_array())
            n.leaves[it.key()] = subset_of(u, it.value(), p);
        else if (it.value().is_object())
            n.children[it.key()] = std::make_shared<const TypeNNode>(typen_node(u, it.value(), p));
        else
            fail(p, "expected an array or an object");
    }
    return n;
}

std::vector<std::pair<std::string, SoftSet>> named_members(const Universe& u, const json& j,
                                                           const std::string& path) {
    require_array(j, path);
    std::vector<std::pair<std::string, SoftSet>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "/" + std::to_string(i);
        Fields f(j[i], p);
        std::string name = str(f.req("name"), f.at("name"));
        SoftSet s = loose_soft(u, f.req("values"), f.at("values"));
        f.done();
        out.emplace_back(std::move(name), std::move(s));
    }
    return out;
}

Criterion criterion_of(const json& j, const std::string& path) {
    if (j.is_string()) return j.get<std::string>();
    require_array(j, path);
    bool nested = !j.empty() && j[0].is_array();
    if (nested) return set_tuple_of(j, path);
    return strings(j, path, false);
}

std::vector<std::size_t> name_row(const Universe& carrier, const json& j, const std::string& path) {
    std::vector<std::size_t> out;
    for (const auto& n : strings(j, path, false)) {
        if (!carrier.contains(n)) throw UnknownIdentifier(path + ": unknown carrier element '" + n + "'");
        out.push_back(carrier.index_of(n));
    }
    return out;
}

std::vector<std::vector<std::size_t>> name_table(const Universe& carrier, const json& j,
                                                 const std::string& path) {
    require_array(j, path);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(name_row(carrier, j[i], path + "/" + std::to_string(i)));
    return out;
}

std::optional<std::size_t> carrier_element(const Universe& carrier, Fields& f, const std::string& k) {
    const json* j = f.opt(k);
    if (!j) return std::nullopt;
    std::string n = str(*j, f.at(k));
    if (!carrier.contains(n)) throw UnknownIdentifier(f.at(k) + ": unknown carrier element '" + n + "'");
    return carrier.index_of(n);
}

SoftSet carrier_soft(const Universe& carrier, const json& j, const std::string& path) {
    Fields f(j, path);
    SoftSet s = plain_soft(f, carrier);
    f.done();
    return s;
}

std::set<VertexEdge> vertex_edges(const Universe& v, const json& j, const std::string& path) {
    require_array(j, path);
    std::set<VertexEdge> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "/" + std::to_string(i);
        auto [a, b] = name_pair(j[i], p);
        for (const auto& x : {a, b})
            if (!v.contains(x)) throw UnknownIdentifier(p + ": unknown vertex '" + x + "'");
        std::size_t ia = v.index_of(a), ib = v.index_of(b);
        if (!out.insert({std::min(ia, ib), std::max(ia, ib)}).second) fail(p, "edge listed twice");
    }
    return out;
}

// ---- per-kind parsers ----

Universe read_universe(Fields& f) { return universe_of(f.req("universe"), f.at("universe")); }

DocumentBody parse_body(const std::string& kind, Fields& f) {
    if (kind == "soft") {
        Universe u = read_universe(f);
        return plain_soft(f, u);
    }
    if (kind == "tvalued") {
        TValuedSoftSet tv;
        tv.universe = read_universe(f);
        tv.params = strings(f.req("params"), f.at("params"));
        std::string pk = str(f.req("payloadKind"), f.at("payloadKind"));
        if (pk == "number") tv.payloadKind = PayloadKind::Number;
        else if (pk == "tuple") tv.payloadKind = PayloadKind::Tuple;
        else if (pk == "label") tv.payloadKind = PayloadKind::Label;
        else fail(f.at("payloadKind"), "expected number, tuple or label");
        const json& table = f.req("table");
        require_object(table, f.at("table"));
        for (auto pit = table.begin(); pit != table.end(); ++pit) {
            std::string pp = f.at("table") + "/" + pit.key();
            require_object(pit.value(), pp);
            for (auto oit = pit.value().begin(); oit != pit.value().end(); ++oit) {
                std::string op = pp + "/" + oit.key();
                if (!tv.universe.contains(oit.key()))
                    throw UnknownIdentifier(op + ": unknown object '" + oit.key() + "'");
                const json& v = oit.value();
                Payload payload;
                if (v.is_number()) payload = num(v, op);
                else if (v.is_string()) payload = v.get<std::string>();
                else if (v.is_array()) {
                    std::vector<double> xs;
                    for (std::size_t i = 0; i < v.size(); ++i) xs.push_back(num(v[i], op + "/" + std::to_string(i)));
                    payload = xs;
                } else fail(op, "payload must be a number, an array of numbers or a string");
                tv.table[{pit.key(), oit.key()}] = payload;
            }
        }
        return tv;
    }
    if (kind == "hypersoft") {
        Universe u = read_universe(f);
        auto domains = domains_of(f.req("domains"), f.at("domains"));
        std::optional<Tags> tags;
        if (const json* t = f.opt("tags")) tags = tags_of(u, *t, f.at("tags"));
        const json* entries = f.opt("entries");
        if (!entries) {
            if (!tags) fail(f.at("entries"), "either entries or tags is required");
            return build_hypersoft_from_tags(u, domains, *tags);
        }
        HyperSoftInstance h{u, domains, {}, tags};
        require_array(*entries, f.at("entries"));
        for (std::size_t i = 0; i < entries->size(); ++i) {
            std::string p = f.at("entries") + "/" + std::to_string(i);
            Fields ef((*entries)[i], p);
            TupleKey key = strings(ef.req("key"), ef.at("key"), false);
            Subset value = subset_of(u, ef.req("value"), ef.at("value"));
            ef.done();
            if (!h.entries.emplace(key, value).second) fail(p, "key listed twice");
        }
        return h;
    }
    if (kind == "superhypersoft") {
        Universe u = read_universe(f);
        auto domains = domains_of(f.req("domains"), f.at("domains"));
        std::optional<Tags> tags;
        if (const json* t = f.opt("tags")) tags = tags_of(u, *t, f.at("tags"));
        const json* entries = f.opt("entries");
        const json* keys = f.opt("keys");
        if (!entries) {
            if (!tags || !keys) fail(f.at("entries"), "either entries or tags with keys is required");
            require_array(*keys, f.at("keys"));
            std::vector<SetTuple> requested;
            for (std::size_t i = 0; i < keys->size(); ++i)
                requested.push_back(set_tuple_of((*keys)[i], f.at("keys") + "/" + std::to_string(i)));
            return build_superhypersoft_from_tags(u, domains, *tags, requested);
        }
        if (keys) fail(f.at("keys"), "keys is only used together with tags and no entries");
        SuperHyperSoftInstance h{u, domains, {}, tags};
        require_array(*entries, f.at("entries"));
        for (std::size_t i = 0; i < entries->size(); ++i) {
            std::string p = f.at("entries") + "/" + std::to_string(i);
            Fields ef((*entries)[i], p);
            SetTuple key = canonical_or_raw(domains, set_tuple_of(ef.req("key"), ef.at("key")));
            Subset value = subset_of(u, ef.req("value"), ef.at("value"));
            ef.done();
            if (!h.entries.emplace(key, value).second) fail(p, "key listed twice");
        }
        return h;
    }
    if (kind == "mnsuperhypersoft") {
        MNSuperHyperSoftInstance h;
        h.universe = read_universe(f);
        h.domains = domains_of(f.req("domains"), f.at("domains"));
        h.outputArity = count(f.req("outputArity"), f.at("outputArity"));
        const json& entries = f.req("entries");
        require_array(entries, f.at("entries"));
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::string p = f.at("entries") + "/" + std::to_string(i);
            Fields ef(entries[i], p);
            SetTuple key = canonical_or_raw(h.domains, set_tuple_of(ef.req("key"), ef.at("key")));
            const json& value = ef.req("value");
            require_array(value, ef.at("value"));
            std::vector<Subset> tiers;
            for (std::size_t k = 0; k < value.size(); ++k)
                tiers.push_back(subset_of(h.universe, value[k], ef.at("value") + "/" + std::to_string(k)));
            ef.done();
            if (!h.entries.emplace(key, tiers).second) fail(p, "key listed twice");
        }
        return h;
    }
    if (kind == "typen") {
        TypeNSoftInstance t;
        t.universe = read_universe(f);
        t.depth = count(f.req("depth"), f.at("depth"));
        t.root = typen_node(t.universe, f.req("root"), f.at("root"));
        return t;
    }
    if (kind == "nsoft") {
        NSoftInstance n;
        n.universe = read_universe(f);
        long long N = integer(f.req("N"), f.at("N"));
        if (N < 0 || N > 1000000) fail(f.at("N"), "N out of range");
        n.N = static_cast<int>(N);
        n.params = strings(f.req("params"), f.at("params"));
        const json& grades = f.req("grades");
        require_object(grades, f.at("grades"));
        std::set<std::string> known(n.params.begin(), n.params.end());
        for (auto it = grades.begin(); it != grades.end(); ++it) {
            std::string p = f.at("grades") + "/" + it.key();
            if (!known.count(it.key())) throw UnknownIdentifier(p + ": grades for unknown parameter");
            require_array(it.value(), p);
            for (std::size_t i = 0; i < it.value().size(); ++i) {
                std::string ip = p + "/" + std::to_string(i);
                const json& pair = it.value()[i];
                if (!pair.is_array() || pair.size() != 2) fail(ip, "expected [object, grade]");
                std::string obj = str(pair[0], ip + "/0");
                if (!n.universe.contains(obj)) throw UnknownIdentifier(ip + ": unknown object '" + obj + "'");
                long long g = integer(pair[1], ip + "/1");
                if (g < -1000000 || g > 1000000) fail(ip, "grade out of range");
                n.grades[{it.key(), obj}].push_back(static_cast<int>(g));
            }
        }
        for (const auto& p : n.params)
            for (const auto& u : n.universe.objects())
                if (!n.grades.count({p, u}))
                    fail(f.at("grades") + "/" + p, "no grade for (" + p + ", " + u + ")");
        return n;
    }
    if (kind == "probabilistic") {
        ProbabilisticSoftInstance pr;
        pr.universe = read_universe(f);
        const json& dist = f.req("dist");
        require_object(dist, f.at("dist"));
        for (auto it = dist.begin(); it != dist.end(); ++it) {
            std::string p = f.at("dist") + "/" + it.key();
            require_object(it.value(), p);
            std::vector<double> row(pr.universe.size(), 0.0);
            std::set<std::string> seen;
            for (auto oit = it.value().begin(); oit != it.value().end(); ++oit) {
                if (!pr.universe.contains(oit.key()))
                    throw UnknownIdentifier(p + ": unknown object '" + oit.key() + "'");
                row[pr.universe.index_of(oit.key())] = num(oit.value(), p + "/" + oit.key());
                seen.insert(oit.key());
            }
            for (const auto& u : pr.universe.objects())
                if (!seen.count(u)) fail(p, "no probability for object '" + u + "'");
            pr.dist[it.key()] = std::move(row);
        }
        return pr;
    }
    if (kind == "dsoft" || kind == "capacitary") {
        Universe u = read_universe(f);
        const char* field = kind == "dsoft" ? "masses" : "capacities";
        const json& table = f.req(field);
        require_object(table, f.at(field));
        std::map<std::string, std::map<Subset, double>> out;
        for (auto it = table.begin(); it != table.end(); ++it) {
            std::string p = f.at(field) + "/" + it.key();
            require_object(it.value(), p);
            auto& row = out[it.key()];
            for (auto sit = it.value().begin(); sit != it.value().end(); ++sit) {
                Subset s;
                try {
                    s = parse_subset_key(u, sit.key());
                } catch (const UnknownIdentifier& e) {
                    throw UnknownIdentifier(p + ": " + e.what());
                } catch (const SchemaError& e) {
                    fail(p + "/" + sit.key(), e.what());
                }
                if (!row.emplace(s, num(sit.value(), p + "/" + sit.key())).second)
                    fail(p + "/" + sit.key(), "subset listed twice");
            }
        }
        if (kind == "dsoft") return DSoftInstance{u, out};
        return CapacitarySoftInstance{u, out};
    }
    if (kind == "random") {
        RandomSoftInstance r;
        r.universe = read_universe(f);
        r.params = strings(f.req("params"), f.at("params"));
        const json& outcomes = f.req("outcomes");
        require_array(outcomes, f.at("outcomes"));
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            std::string p = f.at("outcomes") + "/" + std::to_string(i);
            Fields of(outcomes[i], p);
            RandomOutcome o;
            o.name = str(of.req("name"), of.at("name"));
            o.probability = num(of.req("probability"), of.at("probability"));
            o.slice = loose_soft(r.universe, of.req("values"), of.at("values"));
            of.done();
            r.outcomes.push_back(std::move(o));
        }
        return r;
    }
    if (kind == "poset") {
        Universe u = read_universe(f);
        PosetSoftInstance p{plain_soft(f, u), {}};
        const json& order = f.req("order");
        require_array(order, f.at("order"));
        for (std::size_t i = 0; i < order.size(); ++i)
            p.order.insert(name_pair(order[i], f.at("order") + "/" + std::to_string(i)));
        return p;
    }
    if (kind == "filtration") {
        FiltrationSoftInstance fl;
        fl.universe = read_universe(f);
        fl.depth = count(f.req("depth"), f.at("depth"));
        const json& chains = f.req("chains");
        require_object(chains, f.at("chains"));
        for (auto it = chains.begin(); it != chains.end(); ++it) {
            std::string p = f.at("chains") + "/" + it.key();
            require_array(it.value(), p);
            auto& chain = fl.chains[it.key()];
            for (std::size_t i = 0; i < it.value().size(); ++i)
                chain.push_back(subset_of(fl.universe, it.value()[i], p + "/" + std::to_string(i)));
        }
        return fl;
    }
    if (kind == "cover") {
        CoverSoftInstance c;
        c.universe = read_universe(f);
        const json& covers = f.req("covers");
        require_object(covers, f.at("covers"));
        for (auto it = covers.begin(); it != covers.end(); ++it)
            c.covers[it.key()] = subset_map(c.universe, it.value(), f.at("covers") + "/" + it.key());
        return c;
    }
    if (kind == "weighted") {
        Universe u = read_universe(f);
        WeightedSoftInstance w{plain_soft(f, u), {}};
        const json& weights = f.req("weights");
        require_object(weights, f.at("weights"));
        for (auto it = weights.begin(); it != weights.end(); ++it)
            w.weights[it.key()] = num(it.value(), f.at("weights") + "/" + it.key());
        return w;
    }
    if (kind == "bijective") {
        Universe u = read_universe(f);
        return BijectiveSoftInstance{plain_soft(f, u)};
    }
    if (kind == "doubleframed") {
        DoubleFramedSoftInstance d;
        d.universe = read_universe(f);
        d.params = strings(f.req("params"), f.at("params"));
        d.operation = operation_of(f.req("operation"), f.at("operation"));
        d.alpha = subset_map(d.universe, f.req("alpha"), f.at("alpha"));
        d.beta = subset_map(d.universe, f.req("beta"), f.at("beta"));
        return d;
    }
    if (kind == "intersectional") {
        Universe u = read_universe(f);
        IntersectionalSoftInstance in{plain_soft(f, u), {}};
        in.operation = operation_of(f.req("operation"), f.at("operation"));
        return in;
    }
    if (kind == "contra") {
        Universe u = read_universe(f);
        ContraSoftInstance c{plain_soft(f, u), {}};
        const json& table = f.req("contradiction");
        require_array(table, f.at("contradiction"));
        for (std::size_t i = 0; i < table.size(); ++i) {
            std::string p = f.at("contradiction") + "/" + std::to_string(i);
            Fields ef(table[i], p);
            auto [a, b] = name_pair(ef.req("pair"), ef.at("pair"));
            double degree = num(ef.req("degree"), ef.at("degree"));
            ef.done();
            if (!c.contradiction.emplace(unordered(a, b), degree).second) fail(p, "pair listed twice");
        }
        return c;
    }
    if (kind == "hesi") {
        Universe u = read_universe(f);
        HesiSoftInstance h{plain_soft(f, u), {}};
        const json& table = f.req("hesitancy");
        require_array(table, f.at("hesitancy"));
        for (std::size_t i = 0; i < table.size(); ++i) {
            std::string p = f.at("hesitancy") + "/" + std::to_string(i);
            Fields ef(table[i], p);
            auto [a, b] = name_pair(ef.req("pair"), ef.at("pair"));
            const json& vals = ef.req("values");
            require_array(vals, ef.at("values"));
            std::vector<double> xs;
            for (std::size_t k = 0; k < vals.size(); ++k) xs.push_back(num(vals[k], ef.at("values") + "/" + std::to_string(k)));
            ef.done();
            if (!h.hesitancy.emplace(unordered(a, b), xs).second) fail(p, "pair listed twice");
        }
        return h;
    }
    if (kind == "multipolar") {
        MultipolarSoftInstance m;
        m.universe = read_universe(f);
        m.poles = count(f.req("poles"), f.at("poles"));
        const json& values = f.req("values");
        require_object(values, f.at("values"));
        for (auto it = values.begin(); it != values.end(); ++it) {
            std::string p = f.at("values") + "/" + it.key();
            require_array(it.value(), p);
            auto& tuple = m.values[it.key()];
            for (std::size_t i = 0; i < it.value().size(); ++i)
                tuple.push_back(subset_of(m.universe, it.value()[i], p + "/" + std::to_string(i)));
        }
        return m;
    }
    if (kind == "dynamic") {
        DynamicSoftInstance d;
        d.universe = read_universe(f);
        const json& slices = f.req("slices");
        require_array(slices, f.at("slices"));
        for (std::size_t i = 0; i < slices.size(); ++i) {
            std::string p = f.at("slices") + "/" + std::to_string(i);
            Fields sf(slices[i], p);
            std::string index = str(sf.req("index"), sf.at("index"));
            SoftSet s = loose_soft(d.universe, sf.req("values"), sf.at("values"));
            sf.done();
            d.slices.emplace_back(std::move(index), std::move(s));
        }
        return d;
    }
    if (kind == "ranked") {
        RankedSoftInstance r;
        r.universe = read_universe(f);
        const json& parts = f.req("partitions");
        require_object(parts, f.at("partitions"));
        for (auto it = parts.begin(); it != parts.end(); ++it) {
            std::string p = f.at("partitions") + "/" + it.key();
            require_array(it.value(), p);
            auto& blocks = r.partitions[it.key()];
            for (std::size_t i = 0; i < it.value().size(); ++i)
                blocks.push_back(subset_of(r.universe, it.value()[i], p + "/" + std::to_string(i)));
        }
        return r;
    }
    if (kind == "refined") {
        RefinedSoftInstance r;
        r.universe = read_universe(f);
        r.params = strings(f.req("params"), f.at("params"));
        const json& ev = f.req("evaluators");
        require_object(ev, f.at("evaluators"));
        for (auto it = ev.begin(); it != ev.end(); ++it)
            r.evaluators[it.key()] = loose_soft(r.universe, it.value(), f.at("evaluators") + "/" + it.key());
        return r;
    }
    if (kind == "softexpert") {
        SoftExpertInstance s;
        s.universe = read_universe(f);
        s.params = strings(f.req("params"), f.at("params"));
        s.experts = strings(f.req("experts"), f.at("experts"));
        const json& entries = f.req("entries");
        require_array(entries, f.at("entries"));
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::string p = f.at("entries") + "/" + std::to_string(i);
            Fields ef(entries[i], p);
            ExpertEntry e;
            e.param = str(ef.req("param"), ef.at("param"));
            e.expert = str(ef.req("expert"), ef.at("expert"));
            long long op = integer(ef.req("opinion"), ef.at("opinion"));
            if (op < -1000 || op > 1000) fail(ef.at("opinion"), "opinion out of range");
            e.opinion = static_cast<int>(op);
            e.value = subset_of(s.universe, ef.req("value"), ef.at("value"));
            ef.done();
            s.entries.push_back(std::move(e));
        }
        return s;
    }
    if (kind == "nary") {
        NArySoftInstance n;
        const json& comps = f.req("components");
        require_array(comps, f.at("components"));
        for (std::size_t i = 0; i < comps.size(); ++i)
            n.components.push_back(universe_of(comps[i], f.at("components") + "/" + std::to_string(i)));
        auto params = strings(f.req("params"), f.at("params"));
        const json& values = f.req("values");
        require_object(values, f.at("values"));
        std::set<std::string> known(params.begin(), params.end());
        for (auto it = values.begin(); it != values.end(); ++it) {
            std::string p = f.at("values") + "/" + it.key();
            if (!known.count(it.key())) throw UnknownIdentifier(p + ": value for unknown parameter");
            require_array(it.value(), p);
            if (it.value().size() > n.components.size()) fail(p, "more coordinates than components");
            auto& tuple = n.values[it.key()];
            for (std::size_t i = 0; i < it.value().size(); ++i)
                tuple.push_back(subset_of(n.components[i], it.value()[i], p + "/" + std::to_string(i)));
        }
        for (const auto& p : params)
            if (!n.values.count(p)) fail(f.at("values"), "no value for parameter '" + p + "'");
        return n;
    }
    if (kind == "treesoft") {
        Universe u = read_universe(f);
        Subset base = subset_of(u, f.req("base"), f.at("base"));
        return tree_of(u, base, f);
    }
    if (kind == "forestsoft") {
        ForestSoftInstance fo;
        fo.universe = read_universe(f);
        fo.base = subset_of(fo.universe, f.req("base"), f.at("base"));
        const json& trees = f.req("trees");
        require_array(trees, f.at("trees"));
        std::set<std::string> names;
        for (std::size_t i = 0; i < trees.size(); ++i) {
            std::string p = f.at("trees") + "/" + std::to_string(i);
            Fields tf(trees[i], p);
            std::string name = str(tf.req("name"), tf.at("name"));
            TreeSoftInstance t = tree_of(fo.universe, fo.base, tf);
            tf.done();
            for (const auto& n : t.nodes)
                if (!names.insert(n.name).second) fail(p, "node name '" + n.name + "' is not unique in the forest");
            fo.trees.emplace_back(std::move(name), std::move(t));
        }
        return fo;
    }
    if (kind == "graphicsoft") {
        GraphicSoftInstance g;
        g.universe = read_universe(f);
        g.vertices = strings(f.req("vertices"), f.at("vertices"), false);
        g.vertexSets = subset_map(g.universe, f.req("vertexSets"), f.at("vertexSets"));
        const json& edges = f.req("edges");
        require_array(edges, f.at("edges"));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            std::string p = f.at("edges") + "/" + std::to_string(i);
            Fields ef(edges[i], p);
            auto [a, b] = name_pair(ef.req("ends"), ef.at("ends"));
            Subset value = subset_of(g.universe, ef.req("value"), ef.at("value"));
            ef.done();
            Edge e{a, b};
            auto ia = std::find(g.vertices.begin(), g.vertices.end(), a);
            auto ib = std::find(g.vertices.begin(), g.vertices.end(), b);
            if (ia != g.vertices.end() && ib != g.vertices.end() && ib < ia) e = {b, a};
            if (!g.edgeSets.emplace(e, value).second) fail(p, "edge listed twice");
        }
        return g;
    }
    if (kind == "cyclesoft") {
        CycleSoftInstance c;
        c.universe = read_universe(f);
        c.cycle = strings(f.req("cycle"), f.at("cycle"), false);
        c.values = subset_map(c.universe, f.req("values"), f.at("values"));
        return c;
    }
    if (kind == "clustersoft") {
        ClusterSoftInstance c;
        c.universe = read_universe(f);
        c.members = named_members(c.universe, f.req("members"), f.at("members"));
        const json& clusters = f.req("clusters");
        require_object(clusters, f.at("clusters"));
        for (auto it = clusters.begin(); it != clusters.end(); ++it)
            c.clusters[it.key()] = strings(it.value(), f.at("clusters") + "/" + it.key(), false);
        return c;
    }
    if (kind == "dagsoft") {
        Universe u = read_universe(f);
        DagSoftInstance d{plain_soft(f, u), {}};
        const json& edges = f.req("edges");
        require_array(edges, f.at("edges"));
        for (std::size_t i = 0; i < edges.size(); ++i)
            d.edges.push_back(name_pair(edges[i], f.at("edges") + "/" + std::to_string(i)));
        return d;
    }
    if (kind == "softfunction") {
        SoftFunctionDocument d;
        d.pair.source = universe_of(f.req("source"), f.at("source"));
        d.pair.target = universe_of(f.req("target"), f.at("target"));
        const json& om = f.req("objectMap");
        require_object(om, f.at("objectMap"));
        for (auto it = om.begin(); it != om.end(); ++it) {
            std::string p = f.at("objectMap") + "/" + it.key();
            std::string y = str(it.value(), p);
            if (!d.pair.source.contains(it.key())) throw UnknownIdentifier(p + ": unknown source object");
            if (!d.pair.target.contains(y)) throw UnknownIdentifier(p + ": unknown target object '" + y + "'");
            d.pair.objectMap[it.key()] = y;
        }
        const json& pm = f.req("paramMap");
        require_object(pm, f.at("paramMap"));
        for (auto it = pm.begin(); it != pm.end(); ++it)
            d.pair.paramMap[it.key()] = str(it.value(), f.at("paramMap") + "/" + it.key());
        d.forward = loose_soft(d.pair.source, f.req("forward"), f.at("forward"));
        d.backward = loose_soft(d.pair.target, f.req("backward"), f.at("backward"));
        return d;
    }
    if (kind == "softfamily") {
        FamilyDocument d;
        d.family.universe = read_universe(f);
        d.family.params = strings(f.req("params"), f.at("params"));
        d.family.members = named_members(d.family.universe, f.req("members"), f.at("members"));
        if (const json* second = f.opt("secondMembers"))
            d.second = SoftFamily{d.family.universe, d.family.params,
                                  named_members(d.family.universe, *second, f.at("secondMembers"))};
        return d;
    }
    if (kind == "matroid") {
        Universe u = read_universe(f);
        SoftMatroidInstance m;
        auto params = strings(f.req("params"), f.at("params"));
        m.ground = soft_over(u, params, f.req("ground"), f.at("ground"));
        m.members = named_members(u, f.req("members"), f.at("members"));
        return m;
    }
    if (kind == "metric") {
        SoftMetricInstance m;
        m.universe = read_universe(f);
        m.params = strings(f.req("params"), f.at("params"));
        const json& elements = f.req("elements");
        require_array(elements, f.at("elements"));
        for (std::size_t i = 0; i < elements.size(); ++i) {
            std::string p = f.at("elements") + "/" + std::to_string(i);
            Fields ef(elements[i], p);
            std::string name = str(ef.req("name"), ef.at("name"));
            const json& choice = ef.req("choice");
            require_object(choice, ef.at("choice"));
            Choice c;
            for (auto it = choice.begin(); it != choice.end(); ++it)
                c[it.key()] = str(it.value(), ef.at("choice") + "/" + it.key());
            ef.done();
            m.elements.emplace_back(std::move(name), std::move(c));
        }
        const json& distances = f.req("distances");
        require_array(distances, f.at("distances"));
        for (std::size_t i = 0; i < distances.size(); ++i) {
            std::string p = f.at("distances") + "/" + std::to_string(i);
            Fields df(distances[i], p);
            auto [a, b] = name_pair(df.req("pair"), df.at("pair"));
            const json& values = df.req("values");
            require_object(values, df.at("values"));
            std::map<std::string, double> row;
            for (auto it = values.begin(); it != values.end(); ++it)
                row[it.key()] = num(it.value(), df.at("values") + "/" + it.key());
            df.done();
            if (!m.distances.emplace(std::minmax(a, b), row).second) fail(p, "pair listed twice");
        }
        return m;
    }
    if (kind == "structure-table") {
        StructureDocument d;
        d.table.carrier = strings(f.req("carrier"), f.at("carrier"));
        Universe carrier = universe_of(f.req("carrier"), f.at("carrier"));
        std::string s = str(f.req("structure"), f.at("structure"));
        auto k = structure_kind_from(s);
        if (!k) fail(f.at("structure"), "expected semigroup, group, ring or field");
        d.table.kind = *k;
        if (const json* op = f.opt("op")) d.table.op = name_table(carrier, *op, f.at("op"));
        if (const json* add = f.opt("add")) d.table.add = name_table(carrier, *add, f.at("add"));
        if (const json* mul = f.opt("mul")) d.table.mul = name_table(carrier, *mul, f.at("mul"));
        d.table.identity = carrier_element(carrier, f, "identity");
        d.table.zero = carrier_element(carrier, f, "zero");
        d.table.one = carrier_element(carrier, f, "one");
        if (const json* soft = f.opt("soft")) d.soft = carrier_soft(carrier, *soft, f.at("soft"));
        if (const json* sub = f.opt("sub")) {
            if (!d.soft) fail(f.at("sub"), "sub requires soft");
            d.sub = carrier_soft(carrier, *sub, f.at("sub"));
        }
        return d;
    }
    if (kind == "statdb") {
        StatDatabase db;
        const json& ind = f.req("indicators");
        require_array(ind, f.at("indicators"));
        for (std::size_t i = 0; i < ind.size(); ++i) {
            long long v = integer(ind[i], f.at("indicators") + "/" + std::to_string(i));
            if (v < -1000 || v > 1000) fail(f.at("indicators"), "indicator out of range");
            db.indicators.push_back(static_cast<int>(v));
        }
        db.window = count(f.req("window"), f.at("window"));
        db.startLow = count(f.req("startLow"), f.at("startLow"));
        db.startHigh = count(f.req("startHigh"), f.at("startHigh"));
        return db;
    }
    if (kind == "softgraph") {
        SoftGraphInstance g;
        g.vertices = universe_of(f.req("vertices"), f.at("vertices"));
        g.edges = vertex_edges(g.vertices, f.req("edges"), f.at("edges"));
        g.vertexSets = subset_map(g.vertices, f.req("vertexSets"), f.at("vertexSets"));
        const json& es = f.req("edgeSets");
        require_object(es, f.at("edgeSets"));
        for (auto it = es.begin(); it != es.end(); ++it)
            g.edgeSets[it.key()] = vertex_edges(g.vertices, it.value(), f.at("edgeSets") + "/" + it.key());
        return g;
    }
    if (kind == "decision") {
        DecisionDocument d;
        d.instance.alternatives = strings(f.req("alternatives"), f.at("alternatives"), false);
        const json& criteria = f.req("criteria");
        require_array(criteria, f.at("criteria"));
        for (std::size_t i = 0; i < criteria.size(); ++i)
            d.instance.criteria.push_back(criterion_of(criteria[i], f.at("criteria") + "/" + std::to_string(i)));
        d.instance.matrix = matrix_of(f.req("matrix"), f.at("matrix"));
        const json& w = f.req("weights");
        require_array(w, f.at("weights"));
        for (std::size_t i = 0; i < w.size(); ++i) d.instance.weights.push_back(num(w[i], f.at("weights") + "/" + std::to_string(i)));
        if (const json* o = f.opt("orientations")) {
            for (const auto& s : strings(*o, f.at("orientations"), false)) {
                if (s == "benefit") d.instance.orientations.push_back(Orientation::Benefit);
                else if (s == "cost") d.instance.orientations.push_back(Orientation::Cost);
                else fail(f.at("orientations"), "expected benefit or cost, got '" + s + "'");
            }
        } else {
            d.instance.orientations.assign(d.instance.criteria.size(), Orientation::Benefit);
        }
        std::string m = str(f.req("method"), f.at("method"));
        auto method = method_from(m);
        if (!method) fail(f.at("method"), "expected score, topsis, ahp or vikor");
        if (*method == Method::Ahp) fail(f.at("method"), "AHP documents use kind \"ahp\"");
        d.method = *method;
        if (const json* v = f.opt("v")) d.v = num(*v, f.at("v"));
        return d;
    }
    if (kind == "ahp") {
        AhpHierarchy h;
        h.alternatives = strings(f.req("alternatives"), f.at("alternatives"), false);
        const json& criteria = f.req("criteria");
        require_array(criteria, f.at("criteria"));
        for (std::size_t i = 0; i < criteria.size(); ++i)
            h.criteria.push_back(criterion_of(criteria[i], f.at("criteria") + "/" + std::to_string(i)));
        h.criteriaMatrix = matrix_of(f.req("criteriaMatrix"), f.at("criteriaMatrix"));
        const json& am = f.req("alternativeMatrices");
        require_array(am, f.at("alternativeMatrices"));
        for (std::size_t i = 0; i < am.size(); ++i)
            h.alternativeMatrices.push_back(matrix_of(am[i], f.at("alternativeMatrices") + "/" + std::to_string(i)));
        return h;
    }
    fail("/kind", "unknown kind '" + kind + "'");
}

// ---- emitters ----

json jsetmap(const Universe& u, const std::map<std::string, Subset>& m) {
    json out = json::object();
    for (const auto& [k, s] : m) out[k] = subset_json(u, s);
    return out;
}

json jtuples(const Universe& u, const std::vector<Subset>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(subset_json(u, s));
    return out;
}

json jcriterion(const Criterion& c) {
    return std::visit([](const auto& x) { return json(x); }, c);
}

json jdomains(const std::vector<AttributeDomain>& ds) {
    json out = json::array();
    for (const auto& d : ds) out.push_back({{"name", d.name}, {"values", d.values}});
    return out;
}

json jtags(const Tags& t) {
    json out = json::object();
    for (const auto& [k, v] : t) out[k] = v;
    return out;
}

json jpairs(const std::vector<std::pair<std::string, std::string>>& v) {
    json out = json::array();
    for (const auto& [a, b] : v) out.push_back({a, b});
    return out;
}

json jmatrix(const std::vector<std::vector<double>>& m) { return json(m); }

json jtable(const std::vector<std::string>& carrier, const std::vector<std::vector<std::size_t>>& t) {
    json out = json::array();
    for (const auto& row : t) {
        json r = json::array();
        for (auto i : row) r.push_back(carrier.at(i));
        out.push_back(r);
    }
    return out;
}

json joperation(const OperationTable& op) {
    json out = json::array();
    for (const auto& [xy, z] : op) out.push_back({xy.first, xy.second, z});
    return out;
}

json jmembers(const std::vector<std::pair<std::string, SoftSet>>& members) {
    json out = json::array();
    for (const auto& [name, s] : members) out.push_back({{"name", name}, {"values", jsetmap(s.universe, s.values)}});
    return out;
}

json jsubset_table(const Universe& u, const std::map<std::string, std::map<Subset, double>>& t) {
    json out = json::object();
    for (const auto& [param, row] : t) {
        json r = json::object();
        for (const auto& [s, x] : row) r[subset_key(u, s)] = x;
        out[param] = r;
    }
    return out;
}

void put_soft(json& j, const SoftSet& s) {
    j["universe"] = s.universe.objects();
    j["params"] = s.params();
    j["values"] = jsetmap(s.universe, s.values);
}

json jtree_nodes(const std::vector<TreeNode>& nodes) {
    json out = json::array();
    for (const auto& n : nodes) {
        json node = {{"name", n.name}};
        node["parent"] = n.parent ? json(*n.parent) : json(nullptr);
        out.push_back(node);
    }
    return out;
}

json jtypen(const Universe& u, const TypeNNode& n) {
    json out = json::object();
    for (const auto& [k, s] : n.leaves) out[k] = subset_json(u, s);
    for (const auto& [k, c] : n.children) out[k] = jtypen(u, *c);
    return out;
}

json jedges(const Universe& v, const std::set<VertexEdge>& edges) {
    json out = json::array();
    for (const auto& [a, b] : edges) out.push_back({v.name(a), v.name(b)});
    return out;
}

json emit(const SoftSet& s) {
    json j;
    put_soft(j, s);
    return j;
}

json emit(const TValuedSoftSet& tv) {
    json j;
    j["universe"] = tv.universe.objects();
    j["params"] = tv.params;
    j["payloadKind"] = tv.payloadKind == PayloadKind::Number ? "number"
                       : tv.payloadKind == PayloadKind::Tuple ? "tuple"
                                                              : "label";
    json table = json::object();
    for (const auto& [key, payload] : tv.table)
        table[key.first][key.second] = std::visit([](const auto& x) { return json(x); }, payload);
    j["table"] = table;
    return j;
}

json emit(const HyperSoftInstance& h) {
    json j;
    j["universe"] = h.universe.objects();
    j["domains"] = jdomains(h.domains);
    json entries = json::array();
    for (const auto& [k, v] : h.entries) entries.push_back({{"key", k}, {"value", subset_json(h.universe, v)}});
    j["entries"] = entries;
    if (h.tags) j["tags"] = jtags(*h.tags);
    return j;
}

json emit(const SuperHyperSoftInstance& h) {
    json j;
    j["universe"] = h.universe.objects();
    j["domains"] = jdomains(h.domains);
    json entries = json::array();
    for (const auto& [k, v] : h.entries) entries.push_back({{"key", k}, {"value", subset_json(h.universe, v)}});
    j["entries"] = entries;
    if (h.tags) j["tags"] = jtags(*h.tags);
    return j;
}

json emit(const MNSuperHyperSoftInstance& h) {
    json j;
    j["universe"] = h.universe.objects();
    j["domains"] = jdomains(h.domains);
    j["outputArity"] = h.outputArity;
    json entries = json::array();
    for (const auto& [k, v] : h.entries) entries.push_back({{"key", k}, {"value", jtuples(h.universe, v)}});
    j["entries"] = entries;
    return j;
}

json emit(const TypeNSoftInstance& t) {
    return {{"universe", t.universe.objects()}, {"depth", t.depth}, {"root", jtypen(t.universe, t.root)}};
}

json emit(const NSoftInstance& n) {
    json j;
    j["universe"] = n.universe.objects();
    j["N"] = n.N;
    j["params"] = n.params;
    json grades = json::object();
    for (const auto& p : n.params) grades[p] = json::array();
    for (const auto& u : n.universe.objects())
        for (const auto& [key, gs] : n.grades)
            if (key.second == u)
                for (int g : gs) grades[key.first].push_back({u, g});
    j["grades"] = grades;
    return j;
}

json emit(const ProbabilisticSoftInstance& p) {
    json dist = json::object();
    for (const auto& [param, row] : p.dist)
        for (std::size_t i = 0; i < row.size(); ++i) dist[param][p.universe.name(i)] = row[i];
    return {{"universe", p.universe.objects()}, {"dist", dist}};
}

json emit(const DSoftInstance& d) {
    return {{"universe", d.universe.objects()}, {"masses", jsubset_table(d.universe, d.masses)}};
}

json emit(const CapacitarySoftInstance& c) {
    return {{"universe", c.universe.objects()}, {"capacities", jsubset_table(c.universe, c.capacities)}};
}

json emit(const RandomSoftInstance& r) {
    json outcomes = json::array();
    for (const auto& o : r.outcomes)
        outcomes.push_back({{"name", o.name}, {"probability", o.probability},
                            {"values", jsetmap(o.slice.universe, o.slice.values)}});
    return {{"universe", r.universe.objects()}, {"params", r.params}, {"outcomes", outcomes}};
}

json emit(const PosetSoftInstance& p) {
    json j = emit(p.soft);
    j["order"] = jpairs({p.order.begin(), p.order.end()});
    return j;
}

json emit(const FiltrationSoftInstance& f) {
    json chains = json::object();
    for (const auto& [p, c] : f.chains) chains[p] = jtuples(f.universe, c);
    return {{"universe", f.universe.objects()}, {"depth", f.depth}, {"chains", chains}};
}

json emit(const CoverSoftInstance& c) {
    json covers = json::object();
    for (const auto& [p, blocks] : c.covers) covers[p] = jsetmap(c.universe, blocks);
    return {{"universe", c.universe.objects()}, {"covers", covers}};
}

json emit(const WeightedSoftInstance& w) {
    json j = emit(w.soft);
    j["weights"] = w.weights;
    return j;
}

json emit(const BijectiveSoftInstance& b) { return emit(b.soft); }

json emit(const DoubleFramedSoftInstance& d) {
    return {{"universe", d.universe.objects()},
            {"params", d.params},
            {"operation", joperation(d.operation)},
            {"alpha", jsetmap(d.universe, d.alpha)},
            {"beta", jsetmap(d.universe, d.beta)}};
}

json emit(const IntersectionalSoftInstance& i) {
    json j = emit(i.soft);
    j["operation"] = joperation(i.operation);
    return j;
}

json emit(const ContraSoftInstance& c) {
    json j = emit(c.soft);
    json table = json::array();
    for (const auto& [pair, d] : c.contradiction) table.push_back({{"pair", {pair.first, pair.second}}, {"degree", d}});
    j["contradiction"] = table;
    return j;
}

json emit(const HesiSoftInstance& h) {
    json j = emit(h.soft);
    json table = json::array();
    for (const auto& [pair, v] : h.hesitancy) table.push_back({{"pair", {pair.first, pair.second}}, {"values", v}});
    j["hesitancy"] = table;
    return j;
}

json emit(const MultipolarSoftInstance& m) {
    json values = json::object();
    for (const auto& [p, t] : m.values) values[p] = jtuples(m.universe, t);
    return {{"universe", m.universe.objects()}, {"poles", m.poles}, {"values", values}};
}

json emit(const DynamicSoftInstance& d) {
    json slices = json::array();
    for (const auto& [index, s] : d.slices) slices.push_back({{"index", index}, {"values", jsetmap(s.universe, s.values)}});
    return {{"universe", d.universe.objects()}, {"slices", slices}};
}

json emit(const RankedSoftInstance& r) {
    json parts = json::object();
    for (const auto& [p, blocks] : r.partitions) parts[p] = jtuples(r.universe, blocks);
    return {{"universe", r.universe.objects()}, {"partitions", parts}};
}

json emit(const RefinedSoftInstance& r) {
    json ev = json::object();
    for (const auto& [name, s] : r.evaluators) ev[name] = jsetmap(s.universe, s.values);
    return {{"universe", r.universe.objects()}, {"params", r.params}, {"evaluators", ev}};
}

json emit(const SoftExpertInstance& s) {
    json entries = json::array();
    for (const auto& e : s.entries)
        entries.push_back({{"param", e.param}, {"expert", e.expert}, {"opinion", e.opinion},
                           {"value", subset_json(s.universe, e.value)}});
    return {{"universe", s.universe.objects()}, {"params", s.params}, {"experts", s.experts}, {"entries", entries}};
}

json emit(const NArySoftInstance& n) {
    json comps = json::array();
    for (const auto& c : n.components) comps.push_back(c.objects());
    json values = json::object();
    std::vector<std::string> params;
    for (const auto& [p, t] : n.values) {
        params.push_back(p);
        json tuple = json::array();
        for (std::size_t i = 0; i < t.size(); ++i) tuple.push_back(subset_json(n.components[i], t[i]));
        values[p] = tuple;
    }
    return {{"components", comps}, {"params", params}, {"values", values}};
}

json tree_fields(const TreeSoftInstance& t) {
    json j;
    j["nodes"] = jtree_nodes(t.nodes);
    j["assignment"] = jsetmap(t.universe, t.assignment);
    j["rule"] = t.rule;
    return j;
}

json emit(const TreeSoftInstance& t) {
    json j = tree_fields(t);
    j["universe"] = t.universe.objects();
    j["base"] = subset_json(t.universe, t.base);
    return j;
}

json emit(const ForestSoftInstance& f) {
    json trees = json::array();
    for (const auto& [name, t] : f.trees) {
        json tj = tree_fields(t);
        tj["name"] = name;
        trees.push_back(tj);
    }
    return {{"universe", f.universe.objects()}, {"base", subset_json(f.universe, f.base)}, {"trees", trees}};
}

json emit(const GraphicSoftInstance& g) {
    json edges = json::array();
    for (const auto& [e, s] : g.edgeSets)
        edges.push_back({{"ends", {e.first, e.second}}, {"value", subset_json(g.universe, s)}});
    return {{"universe", g.universe.objects()},
            {"vertices", g.vertices},
            {"vertexSets", jsetmap(g.universe, g.vertexSets)},
            {"edges", edges}};
}

json emit(const CycleSoftInstance& c) {
    return {{"universe", c.universe.objects()}, {"cycle", c.cycle}, {"values", jsetmap(c.universe, c.values)}};
}

json emit(const ClusterSoftInstance& c) {
    return {{"universe", c.universe.objects()}, {"members", jmembers(c.members)}, {"clusters", c.clusters}};
}

json emit(const DagSoftInstance& d) {
    json j = emit(d.soft);
    j["edges"] = jpairs(d.edges);
    return j;
}

json emit(const SoftFunctionDocument& d) {
    return {{"source", d.pair.source.objects()},
            {"target", d.pair.target.objects()},
            {"objectMap", d.pair.objectMap},
            {"paramMap", d.pair.paramMap},
            {"forward", jsetmap(d.forward.universe, d.forward.values)},
            {"backward", jsetmap(d.backward.universe, d.backward.values)}};
}

json emit(const FamilyDocument& d) {
    json j = {{"universe", d.family.universe.objects()},
              {"params", d.family.params},
              {"members", jmembers(d.family.members)}};
    if (d.second) j["secondMembers"] = jmembers(d.second->members);
    return j;
}

json emit(const SoftMatroidInstance& m) {
    json j = emit(m.ground);
    j["ground"] = j["values"];
    j.erase("values");
    j["members"] = jmembers(m.members);
    return j;
}

json emit(const SoftMetricInstance& m) {
    json elements = json::array();
    for (const auto& [name, c] : m.elements) elements.push_back({{"name", name}, {"choice", c}});
    json distances = json::array();
    for (const auto& [pair, row] : m.distances)
        distances.push_back({{"pair", {pair.first, pair.second}}, {"values", row}});
    return {{"universe", m.universe.objects()}, {"params", m.params}, {"elements", elements}, {"distances", distances}};
}

json emit(const StructureDocument& d) {
    const auto& t = d.table;
    json j = {{"carrier", t.carrier}, {"structure", to_string(t.kind)}};
    if (!t.op.empty()) j["op"] = jtable(t.carrier, t.op);
    if (!t.add.empty()) j["add"] = jtable(t.carrier, t.add);
    if (!t.mul.empty()) j["mul"] = jtable(t.carrier, t.mul);
    if (t.identity) j["identity"] = t.carrier.at(*t.identity);
    if (t.zero) j["zero"] = t.carrier.at(*t.zero);
    if (t.one) j["one"] = t.carrier.at(*t.one);
    auto soft = [](const SoftSet& s) {
        return json{{"params", s.params()}, {"values", jsetmap(s.universe, s.values)}};
    };
    if (d.soft) j["soft"] = soft(*d.soft);
    if (d.sub) j["sub"] = soft(*d.sub);
    return j;
}

json emit(const StatDatabase& db) {
    return {{"indicators", db.indicators}, {"window", db.window}, {"startLow", db.startLow}, {"startHigh", db.startHigh}};
}

json emit(const SoftGraphInstance& g) {
    json es = json::object();
    for (const auto& [p, e] : g.edgeSets) es[p] = jedges(g.vertices, e);
    return {{"vertices", g.vertices.objects()},
            {"edges", jedges(g.vertices, g.edges)},
            {"vertexSets", jsetmap(g.vertices, g.vertexSets)},
            {"edgeSets", es}};
}

json emit(const DecisionDocument& d) {
    const auto& in = d.instance;
    json criteria = json::array();
    for (const auto& c : in.criteria) criteria.push_back(jcriterion(c));
    json orient = json::array();
    for (auto o : in.orientations) orient.push_back(o == Orientation::Benefit ? "benefit" : "cost");
    json j = {{"alternatives", in.alternatives},
              {"criteria", criteria},
              {"matrix", jmatrix(in.matrix)},
              {"weights", in.weights},
              {"orientations", orient},
              {"method", to_string(d.method)}};
    if (d.v) j["v"] = *d.v;
    return j;
}

json emit(const AhpHierarchy& h) {
    json criteria = json::array();
    for (const auto& c : h.criteria) criteria.push_back(jcriterion(c));
    json am = json::array();
    for (const auto& m : h.alternativeMatrices) am.push_back(jmatrix(m));
    return {{"alternatives", h.alternatives},
            {"criteria", criteria},
            {"criteriaMatrix", jmatrix(h.criteriaMatrix)},
            {"alternativeMatrices", am}};
}

void reject_exponents(const std::string& text) {
    bool in_string = false, escaped = false;
    char prev = 0;
    for (char c : text) {
        if (in_string) {
            if (escaped) escaped = false;
            else if (c == '\\') escaped = true;
            else if (c == '"') in_string = false;
        } else if (c == '"') {
            in_string = true;
        } else if ((c == 'e' || c == 'E') && (std::isdigit(static_cast<unsigned char>(prev)) || prev == '.')) {
            throw SchemaError("number literals with exponents are not accepted");
        }
        prev = c;
    }
}

bool is_scalar(const json& j) { return !j.is_array() && !j.is_object(); }

void dump_into(const json& j, std::string& out, int indent) {
    std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_number_float()) {
        out += format_number(j.get<double>());
    } else if (is_scalar(j)) {
        out += j.dump();
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
        } else if (std::all_of(j.begin(), j.end(), is_scalar)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                dump_into(j[i], out, indent);
            }
            out += "]";
        } else {
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += pad;
                dump_into(j[i], out, indent + 2);
                out += i + 1 < j.size() ? ",\n" : "\n";
            }
            out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
        }
    } else {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out += pad + json(it.key()).dump() + ": ";
            dump_into(it.value(), out, indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
    }
}

}  // namespace

Document document_from_json(const json& j) {
    Fields f(j, "");
    Document doc;
    doc.kind = str(f.req("kind"), "/kind");
    if (const json* v = f.opt("version"); v && integer(*v, "/version") != kDocumentVersion)
        fail("/version", "unsupported version");
    doc.body = parse_body(doc.kind, f);
    f.done();
    return doc;
}

Document parse_document(const std::string& text) {
    reject_exponents(text);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(j);
}

Document load_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        if (std::cin.bad()) throw IoError("cannot read standard input");
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        if (in.bad()) throw IoError("cannot read '" + path + "'");
        text = ss.str();
    }
    return parse_document(text);
}

json to_json(const Document& doc) {
    json j = std::visit([](const auto& b) { return emit(b); }, doc.body);
    j["kind"] = doc.kind;
    j["version"] = kDocumentVersion;
    return j;
}

std::string format_number(double x) {
    if (!std::isfinite(x)) throw SchemaError("cannot serialize a non-finite number");
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s(buf);
    if (s.find_first_of("eE") == std::string::npos) return s;
    int exp10 = static_cast<int>(std::floor(std::log10(std::fabs(x))));
    int decimals = std::max(0, 11 - exp10);
    std::vector<char> wide(static_cast<std::size_t>(decimals) + 400);
    std::snprintf(wide.data(), wide.size(), "%.*f", decimals, x);
    s = wide.data();
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

std::string dump_canonical(const json& j) {
    std::string out;
    dump_into(j, out, 0);
    return out;
}

json subset_json(const Universe& universe, const Subset& s) { return json(universe.names(s)); }

json report_json(const ValidationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"code", v.code}, {"path", v.path}, {"witness", v.witness}, {"message", v.message}});
    return {{"kind", report.kind}, {"passed", report.passed()}, {"violations", violations}};
}

ValidationReport validate(const SoftFunctionDocument& doc) {
    ValidationReport r{"softfunction", {}};
    for (const auto& x : doc.pair.source.objects())
        if (!doc.pair.objectMap.count(x))
            r.add("OBJECT_MAP_NOT_TOTAL", "/objectMap", {x}, "source object has no image");
    for (const auto& [p, v] : doc.forward.values)
        if (!doc.pair.paramMap.count(p)) r.add("PARAM_UNMAPPED", "/forward/" + p, {p}, "parameter has no image");
    return r;
}

namespace {

ValidationReport validate(const FamilyDocument& d) {
    ValidationReport r = softsets::validate(d.family);
    if (d.second)
        for (const auto& v : softsets::validate(*d.second).violations) {
            Violation moved = v;
            if (v.path.rfind("/members", 0) == 0) moved.path = "/secondMembers" + v.path.substr(8);
            r.violations.push_back(moved);
        }
    return r;
}

ValidationReport validate(const StructureDocument& d) {
    ValidationReport r = softsets::validate(d.table);
    r.kind = "structure-table";
    if (d.sub && d.soft && !is_soft_subset(*d.sub, *d.soft))
        r.add("SUB_NOT_SUBSET", "/sub", {}, "sub is not a soft subset of soft");
    return r;
}

ValidationReport validate(const DecisionDocument& d) {
    ValidationReport r = softsets::validate(d.instance, d.method);
    if (d.v && !(*d.v >= 0.0 && *d.v <= 1.0)) r.add("V_RANGE", "/v", {}, "v must lie in [0,1]");
    return r;
}

}  // namespace

ValidationReport validate_document(const Document& doc) {
    ValidationReport r = std::visit(
        [](const auto& b) -> ValidationReport { return validate(b); },
        doc.body);
    r.kind = doc.kind;
    return r;
}

}  // namespace softsets
