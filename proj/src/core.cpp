#include "softsets/core.hpp"

#include <algorithm>
#include <iterator>

namespace softsets {

Subset unite(const Subset& a, const Subset& b) {
    Subset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

Subset intersect(const Subset& a, const Subset& b) {
    Subset out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

Subset subtract(const Subset& a, const Subset& b) {
    Subset out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool is_subset(const Subset& a, const Subset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const Subset& a, const Subset& b) { return intersect(a, b).empty(); }

Universe::Universe(std::vector<std::string> objects) : objects_(std::move(objects)) {
    if (objects_.empty()) throw SchemaError("universe must be nonempty");
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        if (!index_.emplace(objects_[i], i).second)
            throw SchemaError("duplicate universe identifier '" + objects_[i] + "'");
    }
}

std::size_t Universe::index_of(const std::string& object) const {
    auto it = index_.find(object);
    if (it == index_.end()) throw UnknownIdentifier("unknown object '" + object + "'");
    return it->second;
}

Subset Universe::subset(const std::vector<std::string>& names) const {
    Subset out;
    for (const auto& n : names) {
        if (!out.insert(index_of(n)).second)
            throw SchemaError("duplicate entry '" + n + "' in set");
    }
    return out;
}

std::vector<std::string> Universe::names(const Subset& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (auto i : s) out.push_back(objects_.at(i));
    return out;
}

Subset Universe::full() const {
    Subset out;
    for (std::size_t i = 0; i < objects_.size(); ++i) out.insert(out.end(), i);
    return out;
}

Subset Universe::from_mask(unsigned long long mask) const {
    Subset out;
    for (std::size_t i = 0; i < objects_.size() && i < 64; ++i)
        if (mask >> i & 1ULL) out.insert(out.end(), i);
    return out;
}

std::string subset_key(const Universe& universe, const Subset& s) {
    std::string out;
    for (auto i : s) {
        if (!out.empty()) out += '|';
        out += universe.name(i);
    }
    return out;
}

Subset parse_subset_key(const Universe& universe, const std::string& key) {
    std::vector<std::string> names;
    if (!key.empty()) {
        std::size_t start = 0;
        while (true) {
            auto bar = key.find('|', start);
            names.push_back(key.substr(start, bar == std::string::npos ? std::string::npos
                                                                       : bar - start));
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
    }
    return universe.subset(names);
}

SoftSet make_soft(const Universe& universe,
                  const std::vector<std::pair<std::string, std::vector<std::string>>>& values) {
    SoftSet s{universe, {}};
    for (const auto& [param, objects] : values) {
        if (!s.values.emplace(param, universe.subset(objects)).second)
            throw SchemaError("duplicate parameter '" + param + "'");
    }
    return s;
}

SoftSet null_soft(const Universe& universe, const std::vector<std::string>& params) {
    SoftSet s{universe, {}};
    for (const auto& p : params) s.values[p] = {};
    return s;
}

SoftSet absolute_soft(const Universe& universe, const std::vector<std::string>& params) {
    SoftSet s{universe, {}};
    for (const auto& p : params) s.values[p] = universe.full();
    return s;
}

const Subset& value_of(const SoftSet& s, const std::string& param) {
    auto it = s.values.find(param);
    if (it == s.values.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
    return it->second;
}

static void require_same_universe(const Universe& a, const Universe& b) {
    if (!(a == b)) throw UniverseMismatch("operands are defined over different universes");
}

SoftSet soft_union_extended(const SoftSet& a, const SoftSet& b) {
    require_same_universe(a.universe, b.universe);
    SoftSet out = a;
    for (const auto& [param, value] : b.values) {
        auto& slot = out.values[param];
        slot = unite(slot, value);
    }
    return out;
}

SoftSet soft_intersection_restricted(const SoftSet& a, const SoftSet& b) {
    require_same_universe(a.universe, b.universe);
    SoftSet out{a.universe, {}};
    for (const auto& [param, value] : a.values) {
        auto it = b.values.find(param);
        if (it != b.values.end()) out.values[param] = intersect(value, it->second);
    }
    return out;
}

SoftSet soft_complement(const SoftSet& s) {
    SoftSet out{s.universe, {}};
    Subset all = s.universe.full();
    for (const auto& [param, value] : s.values) out.values[param] = subtract(all, value);
    return out;
}

bool is_soft_subset(const SoftSet& a, const SoftSet& b) {
    require_same_universe(a.universe, b.universe);
    for (const auto& [param, value] : a.values) {
        auto it = b.values.find(param);
        if (it == b.values.end() || !is_subset(value, it->second)) return false;
    }
    return true;
}

std::vector<SoftPoint> soft_points(const SoftSet& s) {
    std::vector<SoftPoint> out;
    for (const auto& [param, value] : s.values)
        for (auto i : value) out.push_back({param, s.universe.name(i)});
    return out;
}

static const std::string& mapped(const std::map<std::string, std::string>& m,
                                 const std::string& from, const char* what) {
    auto it = m.find(from);
    if (it == m.end())
        throw MapNotTotal(std::string(what) + " map has no image for '" + from + "'");
    return it->second;
}

static void require_total_object_map(const SoftFunctionPair& pair) {
    for (const auto& x : pair.source.objects()) {
        const std::string& y = mapped(pair.objectMap, x, "object");
        if (!pair.target.contains(y))
            throw MapNotTotal("object '" + x + "' maps outside the target universe");
    }
}

SoftSet soft_image(const SoftFunctionPair& pair, const SoftSet& s) {
    require_same_universe(pair.source, s.universe);
    require_total_object_map(pair);
    SoftSet out{pair.target, {}};
    for (const auto& [param, value] : s.values) {
        const std::string& b = mapped(pair.paramMap, param, "parameter");
        Subset image;
        for (auto i : value)
            image.insert(pair.target.index_of(mapped(pair.objectMap, s.universe.name(i), "object")));
        auto& slot = out.values[b];
        slot = unite(slot, image);
    }
    return out;
}

SoftSet soft_preimage(const SoftFunctionPair& pair, const SoftSet& t) {
    require_same_universe(pair.target, t.universe);
    require_total_object_map(pair);
    std::vector<std::size_t> image(pair.source.size());
    for (std::size_t i = 0; i < pair.source.size(); ++i)
        image[i] = pair.target.index_of(mapped(pair.objectMap, pair.source.name(i), "object"));

    SoftSet out{pair.source, {}};
    for (const auto& [a, b] : pair.paramMap) {
        Subset pre;
        auto it = t.values.find(b);
        if (it != t.values.end()) {
            for (std::size_t i = 0; i < image.size(); ++i)
                if (it->second.count(image[i])) pre.insert(i);
        }
        out.values[a] = std::move(pre);
    }
    return out;
}

ScoreTable<std::string> indicator_scores(const SoftSet& s) {
    ScoreTable<std::string> out;
    for (const auto& [param, value] : s.values) {
        auto& row = out[param];
        for (std::size_t i = 0; i < s.universe.size(); ++i)
            row[s.universe.name(i)] = value.count(i) ? 1.0 : 0.0;
    }
    return out;
}

SoftSet relation_induced(const Universe& universe, const std::vector<std::string>& params,
                         const Relation& rel) {
    SoftSet out = null_soft(universe, params);
    for (const auto& [object, param] : rel) {
        auto it = out.values.find(param);
        if (it == out.values.end()) throw UnknownIdentifier("unknown parameter '" + param + "'");
        it->second.insert(universe.index_of(object));
    }
    return out;
}

Relation relation_of(const SoftSet& s) {
    Relation rel;
    for (const auto& [param, value] : s.values)
        for (auto i : value) rel.emplace(s.universe.name(i), param);
    return rel;
}

bool payload_matches(const Payload& p, PayloadKind kind) {
    switch (kind) {
        case PayloadKind::Number: return std::holds_alternative<double>(p);
        case PayloadKind::Tuple: return std::holds_alternative<std::vector<double>>(p);
        case PayloadKind::Label: return std::holds_alternative<std::string>(p);
    }
    return false;
}

CurriedTable curry(const TValuedSoftSet& tv) {
    CurriedTable out;
    for (const auto& p : tv.params) out[p];
    for (const auto& [key, payload] : tv.table) out[key.first][key.second] = payload;
    return out;
}

TValuedSoftSet uncurry(const Universe& universe, PayloadKind kind, const CurriedTable& curried) {
    TValuedSoftSet tv{universe, {}, kind, {}};
    for (const auto& [param, row] : curried) {
        tv.params.push_back(param);
        for (const auto& [object, payload] : row) tv.table[{param, object}] = payload;
    }
    return tv;
}

ValidationReport validate(const SoftSet& s) {
    ValidationReport r{"soft", {}};
    if (s.values.empty()) r.add("EMPTY_DOMAIN", "/params", {}, "parameter list is empty");
    return r;
}

ValidationReport validate(const TValuedSoftSet& tv) {
    ValidationReport r{"tvalued", {}};
    std::set<std::string> params(tv.params.begin(), tv.params.end());
    for (const auto& p : tv.params) {
        for (const auto& x : tv.universe.objects()) {
            auto it = tv.table.find({p, x});
            if (it == tv.table.end()) {
                r.add("TABLE_NOT_TOTAL", "/table/" + p + "/" + x, {p, x},
                      "no payload for this parameter and object");
            } else if (!payload_matches(it->second, tv.payloadKind)) {
                r.add("PAYLOAD_KIND", "/table/" + p + "/" + x, {p, x},
                      "payload does not match the declared payload kind");
            }
        }
    }
    for (const auto& [key, payload] : tv.table) {
        if (!params.count(key.first) || !tv.universe.contains(key.second))
            r.add("TABLE_EXTRA", "/table/" + key.first + "/" + key.second,
                  {key.first, key.second}, "entry outside params x universe");
    }
    return r;
}

}  // namespace softsets
