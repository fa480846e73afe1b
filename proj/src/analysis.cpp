#include "softsets/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>

namespace softsets {

RoughPair rough_approx(const SoftSet& space, const Subset& target) {
    for (auto x : target)
        if (x >= space.universe.size()) throw UnknownIdentifier("target leaves the universe");
    RoughPair out;
    for (const auto& [param, block] : space.values) {
        if (is_subset(block, target)) out.lower = unite(out.lower, block);
        if (!disjoint(block, target)) out.upper = unite(out.upper, block);
    }
    return out;
}

namespace {

// A soft set over a fixed (params, universe) grid flattened into words.
using Bits = std::vector<std::uint64_t>;

Bits encode(const SoftSet& s, const std::vector<std::string>& params, std::size_t n) {
    Bits bits((params.size() * n + 63) / 64, 0);
    for (std::size_t p = 0; p < params.size(); ++p) {
        auto it = s.values.find(params[p]);
        if (it == s.values.end()) continue;
        for (auto u : it->second) {
            std::size_t bit = p * n + u;
            bits[bit / 64] |= 1ULL << (bit % 64);
        }
    }
    return bits;
}

Bits bit_or(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] | b[i];
    return out;
}

Bits bit_and(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

void check_family_shape(const SoftFamily& family, ValidationReport& r) {
    std::vector<std::string> params = family.params;
    std::sort(params.begin(), params.end());
    std::set<std::string> names;
    for (const auto& [name, s] : family.members) {
        if (!names.insert(name).second)
            r.add("DUPLICATE_MEMBER", "/members", {name}, "member name repeated");
        if (!(s.universe == family.universe) || s.params() != params)
            r.add("MEMBER_DOMAIN", "/members", {name},
                  "member does not share the family universe and parameters");
    }
}

struct EncodedFamily {
    std::vector<Bits> members;
    std::map<Bits, std::string> index;  // encoding -> first member name
    Bits null;
    Bits full;
};

EncodedFamily encode_family(const SoftFamily& family) {
    EncodedFamily e;
    std::size_t n = family.universe.size();
    for (const auto& [name, s] : family.members) {
        e.members.push_back(encode(s, family.params, n));
        e.index.emplace(e.members.back(), name);
    }
    e.null = encode(null_soft(family.universe, family.params), family.params, n);
    e.full = encode(absolute_soft(family.universe, family.params), family.params, n);
    return e;
}

constexpr std::size_t kMaxReportedUnions = 16;

std::pair<std::string, std::string> unordered_key(const std::string& a, const std::string& b) {
    return a <= b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

ValidationReport check_soft_topology(const SoftFamily& family) {
    if (family.members.size() > kMaxFamily)
        throw FamilyTooLarge("topology check supports at most 20 members");
    ValidationReport r{"topology", {}};
    check_family_shape(family, r);
    if (!r.passed()) return r;
    EncodedFamily e = encode_family(family);
    const auto& names = family.members;

    if (!e.index.count(e.null)) r.add("ST1", "/members", {"null"}, "the null soft set is missing");
    if (!e.index.count(e.full)) r.add("ST1", "/members", {"absolute"}, "the absolute soft set is missing");

    for (std::size_t i = 0; i < e.members.size(); ++i)
        for (std::size_t j = i + 1; j < e.members.size(); ++j)
            if (!e.index.count(bit_and(e.members[i], e.members[j])))
                r.add("ST2", "/members", {names[i].first, names[j].first},
                      "intersection of two members is not a member");

    // Every nonempty subfamily; the empty union is the null set covered by ST1.
    std::size_t reported = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, const Bits&)> walk = [&](std::size_t next, const Bits& acc) {
        for (std::size_t i = next; i < e.members.size(); ++i) {
            chosen.push_back(i);
            Bits u = bit_or(acc, e.members[i]);
            if (!e.index.count(u) && reported < kMaxReportedUnions) {
                std::vector<std::string> w;
                for (auto c : chosen) w.push_back(names[c].first);
                r.add("ST3", "/members", w, "union of a subfamily is not a member");
                ++reported;
            }
            walk(i + 1, u);
            chosen.pop_back();
        }
    };
    walk(0, e.null);
    return r;
}

ValidationReport check_soft_algebra(const SoftFamily& family) {
    if (family.members.size() > kMaxFamily)
        throw FamilyTooLarge("algebra check supports at most 20 members");
    ValidationReport r{"algebra", {}};
    check_family_shape(family, r);
    if (!r.passed()) return r;
    EncodedFamily e = encode_family(family);
    const auto& names = family.members;

    if (!e.index.count(e.null)) r.add("SA1", "/members", {"null"}, "the null soft set is missing");
    for (std::size_t i = 0; i < e.members.size(); ++i) {
        Bits c(e.members[i].size());
        for (std::size_t w = 0; w < c.size(); ++w) c[w] = e.full[w] & ~e.members[i][w];
        if (!e.index.count(c))
            r.add("SA2", "/members", {names[i].first}, "complement of a member is not a member");
    }
    // A family closed under pairwise unions is its own union closure.
    for (std::size_t i = 0; i < e.members.size(); ++i)
        for (std::size_t j = i + 1; j < e.members.size(); ++j)
            if (!e.index.count(bit_or(e.members[i], e.members[j])))
                r.add("SA3", "/members", {names[i].first, names[j].first},
                      "union of two members is not a member");
    return r;
}

ValidationReport check_soft_bitopology(const SoftFamily& first, const SoftFamily& second) {
    ValidationReport r{"bitopology", {}};
    std::vector<std::string> p1 = first.params, p2 = second.params;
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    if (!(first.universe == second.universe) || p1 != p2)
        r.add("BITOPOLOGY_DOMAIN", "", {}, "the two families use different universes or parameters");
    for (const auto& [prefix, fam] : {std::pair{"/first", &first}, std::pair{"/second", &second}}) {
        for (auto v : check_soft_topology(*fam).violations) {
            v.path = prefix + v.path;
            r.violations.push_back(std::move(v));
        }
    }
    return r;
}

ValidationReport validate(const SoftFamily& family) {
    ValidationReport r{"softfamily", {}};
    check_family_shape(family, r);
    return r;
}

ValidationReport validate(const SoftMatroidInstance& inst) {
    ValidationReport r{"matroid", {}};
    auto params = inst.ground.params();
    for (const auto& [name, m] : inst.members) {
        if (!(m.universe == inst.ground.universe) || m.params() != params) {
            r.add("MEMBER_DOMAIN", "/members", {name}, "member does not share the ground parameters");
            continue;
        }
        if (!is_soft_subset(m, inst.ground))
            r.add("NOT_SUBSET", "/members", {name}, "member is not a soft subset of the ground set");
    }
    return r;
}

ValidationReport check_soft_matroid(const SoftMatroidInstance& inst) {
    auto points = soft_points(inst.ground);
    if (points.size() > kMaxMatroidPoints)
        throw GroundTooLarge("matroid check supports at most 16 soft points");
    ValidationReport r = validate(inst);
    if (!r.passed()) return r;

    std::map<SoftPoint, std::size_t> bit;
    for (std::size_t i = 0; i < points.size(); ++i) bit[points[i]] = i;
    auto label = [&](std::size_t i) { return "(" + points[i].param + "," + points[i].object + ")"; };

    std::vector<std::uint32_t> masks;
    std::map<std::uint32_t, std::string> index;
    for (const auto& [name, m] : inst.members) {
        std::uint32_t mask = 0;
        for (const auto& p : soft_points(m)) mask |= 1u << bit.at(p);
        masks.push_back(mask);
        index.emplace(mask, name);
    }

    if (!index.count(0)) r.add("SM1", "/members", {}, "the null soft set is not in the family");

    // Closure under single-point removal is equivalent to closure under all soft subsets.
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t b = 0; b < points.size(); ++b)
            if (masks[i] >> b & 1u && !index.count(masks[i] & ~(1u << b))) {
                r.add("SM2", "/members", {inst.members[i].first, label(b)},
                      "removing this soft point leaves the family");
                break;
            }

    std::vector<std::pair<std::uint32_t, std::string>> distinct(index.begin(), index.end());
    for (const auto& [g, gname] : distinct)
        for (const auto& [h, hname] : distinct) {
            if (std::popcount(g) >= std::popcount(h)) continue;
            std::uint32_t candidates = h & ~g;
            bool extended = false;
            for (std::size_t b = 0; b < points.size() && !extended; ++b)
                if (candidates >> b & 1u) extended = index.count(g | 1u << b) != 0;
            if (!extended)
                r.add("SM3", "/members", {gname, hname},
                      "no soft point of the larger member extends the smaller one");
        }
    return r;
}

ValidationReport validate(const SoftMetricInstance& inst) {
    ValidationReport r{"metric", {}};
    std::set<std::string> names;
    for (const auto& [name, choice] : inst.elements) {
        if (!names.insert(name).second) r.add("DUPLICATE_ELEMENT", "/elements", {name}, "element repeated");
        for (const auto& p : inst.params)
            if (!choice.count(p)) r.add("SUPPORT", "/elements", {name, p}, "choice undefined on a parameter");
        for (const auto& [p, x] : choice) {
            if (std::find(inst.params.begin(), inst.params.end(), p) == inst.params.end())
                r.add("SUPPORT", "/elements", {name, p}, "choice on an unknown parameter");
            if (!inst.universe.contains(x))
                r.add("UNKNOWN_OBJECT", "/elements", {name, x}, "chosen object outside the universe");
        }
    }
    return r;
}

ValidationReport check_soft_metric(const SoftMetricInstance& inst) {
    ValidationReport r = validate(inst);
    if (!r.passed()) return r;
    const auto& el = inst.elements;
    std::size_t n = el.size();
    // d[i][j][p], zero on the diagonal.
    std::vector<std::vector<std::vector<double>>> d(
        n, std::vector<std::vector<double>>(n, std::vector<double>(inst.params.size(), 0.0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto it = inst.distances.find(unordered_key(el[i].first, el[j].first));
            if (it == inst.distances.end())
                throw IncompleteTable("no distance for (" + el[i].first + ", " + el[j].first + ")");
            for (std::size_t p = 0; p < inst.params.size(); ++p) {
                auto v = it->second.find(inst.params[p]);
                if (v == it->second.end())
                    throw IncompleteTable("distance (" + el[i].first + ", " + el[j].first +
                                          ") lacks parameter '" + inst.params[p] + "'");
                d[i][j][p] = d[j][i][p] = v->second;
            }
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool zero = true;
            for (std::size_t p = 0; p < inst.params.size(); ++p) {
                if (!(d[i][j][p] >= 0.0))
                    r.add("NONNEGATIVITY", "/distances", {el[i].first, el[j].first, inst.params[p]},
                          "negative distance");
                if (d[i][j][p] != 0.0) zero = false;
            }
            bool same = el[i].second == el[j].second;
            if (zero && !same)
                r.add("IDENTITY", "/distances", {el[i].first, el[j].first},
                      "distinct soft elements at distance zero");
            if (!zero && same)
                r.add("IDENTITY", "/distances", {el[i].first, el[j].first},
                      "equal soft elements at nonzero distance");
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                for (std::size_t p = 0; p < inst.params.size(); ++p)
                    if (d[a][c][p] > d[a][b][p] + d[b][c][p] + kEpsilon) {
                        r.add("TRIANGLE", "/distances",
                              {el[a].first, el[b].first, el[c].first, inst.params[p]},
                              "triangle inequality fails");
                        break;
                    }
            }
    return r;
}

std::string to_string(StructureKind k) {
    switch (k) {
        case StructureKind::Semigroup: return "semigroup";
        case StructureKind::Group: return "group";
        case StructureKind::Ring: return "ring";
        case StructureKind::Field: return "field";
    }
    return "group";
}

std::optional<StructureKind> structure_kind_from(const std::string& s) {
    if (s == "semigroup") return StructureKind::Semigroup;
    if (s == "group") return StructureKind::Group;
    if (s == "ring") return StructureKind::Ring;
    if (s == "field") return StructureKind::Field;
    return std::nullopt;
}

namespace {

using Table = std::vector<std::vector<std::size_t>>;

bool table_shape_ok(const Table& t, std::size_t n) {
    if (t.size() != n) return false;
    for (const auto& row : t) {
        if (row.size() != n) return false;
        for (auto x : row)
            if (x >= n) return false;
    }
    return true;
}

std::optional<std::size_t> inverse_of(const Table& t, std::size_t e, std::size_t x) {
    for (std::size_t y = 0; y < t.size(); ++y)
        if (t[x][y] == e && t[y][x] == e) return y;
    return std::nullopt;
}

void check_associative(const Table& t, const std::string& name, const std::vector<std::string>& c,
                       ValidationReport& r) {
    std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d)
                if (t[t[a][b]][d] != t[a][t[b][d]]) {
                    r.add("STRUCTURE_AXIOM", "/" + name, {c[a], c[b], c[d]}, name + " is not associative");
                    return;
                }
}

void check_identity_and_inverses(const Table& t, std::optional<std::size_t> e, const std::string& name,
                                 const std::vector<std::string>& c, bool all_inverses,
                                 std::optional<std::size_t> skip, ValidationReport& r) {
    if (!e) {
        r.add("STRUCTURE_AXIOM", "/" + name, {}, name + " needs a declared identity");
        return;
    }
    for (std::size_t x = 0; x < t.size(); ++x)
        if (t[*e][x] != x || t[x][*e] != x) {
            r.add("STRUCTURE_AXIOM", "/" + name, {c[*e], c[x]}, "declared identity does not act as one");
            return;
        }
    if (!all_inverses) return;
    for (std::size_t x = 0; x < t.size(); ++x) {
        if (skip && x == *skip) continue;
        if (!inverse_of(t, *e, x))
            r.add("STRUCTURE_AXIOM", "/" + name, {c[x]}, "element has no inverse under " + name);
    }
}

void check_commutative(const Table& t, const std::string& name, const std::vector<std::string>& c,
                       ValidationReport& r) {
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            if (t[a][b] != t[b][a]) {
                r.add("STRUCTURE_AXIOM", "/" + name, {c[a], c[b]}, name + " is not commutative");
                return;
            }
}

}  // namespace

ValidationReport validate(const FiniteStructureTable& table) {
    ValidationReport r{"structure-table", {}};
    const auto& c = table.carrier;
    std::size_t n = c.size();
    if (n == 0) {
        r.add("STRUCTURE_AXIOM", "/carrier", {}, "carrier is empty");
        return r;
    }
    for (auto e : {table.identity, table.zero, table.one})
        if (e && *e >= n) r.add("STRUCTURE_AXIOM", "/carrier", {}, "distinguished element outside the carrier");
    if (!r.passed()) return r;

    switch (table.kind) {
        case StructureKind::Semigroup:
        case StructureKind::Group:
            if (!table_shape_ok(table.op, n)) {
                r.add("TABLE_SHAPE", "/op", {}, "operation table must be n x n over the carrier");
                return r;
            }
            check_associative(table.op, "op", c, r);
            if (table.kind == StructureKind::Group)
                check_identity_and_inverses(table.op, table.identity, "op", c, true, std::nullopt, r);
            break;
        case StructureKind::Ring:
        case StructureKind::Field: {
            if (!table_shape_ok(table.add, n) || !table_shape_ok(table.mul, n)) {
                r.add("TABLE_SHAPE", "/add", {}, "add and mul tables must be n x n over the carrier");
                return r;
            }
            check_associative(table.add, "add", c, r);
            check_commutative(table.add, "add", c, r);
            check_identity_and_inverses(table.add, table.zero, "add", c, true, std::nullopt, r);
            check_associative(table.mul, "mul", c, r);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t d = 0; d < n; ++d) {
                        const auto& A = table.add;
                        const auto& M = table.mul;
                        if (M[a][A[b][d]] != A[M[a][b]][M[a][d]] || M[A[b][d]][a] != A[M[b][a]][M[d][a]]) {
                            r.add("STRUCTURE_AXIOM", "/mul", {c[a], c[b], c[d]}, "mul does not distribute over add");
                            a = b = d = n;
                        }
                    }
            if (table.kind == StructureKind::Field) {
                if (!table.one) {
                    r.add("STRUCTURE_AXIOM", "/one", {}, "a field needs a declared one");
                } else if (table.zero && *table.one == *table.zero) {
                    r.add("STRUCTURE_AXIOM", "/one", {c[*table.one]}, "one must differ from zero");
                } else {
                    check_commutative(table.mul, "mul", c, r);
                    check_identity_and_inverses(table.mul, table.one, "mul", c, true, table.zero, r);
                }
            }
            break;
        }
    }
    return r;
}

namespace {

struct Ops {
    const Table* op = nullptr;  // group / semigroup operation
    std::optional<std::size_t> e;
    const Table* add = nullptr;
    const Table* mul = nullptr;
};

Ops select_ops(const FiniteStructureTable& t, StructureKind kind) {
    bool additive = t.kind == StructureKind::Ring || t.kind == StructureKind::Field;
    switch (kind) {
        case StructureKind::Semigroup:
            return additive ? Ops{&t.mul, std::nullopt, nullptr, nullptr} : Ops{&t.op, std::nullopt, nullptr, nullptr};
        case StructureKind::Group:
            if (t.kind == StructureKind::Semigroup)
                throw KindMismatch("a semigroup table cannot host subgroup checks");
            return additive ? Ops{&t.add, t.zero, nullptr, nullptr} : Ops{&t.op, t.identity, nullptr, nullptr};
        case StructureKind::Ring:
            if (!additive) throw KindMismatch("subring checks need a ring or field table");
            return Ops{nullptr, std::nullopt, &t.add, &t.mul};
        case StructureKind::Field:
            if (t.kind != StructureKind::Field) throw KindMismatch("subfield checks need a field table");
            return Ops{nullptr, std::nullopt, &t.add, &t.mul};
    }
    return {};
}

void check_one(const FiniteStructureTable& t, const Ops& ops, StructureKind kind, const Subset& h,
               const std::string& param, ValidationReport& r) {
    const auto& c = t.carrier;
    std::string path = "/values/" + param;
    if (kind != StructureKind::Field && h.empty()) {
        r.add("EMPTY", path, {param}, "a substructure must be nonempty");
        return;
    }
    auto closed = [&](std::size_t x, std::size_t y, std::size_t z, const char* what) {
        if (h.count(z)) return true;
        r.add("CLOSURE", path, {param, c[x], c[y], c[z]}, std::string("not closed under ") + what);
        return false;
    };
    if (kind == StructureKind::Semigroup) {
        for (auto x : h)
            for (auto y : h)
                if (!closed(x, y, (*ops.op)[x][y], "the operation")) return;
        return;
    }
    if (kind == StructureKind::Group) {
        for (auto x : h)
            for (auto y : h)
                if (!closed(x, y, (*ops.op)[x][*inverse_of(*ops.op, *ops.e, y)], "x*y^-1")) return;
        return;
    }
    std::size_t zero = *t.zero;
    if (kind == StructureKind::Field) {
        if (!h.count(zero) || !h.count(*t.one)) {
            r.add("MISSING_IDENTITY", path, {param}, "a subfield must contain 0 and 1");
            return;
        }
    }
    for (auto x : h)
        for (auto y : h) {
            std::size_t neg = *inverse_of(*ops.add, zero, y);
            if (!closed(x, y, (*ops.add)[x][neg], "x-y")) return;
            if (!closed(x, y, (*ops.mul)[x][y], "x*y")) return;
        }
    if (kind == StructureKind::Field) {
        for (auto x : h) {
            if (x == zero) continue;
            std::size_t inv = *inverse_of(*ops.mul, *t.one, x);
            if (!h.count(inv)) {
                r.add("INVERSE", path, {param, c[x], c[inv]}, "multiplicative inverse missing");
                return;
            }
        }
    }
}

}  // namespace

ValidationReport check_substructure(const FiniteStructureTable& table, const SoftSet& soft,
                                    StructureKind kind) {
    if (soft.universe.objects() != table.carrier)
        throw CarrierMismatch("soft set universe differs from the structure carrier");
    Ops ops = select_ops(table, kind);
    ValidationReport r = validate(table);
    r.kind = to_string(kind);
    if (!r.passed()) return r;
    for (const auto& [param, h] : soft.values) check_one(table, ops, kind, h, param, r);
    return r;
}

bool check_soft_subrelation(const SoftSet& sub, const SoftSet& super,
                            const FiniteStructureTable& table, StructureKind kind) {
    if (!check_substructure(table, super, kind).passed()) return false;
    if (!check_substructure(table, sub, kind).passed()) return false;
    for (const auto& [param, h] : sub.values) {
        auto it = super.values.find(param);
        if (it == super.values.end() || !is_subset(h, it->second)) return false;
    }
    return true;
}

ValidationReport validate(const StatDatabase& db) {
    ValidationReport r{"statdb", {}};
    for (std::size_t i = 0; i < db.indicators.size(); ++i)
        if (db.indicators[i] != 0 && db.indicators[i] != 1)
            r.add("INDICATOR", "/indicators/" + std::to_string(i), {}, "indicator must be 0 or 1");
    std::size_t n = db.indicators.size();
    if (db.window < 1 || db.window > n || db.startLow < 1 || db.startLow > db.startHigh ||
        db.startHigh > n - db.window + 1)
        r.add("WINDOW", "/window", {}, "window length or start range is not admissible");
    return r;
}

Interval soft_probability_interval(const StatDatabase& db) {
    std::size_t n = db.indicators.size();
    std::size_t m = db.window;
    if (m < 1 || m > n) throw InvalidWindow("window length must lie in 1..N");
    if (db.startLow < 1 || db.startLow > db.startHigh || db.startHigh > n - m + 1)
        throw InvalidWindow("window starts must satisfy 1 <= low <= high <= N-m+1");
    std::size_t lo = m, hi = 0;
    for (std::size_t s = db.startLow; s <= db.startHigh; ++s) {
        std::size_t count = 0;
        for (std::size_t k = 0; k < m; ++k) count += db.indicators[s - 1 + k] ? 1 : 0;
        lo = std::min(lo, count);
        hi = std::max(hi, count);
    }
    return {static_cast<double>(lo) / static_cast<double>(m),
            static_cast<double>(hi) / static_cast<double>(m)};
}

ValidationReport check_soft_graph(const SoftGraphInstance& inst) {
    ValidationReport r{"softgraph", {}};
    const auto& V = inst.vertices;
    for (const auto& [a, b] : inst.edges)
        if (a >= b || b >= V.size()) r.add("EDGE_SHAPE", "/edges", {}, "edges must join two distinct vertices");
    for (const auto& [param, edges] : inst.edgeSets) {
        auto vs = inst.vertexSets.find(param);
        if (vs == inst.vertexSets.end()) {
            r.add("PARAM_MISMATCH", "/edgeSets/" + param, {param}, "edge set without a vertex set");
            continue;
        }
        for (const auto& e : edges) {
            std::vector<std::string> w{param, V.name(e.first), V.name(e.second)};
            if (!inst.edges.count(e))
                r.add("NOT_AN_EDGE", "/edgeSets/" + param, w, "edge is not in the base graph");
            if (!vs->second.count(e.first) || !vs->second.count(e.second))
                r.add("ENDPOINT", "/edgeSets/" + param, w, "edge endpoint outside A(c)");
        }
    }
    for (const auto& [param, vs] : inst.vertexSets)
        if (!inst.edgeSets.count(param))
            r.add("PARAM_MISMATCH", "/vertexSets/" + param, {param}, "vertex set without an edge set");
    return r;
}

ValidationReport validate(const SoftGraphInstance& inst) { return check_soft_graph(inst); }

}  // namespace softsets
