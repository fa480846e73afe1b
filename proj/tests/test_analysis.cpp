#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace testing_support;

namespace {

using Names = std::set<std::string>;

template <class T>
T load_body(const std::string& name) {
    return body<T>(fixture("positive/" + name + ".json"));
}

SoftFamily drop_member(SoftFamily f, const std::string& name) {
    std::erase_if(f.members, [&](const auto& m) { return m.first == name; });
    return f;
}

FiniteStructureTable z_mod(std::size_t n, StructureKind kind) {
    FiniteStructureTable t;
    for (std::size_t i = 0; i < n; ++i) t.carrier.push_back(std::to_string(i));
    t.kind = kind;
    std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n)), mul = add;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
            mul[a][b] = (a * b) % n;
        }
    if (kind == StructureKind::Group) {
        t.op = add;
        t.identity = 0;
    } else {
        t.add = add;
        t.mul = mul;
        t.zero = 0;
        t.one = 1;
    }
    return t;
}

SoftSet over(const FiniteStructureTable& t,
             const std::vector<std::pair<std::string, std::vector<std::string>>>& values) {
    return make_soft(Universe(t.carrier), values);
}

// Soft elements pick one temperature per context; distance is the per-context gap.
SoftMetricInstance temperature_profiles() {
    SoftMetricInstance m;
    m.universe = Universe({"18", "20", "22", "25"});
    m.params = {"morning", "noon", "night"};
    m.elements = {{"α", {{"morning", "18"}, {"noon", "22"}, {"night", "20"}}},
                  {"β", {{"morning", "20"}, {"noon", "25"}, {"night", "18"}}},
                  {"γ", {{"morning", "22"}, {"noon", "22"}, {"night", "25"}}}};
    for (std::size_t i = 0; i < m.elements.size(); ++i)
        for (std::size_t j = i + 1; j < m.elements.size(); ++j) {
            auto& row = m.distances[{m.elements[i].first, m.elements[j].first}];
            for (const auto& p : m.params)
                row[p] = std::fabs(std::stod(m.elements[i].second.at(p)) - std::stod(m.elements[j].second.at(p)));
        }
    return m;
}

}  // namespace

// ---- rough approximations ----

TEST_CASE("rough approximations of the supplier example") {
    auto s = load_body<SoftSet>("soft_suppliers");
    const Universe& u = s.universe;
    auto r = rough_approx(s, u.subset({"s1", "s4"}));
    CHECK(r.lower.empty());
    CHECK(r.upper == u.full());

    auto e = rough_approx(s, {});
    CHECK(e.lower.empty());
    CHECK(e.upper.empty());

    Subset covered;
    for (const auto& [a, v] : s.values) covered = unite(covered, v);
    auto f = rough_approx(s, u.full());
    CHECK(f.lower == covered);
    CHECK(f.upper == covered);
}

TEST_CASE("rough lower approximation is monotone and inside the upper one") {
    Rng rng(401);
    for (int i = 0; i < 150; ++i) {
        Universe u(labels("u", pick(rng, 1, 6)));
        SoftSet s = random_soft(rng, u, labels("a", pick(rng, 1, 6)));
        Subset x = random_subset(rng, u.size());
        Subset y = unite(x, random_subset(rng, u.size()));
        auto rx = rough_approx(s, x), ry = rough_approx(s, y);
        CHECK(is_subset(rx.lower, rx.upper));
        CHECK(is_subset(rx.lower, ry.lower));
        CHECK(is_subset(rx.upper, ry.upper));
    }
}

// ---- families ----

TEST_CASE("soft topology checks") {
    auto fam = body<FamilyDocument>(fixture("positive/topology_access.json")).family;
    CHECK(check_soft_topology(fam).passed());
    CHECK(check_soft_topology(drop_member(fam, "absolute")).has("ST1"));
    CHECK(check_soft_topology(drop_member(fam, "F")).passed());

    auto missing = body<FamilyDocument>(fixture("violation/topology_missing_union.json")).family;
    CHECK_FALSE(check_soft_topology(missing).passed());
}

TEST_CASE("soft topology size cap") {
    SoftFamily f{Universe({"x"}), {"a"}, {}};
    for (std::size_t i = 0; i <= kMaxFamily; ++i) f.members.push_back({"m" + std::to_string(i), null_soft(f.universe, {"a"})});
    CHECK_THROWS_AS(check_soft_topology(f), FamilyTooLarge);
}

TEST_CASE("soft topology is closed under adjoining its own unions and meets") {
    auto fam = body<FamilyDocument>(fixture("positive/topology_access.json")).family;
    REQUIRE(check_soft_topology(fam).passed());
    for (const auto& [na, a] : fam.members)
        for (const auto& [nb, b] : fam.members) {
            for (const SoftSet& extra : {soft_union_extended(a, b), soft_intersection_restricted(a, b)}) {
                bool present = false;
                for (const auto& [n, m] : fam.members) present = present || m == extra;
                CHECK(present);
            }
        }
}

TEST_CASE("bitopology accepts in both orders") {
    auto fam = body<FamilyDocument>(fixture("positive/topology_access.json")).family;
    auto indiscrete = drop_member(fam, "F");
    CHECK(check_soft_bitopology(fam, indiscrete).passed());
    CHECK(check_soft_bitopology(indiscrete, fam).passed());
    CHECK_FALSE(check_soft_bitopology(fam, drop_member(fam, "null")).passed());
}

TEST_CASE("soft algebra checks") {
    auto fam = body<FamilyDocument>(fixture("positive/algebra_fixed_or_empty.json")).family;
    REQUIRE(fam.members.size() == 16);
    CHECK(check_soft_algebra(fam).passed());

    // the member taking the whole universe on every parameter
    std::string absolute;
    for (const auto& [n, m] : fam.members)
        if (m == absolute_soft(fam.universe, fam.params)) absolute = n;
    REQUIRE_FALSE(absolute.empty());
    auto r = check_soft_algebra(drop_member(fam, absolute));
    REQUIRE(r.has("SA2"));
    std::string null_name;
    for (const auto& [n, m] : fam.members)
        if (m == null_soft(fam.universe, fam.params)) null_name = n;
    bool at_null = false;
    for (const auto& v : r.violations)
        if (v.code == "SA2" && v.witness == std::vector<std::string>{null_name}) at_null = true;
    CHECK(at_null);

    SoftFamily trivial{fam.universe, fam.params,
                       {{"null", null_soft(fam.universe, fam.params)}, {"all", absolute_soft(fam.universe, fam.params)}}};
    CHECK(check_soft_algebra(trivial).passed());
}

// ---- matroids ----

TEST_CASE("soft matroid checks") {
    auto m = load_body<SoftMatroidInstance>("matroid_skills");
    REQUIRE(m.members.size() == 48);
    CHECK(check_soft_matroid(m).passed());

    auto no_null = m;
    std::erase_if(no_null.members, [&](const auto& g) { return g.second == null_soft(m.ground.universe, m.ground.params()); });
    REQUIRE(no_null.members.size() == 47);
    CHECK(check_soft_matroid(no_null).has("SM1"));

    const Universe& u = m.ground.universe;
    SoftMatroidInstance pairs{m.ground,
                              {{"empty", null_soft(u, m.ground.params())},
                               {"A", make_soft(u, {{"e1", {"σ1"}}, {"e2", {"σ2"}}, {"e3", {}}})},
                               {"B", make_soft(u, {{"e1", {"σ2"}}, {"e2", {}}, {"e3", {"σ4"}}})}}};
    CHECK(check_soft_matroid(pairs).has("SM2"));
}

TEST_CASE("greedy extension in the skills matroid reaches bases of one size") {
    auto m = load_body<SoftMatroidInstance>("matroid_skills");
    auto points = soft_points(m.ground);
    auto key = [&](const SoftSet& s) {
        std::set<SoftPoint> out;
        for (const auto& p : soft_points(s)) out.insert(p);
        return out;
    };
    std::set<std::set<SoftPoint>> fam;
    for (const auto& [n, g] : m.members) fam.insert(key(g));
    std::set<std::size_t> basis_sizes;
    for (auto current : fam) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& p : points) {
                if (current.count(p)) continue;
                auto next = current;
                next.insert(p);
                if (fam.count(next)) {
                    current = next;
                    grew = true;
                    break;
                }
            }
        }
        basis_sizes.insert(current.size());
    }
    CHECK(basis_sizes.size() == 1);
}

TEST_CASE("matroid ground size cap") {
    Universe u(labels("x", 17));
    SoftSet ground = absolute_soft(u, {"a"});
    SoftMatroidInstance m{ground, {{"empty", null_soft(u, {"a"})}}};
    CHECK_THROWS_AS(check_soft_matroid(m), GroundTooLarge);
}

// ---- metrics ----

TEST_CASE("soft metric checks") {
    auto m = temperature_profiles();
    CHECK(check_soft_metric(m).passed());

    auto twin = m;
    twin.distances[{"α", "β"}] = {{"morning", 0.0}, {"noon", 0.0}, {"night", 0.0}};
    CHECK(check_soft_metric(twin).has("IDENTITY"));

    auto stretched = m;
    stretched.distances[{"α", "γ"}]["noon"] = 40.0;
    CHECK(check_soft_metric(stretched).has("TRIANGLE"));

    auto negative = m;
    negative.distances[{"β", "γ"}]["night"] = -1.0;
    CHECK_FALSE(check_soft_metric(negative).passed());

    auto gap = m;
    gap.distances.erase({"α", "β"});
    CHECK_THROWS_AS(check_soft_metric(gap), IncompleteTable);
}

// ---- algebraic substructures ----

TEST_CASE("subgroups of Z6") {
    auto z6 = z_mod(6, StructureKind::Group);
    CHECK(validate(z6).passed());
    CHECK(check_substructure(z6, over(z6, {{"a", {"0", "2", "4"}}, {"b", {"0", "3"}}}), StructureKind::Group).passed());
    CHECK(check_substructure(z6, over(z6, {{"a", {"0", "2"}}}), StructureKind::Group).has("CLOSURE"));

    SoftSet trivial = over(z6, {{"b", {"0"}}});
    SoftSet full = over(z6, {{"a", {"0", "2", "4"}}, {"b", {"0", "3"}}});
    CHECK(check_soft_subrelation(trivial, full, z6, StructureKind::Group));
    CHECK_FALSE(check_soft_subrelation(over(z6, {{"c", {"0"}}}), full, z6, StructureKind::Group));

    SoftSet wrong_carrier = make_soft(Universe(labels("g", 6)), {{"a", {"g1"}}});
    CHECK_THROWS_AS(check_substructure(z6, wrong_carrier, StructureKind::Group), CarrierMismatch);
}

TEST_CASE("subrings and subfields") {
    auto ring = z_mod(6, StructureKind::Ring);
    CHECK(validate(ring).passed());
    CHECK(check_substructure(ring, over(ring, {{"a", {"0", "2", "4"}}, {"b", {"0", "3"}}}), StructureKind::Ring).passed());
    CHECK_FALSE(check_substructure(ring, over(ring, {{"a", {"0", "1"}}}), StructureKind::Ring).passed());

    auto gf5 = z_mod(5, StructureKind::Field);
    CHECK(validate(gf5).passed());
    CHECK(check_substructure(gf5, over(gf5, {{"all", {"0", "1", "2", "3", "4"}}}), StructureKind::Field).passed());
    CHECK_FALSE(check_substructure(gf5, over(gf5, {{"a", {"0", "1"}}}), StructureKind::Field).passed());
    CHECK_FALSE(check_substructure(gf5, over(gf5, {{"a", {"1", "2", "3", "4"}}}), StructureKind::Field).passed());

    // Z6 has zero divisors, so it cannot be declared a field
    CHECK_FALSE(validate(z_mod(6, StructureKind::Field)).passed());
}

TEST_CASE("subsemigroups") {
    auto ring = z_mod(6, StructureKind::Ring);
    CHECK(check_substructure(ring, over(ring, {{"a", {"0", "3"}}, {"b", {"1", "5"}}}), StructureKind::Semigroup).passed());
    CHECK_FALSE(check_substructure(ring, over(ring, {{"a", {"2", "3"}}}), StructureKind::Semigroup).passed());
}

// ---- statistical intervals ----

TEST_CASE("soft probability interval") {
    auto db = load_body<StatDatabase>("statdb_delays");
    auto iv = soft_probability_interval(db);
    CHECK(std::fabs(iv.low - 0.25) <= 1e-12);
    CHECK(std::fabs(iv.high - 0.50) <= 1e-12);

    StatDatabase none = db, all = db;
    std::fill(none.indicators.begin(), none.indicators.end(), 0);
    std::fill(all.indicators.begin(), all.indicators.end(), 1);
    auto n = soft_probability_interval(none), a = soft_probability_interval(all);
    CHECK(n.low == 0.0);
    CHECK(n.high == 0.0);
    CHECK(a.low == 1.0);
    CHECK(a.high == 1.0);

    StatDatabase bad = db;
    bad.window = 11;
    CHECK_THROWS_AS(soft_probability_interval(bad), InvalidWindow);
    bad = db;
    bad.startHigh = 8;
    CHECK_THROWS_AS(soft_probability_interval(bad), InvalidWindow);
}

TEST_CASE("soft probability interval order and collapse") {
    Rng rng(402);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = pick(rng, 1, 12);
        StatDatabase a;
        for (std::size_t k = 0; k < n; ++k) a.indicators.push_back(coin(rng) ? 1 : 0);
        a.window = pick(rng, 1, n);
        a.startLow = pick(rng, 1, n - a.window + 1);
        a.startHigh = pick(rng, a.startLow, n - a.window + 1);
        StatDatabase b = a;  // a superset event
        for (auto& x : b.indicators)
            if (coin(rng, 0.3)) x = 1;
        auto ia = soft_probability_interval(a), ib = soft_probability_interval(b);
        CHECK(0.0 <= ia.low);
        CHECK(ia.low <= ia.high);
        CHECK(ia.high <= 1.0);
        CHECK(ia.low <= ib.low + 1e-12);
        CHECK(ia.high <= ib.high + 1e-12);

        std::set<int> sums;
        for (std::size_t s = a.startLow; s <= a.startHigh; ++s) {
            int sum = 0;
            for (std::size_t k = s - 1; k < s - 1 + a.window; ++k) sum += a.indicators[k];
            sums.insert(sum);
        }
        CHECK((ia.low == ia.high) == (sums.size() == 1));
    }
}

// ---- soft graphs ----

TEST_CASE("soft graph checks") {
    auto g = load_body<SoftGraphInstance>("softgraph_friends");
    CHECK(check_soft_graph(g).passed());

    auto bad = g;
    std::size_t v5 = g.vertices.index_of("v5"), v6 = g.vertices.index_of("v6");
    bad.edgeSets["Work"].insert({v5, v6});
    auto r = check_soft_graph(bad);
    REQUIRE(r.has("ENDPOINT"));

    auto not_edge = g;
    not_edge.edgeSets["Work"].insert({g.vertices.index_of("v1"), g.vertices.index_of("v4")});
    CHECK_FALSE(check_soft_graph(not_edge).passed());

    auto bare = g;
    for (auto& [c, es] : bare.edgeSets) es.clear();
    CHECK(check_soft_graph(bare).passed());
}
