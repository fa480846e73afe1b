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

Names ns(std::initializer_list<const char*> xs) {
    Names out;
    for (auto x : xs) out.insert(x);
    return out;
}

MultipolarSoftInstance risk_screening() {
    Universe u(labels("p", 5));
    MultipolarSoftInstance m{u, 3, {}};
    m.values["Sec"] = {u.subset({"p2", "p4"}), u.subset({"p4"}), u.subset({"p2", "p3", "p4"})};
    m.values["Cost"] = {u.subset({"p3"}), u.subset({"p1", "p3", "p5"}), u.subset({"p1", "p5"})};
    m.values["Sched"] = {u.subset({"p2", "p5"}), u.subset({"p5"}), u.subset({"p1", "p2", "p5"})};
    return m;
}

RefinedSoftInstance applicant_screening() {
    Universe u(labels("u", 6));
    RefinedSoftInstance r{u, {"α1", "α2", "α3"}, {}};
    r.evaluators["β1"] = make_soft(u, {{"α1", {"u1", "u2", "u4"}}, {"α2", {"u2", "u3", "u5"}}, {"α3", {"u1", "u3", "u6"}}});
    r.evaluators["β2"] = make_soft(u, {{"α1", {"u1", "u4", "u5"}}, {"α2", {"u2", "u5", "u6"}}, {"α3", {"u1", "u2", "u6"}}});
    r.evaluators["β3"] = make_soft(u, {{"α1", {"u2", "u4", "u6"}}, {"α2", {"u1", "u3", "u6"}}, {"α3", {"u1", "u4", "u5"}}});
    return r;
}

RankedSoftInstance hotel_cleanliness() {
    Universe u(labels("h", 5));
    RankedSoftInstance r{u, {}};
    r.partitions["clean"] = {u.subset({"h4"}), u.subset({"h2"}), u.subset({"h3", "h5"}), u.subset({"h1"})};
    return r;
}

}  // namespace

// ---- keyed lookups ----

TEST_CASE("hypersoft lookup") {
    auto h = load_body<HyperSoftInstance>("hypersoft_laptops");
    CHECK(validate(h).passed());
    CHECK(names_of(h.universe, eval_keyed(h, {"High", "Light", "Long"})) == ns({"ℓ4"}));
    CHECK(names_of(h.universe, eval_keyed(h, {"Mid", "Standard", "Long"})) == ns({"ℓ3"}));
    CHECK_THROWS_AS(eval_keyed(h, TupleKey{"High", "Light"}), ArityMismatch);
    CHECK_THROWS_AS(eval_keyed(h, TupleKey{"Low", "Light", "Long"}), MissingParameter);
}

TEST_CASE("hypersoft built from tags") {
    auto h = load_body<HyperSoftInstance>("hypersoft_laptops");
    auto built = build_hypersoft_from_tags(h.universe, h.domains, *h.tags);
    CHECK(names_of(h.universe, eval_keyed(built, {"Mid", "Standard", "Long"})) == ns({"ℓ3"}));
    CHECK(built.entries == h.entries);

    auto requested = build_hypersoft_from_tags(h.universe, h.domains, *h.tags, {{"Low", "Light", "Long"}});
    CHECK(eval_keyed(requested, {"Low", "Light", "Long"}).empty());

    Tags short_tags = *h.tags;
    short_tags.begin()->second.pop_back();
    CHECK_THROWS_AS(build_hypersoft_from_tags(h.universe, h.domains, short_tags), TagArityMismatch);
}

TEST_CASE("superhypersoft lookup and tag filtering") {
    auto s = load_body<SuperHyperSoftInstance>("superhypersoft_meals");
    CHECK(validate(s).passed());
    SetTuple meal_key{{"Vegan", "Pescatarian"}, {"Tofu", "Fish"}, {"Quick"}};
    CHECK(names_of(s.universe, eval_keyed(s, meal_key)) == ns({"r1", "r4"}));
    // coordinate order inside a key does not matter
    CHECK(names_of(s.universe, eval_keyed(s, {{"Pescatarian", "Vegan"}, {"Fish", "Tofu"}, {"Quick"}})) ==
          ns({"r1", "r4"}));

    SetTuple legumes{{"Vegan"}, {"Legumes"}, {"Medium"}};
    SetTuple nothing{{}, {}, {}};
    auto built = build_superhypersoft_from_tags(s.universe, s.domains, *s.tags, {meal_key, legumes, nothing});
    CHECK(names_of(s.universe, eval_keyed(built, meal_key)) == ns({"r1", "r4"}));
    CHECK(names_of(s.universe, eval_keyed(built, legumes)) == ns({"r6"}));
    CHECK(eval_keyed(built, nothing).empty());
}

TEST_CASE("canonical set tuples reject values outside the domain") {
    auto s = load_body<SuperHyperSoftInstance>("superhypersoft_meals");
    CHECK(canonical_set_tuple(s.domains, {{"Pescatarian", "Vegan"}, {}, {"Long", "Quick"}}) ==
          SetTuple{{"Vegan", "Pescatarian"}, {}, {"Quick", "Long"}});
    CHECK_THROWS(canonical_set_tuple(s.domains, {{"Tofu"}, {}, {}}));
}

TEST_CASE("m,n superhypersoft lookup") {
    auto m = load_body<MNSuperHyperSoftInstance>("mnsuperhypersoft_courses");
    CHECK(validate(m).passed());
    const auto& out = eval_keyed(m, SetTuple{{"CS", "Data"}, {"Intermediate", "Advanced"}, {"Normal"}});
    REQUIRE(out.size() == 2);
    CHECK(names_of(m.universe, out[0]) == ns({"c3", "c4", "c5"}));
    CHECK(names_of(m.universe, out[1]) == ns({"c2", "c6"}));

    m.entries.begin()->second.pop_back();
    CHECK_FALSE(validate(m).passed());
}

TEST_CASE("type-n chains") {
    auto t = load_body<TypeNSoftInstance>("typen_companies");
    CHECK(validate(t).passed());
    CHECK(names_of(t.universe, eval_typen_chain(t, {"Eng", "Alg", "Strong"})) == ns({"u1", "u4"}));
    CHECK(names_of(t.universe, eval_typen_chain(t, {"PM", "Comm", "Moderate"})) == ns({"u1", "u3", "u5", "u6"}));
    try {
        eval_typen_chain(t, {"Eng", "Comm", "Strong"});
        FAIL("expected InvalidChain");
    } catch (const InvalidChain& e) {
        CHECK(e.step() == 2);
    }
    CHECK_THROWS_AS(eval_typen_chain(t, {"Eng", "Alg"}), ArityMismatch);
}

// ---- graded and probabilistic payloads ----

TEST_CASE("n-soft grades") {
    auto n = load_body<NSoftInstance>("nsoft_students");
    CHECK(validate(n).passed());
    CHECK(nsoft_grade(n, "Math", "s1") == 4);
    CHECK(nsoft_grade(n, "Prog", "s5") == 2);
    CHECK_THROWS_AS(nsoft_grade(n, "Art", "s1"), UnknownIdentifier);

    for (const auto& p : n.params)
        for (int r = 0; r + 1 < n.N; ++r) CHECK(is_subset(nsoft_projection(n, p, r + 1), nsoft_projection(n, p, r)));
    CHECK(nsoft_projection(n, "Math", 0) == n.universe.full());

    auto dup = n;
    dup.grades[{"Math", "s2"}].push_back(3);
    CHECK(validate(dup).has("DUPLICATE_GRADE"));
    auto missing = n;
    missing.grades.erase({"Prog", "s3"});
    CHECK(validate(missing).has("GRADE_MISSING"));
}

TEST_CASE("probabilistic rows") {
    auto p = load_body<ProbabilisticSoftInstance>("probabilistic_routes");
    CHECK(validate(p).passed());
    p.dist["Fast"][0] += 0.1;
    auto r = validate(p);
    CHECK(r.has("ROW_SUM"));
    CHECK(r.violations.front().witness.front() == "Fast");
}

TEST_CASE("d-soft masses") {
    auto d = load_body<DSoftInstance>("dsoft_suppliers");
    CHECK(validate(d).passed());
    CHECK(dsoft_unassigned_mass(d, "Qual") == doctest::Approx(0.20).epsilon(1e-12));
    CHECK(dsoft_unassigned_mass(d, "Deliv") == doctest::Approx(0.35).epsilon(1e-12));
    CHECK_THROWS_AS(dsoft_unassigned_mass(d, "Price"), UnknownIdentifier);

    DSoftInstance full{d.universe, {}};
    full.masses["a"][d.universe.subset({"s1"})] = 0.6;
    full.masses["a"][d.universe.subset({"s2", "s3"})] = 0.4;
    CHECK(dsoft_unassigned_mass(full, "a") == 0.0);

    full.masses["b"][d.universe.subset({"s1"})] = 0.7;
    full.masses["b"][d.universe.subset({"s2"})] = 0.5;
    auto r = validate(full);
    REQUIRE(r.has("MASS_EXCEEDS_ONE"));
    CHECK(r.violations.front().witness.front() == "b");
}

TEST_CASE("random soft set membership probability") {
    auto r = load_body<RandomSoftInstance>("random_routes");
    CHECK(validate(r).passed());
    CHECK(random_membership_probability(r, "Fast", "r2") == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(random_membership_probability(r, "Fast", "r4") == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(random_membership_probability(r, "Cheap", "r4") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(random_membership_probability(r, "Safe", "r1") == 0.0);
    CHECK_THROWS_AS(random_membership_probability(r, "Slow", "r1"), UnknownIdentifier);
}

TEST_CASE("capacities") {
    auto c = load_body<CapacitarySoftInstance>("capacitary_controls");
    CHECK(validate(c).passed());
    const Universe& u = c.universe;
    CHECK(capacity_query(c, "High", u.subset({"c1", "c2"})) == doctest::Approx(0.85));
    CHECK(capacity_query(c, "High", {}) == 0.0);
    CHECK(capacity_query(c, "Low", {}) == 0.0);

    auto ws = nonadditivity_witnesses(c, "High");
    bool found = false;
    for (const auto& w : ws)
        if (w.s == u.subset({"c1"}) && w.t == u.subset({"c2"})) {
            found = true;
            CHECK(w.joint == doctest::Approx(0.85));
            CHECK(w.sum == doctest::Approx(0.80));
        }
    CHECK(found);
    for (const auto& w : ws) {
        CHECK(disjoint(w.s, w.t));
        CHECK(std::fabs(w.joint - w.sum) > kEpsilon);
    }

    auto partial = c;
    partial.capacities["High"].erase(u.subset({"c1", "c3"}));
    CHECK_THROWS_AS(capacity_query(partial, "High", u.subset({"c1", "c3"})), UnknownSubset);
    CHECK(validate(partial).has("TABLE_INCOMPLETE"));
}

// ---- ordered and structured payloads ----

TEST_CASE("poset soft preorder") {
    auto p = load_body<PosetSoftInstance>("poset_budget");
    CHECK(validate(p).passed());
    auto rel = posetsoft_preorder(p);
    CHECK(rel.count({"u5", "u1"}));
    CHECK_FALSE(rel.count({"u1", "u5"}));
    for (const auto& x : p.soft.universe.objects()) CHECK(rel.count({x, x}));

    auto broken = p;
    broken.soft.values["100"] = p.soft.universe.subset({"u1"});
    CHECK_FALSE(validate(broken).passed());
}

TEST_CASE("filtration stages") {
    auto f = load_body<FiltrationSoftInstance>("filtration_hiring");
    CHECK(validate(f).passed());
    CHECK(names_of(f.universe, filtration_stage(f, "SE", 1)) == ns({"u1", "u2", "u4"}));
    CHECK(names_of(f.universe, filtration_stage(f, "DS", 3)) == ns({"u2", "u4", "u5", "u7"}));
    CHECK(is_subset(filtration_stage(f, "SE", 0), filtration_stage(f, "SE", f.depth)));
    CHECK_THROWS_AS(filtration_stage(f, "SE", 4), StageOutOfRange);
}

TEST_CASE("cover neighborhoods") {
    auto c = load_body<CoverSoftInstance>("cover_delivery");
    CHECK(validate(c).passed());
    CHECK(cover_neighborhoods(c, "Time", "u4") == std::vector<std::string>{"D2", "D3"});
    CHECK(cover_neighborhoods(c, "Geo", "u1") == std::vector<std::string>{"C1"});
    CHECK_THROWS_AS(cover_neighborhoods(c, "Geo", "u9"), UnknownIdentifier);

    CoverSoftInstance whole{c.universe, {{"all", {{"U", c.universe.full()}}}}};
    for (const auto& x : c.universe.objects()) CHECK(cover_neighborhoods(whole, "all", x) == std::vector<std::string>{"U"});
}

TEST_CASE("weighted scores") {
    auto w = load_body<WeightedSoftInstance>("weighted_apartments");
    CHECK(validate(w).passed());
    CHECK(weighted_score(w, "h3") == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(weighted_score(w, "h1") == doctest::Approx(0.7).epsilon(1e-12));
    w.soft.values["Comm"].erase(w.soft.universe.index_of("h2"));
    w.soft.values["Safe"].erase(w.soft.universe.index_of("h2"));
    CHECK(weighted_score(w, "h2") == 0.0);
    CHECK_THROWS_AS(weighted_score(w, "h9"), UnknownIdentifier);
}

TEST_CASE("bijective partition") {
    Universe u(labels("u", 7));
    BijectiveSoftInstance b{make_soft(u, {{"HR", {"u1", "u6"}}, {"ENG", {"u2", "u3", "u7"}}, {"FIN", {"u4"}}, {"MKT", {"u5"}}})};
    CHECK(validate(b).passed());
    b.soft.values["FIN"].insert(u.index_of("u5"));
    CHECK(validate(b).has("OVERLAP"));
    b.soft.values["FIN"] = {};
    CHECK(validate(b).has("EMPTY_BLOCK"));
}

TEST_CASE("multipolar aggregation") {
    auto m = risk_screening();
    CHECK(validate(m).passed());
    CHECK(names_of(m.universe, multipolar_aggregate(m, "Sec", PoleMode::Consensus)) == ns({"p4"}));
    CHECK(names_of(m.universe, multipolar_aggregate(m, "Sec", PoleMode::Any)) == ns({"p2", "p3", "p4"}));

    Subset pole = m.universe.subset({"p1", "p3"});
    MultipolarSoftInstance same{m.universe, 3, {{"x", {pole, pole, pole}}}};
    CHECK(multipolar_aggregate(same, "x", PoleMode::Consensus) == pole);
    CHECK(multipolar_aggregate(same, "x", PoleMode::Any) == pole);
    CHECK_THROWS_AS(multipolar_aggregate(m, "Legal", PoleMode::Any), UnknownIdentifier);
}

TEST_CASE("dynamic slices") {
    auto d = load_body<DynamicSoftInstance>("dynamic_grocery");
    CHECK(validate(d).passed());
    CHECK(names_of(d.universe, value_of(dynamic_slice(d, "t2"), "Sale")) == ns({"p1", "p4"}));
    CHECK(names_of(d.universe, value_of(dynamic_slice(d, "t3"), "Out")) == ns({"p3", "p5"}));
    CHECK_THROWS_AS(dynamic_slice(d, "t9"), UnknownIndex);

    DynamicSoftInstance flat{d.universe, {{"a", dynamic_slice(d, "t1")}, {"b", dynamic_slice(d, "t1")}}};
    CHECK(validate(flat).passed());
    CHECK(dynamic_slice(flat, "a") == dynamic_slice(flat, "b"));
}

TEST_CASE("ranked partitions") {
    auto r = hotel_cleanliness();
    CHECK(validate(r).passed());
    CHECK(rank_of(r, "clean", "h1") == 3);
    CHECK(names_of(r.universe, ranked_lookup(r, "clean")[2]) == ns({"h3", "h5"}));

    RankedSoftInstance single{r.universe, {{"t", {r.universe.full()}}}};
    for (const auto& h : r.universe.objects()) CHECK(rank_of(single, "t", h) == 0);

    auto gap = r;
    gap.partitions["clean"][0] = {};
    CHECK_FALSE(validate(gap).passed());
    CHECK_THROWS_AS(rank_of(gap, "clean", "h4"), ObjectUncovered);
}

TEST_CASE("refined consensus") {
    auto r = applicant_screening();
    CHECK(validate(r).passed());
    CHECK(names_of(r.universe, refined_consensus(r, "α1", 2)) == ns({"u1", "u2", "u4"}));
    for (const auto& a : r.params) {
        Subset any, all = r.universe.full();
        for (const auto& [b, f] : r.evaluators) {
            any = unite(any, value_of(f, a));
            all = intersect(all, value_of(f, a));
        }
        CHECK(refined_consensus(r, a, 1) == any);
        CHECK(refined_consensus(r, a, 3) == all);
    }
    CHECK_THROWS_AS(refined_consensus(r, "α9", 1), UnknownIdentifier);
}

TEST_CASE("soft expert filtering and approval counts") {
    auto e = load_body<SoftExpertInstance>("softexpert_phones");
    CHECK(validate(e).passed());
    CHECK(names_of(e.universe, expert_filter(e, std::string("Cam"), std::string("x1"), 1)) == ns({"s1", "s3"}));
    CHECK(names_of(e.universe, expert_filter(e, std::nullopt, std::nullopt, 1)) == ns({"s1", "s2", "s3", "s4", "s5"}));
    CHECK(expert_approval_count(e, "s3") == 2);
    CHECK(expert_approval_count(e, "s4") == 1);

    SoftExpertInstance empty{e.universe, e.params, e.experts, {}};
    CHECK(expert_filter(empty, std::nullopt, std::nullopt, 1).empty());
    CHECK(expert_approval_count(empty, "s1") == 0);
}

TEST_CASE("n-ary projection") {
    Universe x(labels("x", 2)), y(labels("y", 2));
    NArySoftInstance n{{x, y}, {{"e", {x.subset({"x1"}), y.subset({"y2"})}}}};
    CHECK(validate(n).passed());
    CHECK(nary_project(n, 2) == make_soft(y, {{"e", {"y2"}}}));
    CHECK_THROWS_AS(nary_project(n, 3), IndexOutOfRange);
    CHECK_THROWS_AS(nary_project(n, 0), IndexOutOfRange);

    auto back = nary_assemble({nary_project(n, 1), nary_project(n, 2)});
    CHECK(back.components == n.components);
    CHECK(back.values == n.values);

    SoftSet s = make_soft(x, {{"a", {"x2"}}, {"b", {}}});
    NArySoftInstance one = nary_assemble({s});
    CHECK(nary_project(one, 1) == s);
}

// ---- frames and operation laws ----

TEST_CASE("intersectional law") {
    Universe u(labels("u", 4));
    IntersectionalSoftInstance i{make_soft(u, {{"a", {"u1", "u2"}}, {"b", {"u2", "u3"}}, {"c", {"u2"}}}), {}};
    i.operation[{"a", "b"}] = "c";
    CHECK(validate(i).passed());
    i.soft.values["c"] = {};
    auto r = validate(i);
    REQUIRE(r.has("INTERSECTION_LAW"));
    CHECK(r.violations.front().witness == std::vector<std::string>{"a", "b", "c", "u2"});
}

TEST_CASE("double framed laws") {
    Universe u(labels("u", 4));
    DoubleFramedSoftInstance d{u, {"a", "b", "c"}, {}, {}, {}};
    d.operation[{"a", "b"}] = "c";
    d.alpha = {{"a", u.subset({"u1", "u2"})}, {"b", u.subset({"u2"})}, {"c", u.subset({"u2", "u4"})}};
    d.beta = {{"a", u.subset({"u3"})}, {"b", u.subset({"u4"})}, {"c", u.subset({"u3"})}};
    CHECK(validate(d).passed());
    d.beta["c"] = u.subset({"u1"});
    CHECK(validate(d).has("NEGATIVE_FRAME"));
    d.beta["c"] = {};
    d.alpha["c"] = {};
    CHECK(validate(d).has("POSITIVE_FRAME"));
}

TEST_CASE("contradiction and hesitancy tables") {
    Universe u(labels("u", 2));
    SoftSet s = make_soft(u, {{"a", {"u1"}}, {"b", {"u2"}}});
    ContraSoftInstance c{s, {{unordered("b", "a"), 0.4}}};
    CHECK(validate(c).passed());
    CHECK(contra_degree(c, "a", "b") == 0.4);
    CHECK(contra_degree(c, "b", "a") == 0.4);
    CHECK(contra_degree(c, "a", "a") == 0.0);
    c.contradiction[unordered("a", "a")] = 0.1;
    CHECK(validate(c).has("SELF_CONTRADICTION"));

    HesiSoftInstance h{s, {{unordered("a", "b"), {0.1, 0.3}}}};
    CHECK(validate(h).passed());
    CHECK(hesitancy_of(h, "b", "a") == std::vector<double>{0.1, 0.3});
    CHECK(hesitancy_of(h, "a", "a") == std::vector<double>{0.0});
}

// ---- random instances re-checked by brute force ----

TEST_CASE("capacity validation agrees with an all-pairs monotonicity scan") {
    Rng rng(201);
    int accepted = 0;
    for (int i = 0; i < 200; ++i) {
        Universe u(labels("c", pick(rng, 1, 5)));
        std::size_t n = u.size(), full = (std::size_t{1} << n) - 1;
        // cardinality-based capacity, optionally perturbed
        std::map<Subset, double> table;
        for (std::size_t m = 0; m <= full; ++m) {
            double v = static_cast<double>(std::popcount(m)) / static_cast<double>(n);
            if (m != 0 && m != full && coin(rng, 0.15)) v = uniform(rng, 0.0, 1.0);
            table[u.from_mask(m)] = v;
        }
        CapacitarySoftInstance c{u, {{"a", table}}};
        bool want = true;
        for (std::size_t s = 0; s <= full; ++s)
            for (std::size_t t = 0; t <= full; ++t)
                if ((s & t) == s && table[u.from_mask(s)] > table[u.from_mask(t)] + kEpsilon) want = false;
        CHECK(validate(c).passed() == want);
        accepted += want;
    }
    CHECK(accepted > 20);
    CHECK(accepted < 180);
}

TEST_CASE("bijective validation agrees with a partition check") {
    Rng rng(202);
    for (int i = 0; i < 200; ++i) {
        Universe u(labels("u", pick(rng, 1, 6)));
        BijectiveSoftInstance b{SoftSet{u, {}}};
        std::size_t k = pick(rng, 1, 4);
        for (std::size_t a = 0; a < k; ++a) b.soft.values["e" + std::to_string(a)] = {};
        // assign each object to one block, then perhaps disturb the partition
        for (std::size_t x = 0; x < u.size(); ++x) b.soft.values["e" + std::to_string(pick(rng, 0, k - 1))].insert(x);
        if (coin(rng, 0.3)) b.soft.values["e0"].insert(pick(rng, 0, u.size() - 1));
        if (coin(rng, 0.2)) b.soft.values["e0"].clear();

        std::vector<int> hits(u.size(), 0);
        bool nonempty = true;
        for (const auto& [a, v] : b.soft.values) {
            nonempty = nonempty && !v.empty();
            for (auto x : v) ++hits[x];
        }
        bool want = nonempty && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
        CHECK(validate(b).passed() == want);
    }
}

TEST_CASE("operation law validation agrees with a table scan") {
    Rng rng(203);
    for (int i = 0; i < 200; ++i) {
        Universe u(labels("u", pick(rng, 1, 5)));
        auto ps = labels("a", pick(rng, 1, 4));
        SoftSet f = random_soft(rng, u, ps, 0.6);
        IntersectionalSoftInstance inst{f, {}};
        DoubleFramedSoftInstance df{u, ps, {}, {}, {}};
        SoftSet beta = random_soft(rng, u, ps, 0.3);
        for (const auto& a : ps) {
            df.alpha[a] = value_of(f, a);
            df.beta[a] = value_of(beta, a);
        }
        for (const auto& x : ps)
            for (const auto& y : ps)
                if (coin(rng, 0.3)) {
                    std::string z = ps[pick(rng, 0, ps.size() - 1)];
                    inst.operation[{x, y}] = z;
                    df.operation[{x, y}] = z;
                }
        bool law = true, pos = true, neg = true;
        for (const auto& [xy, z] : inst.operation)
            for (std::size_t o = 0; o < u.size(); ++o) {
                bool in_x = f.values[xy.first].count(o), in_y = f.values[xy.second].count(o), in_z = f.values[z].count(o);
                if (in_x && in_y && !in_z) law = pos = false;
                bool bz = beta.values[z].count(o), bx = beta.values[xy.first].count(o), by = beta.values[xy.second].count(o);
                if (bz && !bx && !by) neg = false;
            }
        CHECK(validate(inst).passed() == law);
        CHECK(validate(df).passed() == (pos && neg));
    }
}

TEST_CASE("d-soft unassigned mass complements the assigned mass") {
    Rng rng(204);
    for (int i = 0; i < 200; ++i) {
        Universe u(labels("s", pick(rng, 1, 5)));
        DSoftInstance d{u, {}};
        double left = 1.0;
        std::size_t focal = pick(rng, 1, 4);
        for (std::size_t k = 0; k < focal; ++k) {
            Subset s = random_subset(rng, u.size());
            if (s.empty()) s.insert(0);
            double m = uniform(rng, 0.0, left);
            d.masses["e"][s] += m;
            left -= m;
        }
        REQUIRE(validate(d).passed());
        double assigned = 0.0;
        for (const auto& [s, m] : d.masses["e"]) assigned += m;
        double rest = dsoft_unassigned_mass(d, "e");
        CHECK(rest >= 0.0);
        CHECK(rest <= 1.0);
        CHECK(std::fabs(rest + assigned - 1.0) <= 1e-9);
    }
}

TEST_CASE("random membership probability matches an outcome scan") {
    Rng rng(205);
    for (int i = 0; i < 200; ++i) {
        Universe u(labels("r", pick(rng, 1, 5)));
        auto ps = labels("a", pick(rng, 1, 3));
        RandomSoftInstance r{u, ps, {}};
        std::size_t k = pick(rng, 1, 4);
        std::vector<double> w(k);
        double total = 0.0;
        for (auto& x : w) total += (x = uniform(rng, 0.1, 1.0));
        for (std::size_t j = 0; j < k; ++j) r.outcomes.push_back({"w" + std::to_string(j + 1), w[j] / total, random_soft(rng, u, ps)});
        if (std::fabs(std::accumulate(r.outcomes.begin(), r.outcomes.end(), 0.0,
                                      [](double s, const RandomOutcome& o) { return s + o.probability; }) - 1.0) > kEpsilon)
            continue;
        REQUIRE(validate(r).passed());
        for (const auto& a : ps)
            for (std::size_t x = 0; x < u.size(); ++x) {
                double want = 0.0;
                for (const auto& o : r.outcomes)
                    if (o.slice.values.at(a).count(x)) want += o.probability;
                double got = random_membership_probability(r, a, u.name(x));
                CHECK(std::fabs(got - want) <= 1e-12);
                CHECK(got >= 0.0);
                CHECK(got <= 1.0 + 1e-12);
            }
    }
}
