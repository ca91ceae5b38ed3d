#include <random>

#include "catch_amalgamated.hpp"

#include "dwc/cohomology.hpp"
#include "dwc/group.hpp"

using namespace dwc;

static std::vector<int> full_dom(const FiniteGroup& G) {
    std::vector<int> d(G.order);
    for (int i = 0; i < G.order; ++i) d[i] = i;
    return d;
}

static std::vector<i64> factors(const FiniteGroup& G, int deg, i64 M) {
    return CohomologyGroup(G, full_dom(G), deg, M).invariant_factors;
}

TEST_CASE("invariant factors: cyclic groups") {
    FiniteGroup Z2 = cyclic_group(2);
    CHECK(factors(Z2, 1, 2) == std::vector<i64>{2});
    CHECK(factors(Z2, 2, 2) == std::vector<i64>{});
    CHECK(factors(Z2, 3, 2) == std::vector<i64>{2});
    CHECK(factors(Z2, 4, 2) == std::vector<i64>{});

    FiniteGroup Z4 = cyclic_group(4);
    CHECK(factors(Z4, 1, 4) == std::vector<i64>{4});
    CHECK(factors(Z4, 2, 4) == std::vector<i64>{});
    CHECK(factors(Z4, 3, 4) == std::vector<i64>{4});
}

TEST_CASE("invariant factors: klein four-group") {
    FiniteGroup V4 = product_group(cyclic_group(2), cyclic_group(2));
    CHECK(factors(V4, 1, 4) == std::vector<i64>{2, 2});
    CHECK(factors(V4, 2, 4) == std::vector<i64>{2});
    CHECK(factors(V4, 3, 4) == std::vector<i64>{2, 2, 2});
    CHECK(factors(V4, 4, 4) == std::vector<i64>{2, 2});
}

TEST_CASE("invariant factors: nonabelian groups") {
    FiniteGroup S3 = symmetric_group(3);
    CHECK(factors(S3, 1, 6) == std::vector<i64>{2});
    CHECK(factors(S3, 2, 6) == std::vector<i64>{});
    CHECK(factors(S3, 3, 6) == std::vector<i64>{6});

    FiniteGroup Q8 = quaternion_group();
    CHECK(factors(Q8, 1, 8) == std::vector<i64>{2, 2});
    CHECK(factors(Q8, 2, 8) == std::vector<i64>{});
}

TEST_CASE("degree-1 size matches the abelianization") {
    for (const FiniteGroup& G : {cyclic_group(6), product_group(cyclic_group(2), cyclic_group(4)),
                                 symmetric_group(3), dihedral_group(4), quaternion_group(),
                                 symmetric_group(4)}) {
        CohomologyGroup h1(G, full_dom(G), 1, G.order);
        long long n = 1;
        for (i64 f : h1.invariant_factors) n *= f;
        CHECK(n == G.order / static_cast<long long>(commutator_subgroup(G).size()));
    }
}

TEST_CASE("factors do not depend on the modulus") {
    FiniteGroup V4 = product_group(cyclic_group(2), cyclic_group(2));
    for (int deg = 1; deg <= 4; ++deg) {
        auto a = factors(V4, deg, 4);
        CHECK(factors(V4, deg, 8) == a);
        CHECK(factors(V4, deg, 12) == a);
    }
    FiniteGroup S3 = symmetric_group(3);
    CHECK(factors(S3, 3, 12) == std::vector<i64>{6});
}

TEST_CASE("coordinates are additive and basis elements have unit coordinates") {
    std::mt19937_64 rng(41);
    FiniteGroup V4 = product_group(cyclic_group(2), cyclic_group(2));
    CohomologyGroup h3(V4, full_dom(V4), 3, 4);
    REQUIRE(h3.basis.size() == 3);
    for (size_t i = 0; i < h3.basis.size(); ++i) {
        REQUIRE(is_cocycle(h3.basis[i]));
        std::vector<i64> e(h3.basis.size(), 0);
        e[i] = 1;
        CHECK(h3.class_coords(h3.basis[i]) == e);
    }
    for (int t = 0; t < 5; ++t) {
        Cochain a = add(h3.basis[t % 3], coboundary(random_cochain(V4, full_dom(V4), 2, 4, rng, false)));
        Cochain b = add(h3.basis[(t + 1) % 3], coboundary(random_cochain(V4, full_dom(V4), 2, 4, rng, false)));
        std::vector<i64> ca = h3.class_coords(a), cb = h3.class_coords(b), cs = h3.class_coords(add(a, b));
        for (size_t i = 0; i < ca.size(); ++i)
            CHECK(cs[i] == mod_norm(ca[i] + cb[i], h3.invariant_factors[i]));
    }
}

TEST_CASE("coboundaries have zero coordinates and are detected") {
    std::mt19937_64 rng(43);
    FiniteGroup S3 = symmetric_group(3);
    CohomologyGroup h3(S3, full_dom(S3), 3, 6);
    for (int t = 0; t < 3; ++t) {
        Cochain z = coboundary(random_cochain(S3, full_dom(S3), 2, 6, rng, false));
        CHECK(h3.class_coords(z) == std::vector<i64>{0});
        CHECK(h3.is_coboundary(z));
    }
    CHECK_FALSE(h3.is_coboundary(h3.basis[0]));
    // non-cocycles are rejected by class_coords
    Cochain bad = random_cochain(S3, full_dom(S3), 3, 6, rng, false);
    if (is_cocycle(bad)) bad.values[7] = mod_norm(bad.values[7] + 1, 6);
    CHECK_THROWS_AS(h3.class_coords(bad), error);
}

TEST_CASE("rep_from_coords round trips") {
    FiniteGroup V4 = product_group(cyclic_group(2), cyclic_group(2));
    CohomologyGroup h4(V4, full_dom(V4), 4, 4);
    REQUIRE(h4.invariant_factors == std::vector<i64>{2, 2});
    for (i64 a = 0; a < 2; ++a)
        for (i64 b = 0; b < 2; ++b) {
            Cochain z = h4.rep_from_coords({a, b});
            REQUIRE(is_cocycle(z));
            CHECK(h4.class_coords(z) == std::vector<i64>{a, b});
        }
}

TEST_CASE("class enumeration") {
    FiniteGroup V4 = product_group(cyclic_group(2), cyclic_group(2));
    CohomologyGroup h3(V4, full_dom(V4), 3, 4);
    std::vector<Cochain> reps3 = enumerate_classes(h3);
    CHECK(reps3.size() == 8);
    CohomologyGroup h4(V4, full_dom(V4), 4, 4);
    std::vector<Cochain> reps4 = enumerate_classes(h4);
    REQUIRE(reps4.size() == 4);
    // first entry is the zero class; all reps normalized cocycles with distinct coords
    std::vector<std::vector<i64>> seen;
    for (size_t i = 0; i < reps4.size(); ++i) {
        REQUIRE(is_cocycle(reps4[i]));
        CHECK(is_normalized(reps4[i]));
        std::vector<i64> c = h4.class_coords(reps4[i]);
        if (i == 0) CHECK(c == std::vector<i64>{0, 0});
        for (auto& s : seen) CHECK(s != c);
        seen.push_back(c);
    }
}

TEST_CASE("size budget is enforced") {
    FiniteGroup Z16 = cyclic_group(16);
    bool threw = false;
    try {
        CohomologyGroup(Z16, full_dom(Z16), 4, 16);
    } catch (const error& e) {
        threw = e.kind == error::Kind::SizeBudgetExceeded;
    }
    CHECK(threw);
    // tightening the budget at runtime affects previously feasible computations
    long long saved = cohomology_size_budget();
    cohomology_size_budget() = 10;
    CHECK_THROWS_AS(CohomologyGroup(cyclic_group(4), {0, 1, 2, 3}, 2, 4), error);
    cohomology_size_budget() = saved;
    CHECK_NOTHROW(CohomologyGroup(cyclic_group(4), {0, 1, 2, 3}, 2, 4));
}

TEST_CASE("subgroup domains work") {
    FiniteGroup S3 = symmetric_group(3);
    ConjClassTable ct = conjugacy_classes(S3);
    int transposition = -1;
    for (size_t ci = 0; ci < ct.classes.size(); ++ci)
        if (ct.classes[ci].size() == 3) transposition = ct.rep[ci];
    std::vector<int> H = generated_subgroup(S3, {transposition});
    CohomologyGroup h2(S3, H, 2, 2);
    CHECK(h2.invariant_factors == std::vector<i64>{});
    CohomologyGroup h3(S3, H, 3, 2);
    CHECK(h3.invariant_factors == std::vector<i64>{2});
}
