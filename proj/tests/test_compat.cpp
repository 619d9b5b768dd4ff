#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twistroot/compat.hpp"
#include "twistroot/enumerate.hpp"

using namespace twistroot;

namespace {

Side side_of(DataSet d, i64 copies = 1) {
    Side s;
    s.pd.dataset = std::move(d);
    s.copies = copies;
    return s;
}

ClassRef cone_ref(const DataSet& d, const ConeClass& c) {
    for (i64 i = 0; i < d.s(); ++i)
        if (d.cones[i] == c) return {ClassKind::Cone, i};
    throw std::logic_error("cone not in data set");
}

ClassRef res_ref(const DataSet& d, i64 value) {
    for (i64 i = 0; i < d.r(); ++i)
        if (d.residues[i] == value) return {ClassKind::Residue, i};
    throw std::logic_error("residue not in data set");
}

constexpr ClassRef kFree{ClassKind::Free, -1};

}  // namespace

TEST_CASE("union_order") {
    CHECK(union_order(1, 7) == 7);
    CHECK(union_order(2, 6) == 6);
    CHECK(union_order(3, 1) == 3);
    CHECK(union_order(4, 6) == 12);
    CHECK_THROWS_AS(union_order(0, 3), std::invalid_argument);
}

TEST_CASE("rot_power") {
    DataSet d4 = make_dataset(4, 0, {}, {{1, 4}, {1, 2}, {1, 4}});
    // Free class: any multiple of the degree rotates trivially.
    CHECK(rot_power(d4, kFree, 4) == TurnAngle::zero());
    CHECK(rot_power(d4, kFree, 8) == TurnAngle::zero());
    // (1,2) in degree 4: orbit size 2, stabilizer rotation 1/2.
    CHECK(rot_power(d4, cone_ref(d4, {1, 2}), 2) == TurnAngle(1, 2));
    CHECK_THROWS_AS(rot_power(d4, kFree, 2), std::invalid_argument);

    DataSet d6 = make_dataset(6, 0, {5}, {{1, 2}, {2, 3}});
    CHECK(rot_power(d6, res_ref(d6, 5), 2) == TurnAngle(2, 3));
}

TEST_CASE("class_compatible: preserved curves across different degrees") {
    // Degree-12 chain rows: residues 3 mod 4 and 1 mod 3 satisfy the 1/12 sum.
    DataSet a = make_dataset(4, 0, {3}, {{1, 2}, {3, 4}});
    DataSet b = make_dataset(3, 0, {1, 1}, {{1, 3}});
    CHECK(class_compatible(side_of(a), res_ref(a, 3), side_of(b), res_ref(b, 1), 1, 12));
    // Same residues at degree 6 fail.
    CHECK_FALSE(class_compatible(side_of(a), res_ref(a, 3), side_of(b), res_ref(b, 1), 1, 6));
}

TEST_CASE("class_compatible reduces to a + a' = a a' (mod n) at S = 1, equal degrees") {
    for (i64 n = 1; n <= 30; ++n) {
        for (i64 a = 0; a < n; ++a) {
            if (gcd_i64(a, n) != 1 && n > 1) continue;
            for (i64 a2 = 0; a2 < n; ++a2) {
                if (gcd_i64(a2, n) != 1 && n > 1) continue;
                // Angle form against the congruence form.
                bool angles = fixed_angle(a, n) + fixed_angle(a2, n) == TurnAngle(1, n);
                bool congruence = mod_reduce(a + a2, n) == mod_reduce(a * a2, n);
                CHECK(angles == congruence);
            }
        }
    }
}

TEST_CASE("class_compatible: golden separating rows") {
    // C^(2) (0,1) degree-6 row: free class against the (1,3) class at S = 2.
    DataSet inv = make_dataset(2, 0, {}, {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    DataSet hex = make_dataset(6, 0, {}, {{1, 6}, {1, 2}, {1, 3}});
    CHECK(class_compatible(side_of(inv), kFree, side_of(hex), cone_ref(hex, {1, 3}), 2, 6));
    // The literal Def-5.1 sum is 1/3, not 1/6: strict mode rejects the row.
    CHECK_FALSE(class_compatible(side_of(inv), kFree, side_of(hex), cone_ref(hex, {1, 3}), 2, 6,
                                 CompatMode::Strict));
}

TEST_CASE("class_compatible: satellite scaling from the degree-12 golden row") {
    // Central (4,0;(1,4),(1,2),(1,4)) glued to two copies of
    // (6,0;(5,6),(1,2),(2,3)) along an orbit of two curves.
    DataSet center = make_dataset(4, 0, {}, {{1, 4}, {1, 2}, {1, 4}});
    DataSet copy = make_dataset(6, 0, {}, {{5, 6}, {1, 2}, {2, 3}});
    CHECK(class_compatible(side_of(center), cone_ref(center, {1, 2}),
                           side_of(copy, 2), cone_ref(copy, {5, 6}), 2, 12));
    // Per-copy residue 1 instead of 5 fails: 1/2 + 2*(1/6) = 5/6 != 1/6.
    DataSet wrong = make_dataset(6, 0, {}, {{1, 6}, {1, 2}, {1, 3}});
    CHECK_FALSE(class_compatible(side_of(center), cone_ref(center, {1, 2}),
                                 side_of(wrong, 2), cone_ref(wrong, {1, 6}), 2, 12));
}

TEST_CASE("class_compatible: free orbit against identity satellites") {
    DataSet free_inv = make_dataset(2, 1, {}, {});
    DataSet id = make_dataset(1, 1, {}, {});
    CHECK(class_compatible(side_of(free_inv), kFree, side_of(id, 2), kFree, 2, 2));
}

TEST_CASE("class_compatible preconditions") {
    DataSet inv = make_dataset(2, 1, {}, {});
    DataSet id = make_dataset(1, 1, {}, {});
    // S does not divide n.
    CHECK_THROWS_AS(class_compatible(side_of(inv), kFree, side_of(id, 2), kFree, 2, 3),
                    std::invalid_argument);
    // Class does not assemble to S.
    CHECK_THROWS_AS(class_compatible(side_of(inv), kFree, side_of(id, 2), kFree, 4, 4),
                    std::invalid_argument);
}

TEST_CASE("class_compatible is symmetric") {
    DataSet center = make_dataset(4, 0, {}, {{1, 4}, {1, 2}, {1, 4}});
    DataSet copy = make_dataset(6, 0, {}, {{5, 6}, {1, 2}, {2, 3}});
    for (auto mode : {CompatMode::Default, CompatMode::Strict}) {
        CHECK(class_compatible(side_of(center), cone_ref(center, {1, 2}), side_of(copy, 2),
                               cone_ref(copy, {5, 6}), 2, 12, mode) ==
              class_compatible(side_of(copy, 2), cone_ref(copy, {5, 6}), side_of(center),
                               cone_ref(center, {1, 2}), 2, 12, mode));
    }
}

TEST_CASE("strict mode success implies default success") {
    // Property over small same-degree fixed-point pairs and orbit pairs.
    for (i64 n = 2; n <= 12; ++n) {
        auto sets = enumerate_datasets({1, n, 0, {}});
        for (const auto& d1 : sets)
            for (const auto& d2 : sets)
                for (i64 i = 0; i < d1.s(); ++i)
                    for (i64 j = 0; j < d2.s(); ++j) {
                        ClassRef c1{ClassKind::Cone, i}, c2{ClassKind::Cone, j};
                        i64 s1 = class_size(d1, c1);
                        if (s1 != class_size(d2, c2)) continue;
                        i64 S = s1;
                        if (n % S != 0) continue;
                        bool strict = class_compatible(side_of(d1), c1, side_of(d2), c2, S, n,
                                                       CompatMode::Strict);
                        bool dflt = class_compatible(side_of(d1), c1, side_of(d2), c2, S, n,
                                                     CompatMode::Default);
                        if (strict) CHECK(dflt);
                    }
    }
}

TEST_CASE("nonseparating_check: free orbit pairs") {
    PermutingDataSet pd;
    pd.dataset = make_dataset(3, 0, {}, {{1, 3}, {2, 3}});
    pd.orbits.add(free_class(), 2);
    auto w = nonseparating_check(pd, 0, {3});
    REQUIRE(w.has_value());
    CHECK(w->pairs.size() == 1);
    CHECK(w->pairs[0].size == 3);
}

TEST_CASE("nonseparating_check: residue pairs") {
    PermutingDataSet good;
    good.dataset = make_dataset(3, 0, {2, 2}, {{2, 3}});
    CHECK(nonseparating_check(good, 1, {}).has_value());

    PermutingDataSet bad;
    bad.dataset = make_dataset(3, 0, {1, 1}, {{1, 3}});  // 1+1=2, 1*1=1 mod 3
    CHECK_FALSE(nonseparating_check(bad, 1, {}).has_value());
}

TEST_CASE("nonseparating_check arity errors") {
    PermutingDataSet pd;
    pd.dataset = make_dataset(3, 0, {2, 2}, {{2, 3}});
    CHECK_THROWS_AS(nonseparating_check(pd, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(nonseparating_check(pd, 1, {3}), std::invalid_argument);
}

TEST_CASE("pair_compatible: golden pairs") {
    // Chain row at degree 3: ends (3,0,2;(2,3),(2,3)) with middle (3,0,(2,2);(2,3)).
    Side end = side_of(make_dataset(3, 0, {2}, {{2, 3}, {2, 3}}));
    Side mid = side_of(make_dataset(3, 0, {2, 2}, {{2, 3}}));
    CHECK(pair_compatible(end, mid, {1}).has_value());

    // (2,1;) with two identity copies along one orbit of two curves.
    Side center = side_of(make_dataset(2, 1, {}, {}));
    Side sat = side_of(make_dataset(1, 1, {}, {}), 2);
    CHECK(pair_compatible(center, sat, {2}).has_value());

    // Degree-1 root: identity against identity along a preserved curve.
    Side id1 = side_of(make_dataset(1, 1, {0}, {}));
    CHECK(pair_compatible(id1, id1, {1}).has_value());
}

TEST_CASE("pair_compatible respects the consumption ledger") {
    // The middle set has two residues; pairing three preserved curves is
    // impossible even though each individual pair works.
    Side mid = side_of(make_dataset(3, 0, {2, 2}, {{2, 3}}));
    Side big = side_of(make_dataset(3, 0, {2, 2, 2}, {}));
    CHECK(pair_compatible(mid, big, {1, 1}).has_value());
    CHECK_FALSE(pair_compatible(mid, big, {1, 1, 1}).has_value());
}

TEST_CASE("witness consumption is disjoint") {
    Side mid = side_of(make_dataset(3, 0, {2, 2}, {{2, 3}}));
    auto w = pair_compatible(mid, mid, {1, 1});
    REQUIRE(w.has_value());
    // Each side uses each residue index exactly once.
    std::set<std::pair<std::string, i64>> used;
    for (const auto& p : w->pairs) {
        CHECK(used.emplace(p.side1.str(), p.class1.index).second);
        CHECK(used.emplace(p.side2.str(), p.class2.index).second);
    }
}

TEST_CASE("power consistency: compatible pairs stay compatible after taking powers") {
    // For m = 1 pairs with class size S at degree n, the S-th power data sets
    // carry image classes compatible at S = 1, degree n/S.
    DataSet inv = make_dataset(2, 0, {}, {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    DataSet hex = make_dataset(6, 0, {}, {{1, 6}, {1, 2}, {1, 3}});
    i64 S = 2, n = 6;
    REQUIRE(class_compatible(side_of(inv), kFree, side_of(hex), cone_ref(hex, {1, 3}), S, n));

    DataSet pinv = power(inv, S);   // (1,1;)
    DataSet phex = power(hex, S);   // (3,0;(1,3),(1,3),(1,3))
    ConeClass img = power_class_image(hex, S, {1, 3});
    CHECK(class_compatible(side_of(pinv), kFree, side_of(phex), cone_ref(phex, img), 1, n / S));
}

TEST_CASE("genus formulas") {
    CHECK(pair_genus(1, 1, 2, 0) == 3);
    CHECK(satellite_genus(1, 2, 1, 1) == 3);
    CHECK(satellite_genus(0, 3, 1, 1) == 3);
}

TEST_CASE("tuple_compatible") {
    Side center = side_of(make_dataset(3, 0, {}, {{1, 3}, {2, 3}}));
    SatelliteGluing sat{side_of(make_dataset(1, 1, {}, {}), 3), {3}};
    CHECK(tuple_compatible(center, {sat}).has_value());

    // Two satellites demanding the single free-orbit class both succeed (the
    // free class is unlimited), but two demanding the same cone point fail.
    Side hex_center = side_of(make_dataset(6, 0, {}, {{1, 6}, {1, 2}, {1, 3}}));
    SatelliteGluing strand2{side_of(make_dataset(1, 1, {}, {}), 2), {2}};
    // (1,3) is the only orbit-size-2 class of the hexagonal set; a second
    // satellite wanting size 2 exhausts the ledger.
    CHECK(tuple_compatible(hex_center, {strand2}).has_value());
    CHECK_FALSE(tuple_compatible(hex_center, {strand2, strand2}).has_value());

    // Empty satellite list: trivial witness.
    auto w = tuple_compatible(center, {});
    REQUIRE(w.has_value());
    CHECK(w->pairs.empty());
}

TEST_CASE("multituple_compatible") {
    Side end = side_of(make_dataset(3, 0, {2}, {{2, 3}, {2, 3}}));
    Side mid_good = side_of(make_dataset(3, 0, {2, 2}, {{2, 3}}));
    Side mid_bad = side_of(make_dataset(3, 0, {1, 1}, {{1, 3}}));
    CHECK(multituple_compatible({{end, {}}, {mid_good, {}}, {end, {}}}, {{1}, {1}}).has_value());
    CHECK_FALSE(multituple_compatible({{end, {}}, {mid_bad, {}}, {end, {}}}, {{1}, {1}}).has_value());

    // Single node with no edges reduces to tuple_compatible.
    Side center = side_of(make_dataset(3, 0, {}, {{1, 3}, {2, 3}}));
    SatelliteGluing sat{side_of(make_dataset(1, 1, {}, {}), 3), {3}};
    CHECK(multituple_compatible({{center, {sat}}}, {}).has_value() ==
          tuple_compatible(center, {sat}).has_value());

    CHECK_THROWS_AS(multituple_compatible({}, {}), std::invalid_argument);
}

TEST_CASE("permuting equivalence includes the distribution") {
    PermutingDataSet a{make_dataset(3, 0, {}, {{1, 3}, {2, 3}}), {}};
    PermutingDataSet b = a;
    CHECK(equivalent(a, b));
    b.orbits.add(free_class(), 1);
    CHECK_FALSE(equivalent(a, b));
}
