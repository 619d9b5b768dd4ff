#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twistroot/enumerate.hpp"

using namespace twistroot;

TEST_CASE("genus 0 degree 3: exactly the sphere rotation") {
    EnumQuery q{0, 3, 0, {}};
    auto got = enumerate_datasets(q);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == make_dataset(3, 0, {}, {{1, 3}, {2, 3}}));
}

TEST_CASE("genus 1 degree 2: free involution and elliptic involution") {
    EnumQuery q{1, 2, 0, {}};
    auto got = enumerate_datasets(q);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == make_dataset(2, 0, {}, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
    CHECK(got[1] == make_dataset(2, 1, {}, {}));
}

TEST_CASE("genus 2 degree 11 is empty") {
    CHECK(enumerate_datasets({2, 11, 0, {}}).empty());
}

TEST_CASE("every emitted data set validates and has the right invariants") {
    for (i64 g = 0; g <= 2; ++g)
        for (i64 n = 1; n <= 10; ++n)
            for (i64 r = 0; r <= 2; ++r)
                for (const auto& d : enumerate_datasets({g, n, r, {}})) {
                    CHECK(check_dataset(d.n, d.g0, d.residues, d.cones).empty());
                    CHECK(genus(d) == g);
                    CHECK(d.n == n);
                    CHECK(d.r() == r);
                    CHECK(canonicalize(d) == d);
                }
}

TEST_CASE("output is strictly sorted with no duplicates") {
    for (i64 g = 0; g <= 2; ++g)
        for (i64 n = 1; n <= 12; ++n) {
            auto v = enumerate_datasets({g, n, 0, {}});
            for (size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] < v[i]);
        }
}

TEST_CASE("oracle equivalence on the guarded range") {
    for (i64 g = 0; g <= 2; ++g)
        for (i64 n = 1; n <= 12; ++n)
            for (i64 r = 0; r <= 3; ++r) {
                EnumQuery q{g, n, r, {}};
                auto fast = enumerate_datasets(q);
                auto slow = naive_enumerate(q);
                CHECK(fast == slow);
            }
}

TEST_CASE("naive enumerator rejects out-of-range queries") {
    CHECK_THROWS_AS(naive_enumerate({3, 4, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(naive_enumerate({1, 13, 0, {}}), std::invalid_argument);
}

TEST_CASE("Wiman bound emerges") {
    // Degree 4g+2 realizable, nothing in (4g+2, 8g].
    for (i64 g = 2; g <= 3; ++g) {
        CHECK_FALSE(enumerate_datasets({g, 4 * g + 2, 0, {}}).empty());
        for (i64 n = 4 * g + 3; n <= 8 * g; ++n)
            CHECK(enumerate_datasets({g, n, 0, {}}).empty());
    }
}

TEST_CASE("free actions exist in every degree for genus 1") {
    for (i64 n = 1; n <= 30; ++n) {
        auto v = enumerate_datasets({1, n, 0, {}});
        bool has_free = false;
        for (const auto& d : v) has_free |= (d == make_dataset(n, 1, {}, {}));
        CHECK(has_free);
    }
}

TEST_CASE("permuting enumeration realizes required orbit sizes") {
    // Genus 0, degree 3, two full orbits.
    EnumQuery q{0, 3, 0, {3, 3}};
    auto got = enumerate_permuting(q);
    REQUIRE(got.size() == 1);
    CHECK(got[0].dataset == make_dataset(3, 0, {}, {{1, 3}, {2, 3}}));
    CHECK(got[0].orbits.multiplicity(free_class()) == 2);

    // Genus 1, degree 6, one orbit of size 2.
    EnumQuery q2{1, 6, 0, {2}};
    auto got2 = enumerate_permuting(q2);
    bool found = false;
    for (const auto& pd : got2) {
        if (pd.dataset == make_dataset(6, 0, {}, {{1, 6}, {1, 2}, {1, 3}}) &&
            pd.orbits.multiplicity({1, 3}) == 1)
            found = true;
        CHECK(orbit_distribution_valid(pd.dataset, pd.orbits));
        CHECK(pd.orbits.total() == 1);
    }
    CHECK(found);
}

TEST_CASE("permuting enumeration rejects non-dividing sizes") {
    CHECK_THROWS_AS(enumerate_permuting({1, 6, 0, {4}}), std::invalid_argument);
}

TEST_CASE("permuting enumeration: two full orbits on the torus") {
    EnumQuery q{1, 2, 0, {2, 2}};
    auto got = enumerate_permuting(q);
    bool has_free_pair = false;
    for (const auto& pd : got)
        has_free_pair |= (pd.dataset == make_dataset(2, 1, {}, {}) &&
                          pd.orbits.multiplicity(free_class()) == 2);
    CHECK(has_free_pair);
}

TEST_CASE("cone-class multiplicities are capped by the cone count") {
    // (6,0;(1,6),(1,2),(1,3)) has a single (1,3) cone, so a second size-2
    // distinguished orbit has no class to live in.
    DataSet d = make_dataset(6, 0, {}, {{1, 6}, {1, 2}, {1, 3}});
    CHECK(orbit_distributions(d, {2}).size() == 1);
    CHECK(orbit_distributions(d, {2, 2}).empty());
}
