// Randomized property tests over the exact arithmetic, the power map and the
// compatibility predicate.  Deterministic: a fixed-seed xorshift generator.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "twistroot/compat.hpp"
#include "twistroot/enumerate.hpp"

using namespace twistroot;

namespace {

struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    i64 below(i64 n) { return static_cast<i64>(next() % static_cast<std::uint64_t>(n)); }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(static_cast<i64>(v.size()))];
    }
};

// Random valid data set: degree up to 36, genus derived afterwards.
DataSet random_dataset(Rng& rng) {
    for (;;) {
        i64 n = 1 + rng.below(36);
        i64 g0 = rng.below(3);
        std::vector<i64> res;
        i64 r = rng.below(4);
        std::vector<i64> units;
        for (i64 a = (n == 1 ? 0 : 1); a < std::max<i64>(n, 1); ++a)
            if (gcd_i64(mod_reduce(a, n), n) == 1) units.push_back(mod_reduce(a, n));
        if (n == 1) units.push_back(0);
        for (i64 i = 0; i < r; ++i) res.push_back(rng.pick(units));
        std::vector<ConeClass> cones;
        i64 s = rng.below(5);
        std::vector<ConeClass> pool;
        for (i64 b = 2; b <= n; ++b) {
            if (n % b != 0) continue;
            for (i64 c = 1; c < b; ++c)
                if (gcd_i64(c, b) == 1) pool.emplace_back(c, b);
        }
        if (!pool.empty())
            for (i64 i = 0; i < s; ++i) cones.push_back(rng.pick(pool));
        // Repair the congruence by appending one residue when possible.
        i64 sum = 0;
        for (i64 a : res) sum += a;
        for (const auto& c : cones) sum += (n / c.b) * c.c;
        i64 need = mod_reduce(-sum, n);
        if (gcd_i64(need, n) == 1 || (need == 0 && n == 1)) {
            if (need != 0 || n == 1) res.push_back(need);
        }
        auto v = validate(n, g0, res, cones);
        if (auto* d = std::get_if<DataSet>(&v)) {
            if (genus(*d) >= 0) return *d;
        }
    }
}

}  // namespace

TEST_CASE("power map invariants over random data sets") {
    Rng rng;
    for (int trial = 0; trial < 400; ++trial) {
        DataSet d = random_dataset(rng);
        i64 g = genus(d);
        for (i64 e : divisors_of(d.n)) {
            DataSet p = power(d, e);
            CHECK(p.n == d.n / e);
            CHECK(genus(p) == g);
            CHECK(check_dataset(p.n, p.g0, p.residues, p.cones).empty());
            CHECK(canonicalize(p) == p);
            // Composition: (t^e)^f = t^(ef).
            for (i64 f : divisors_of(p.n))
                CHECK(power(p, f) == power(d, e * f));
        }
        // Class images preserve total orbit count: sum of split pieces of all
        // classes (plus residues) equals the marked-point count of the power.
        for (i64 e : divisors_of(d.n)) {
            DataSet p = power(d, e);
            i64 pieces = static_cast<i64>(d.residues.size());
            for (const auto& c : d.cones) {
                i64 orbit = d.n / c.b;
                if (!power_class_image(d, e, c).is_free()) pieces += gcd_i64(orbit, e);
            }
            CHECK(pieces == p.r() + p.s());
        }
    }
}

TEST_CASE("canonicalization and equivalence over random data sets") {
    Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
        DataSet d = random_dataset(rng);
        CHECK(canonicalize(d) == d);
        // Shuffle and revalidate: equivalence is permutation-invariant.
        DataSet shuffled = d;
        if (shuffled.residues.size() > 1) std::swap(shuffled.residues.front(), shuffled.residues.back());
        if (shuffled.cones.size() > 1) std::swap(shuffled.cones.front(), shuffled.cones.back());
        CHECK(equivalent(d, canonicalize(shuffled)));
    }
}

TEST_CASE("class_compatible symmetry and strict monotonicity on random pairs") {
    Rng rng;
    int checked = 0;
    for (int trial = 0; trial < 5000 && checked < 600; ++trial) {
        DataSet d1 = random_dataset(rng);
        DataSet d2 = random_dataset(rng);
        auto refs = [](const DataSet& d) {
            std::vector<ClassRef> out;
            for (i64 i = 0; i < d.r(); ++i) out.push_back({ClassKind::Residue, i});
            for (i64 i = 0; i < d.s(); ++i) out.push_back({ClassKind::Cone, i});
            out.push_back({ClassKind::Free, -1});
            return out;
        };
        auto r1v = refs(d1), r2v = refs(d2);
        ClassRef c1 = rng.pick(r1v);
        ClassRef c2 = rng.pick(r2v);
        i64 m1 = 1 + rng.below(3), m2 = 1 + rng.below(3);
        i64 S1 = lcm_i64(m1, class_size(d1, c1));
        i64 S2 = lcm_i64(m2, class_size(d2, c2));
        if (S1 != S2) continue;
        i64 n = lcm_i64(lcm_i64(union_order(m1, d1.n), union_order(m2, d2.n)), S1);
        Side s1{PermutingDataSet{d1, {}}, m1};
        Side s2{PermutingDataSet{d2, {}}, m2};
        ++checked;
        for (auto mode : {CompatMode::Default, CompatMode::Strict}) {
            CHECK(class_compatible(s1, c1, s2, c2, S1, n, mode) ==
                  class_compatible(s2, c2, s1, c1, S1, n, mode));
        }
        if (class_compatible(s1, c1, s2, c2, S1, n, CompatMode::Strict))
            CHECK(class_compatible(s1, c1, s2, c2, S1, n, CompatMode::Default));
    }
    CHECK(checked >= 600);
}

TEST_CASE("fixed-point congruence matches the angle condition on random residues") {
    Rng rng;
    for (int trial = 0; trial < 500; ++trial) {
        i64 n = 1 + rng.below(60);
        std::vector<i64> units;
        for (i64 a = (n == 1 ? 0 : 1); a < std::max<i64>(n, 1); ++a)
            if (gcd_i64(mod_reduce(a, n), n) == 1) units.push_back(mod_reduce(a, n));
        if (n == 1) units.push_back(0);
        i64 a = rng.pick(units), b = rng.pick(units);
        bool angles = fixed_angle(a, n) + fixed_angle(b, n) == TurnAngle(1, n);
        bool cong = mod_reduce(a + b, n) == mod_reduce(a * b, n);
        CHECK(angles == cong);
    }
}

TEST_CASE("enumeration is closed under the power map") {
    // Any power of an enumerated action is again a valid enumerated action of
    // the same genus at the divided degree.
    for (i64 g = 0; g <= 2; ++g)
        for (i64 n = 1; n <= 12; ++n) {
            auto all = enumerate_datasets({g, n, 0, {}});
            for (const auto& d : all)
                for (i64 e : divisors_of(n)) {
                    DataSet p = power(d, e);
                    auto target = enumerate_datasets({g, p.n, 0, {}});
                    CHECK(std::find(target.begin(), target.end(), p) != target.end());
                }
        }
}
