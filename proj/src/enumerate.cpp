#include "twistroot/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace twistroot {

namespace {

std::vector<i64> coprime_residues(i64 m) {
    std::vector<i64> out;
    if (m == 1) { out.push_back(0); return out; }
    for (i64 a = 1; a < m; ++a)
        if (gcd_i64(a, m) == 1) out.push_back(a);
    return out;
}

// Nondecreasing multisets of length `len` over `values`.
void multisets(const std::vector<i64>& values, i64 len, std::vector<i64>& cur,
               const std::function<void(const std::vector<i64>&)>& emit, size_t from = 0) {
    if (static_cast<i64>(cur.size()) == len) { emit(cur); return; }
    for (size_t i = from; i < values.size(); ++i) {
        cur.push_back(values[i]);
        multisets(values, len, cur, emit, i);
        cur.pop_back();
    }
}

// Cone-modulus multisets (nondecreasing b | n, b >= 2) whose Euler deficit
// sum (1 - 1/b) equals `target` exactly.
void cone_shapes(const std::vector<i64>& moduli, const Rational& target, size_t from,
                 std::vector<i64>& cur, const std::function<void(const std::vector<i64>&)>& emit) {
    if (target == Rational(0)) { emit(cur); return; }
    if (target < Rational(1, 2)) return;  // each cone contributes at least 1/2
    for (size_t i = from; i < moduli.size(); ++i) {
        Rational contrib = Rational(1) - Rational(1, moduli[i]);
        if (target < contrib) continue;
        cur.push_back(moduli[i]);
        cone_shapes(moduli, target - contrib, i, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<DataSet> enumerate_datasets(const EnumQuery& q) {
    const i64 n = q.degree;
    const i64 g = q.genus;
    const i64 r = q.r;
    std::vector<DataSet> out;
    if (n < 1 || g < 0 || r < 0) return out;

    std::vector<i64> moduli;
    for (i64 b : divisors_of(n))
        if (b >= 2) moduli.push_back(b);
    const auto n_res = coprime_residues(n);
    if (r > 0 && n_res.empty()) return out;

    const Rational two_minus_2g_over_n(2 - 2 * g, n);
    for (i64 g0 = 0;; ++g0) {
        // Required cone deficit sum(1 - 1/b) for this quotient genus.
        Rational deficit = Rational(2 - 2 * g0) - Rational(r) * (Rational(1) - Rational(1, n)) -
                           two_minus_2g_over_n;
        if (deficit < Rational(0)) break;

        auto handle_shape = [&](const std::vector<i64>& shape) {
            // Residues per cone group (equal moduli get nondecreasing residues),
            // then the distinguished residues, then the congruence and the
            // generation condition.
            struct Group { i64 b; i64 count; };
            std::vector<Group> groups;
            for (i64 b : shape) {
                if (!groups.empty() && groups.back().b == b) ++groups.back().count;
                else groups.push_back({b, 1});
            }
            std::vector<std::vector<i64>> group_choices(groups.size());
            std::vector<ConeClass> cones;
            std::function<void(size_t)> rec_groups = [&](size_t gi) {
                if (gi == groups.size()) {
                    std::vector<i64> cur;
                    multisets(n_res, r, cur, [&](const std::vector<i64>& res) {
                        i64 sum = 0;
                        for (i64 a : res) sum += a;
                        for (const auto& c : cones) sum += (n / c.b) * c.c;
                        if (mod_reduce(sum, n) != 0) return;
                        if (g0 == 0) {
                            i64 gg = n;
                            for (i64 a : res) gg = gcd_i64(gg, a);
                            for (const auto& c : cones) gg = gcd_i64(gg, (n / c.b) * c.c);
                            if (gg != 1) return;
                        }
                        DataSet d;
                        d.n = n;
                        d.g0 = g0;
                        d.residues = res;
                        d.cones = cones;
                        out.push_back(canonicalize(std::move(d)));
                    });
                    return;
                }
                const auto& grp = groups[gi];
                auto vals = coprime_residues(grp.b);
                std::vector<i64> cur;
                multisets(vals, grp.count, cur, [&](const std::vector<i64>& picked) {
                    size_t base = cones.size();
                    for (i64 c : picked) cones.emplace_back(c, grp.b);
                    rec_groups(gi + 1);
                    cones.resize(base);
                });
            };
            rec_groups(0);
        };

        std::vector<i64> cur;
        cone_shapes(moduli, deficit, 0, cur, handle_shape);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<OrbitDistribution> orbit_distributions(const DataSet& d, std::vector<i64> sizes) {
    std::sort(sizes.begin(), sizes.end());
    // Distinct required sizes with counts.
    std::vector<std::pair<i64, i64>> req;
    for (i64 s : sizes) {
        if (!req.empty() && req.back().first == s) ++req.back().second;
        else req.emplace_back(s, 1);
    }
    // Candidate classes per size with capacity (free class unlimited).
    struct Cand { ConeClass cls; i64 cap; };
    std::vector<std::vector<Cand>> cands(req.size());
    for (size_t i = 0; i < req.size(); ++i) {
        i64 s = req[i].first;
        if (s < 1 || d.n % s != 0) return {};
        if (s == d.n) cands[i].push_back({free_class(), req[i].second});
        i64 b = d.n / s;
        if (b > 1) {
            std::map<ConeClass, i64> counts;
            for (const auto& c : d.cones)
                if (c.b == b) ++counts[c];
            for (const auto& [cls, cnt] : counts) cands[i].push_back({cls, cnt});
        }
        if (cands[i].empty()) return {};
    }
    std::vector<OrbitDistribution> out;
    OrbitDistribution cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == req.size()) {
            OrbitDistribution o = cur;
            std::sort(o.entries.begin(), o.entries.end());
            out.push_back(std::move(o));
            return;
        }
        i64 need = req[i].second;
        // Distribute `need` among candidate classes (bounded compositions).
        std::function<void(size_t, i64)> dist = [&](size_t ci, i64 left) {
            if (ci == cands[i].size()) {
                if (left == 0) rec(i + 1);
                return;
            }
            i64 maxtake = std::min(left, cands[i][ci].cap);
            for (i64 take = 0; take <= maxtake; ++take) {
                if (take > 0) cur.add(cands[i][ci].cls, take);
                dist(ci + 1, left - take);
                if (take > 0) {
                    for (auto& [p, m] : cur.entries)
                        if (p == cands[i][ci].cls) m -= take;
                    std::erase_if(cur.entries, [](const auto& e) { return e.second == 0; });
                }
            }
        };
        dist(0, need);
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PermutingDataSet> enumerate_permuting(const EnumQuery& q) {
    for (i64 s : q.orbit_sizes)
        if (s < 1 || q.degree % s != 0)
            throw std::invalid_argument("UnrealizableOrbitSize: size " + std::to_string(s) +
                                        " does not divide degree " + std::to_string(q.degree));
    std::vector<PermutingDataSet> out;
    for (const auto& d : enumerate_datasets(q))
        for (auto& o : orbit_distributions(d, q.orbit_sizes))
            out.push_back(PermutingDataSet{d, std::move(o)});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DataSet> naive_enumerate(const EnumQuery& q) {
    if (q.degree > 12 || q.genus > 2)
        throw std::invalid_argument("QueryTooLarge: naive enumeration is guarded to degree <= 12, genus <= 2");
    const i64 n = q.degree;
    std::vector<DataSet> out;
    if (n < 1 || q.genus < 0) return out;

    std::vector<i64> moduli;
    for (i64 b = 2; b <= n; ++b)
        if (n % b == 0) moduli.push_back(b);
    std::vector<i64> nres;
    if (n == 1) nres.push_back(0);
    for (i64 a = 1; a < n; ++a)
        if (gcd_i64(a, n) == 1) nres.push_back(a);

    // Straight off the definition, with only a termination bound: the cone
    // deficit of any tuple of this genus and degree is at most
    // 2 - (2-2g)/n, so branches beyond it cannot validate.
    const Rational dmax = Rational(2) - Rational(2 - 2 * q.genus, n);
    std::set<DataSet> seen;
    for (i64 g0 = 0; g0 <= q.genus + 1; ++g0) {
        std::vector<ConeClass> cones;
        std::function<void(size_t, Rational)> rec = [&](size_t from, Rational used) {
            // Try the current cone tuple with every residue multiset of size q.r.
            std::vector<i64> res;
            std::function<void(size_t)> rres = [&](size_t fi) {
                if (static_cast<i64>(res.size()) == q.r) {
                    if (check_dataset(n, g0, res, cones).empty()) {
                        DataSet d;
                        d.n = n;
                        d.g0 = g0;
                        d.residues = res;
                        d.cones = cones;
                        d = canonicalize(std::move(d));
                        if (genus(d) == q.genus) seen.insert(std::move(d));
                    }
                    return;
                }
                for (size_t i = fi; i < nres.size(); ++i) {
                    res.push_back(nres[i]);
                    rres(i);
                    res.pop_back();
                }
            };
            rres(0);
            for (size_t i = from; i < moduli.size(); ++i) {
                Rational contrib = Rational(1) - Rational(1, moduli[i]);
                if (dmax < used + contrib) continue;
                for (i64 c = 1; c < moduli[i]; ++c) {
                    if (gcd_i64(c, moduli[i]) != 1) continue;
                    cones.emplace_back(c, moduli[i]);
                    rec(i, used + contrib);
                    cones.pop_back();
                }
            }
        };
        rec(0, Rational(0));
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

}  // namespace twistroot
