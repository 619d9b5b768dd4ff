#include "twistroot/compat.hpp"

#include <algorithm>

namespace twistroot {

std::string to_string(ClassKind k) {
    switch (k) {
        case ClassKind::Residue: return "residue";
        case ClassKind::Cone: return "cone";
        case ClassKind::Free: return "free";
    }
    return "?";
}

i64 union_order(i64 copies, i64 order) {
    if (copies < 1 || order < 1) throw std::invalid_argument("union_order: arguments must be positive");
    return lcm_i64(copies, order);
}

i64 class_size(const DataSet& d, const ClassRef& ref) {
    switch (ref.kind) {
        case ClassKind::Residue: return 1;
        case ClassKind::Cone: return d.n / d.cones.at(ref.index).b;
        case ClassKind::Free: return d.n;
    }
    return 1;
}

TurnAngle class_angle(const DataSet& d, const ClassRef& ref) {
    switch (ref.kind) {
        case ClassKind::Residue: return fixed_angle(d.residues.at(ref.index), d.n);
        case ClassKind::Cone: return theta(d.cones.at(ref.index));
        case ClassKind::Free: return TurnAngle::zero();
    }
    return TurnAngle::zero();
}

TurnAngle rot_power(const DataSet& d, const ClassRef& ref, i64 e) {
    i64 s = class_size(d, ref);
    if (e % s != 0)
        throw std::invalid_argument("ExponentNotStabilizing: orbit size " + std::to_string(s) +
                                    " does not divide exponent " + std::to_string(e));
    return class_angle(d, ref).scaled(e / s);
}

namespace {

bool compatible_impl(const DataSet& d1, i64 m1, const ClassRef& c1, const DataSet& d2, i64 m2,
                     const ClassRef& c2, i64 S, i64 n, CompatMode mode) {
    TurnAngle lhs = rot_power(d1, c1, S) + rot_power(d2, c2, S);
    if (!(lhs == TurnAngle(S, n))) return false;
    if (mode == CompatMode::Strict) {
        bool both_free = c1.kind == ClassKind::Free && c2.kind == ClassKind::Free;
        if (!both_free) {
            TurnAngle lit = class_angle(d1, c1) + class_angle(d2, c2);
            if (!(lit == TurnAngle(1, n))) return false;
        }
    }
    return true;
}

}  // namespace

bool class_compatible(const Side& s1, const ClassRef& c1, const Side& s2, const ClassRef& c2,
                      i64 S, i64 n, CompatMode mode) {
    if (S < 1 || n < 1 || n % S != 0)
        throw std::invalid_argument("SizeMismatch: class size must divide the overall degree");
    i64 own1 = class_size(s1.pd.dataset, c1);
    i64 own2 = class_size(s2.pd.dataset, c2);
    if (lcm_i64(s1.copies, own1) != S || lcm_i64(s2.copies, own2) != S)
        throw std::invalid_argument(
            "CopyCountNotDividing: class orbit does not assemble to the curve-class size");
    return compatible_impl(s1.pd.dataset, s1.copies, c1, s2.pd.dataset, s2.copies, c2, S, n, mode);
}

namespace {

struct Ledger {
    std::map<ComponentKey, std::vector<bool>> res_used;
    std::map<ComponentKey, std::vector<bool>> cone_used;
};

// Candidate units on one side of a requirement.
std::vector<ClassRef> candidates(const Side& side, const Ledger& led, const ComponentKey& key,
                                 bool residues, i64 S) {
    const DataSet& d = side.pd.dataset;
    std::vector<ClassRef> out;
    if (residues) {
        const auto& used = led.res_used.at(key);
        for (i64 i = 0; i < d.r(); ++i)
            if (!used[i]) out.push_back(ClassRef{ClassKind::Residue, i});
        return out;
    }
    const auto& used = led.cone_used.at(key);
    for (i64 i = 0; i < d.s(); ++i) {
        if (used[i]) continue;
        if (lcm_i64(side.copies, class_size(d, ClassRef{ClassKind::Cone, i})) == S)
            out.push_back(ClassRef{ClassKind::Cone, i});
    }
    if (lcm_i64(side.copies, d.n) == S) out.push_back(ClassRef{ClassKind::Free, -1});
    return out;
}

void mark(Ledger& led, const ComponentKey& key, const ClassRef& ref, bool used) {
    if (ref.kind == ClassKind::Residue) led.res_used[key][ref.index] = used;
    else if (ref.kind == ClassKind::Cone) led.cone_used[key][ref.index] = used;
}

bool search(const std::map<ComponentKey, Side>& sides, const std::vector<UnitRequirement>& reqs,
            CompatMode mode, size_t i, Ledger& led, PairingWitness& acc,
            const std::function<bool(const PairingWitness&)>& visit) {
    if (i == reqs.size()) return visit(acc);
    const auto& rq = reqs[i];
    const Side& sa = sides.at(rq.a);
    const Side& sb = sides.at(rq.b);
    auto ca = candidates(sa, led, rq.a, rq.residues, rq.size);
    for (const auto& ua : ca) {
        mark(led, rq.a, ua, true);
        auto cb = candidates(sb, led, rq.b, rq.residues, rq.size);
        for (const auto& ub : cb) {
            if (!compatible_impl(sa.pd.dataset, sa.copies, ua, sb.pd.dataset, sb.copies, ub,
                                 rq.size, rq.n_eff, mode))
                continue;
            mark(led, rq.b, ub, true);
            acc.pairs.push_back(WitnessPair{rq.a, rq.b, ua, ub, rq.size, rq.tag});
            bool stop = search(sides, reqs, mode, i + 1, led, acc, visit);
            acc.pairs.pop_back();
            mark(led, rq.b, ub, false);
            if (stop) { mark(led, rq.a, ua, false); return true; }
        }
        mark(led, rq.a, ua, false);
    }
    return false;
}

Ledger make_ledger(const std::map<ComponentKey, Side>& sides) {
    Ledger led;
    for (const auto& [key, side] : sides) {
        led.res_used[key] = std::vector<bool>(side.pd.dataset.r(), false);
        led.cone_used[key] = std::vector<bool>(side.pd.dataset.s(), false);
    }
    return led;
}

}  // namespace

std::optional<PairingWitness> match_units(const std::map<ComponentKey, Side>& sides,
                                          const std::vector<UnitRequirement>& reqs,
                                          CompatMode mode) {
    Ledger led = make_ledger(sides);
    PairingWitness acc;
    std::optional<PairingWitness> found;
    search(sides, reqs, mode, 0, led, acc, [&](const PairingWitness& w) {
        found = w;
        return true;
    });
    return found;
}

void match_units_all(const std::map<ComponentKey, Side>& sides,
                     const std::vector<UnitRequirement>& reqs, CompatMode mode,
                     const std::function<bool(const PairingWitness&)>& visit) {
    Ledger led = make_ledger(sides);
    PairingWitness acc;
    search(sides, reqs, mode, 0, led, acc, [&](const PairingWitness& w) { return !visit(w); });
}

std::optional<PairingWitness> nonseparating_check(const PermutingDataSet& pd, i64 r,
                                                  std::vector<i64> sizes, CompatMode mode) {
    if (pd.dataset.r() != 2 * r)
        throw std::invalid_argument("ArityMismatch: expected " + std::to_string(2 * r) +
                                    " distinguished residues");
    std::vector<i64> doubled = sizes;
    doubled.insert(doubled.end(), sizes.begin(), sizes.end());
    std::sort(doubled.begin(), doubled.end());
    {
        std::vector<i64> have;
        for (const auto& [p, m] : pd.orbits.entries)
            for (i64 i = 0; i < m; ++i) have.push_back(class_orbit_size(p, pd.dataset.n));
        std::sort(have.begin(), have.end());
        if (have != doubled)
            throw std::invalid_argument("ArityMismatch: orbit distribution does not realize the doubled size multiset");
    }

    if (!orbit_distribution_valid(pd.dataset, pd.orbits))
        throw std::invalid_argument("ArityMismatch: orbit distribution violates the support rule");

    // The distribution fixes the number of distinguished orbits, so pair the
    // expanded unit list directly rather than going through the ledgered
    // matcher (whose free class is unlimited).
    struct Unit { ConeClass cls; bool used = false; };
    std::vector<Unit> units;
    for (const auto& [p, m] : pd.orbits.entries)
        for (i64 i = 0; i < m; ++i) units.push_back(Unit{p});
    std::sort(units.begin(), units.end(), [](const Unit& x, const Unit& y) {
        return std::tie(x.cls.b, x.cls.c) < std::tie(y.cls.b, y.cls.c);
    });

    const i64 n = pd.dataset.n;
    PairingWitness acc;

    // Residue pairs first.
    std::vector<bool> res_used(pd.dataset.residues.size(), false);
    std::function<bool()> pair_orbits = [&]() -> bool {
        size_t first = units.size();
        for (size_t i = 0; i < units.size(); ++i)
            if (!units[i].used) { first = i; break; }
        if (first == units.size()) return true;
        units[first].used = true;
        i64 s1 = class_orbit_size(units[first].cls, n);
        for (size_t j = first + 1; j < units.size(); ++j) {
            if (units[j].used) continue;
            i64 s2 = class_orbit_size(units[j].cls, n);
            if (s1 != s2) continue;
            // Resolve class values to indices in the parent data set for angle lookups.
            auto resolve = [&](const ConeClass& cls) -> ClassRef {
                if (cls.is_free()) return ClassRef{ClassKind::Free, -1};
                for (i64 k = 0; k < pd.dataset.s(); ++k)
                    if (pd.dataset.cones[k] == cls) return ClassRef{ClassKind::Cone, k};
                throw std::logic_error("orbit distribution class missing from data set");
            };
            ClassRef a = resolve(units[first].cls);
            ClassRef b = resolve(units[j].cls);
            if (!compatible_impl(pd.dataset, 1, a, pd.dataset, 1, b, s1, n, mode)) continue;
            units[j].used = true;
            acc.pairs.push_back(WitnessPair{ComponentKey{0, -1}, ComponentKey{0, -1}, a, b, s1, "nonsep"});
            if (pair_orbits()) return true;
            acc.pairs.pop_back();
            units[j].used = false;
        }
        units[first].used = false;
        return false;
    };

    std::function<bool()> pair_residues = [&]() -> bool {
        size_t first = res_used.size();
        for (size_t i = 0; i < res_used.size(); ++i)
            if (!res_used[i]) { first = i; break; }
        if (first == res_used.size()) return pair_orbits();
        res_used[first] = true;
        for (size_t j = first + 1; j < res_used.size(); ++j) {
            if (res_used[j]) continue;
            ClassRef a{ClassKind::Residue, static_cast<i64>(first)};
            ClassRef b{ClassKind::Residue, static_cast<i64>(j)};
            if (!compatible_impl(pd.dataset, 1, a, pd.dataset, 1, b, 1, n, mode)) continue;
            res_used[j] = true;
            acc.pairs.push_back(WitnessPair{ComponentKey{0, -1}, ComponentKey{0, -1}, a, b, 1, "nonsep"});
            if (pair_residues()) return true;
            acc.pairs.pop_back();
            res_used[j] = false;
        }
        res_used[first] = false;
        return false;
    };

    if (pair_residues()) return acc;
    return std::nullopt;
}

i64 pair_genus(i64 g1, i64 g2, i64 r, i64 alpha) { return g1 + g2 + r + alpha - 1; }

i64 satellite_genus(i64 g1, i64 m, i64 g2, i64 k) { return g1 + m * (g2 + k - 1); }

std::optional<PairingWitness> pair_compatible(const Side& left, const Side& right,
                                              const std::vector<i64>& sizes, CompatMode mode) {
    i64 n = lcm_i64(union_order(left.copies, left.pd.dataset.n),
                    union_order(right.copies, right.pd.dataset.n));
    std::map<ComponentKey, Side> sides;
    ComponentKey a{0, -1}, b{1, -1};
    sides[a] = left;
    sides[b] = right;
    std::vector<UnitRequirement> reqs;
    std::vector<i64> sorted = sizes;
    std::sort(sorted.begin(), sorted.end(), std::greater<i64>());
    for (i64 s : sorted) {
        UnitRequirement rq;
        rq.a = a;
        rq.b = b;
        rq.residues = (s == 1);
        rq.size = s;
        rq.n_eff = n;
        rq.tag = "edge:0";
        if (n % s != 0) return std::nullopt;
        reqs.push_back(rq);
    }
    return match_units(sides, reqs, mode);
}

std::optional<PairingWitness> tuple_compatible(const Side& center,
                                               const std::vector<SatelliteGluing>& satellites,
                                               CompatMode mode) {
    i64 n = union_order(center.copies, center.pd.dataset.n);
    for (const auto& s : satellites)
        n = lcm_i64(n, union_order(s.block.copies, s.block.pd.dataset.n));
    std::map<ComponentKey, Side> sides;
    ComponentKey c{0, -1};
    sides[c] = center;
    std::vector<UnitRequirement> reqs;
    for (size_t j = 0; j < satellites.size(); ++j) {
        ComponentKey key{0, static_cast<i64>(j)};
        sides[key] = satellites[j].block;
        // Every pair must realize the common degree.
        if (lcm_i64(union_order(center.copies, center.pd.dataset.n),
                    union_order(satellites[j].block.copies, satellites[j].block.pd.dataset.n)) != n)
            return std::nullopt;
        std::vector<i64> sorted = satellites[j].sizes;
        std::sort(sorted.begin(), sorted.end(), std::greater<i64>());
        for (i64 s : sorted) {
            if (n % s != 0) return std::nullopt;
            UnitRequirement rq;
            rq.a = c;
            rq.b = key;
            rq.residues = (s == 1);
            rq.size = s;
            rq.n_eff = n;
            rq.tag = "sat:0." + std::to_string(j);
            reqs.push_back(rq);
        }
    }
    return match_units(sides, reqs, mode);
}

std::optional<PairingWitness> multituple_compatible(const std::vector<TupleSide>& chain,
                                                    const std::vector<std::vector<i64>>& edges,
                                                    CompatMode mode) {
    if (chain.empty() || edges.size() + 1 != chain.size())
        throw std::invalid_argument("multituple_compatible: chain length must be edges + 1");
    i64 n = 1;
    for (const auto& t : chain) {
        n = lcm_i64(n, union_order(t.center.copies, t.center.pd.dataset.n));
        for (const auto& s : t.satellites)
            n = lcm_i64(n, union_order(s.block.copies, s.block.pd.dataset.n));
    }
    auto order_of = [](const Side& s) { return union_order(s.copies, s.pd.dataset.n); };
    std::map<ComponentKey, Side> sides;
    std::vector<UnitRequirement> reqs;
    for (size_t i = 0; i < chain.size(); ++i) {
        ComponentKey c{static_cast<i64>(i), -1};
        sides[c] = chain[i].center;
        for (size_t j = 0; j < chain[i].satellites.size(); ++j) {
            const auto& st = chain[i].satellites[j];
            ComponentKey key{static_cast<i64>(i), static_cast<i64>(j)};
            sides[key] = st.block;
            if (lcm_i64(order_of(chain[i].center), order_of(st.block)) != n) return std::nullopt;
        }
    }
    for (size_t e = 0; e < edges.size(); ++e) {
        if (lcm_i64(order_of(chain[e].center), order_of(chain[e + 1].center)) != n)
            return std::nullopt;
        std::vector<i64> sorted = edges[e];
        std::sort(sorted.begin(), sorted.end(), std::greater<i64>());
        for (i64 s : sorted) {
            if (n % s != 0) return std::nullopt;
            UnitRequirement rq;
            rq.a = ComponentKey{static_cast<i64>(e), -1};
            rq.b = ComponentKey{static_cast<i64>(e) + 1, -1};
            rq.residues = (s == 1);
            rq.size = s;
            rq.n_eff = n;
            rq.tag = "edge:" + std::to_string(e);
            reqs.push_back(rq);
        }
    }
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = 0; j < chain[i].satellites.size(); ++j) {
            std::vector<i64> sorted = chain[i].satellites[j].sizes;
            std::sort(sorted.begin(), sorted.end(), std::greater<i64>());
            for (i64 s : sorted) {
                if (n % s != 0) return std::nullopt;
                UnitRequirement rq;
                rq.a = ComponentKey{static_cast<i64>(i), -1};
                rq.b = ComponentKey{static_cast<i64>(i), static_cast<i64>(j)};
                rq.residues = (s == 1);
                rq.size = s;
                rq.n_eff = n;
                rq.tag = "sat:" + std::to_string(i) + "." + std::to_string(j);
                reqs.push_back(rq);
            }
        }
    return match_units(sides, reqs, mode);
}

}  // namespace twistroot
