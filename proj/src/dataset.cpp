#include "twistroot/dataset.hpp"

#include <algorithm>
#include <sstream>

namespace twistroot {

std::string to_string(ValidationError e) {
    switch (e) {
        case ValidationError::NonDividingModulus: return "NonDividingModulus";
        case ValidationError::NonCoprimeResidue: return "NonCoprimeResidue";
        case ValidationError::CongruenceSumNonzero: return "CongruenceSumNonzero";
        case ValidationError::NonIntegralGenus: return "NonIntegralGenus";
        case ValidationError::NegativeGenus: return "NegativeGenus";
        case ValidationError::NotGenerating: return "NotGenerating";
    }
    return "?";
}

std::string DataSet::str() const {
    std::ostringstream os;
    os << "(" << n << "," << g0;
    if (!residues.empty()) {
        if (residues.size() == 1) {
            os << "," << residues[0];
        } else {
            os << ",(";
            for (size_t i = 0; i < residues.size(); ++i) {
                if (i) os << ",";
                os << residues[i];
            }
            os << ")";
        }
    }
    os << ";";
    for (size_t i = 0; i < cones.size(); ++i) {
        if (i) os << ",";
        os << cones[i].str();
    }
    os << ")";
    return os.str();
}

Rational genus_defect(i64 n, i64 g0, i64 r, const std::vector<ConeClass>& cones) {
    // (2 - 2g)/n = 2 - 2g0 + r(1/n - 1) + sum_j (1/n_j - 1)
    Rational rhs(2 - 2 * g0);
    rhs = rhs + Rational(r) * (Rational(1, n) - Rational(1));
    for (const auto& c : cones) rhs = rhs + Rational(1, c.b) - Rational(1);
    return rhs * Rational(n);  // = 2 - 2g
}

std::vector<ValidationError> check_dataset(i64 n, i64 g0, const std::vector<i64>& residues,
                                           const std::vector<ConeClass>& cones) {
    std::vector<ValidationError> errs;
    if (n < 1 || g0 < 0) {
        errs.push_back(ValidationError::NonCoprimeResidue);
        return errs;
    }
    bool moduli_ok = true;
    for (const auto& c : cones) {
        if (c.b < 2 || n % c.b != 0) { moduli_ok = false; break; }
    }
    if (!moduli_ok) errs.push_back(ValidationError::NonDividingModulus);

    bool coprime_ok = true;
    for (i64 a : residues)
        if (gcd_i64(mod_reduce(a, n), n) != 1 && n > 1) { coprime_ok = false; break; }
    if (coprime_ok) {
        for (const auto& c : cones) {
            if (c.b < 2) continue;
            if (gcd_i64(mod_reduce(c.c, c.b), c.b) != 1) { coprime_ok = false; break; }
        }
    }
    if (!coprime_ok) errs.push_back(ValidationError::NonCoprimeResidue);
    if (!moduli_ok || !coprime_ok) return errs;

    i64 sum = 0;
    for (i64 a : residues) sum += mod_reduce(a, n);
    for (const auto& c : cones) sum += (n / c.b) * mod_reduce(c.c, c.b);
    if (mod_reduce(sum, n) != 0) errs.push_back(ValidationError::CongruenceSumNonzero);

    Rational two_minus_2g = genus_defect(n, g0, static_cast<i64>(residues.size()), cones);
    if (!two_minus_2g.is_integer() || mod_reduce(two_minus_2g.num(), 2) != 0) {
        errs.push_back(ValidationError::NonIntegralGenus);
    } else if (two_minus_2g.num() > 2) {
        errs.push_back(ValidationError::NegativeGenus);
    }

    // The monodromies must generate the full cyclic group.  With positive
    // quotient genus the surface generators make up the difference; for a
    // genus-zero quotient the residues and cone contributions have to do it.
    if (g0 == 0) {
        i64 g = n;
        for (i64 a : residues) g = gcd_i64(g, mod_reduce(a, n));
        for (const auto& c : cones) g = gcd_i64(g, (n / c.b) * mod_reduce(c.c, c.b));
        if (g != 1) errs.push_back(ValidationError::NotGenerating);
    }
    return errs;
}

std::variant<DataSet, std::vector<ValidationError>> validate(i64 n, i64 g0,
                                                             std::vector<i64> residues,
                                                             std::vector<ConeClass> cones) {
    auto errs = check_dataset(n, g0, residues, cones);
    if (!errs.empty()) return errs;
    DataSet d;
    d.n = n;
    d.g0 = g0;
    d.residues.reserve(residues.size());
    for (i64 a : residues) d.residues.push_back(mod_reduce(a, n));
    for (auto& c : cones) c.c = mod_reduce(c.c, c.b);
    d.cones = std::move(cones);
    return canonicalize(std::move(d));
}

DataSet make_dataset(i64 n, i64 g0, std::vector<i64> residues, std::vector<ConeClass> cones) {
    auto v = validate(n, g0, std::move(residues), std::move(cones));
    if (auto* d = std::get_if<DataSet>(&v)) return std::move(*d);
    std::string msg = "invalid data set:";
    for (auto e : std::get<std::vector<ValidationError>>(v)) msg += " " + to_string(e);
    throw std::invalid_argument(msg);
}

i64 genus(const DataSet& d) {
    Rational two_minus_2g = genus_defect(d.n, d.g0, d.r(), d.cones);
    return (2 - two_minus_2g.num()) / 2;
}

TurnAngle theta(const ConeClass& p) {
    if (p.is_free()) return TurnAngle::zero();
    return TurnAngle(mod_inverse(p.c, p.b), p.b);
}

TurnAngle fixed_angle(i64 a, i64 n) { return TurnAngle(mod_inverse(mod_reduce(a, n), n), n); }

i64 class_orbit_size(const ConeClass& p, i64 n) { return n / p.b; }

DataSet canonicalize(DataSet d) {
    std::sort(d.residues.begin(), d.residues.end());
    std::sort(d.cones.begin(), d.cones.end(),
              [](const ConeClass& x, const ConeClass& y) { return std::tie(x.b, x.c) < std::tie(y.b, y.c); });
    return d;
}

bool equivalent(const DataSet& a, const DataSet& b) { return canonicalize(a) == canonicalize(b); }

bool equivalent(const PermutingDataSet& a, const PermutingDataSet& b) {
    return equivalent(a.dataset, b.dataset) && a.orbits == b.orbits;
}

namespace {

// Stabilizer order and monodromy of a class of t^d, given those of a class of t.
ConeClass class_image_impl(i64 n, i64 exponent, i64 c, i64 b) {
    i64 s = n / b;                       // orbit size under t
    i64 l = lcm_i64(exponent, s);        // t^l generates the new stabilizer
    i64 b2 = n / l;                      // new stabilizer order
    if (b2 == 1) return free_class();
    // New rotation numerator: e * inv(c, b) / b = inv(c, b) / b2 (mod 1) since
    // b = (l/s) * b2, so just reduce the old inverse modulo b2.
    i64 k = mod_reduce(mod_inverse(c, b), b2);
    return ConeClass(mod_inverse(k, b2), b2);
}

}  // namespace

ConeClass power_class_image(const DataSet& d, i64 exponent, const ConeClass& cls) {
    if (d.n % exponent != 0) throw std::invalid_argument("power: exponent must divide degree");
    if (cls.is_free()) return free_class();
    return class_image_impl(d.n, exponent, cls.c, cls.b);
}

i64 power_residue_image(const DataSet& d, i64 exponent, i64 residue) {
    if (d.n % exponent != 0) throw std::invalid_argument("power: exponent must divide degree");
    i64 n2 = d.n / exponent;
    if (n2 == 1) return 0;
    i64 k = mod_reduce(mod_inverse(residue, d.n), n2);
    return mod_inverse(k, n2);
}

DataSet power(const DataSet& d, i64 exponent) {
    if (exponent < 1 || d.n % exponent != 0)
        throw std::invalid_argument("power: exponent must divide degree");
    i64 n2 = d.n / exponent;
    std::vector<i64> res2;
    for (i64 a : d.residues) res2.push_back(power_residue_image(d, exponent, a));
    std::vector<ConeClass> cones2;
    for (const auto& c : d.cones) {
        i64 s = d.n / c.b;
        i64 pieces = gcd_i64(s, exponent);  // the t-orbit splits into this many t^d-orbits
        ConeClass img = class_image_impl(d.n, exponent, c.c, c.b);
        if (img.is_free()) continue;
        for (i64 i = 0; i < pieces; ++i) cones2.push_back(img);
    }
    // Quotient genus from genus invariance:
    // 2 - 2g = n2*(2 - 2g0') + r'(1 - n2) + sum(n2/b - n2)
    i64 g = genus(d);
    Rational rest = Rational(static_cast<i64>(res2.size())) * (Rational(1) - Rational(n2));
    for (const auto& c : cones2) rest = rest + Rational(n2, c.b) - Rational(n2);
    Rational g0r = (Rational(2 * n2) + rest - Rational(2 - 2 * g)) * Rational(1, 2 * n2);
    if (!g0r.is_integer() || g0r.num() < 0)
        throw std::logic_error("power: non-integral quotient genus");
    return make_dataset(n2, g0r.num(), std::move(res2), std::move(cones2));
}

i64 OrbitDistribution::total() const {
    i64 t = 0;
    for (const auto& [p, m] : entries) t += m;
    return t;
}

i64 OrbitDistribution::multiplicity(const ConeClass& p) const {
    for (const auto& [q, m] : entries)
        if (q == p) return m;
    return 0;
}

void OrbitDistribution::add(const ConeClass& p, i64 m) {
    for (auto& [q, mm] : entries) {
        if (q == p) { mm += m; return; }
    }
    entries.emplace_back(p, m);
    std::sort(entries.begin(), entries.end());
}

std::string OrbitDistribution::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << entries[i].first.str() << ":" << entries[i].second;
    }
    os << "}";
    return os.str();
}

std::string PermutingDataSet::str() const { return dataset.str() + orbits.str(); }

bool orbit_distribution_valid(const DataSet& d, const OrbitDistribution& o) {
    for (const auto& [p, m] : o.entries) {
        if (m < 1) return false;
        if (p.is_free()) continue;
        i64 count = 0;
        for (const auto& c : d.cones)
            if (c == p) ++count;
        if (count == 0 || m > count) return false;
    }
    return true;
}

}  // namespace twistroot
