#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "twistroot/arith.hpp"

namespace twistroot {

// Orbit class of a point under a cyclic action of degree n: the pair (c, b)
// where b is the stabilizer order and c the monodromy residue mod b.  The
// pair (0, 1) is the designated free class (trivial stabilizer).
struct ConeClass {
    i64 c = 0;
    i64 b = 1;

    ConeClass() = default;
    ConeClass(i64 c_, i64 b_) : c(c_), b(b_) {}

    bool is_free() const { return b == 1; }

    auto operator<=>(const ConeClass&) const = default;

    std::string str() const { return "(" + std::to_string(c) + "," + std::to_string(b) + ")"; }
};

inline ConeClass free_class() { return ConeClass(0, 1); }

enum class ValidationError {
    NonDividingModulus,
    NonCoprimeResidue,
    CongruenceSumNonzero,
    NonIntegralGenus,
    NegativeGenus,
    NotGenerating,
};

std::string to_string(ValidationError e);

// The tuple (n, g0, (a_1..a_r); (c_1,n_1)..(c_s,n_s)) encoding a cyclic
// action: degree, quotient genus, distinguished fixed-point monodromies and
// the remaining cone points.  Residues are stored reduced, both lists kept
// sorted (canonical form).
struct DataSet {
    i64 n = 1;
    i64 g0 = 0;
    std::vector<i64> residues;      // sorted ascending, values in [0, n), coprime to n
    std::vector<ConeClass> cones;   // sorted by (b, c), each with 1 < b, b | n

    auto operator<=>(const DataSet&) const = default;

    i64 r() const { return static_cast<i64>(residues.size()); }
    i64 s() const { return static_cast<i64>(cones.size()); }

    std::string str() const;
};

// Complete list of Def-3.5-style violations for the raw tuple; empty means valid.
std::vector<ValidationError> check_dataset(i64 n, i64 g0, const std::vector<i64>& residues,
                                           const std::vector<ConeClass>& cones);

// Returns the canonicalized data set, or the full violation list.
std::variant<DataSet, std::vector<ValidationError>> validate(i64 n, i64 g0,
                                                             std::vector<i64> residues,
                                                             std::vector<ConeClass> cones);

// Convenience: validate or throw std::invalid_argument.
DataSet make_dataset(i64 n, i64 g0, std::vector<i64> residues, std::vector<ConeClass> cones);

// The genus from the Riemann-Hurwitz relation; requires a valid data set.
i64 genus(const DataSet& d);

// Exact value of 2 - 2g as a rational (well-defined for any tuple).
Rational genus_defect(i64 n, i64 g0, i64 r, const std::vector<ConeClass>& cones);

// Rotation angle of the stabilizer generator at a point of class p.
TurnAngle theta(const ConeClass& p);

// Rotation angle of the action generator at a distinguished fixed point with
// monodromy a (gcd(a, n) = 1): the inverse residue over n.
TurnAngle fixed_angle(i64 a, i64 n);

// Orbit size of a point of class p under the degree-n action: n / b.
i64 class_orbit_size(const ConeClass& p, i64 n);

DataSet canonicalize(DataSet d);
bool equivalent(const DataSet& a, const DataSet& b);

// The data set of t^d for d | n, canonicalized.  Genus is preserved.
DataSet power(const DataSet& d, i64 exponent);

// Where a class of D lands in power(D, exponent).  Residues map to residues;
// a cone class maps to gcd(orbit, d) copies of the image class (returned once),
// which may be the free class.
ConeClass power_class_image(const DataSet& d, i64 exponent, const ConeClass& cls);
i64 power_residue_image(const DataSet& d, i64 exponent, i64 residue);

// Multiset of distinguished orbit classes with multiplicities, attached to a
// data set.  Support is restricted to the free class plus cone classes of the
// owning data set; cone-class multiplicity never exceeds the number of cones
// of that value (each cone point carries exactly one orbit of its class).
struct OrbitDistribution {
    std::vector<std::pair<ConeClass, i64>> entries;  // sorted by class, multiplicities >= 1

    auto operator<=>(const OrbitDistribution&) const = default;

    i64 total() const;
    i64 multiplicity(const ConeClass& p) const;
    void add(const ConeClass& p, i64 m = 1);
    std::string str() const;
};

struct PermutingDataSet {
    DataSet dataset;
    OrbitDistribution orbits;

    auto operator<=>(const PermutingDataSet&) const = default;

    std::string str() const;
};

bool equivalent(const PermutingDataSet& a, const PermutingDataSet& b);

// Checks the support rule of the orbit distribution against its data set.
bool orbit_distribution_valid(const DataSet& d, const OrbitDistribution& o);

}  // namespace twistroot
