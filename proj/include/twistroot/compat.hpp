#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistroot/dataset.hpp"

namespace twistroot {

enum class ClassKind { Residue, Cone, Free };

std::string to_string(ClassKind k);

// Reference to a consumable class of a (per-copy) data set: a distinguished
// residue by index, a cone point by index, or the free class.
struct ClassRef {
    ClassKind kind = ClassKind::Free;
    i64 index = -1;

    auto operator<=>(const ClassRef&) const = default;
};

// One side of a gluing: a permuting data set plus its copy count (copies = 1
// for central components; for a satellite block S_g(m) the data set describes
// the per-copy root map).
struct Side {
    PermutingDataSet pd;
    i64 copies = 1;
};

// Order of sigma_m composed with a per-copy map of the given order.
i64 union_order(i64 copies, i64 order);

// Per-copy orbit size of the class (1 for residues, n/b for cones, n for free).
i64 class_size(const DataSet& d, const ClassRef& ref);

// Rotation angle of the stabilizer generator of the class.
TurnAngle class_angle(const DataSet& d, const ClassRef& ref);

// Rotation of the e-th power of the action at a point of the class; requires
// the class orbit size to divide e (ExponentNotStabilizing).
TurnAngle rot_power(const DataSet& d, const ClassRef& ref, i64 e);

enum class CompatMode { Default, Strict };

// Decides whether two classes can be glued along a curve class of size S when
// the overall root degree is n.  Preconditions (SizeMismatch /
// CopyCountNotDividing as std::invalid_argument): S | n, and on each side
// lcm(copies, per-copy orbit size) = S.
//
// Default predicate: the rotations of the S-th power match the twist,
//     rot_power(c1, S) + rot_power(c2, S) == S/n  (mod 1).
// Strict additionally requires the literal angle sum theta(c1) + theta(c2)
// == 1/n (mod 1) unless both classes are free.
bool class_compatible(const Side& s1, const ClassRef& c1, const Side& s2, const ClassRef& c2,
                      i64 S, i64 n, CompatMode mode = CompatMode::Default);

// Identifies one component of a decomposition: node index plus satellite
// index (sat = -1 for the central component).
struct ComponentKey {
    i64 node = 0;
    i64 sat = -1;

    auto operator<=>(const ComponentKey&) const = default;
    std::string str() const {
        return sat < 0 ? "n" + std::to_string(node)
                       : "n" + std::to_string(node) + ".s" + std::to_string(sat);
    }
};

struct WitnessPair {
    ComponentKey side1, side2;
    ClassRef class1, class2;
    i64 size = 1;      // curve-class size S at the gluing (per-copy size for internal pairs)
    std::string tag;   // "edge:i" | "sat:i.j" | "internal:<comp>" | "nonsep"
};

struct PairingWitness {
    std::vector<WitnessPair> pairs;
};

// An elementary pairing requirement between two components.
struct UnitRequirement {
    ComponentKey a, b;
    bool residues = false;  // true: consume one distinguished residue per side (S = 1)
    i64 size = 1;           // S
    i64 n_eff = 1;          // degree against which the twist condition is tested
    std::string tag;
};

// Backtracking matcher over a set of components with shared consumption
// ledgers.  Residues and cone points are consumed at most once; free-class
// units are unlimited.  Requirements are processed in order; candidates are
// tried in deterministic (kind, index) order.  Returns the first witness, or
// enumerates all complete assignments via the callback (return false to stop).
std::optional<PairingWitness> match_units(const std::map<ComponentKey, Side>& sides,
                                          const std::vector<UnitRequirement>& reqs,
                                          CompatMode mode);
void match_units_all(const std::map<ComponentKey, Side>& sides,
                     const std::vector<UnitRequirement>& reqs, CompatMode mode,
                     const std::function<bool(const PairingWitness&)>& visit);

// Nonseparating check (single component): pairs the 2r residues into r pairs
// with a + a' = a*a' (mod n) and the 2k distinguished orbits into k pairs,
// one pair of size s per entry of `sizes`, all conditions at degree pd.n.
// Pre: pd carries exactly 2r residues and orbit total 2*|sizes| realizing the
// doubled multiset (ArityMismatch as std::invalid_argument).
std::optional<PairingWitness> nonseparating_check(const PermutingDataSet& pd, i64 r,
                                                  std::vector<i64> sizes,
                                                  CompatMode mode = CompatMode::Default);

// Pair / tuple / multituple genus formulas.
i64 pair_genus(i64 g1, i64 g2, i64 r, i64 alpha);
i64 satellite_genus(i64 g1, i64 m, i64 g2, i64 k);

// Convenience wrappers assembling requirement lists for a single gluing.
// `sizes` with value 1 consume residues; larger values consume orbit units.
std::optional<PairingWitness> pair_compatible(const Side& left, const Side& right,
                                              const std::vector<i64>& sizes,
                                              CompatMode mode = CompatMode::Default);

// A satellite block glued to its center along curve classes of the given
// sizes (the block's copy count lives in block.copies).
struct SatelliteGluing {
    Side block;
    std::vector<i64> sizes;
};

// Center plus satellites with a shared center ledger; the overall degree is
// the lcm of the component orders and every center/block pair must realize it.
std::optional<PairingWitness> tuple_compatible(const Side& center,
                                               const std::vector<SatelliteGluing>& satellites,
                                               CompatMode mode = CompatMode::Default);

struct TupleSide {
    Side center;
    std::vector<SatelliteGluing> satellites;
};

// A chain of tuples with edge gluings between consecutive centers; node-level
// ledgers are shared between edge and satellite consumption.
std::optional<PairingWitness> multituple_compatible(const std::vector<TupleSide>& chain,
                                                    const std::vector<std::vector<i64>>& edges,
                                                    CompatMode mode = CompatMode::Default);

}  // namespace twistroot
