#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twistroot/compat.hpp"
#include "twistroot/enumerate.hpp"

namespace twistroot {

// Curves of the multicurve lying inside a component, cut there and checked by
// the nonseparating calculus: r preserved curves plus orbits of the given
// sizes (per copy, for satellite components).
struct InternalSpec {
    i64 r = 0;
    std::vector<i64> sizes;

    i64 curve_count() const;
    bool empty() const { return r == 0 && sizes.empty(); }
    auto operator<=>(const InternalSpec&) const = default;
};

// Nonseparating multicurve of `curves` curves on S_genus, with r preserved
// curves and the rest in orbits of the given sizes (all >= 2).
struct NonseparatingSpec {
    i64 genus = 2;
    i64 curves = 1;
    i64 r = 0;
    std::vector<i64> sizes;

    auto operator<=>(const NonseparatingSpec&) const = default;
};

// A block S_{genus}(copies) attached to its node by `strands` curves per
// copy; `sizes` lists the curve-class sizes at the block level (summing to
// copies * strands).
struct SatelliteSpec {
    i64 genus = 1;
    i64 copies = 2;
    i64 strands = 1;
    std::vector<i64> sizes;
    InternalSpec internal;

    auto operator<=>(const SatelliteSpec&) const = default;
};

struct NodeSpec {
    i64 genus = 1;
    std::vector<SatelliteSpec> satellites;
    InternalSpec internal;

    auto operator<=>(const NodeSpec&) const = default;
};

// A preserved pseudo-nonseparating block C^(strands) between two adjacent
// nodes; `sizes` lists the strand-orbit sizes (summing to strands, all 1 when
// every strand is preserved).
struct EdgeSpec {
    i64 strands = 1;
    std::vector<i64> sizes;

    auto operator<=>(const EdgeSpec&) const = default;
};

struct ChainSpec {
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;

    auto operator<=>(const ChainSpec&) const = default;
};

using MulticurveSpec = std::variant<NonseparatingSpec, ChainSpec>;

// Genus bookkeeping.
i64 tuple_genus(const NodeSpec& node);
i64 chain_genus(const ChainSpec& chain);
i64 multicurve_genus(const MulticurveSpec& spec);
i64 multicurve_size(const MulticurveSpec& spec);

// Structure checks; throws std::invalid_argument with a description.
void validate_spec(const MulticurveSpec& spec);

// Degree bounds.
i64 bound_nonseparating(i64 g, i64 m, i64 r);
bool is_degree_admissible(i64 g, i64 m, i64 r, i64 n);
i64 g_of_C(const ChainSpec& chain);
i64 bound_separating(const ChainSpec& chain);
i64 stable_bound(i64 g);

struct RecordComponent {
    ComponentKey key;
    i64 copies = 1;
    PermutingDataSet pd;
};

struct RootClassRecord {
    i64 degree = 1;
    std::vector<RecordComponent> components;  // node order; each node's center then its satellites
    PairingWitness witness;
    std::string signature;  // canonical dedup key

    const PermutingDataSet* find(const ComponentKey& key) const;
};

struct ClassifyOptions {
    CompatMode mode = CompatMode::Default;
    int jobs = 1;
    bool enforce_oddness = true;   // nonseparating Cor-4.6(ii) pruning
    i64 max_degree = 0;            // 0 = use the spec bound
};

std::vector<RootClassRecord> classify_nonseparating(const NonseparatingSpec& spec,
                                                    const ClassifyOptions& opts = {});
std::vector<RootClassRecord> classify_separating(const ChainSpec& spec,
                                                 const ClassifyOptions& opts = {});
// Chains with internal sub-specs; identical to classify_separating when all
// internals are empty.
std::vector<RootClassRecord> classify_mixed(const ChainSpec& spec, const ClassifyOptions& opts = {});
std::vector<RootClassRecord> classify(const MulticurveSpec& spec, const ClassifyOptions& opts = {});

// Whether the chain reads the same from either end (satellites included);
// such specs get reversal-normalized records.
bool chain_palindromic(const ChainSpec& chain);

// Projection of a record onto the component data sets in chain/column order.
std::vector<DataSet> record_datasets(const RootClassRecord& rec);

}  // namespace twistroot
