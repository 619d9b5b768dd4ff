#pragma once

#include <optional>
#include <vector>

#include "twistroot/dataset.hpp"

namespace twistroot {

struct EnumQuery {
    i64 genus = 0;
    i64 degree = 1;
    // Required count of distinguished residues; data sets are enumerated with
    // exactly this many marked fixed points (0 = plain actions).
    i64 r = 0;
    // Required multiset of distinguished orbit sizes (for enumerate_permuting).
    std::vector<i64> orbit_sizes;
};

// All canonical data sets of the given genus, degree and residue count, in
// canonical (sorted) order.  Deterministic; no duplicates.
std::vector<DataSet> enumerate_datasets(const EnumQuery& q);

// All permuting data sets over enumerate_datasets(q) whose orbit distribution
// realizes exactly q.orbit_sizes.  Throws std::invalid_argument when a
// required size cannot divide the degree (UnrealizableOrbitSize).
std::vector<PermutingDataSet> enumerate_permuting(const EnumQuery& q);

// Orbit distributions on a fixed data set realizing the size multiset.
std::vector<OrbitDistribution> orbit_distributions(const DataSet& d, std::vector<i64> sizes);

// Unpruned reference enumerator; guarded to degree <= 12, genus <= 2
// (QueryTooLarge as std::invalid_argument).  Test oracle only.
std::vector<DataSet> naive_enumerate(const EnumQuery& q);

}  // namespace twistroot
