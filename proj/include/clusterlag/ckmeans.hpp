#pragma once

#include <span>
#include <vector>

#include "clusterlag/partition.hpp"

namespace clusterlag {

// Globally optimal univariate k-means via dynamic programming over the
// sorted sequence (clusters of an optimal solution are intervals in sorted
// order). O(k n^2) with O(1) interval costs from prefix sums.
Partition ckmeans_1d(std::span<const double> values, int k);

// One DP table, every k in 1..k_max. Returns partitions indexed by k-1;
// useful when scanning cluster counts on the same data.
std::vector<Partition> ckmeans_sweep(std::span<const double> values, int k_max);

} // namespace clusterlag
