#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clusterlag/partition.hpp"

namespace clusterlag {

// n points of dimension dim, row-major.
struct PointsView {
    std::span<const double> data;
    int dim = 1;

    int size() const { return dim > 0 ? static_cast<int>(data.size()) / dim : 0; }
    std::span<const double> point(int i) const {
        return data.subspan(static_cast<std::size_t>(i) * dim, dim);
    }
};

struct LloydOptions {
    int restarts = 10;
    int max_iter = 300;
    double tol = 1e-6; // relative objective improvement
    std::uint64_t seed = 0;
};

// Best-of-restarts Lloyd iteration with k-means++ seeding. Deterministic for
// a fixed seed. Clusters are relabelled 1..k by descending centroid mean.
// If an update empties a cluster it is reseeded at the point farthest from
// its assigned centroid and the partition is flagged as repaired.
// objective_trace, when given, receives the winning restart's objective after
// each update step (non-increasing).
Partition lloyd_kmeans(PointsView points, int k, const LloydOptions& options = {},
                       std::vector<double>* objective_trace = nullptr);

} // namespace clusterlag
