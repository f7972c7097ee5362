#pragma once

#include <span>
#include <vector>

namespace clusterlag {

// Assignment of n elements to k ordered clusters. Cluster ids are 1..k with
// 1 the highest-valued cluster (centroids are stored in that order, i.e.
// descending by mean). Dendrogram cuts reuse this type with no centroids.
struct Partition {
    std::vector<int> labels; // per element, 1..k
    int num_clusters = 0;
    std::vector<double> centroids; // k * dim, row-major, descending by mean
    int dim = 0;
    double wcss = 0.0;
    bool empty_cluster_repaired = false;

    int k() const { return num_clusters; }
    double centroid(int cluster, int component = 0) const {
        return centroids[static_cast<std::size_t>(cluster) * dim + component];
    }
    double centroid_mean(int cluster) const {
        double s = 0.0;
        for (int c = 0; c < dim; ++c)
            s += centroid(cluster, c);
        return s / dim;
    }
};

// Total within-cluster sum of squared distances to centroids, recomputed
// directly from the data (univariate).
double recompute_wcss(std::span<const double> values, const Partition& p);

} // namespace clusterlag
