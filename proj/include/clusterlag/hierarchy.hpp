#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clusterlag/partition.hpp"

namespace clusterlag {

enum class Linkage { Average, Complete, Ward };

Linkage linkage_from_string(const std::string& name);
std::string to_string(Linkage linkage);

// One agglomeration step. Node ids follow the usual convention: leaves are
// 0..n-1 and the cluster created at step s gets id n+s. left < right.
struct Merge {
    int step = 0;
    int left = 0;
    int right = 0;
    double height = 0.0;
    int size = 0; // leaves under the merged cluster
};

struct Dendrogram {
    int leaves = 0;
    std::vector<Merge> merges;       // n-1 entries, heights non-decreasing
    std::vector<std::string> labels; // per leaf; may be empty
};

// Agglomerative clustering of a symmetric nonnegative distance matrix with a
// zero diagonal. Ties break on the lowest cluster-id pair, so results are
// deterministic.
Dendrogram hierarchical(const Eigen::MatrixXd& dist, Linkage linkage);

// The k groups left after undoing the k-1 highest merges. Labels are 1..k in
// order of first appearance over the leaves; no centroids.
Partition cut_dendrogram(const Dendrogram& dendro, int k);

std::string to_newick(const Dendrogram& dendro);
std::string to_json(const Dendrogram& dendro);

} // namespace clusterlag
