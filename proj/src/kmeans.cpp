#include "clusterlag/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "clusterlag/errors.hpp"

namespace clusterlag {

namespace {

// splitmix64; decorrelates per-restart streams from one seed
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double sq_dist(std::span<const double> a, const double* b, int dim) {
    double s = 0.0;
    for (int c = 0; c < dim; ++c) {
        const double d = a[c] - b[c];
        s += d * d;
    }
    return s;
}

struct RunResult {
    std::vector<int> assign; // 0-based cluster per point
    std::vector<double> centers;
    double objective = std::numeric_limits<double>::infinity();
    bool repaired = false;
    std::vector<double> trace;
};

void seed_plus_plus(PointsView pts, int k, std::mt19937_64& rng, std::vector<double>& centers) {
    const int n = pts.size();
    const int dim = pts.dim;
    std::uniform_int_distribution<int> first(0, n - 1);
    centers.assign(static_cast<std::size_t>(k) * dim, 0.0);
    auto set_center = [&](int c, int point) {
        std::copy_n(pts.point(point).data(), dim, centers.begin() + static_cast<std::size_t>(c) * dim);
    };
    set_center(0, first(rng));

    std::vector<double> min_sq(n);
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (int j = 0; j < c; ++j)
                best = std::min(best, sq_dist(pts.point(i), centers.data() + static_cast<std::size_t>(j) * dim, dim));
            min_sq[i] = best;
            total += best;
        }
        int chosen = 0;
        if (total > 0.0) {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            const double target = unit(rng) * total;
            double acc = 0.0;
            chosen = n - 1;
            for (int i = 0; i < n; ++i) {
                acc += min_sq[i];
                if (acc >= target) {
                    chosen = i;
                    break;
                }
            }
        } else {
            // all remaining points coincide with a center
            std::uniform_int_distribution<int> any(0, n - 1);
            chosen = any(rng);
        }
        set_center(c, chosen);
    }
}

RunResult lloyd_once(PointsView pts, int k, std::uint64_t seed, const LloydOptions& opt) {
    const int n = pts.size();
    const int dim = pts.dim;
    std::mt19937_64 rng(seed);

    RunResult r;
    seed_plus_plus(pts, k, rng, r.centers);
    r.assign.assign(n, 0);
    std::vector<double> sums(static_cast<std::size_t>(k) * dim);
    std::vector<int> counts(k);

    double prev = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < opt.max_iter; ++iter) {
        // assignment step (ties to the lowest cluster index)
        double objective = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            int arg = 0;
            for (int c = 0; c < k; ++c) {
                const double d = sq_dist(pts.point(i), r.centers.data() + static_cast<std::size_t>(c) * dim, dim);
                if (d < best) {
                    best = d;
                    arg = c;
                }
            }
            r.assign[i] = arg;
            objective += best;
        }

        // empty-cluster repair: move the worst-fit point into the empty slot
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < n; ++i)
            ++counts[r.assign[i]];
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0)
                continue;
            int farthest = -1;
            double far_d = -1.0;
            for (int i = 0; i < n; ++i) {
                if (counts[r.assign[i]] <= 1)
                    continue;
                const double d = sq_dist(pts.point(i),
                                         r.centers.data() + static_cast<std::size_t>(r.assign[i]) * dim, dim);
                if (d > far_d) {
                    far_d = d;
                    farthest = i;
                }
            }
            if (farthest < 0)
                break; // fewer distinct points than clusters; leave empty
            --counts[r.assign[farthest]];
            r.assign[farthest] = c;
            ++counts[c];
            r.repaired = true;
        }

        // update step
        std::fill(sums.begin(), sums.end(), 0.0);
        for (int i = 0; i < n; ++i) {
            const auto p = pts.point(i);
            double* dst = sums.data() + static_cast<std::size_t>(r.assign[i]) * dim;
            for (int c = 0; c < dim; ++c)
                dst[c] += p[c];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] == 0)
                continue;
            for (int d = 0; d < dim; ++d)
                r.centers[static_cast<std::size_t>(c) * dim + d] =
                    sums[static_cast<std::size_t>(c) * dim + d] / counts[c];
        }

        r.trace.push_back(objective);
        r.objective = objective;
        if (prev - objective <= opt.tol * std::max(objective, 1e-300) && iter > 0)
            break;
        prev = objective;
    }

    // report the objective of the returned (assignment, centers) pair
    double objective = 0.0;
    for (int i = 0; i < n; ++i)
        objective += sq_dist(pts.point(i), r.centers.data() + static_cast<std::size_t>(r.assign[i]) * dim,
                             pts.dim);
    r.objective = objective;
    return r;
}

} // namespace

Partition lloyd_kmeans(PointsView points, int k, const LloydOptions& options,
                       std::vector<double>* objective_trace) {
    const int n = points.size();
    if (n == 0 || points.dim < 1)
        throw ComputeError("lloyd_kmeans: empty input");
    if (k < 1 || k > n)
        throw ComputeError("lloyd_kmeans: k=" + std::to_string(k) + " out of range [1, " +
                           std::to_string(n) + "]");
    if (options.restarts < 1)
        throw ComputeError("lloyd_kmeans: restarts must be >= 1");

    RunResult best;
    for (int restart = 0; restart < options.restarts; ++restart) {
        RunResult r = lloyd_once(points, k, mix_seed(options.seed, restart), options);
        if (r.objective < best.objective)
            best = std::move(r);
    }

    // order clusters by descending centroid mean, ties by original index
    const int dim = points.dim;
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> means(k);
    for (int c = 0; c < k; ++c) {
        double s = 0.0;
        for (int d = 0; d < dim; ++d)
            s += best.centers[static_cast<std::size_t>(c) * dim + d];
        means[c] = s / dim;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return means[a] > means[b]; });
    std::vector<int> label_of(k);
    for (int rank = 0; rank < k; ++rank)
        label_of[order[rank]] = rank + 1;

    Partition p;
    p.num_clusters = k;
    p.dim = dim;
    p.empty_cluster_repaired = best.repaired;
    p.labels.resize(n);
    for (int i = 0; i < n; ++i)
        p.labels[i] = label_of[best.assign[i]];
    p.centroids.resize(static_cast<std::size_t>(k) * dim);
    for (int c = 0; c < k; ++c)
        std::copy_n(best.centers.begin() + static_cast<std::size_t>(order[c]) * dim, dim,
                    p.centroids.begin() + static_cast<std::size_t>(c) * dim);
    p.wcss = best.objective;
    if (objective_trace)
        *objective_trace = best.trace;
    return p;
}

} // namespace clusterlag
