#include "clusterlag/ckmeans.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "clusterlag/errors.hpp"

namespace clusterlag {

double recompute_wcss(std::span<const double> values, const Partition& p) {
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - p.centroid(p.labels[i] - 1);
        total += d * d;
    }
    return total;
}

namespace {

struct SortedSeries {
    std::vector<double> v;   // ascending
    std::vector<int> order;  // original index at each sorted position
    std::vector<long double> pre, pre2; // prefix sums of mean-shifted values

    explicit SortedSeries(std::span<const double> values) {
        const int n = static_cast<int>(values.size());
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return values[a] != values[b] ? values[a] < values[b] : a < b;
        });
        v.resize(n);
        for (int i = 0; i < n; ++i)
            v[i] = values[order[i]];

        // shifting by the mean keeps the interval-cost cancellation benign
        long double mean = 0.0L;
        for (double x : v)
            mean += x;
        mean /= n;
        pre.assign(n + 1, 0.0L);
        pre2.assign(n + 1, 0.0L);
        for (int i = 0; i < n; ++i) {
            const long double s = static_cast<long double>(v[i]) - mean;
            pre[i + 1] = pre[i] + s;
            pre2[i + 1] = pre2[i] + s * s;
        }
    }

    // WCSS of the closed interval [a, b]
    long double cost(int a, int b) const {
        const long double s = pre[b + 1] - pre[a];
        const long double s2 = pre2[b + 1] - pre2[a];
        const long double w = s2 - s * s / (b - a + 1);
        return w > 0.0L ? w : 0.0L;
    }
};

// dp[j][t] = optimal cost of splitting v[0..t] into j clusters;
// split[j][t] = leftmost start of the final cluster achieving it.
struct DpTable {
    int n = 0, k_max = 0;
    std::vector<long double> dp;
    std::vector<int> split;

    long double& cost(int j, int t) { return dp[static_cast<std::size_t>(j) * n + t]; }
    int& cut(int j, int t) { return split[static_cast<std::size_t>(j) * n + t]; }
};

DpTable run_dp(const SortedSeries& s, int k_max) {
    const int n = static_cast<int>(s.v.size());
    DpTable table;
    table.n = n;
    table.k_max = k_max;
    table.dp.assign(static_cast<std::size_t>(k_max + 1) * n,
                    std::numeric_limits<long double>::infinity());
    table.split.assign(static_cast<std::size_t>(k_max + 1) * n, 0);

    for (int t = 0; t < n; ++t) {
        table.cost(1, t) = s.cost(0, t);
        table.cut(1, t) = 0;
    }
    for (int j = 2; j <= k_max; ++j) {
        for (int t = j - 1; t < n; ++t) {
            long double best = std::numeric_limits<long double>::infinity();
            int best_start = j - 1;
            for (int start = j - 1; start <= t; ++start) {
                const long double c = table.cost(j - 1, start - 1) + s.cost(start, t);
                if (c < best) {
                    best = c;
                    best_start = start;
                }
            }
            table.cost(j, t) = best;
            table.cut(j, t) = best_start;
        }
    }
    return table;
}

Partition extract(const SortedSeries& s, DpTable& table, std::span<const double> values, int k) {
    const int n = table.n;
    // recover cluster boundaries right-to-left
    std::vector<int> starts(k);
    int end = n - 1;
    for (int j = k; j >= 1; --j) {
        starts[j - 1] = table.cut(j, end);
        end = starts[j - 1] - 1;
    }

    Partition p;
    p.labels.resize(n);
    p.num_clusters = k;
    p.dim = 1;
    p.centroids.resize(k);
    for (int c = 0; c < k; ++c) {
        const int lo = starts[c];
        const int hi = (c + 1 < k) ? starts[c + 1] - 1 : n - 1;
        double mean = 0.0;
        for (int i = lo; i <= hi; ++i)
            mean += s.v[i];
        mean /= (hi - lo + 1);
        const int label = k - c; // ascending cluster c holds the (k-c)-th highest values
        for (int i = lo; i <= hi; ++i)
            p.labels[s.order[i]] = label;
        p.centroids[label - 1] = mean;
    }
    p.wcss = recompute_wcss(values, p);
    return p;
}

} // namespace

Partition ckmeans_1d(std::span<const double> values, int k) {
    const int n = static_cast<int>(values.size());
    if (n == 0)
        throw ComputeError("ckmeans_1d: empty input");
    if (k < 1 || k > n)
        throw ComputeError("ckmeans_1d: k=" + std::to_string(k) + " out of range [1, " +
                           std::to_string(n) + "]");
    SortedSeries s(values);
    DpTable table = run_dp(s, k);
    return extract(s, table, values, k);
}

std::vector<Partition> ckmeans_sweep(std::span<const double> values, int k_max) {
    const int n = static_cast<int>(values.size());
    if (n == 0)
        throw ComputeError("ckmeans_sweep: empty input");
    if (k_max < 1 || k_max > n)
        throw ComputeError("ckmeans_sweep: k_max=" + std::to_string(k_max) + " out of range [1, " +
                           std::to_string(n) + "]");
    SortedSeries s(values);
    DpTable table = run_dp(s, k_max);
    std::vector<Partition> out;
    out.reserve(k_max);
    for (int k = 1; k <= k_max; ++k)
        out.push_back(extract(s, table, values, k));
    return out;
}

} // namespace clusterlag
