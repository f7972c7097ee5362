#include "clusterlag/panel.hpp"

#include <algorithm>
#include <cmath>

#include "clusterlag/errors.hpp"

namespace clusterlag {

int CountPanel::date_index(Date d) const {
    if (dates.empty() || d < dates.front() || d > dates.back())
        return -1;
    return d - dates.front();
}

CountPanel preprocess(std::vector<double> raw, std::vector<std::string> entities,
                      std::vector<Date> dates) {
    const std::size_t n = entities.size();
    const std::size_t T = dates.size();
    if (raw.size() != n * T)
        throw ComputeError("preprocess: value buffer does not match n x T");
    for (std::size_t t = 1; t < T; ++t) {
        if (dates[t] - dates[t - 1] != 1)
            throw ComputeError("preprocess: dates must be contiguous daily (gap before " +
                               dates[t].iso() + ")");
    }
    if (!std::is_sorted(entities.begin(), entities.end()))
        throw ComputeError("preprocess: entities must be sorted ascending");

    CountPanel panel;
    panel.entities = std::move(entities);
    panel.dates = std::move(dates);
    panel.floored.assign(raw.size(), 0);
    for (std::size_t idx = 0; idx < raw.size(); ++idx) {
        double v = raw[idx];
        if (std::isnan(v) || v == 0.0) {
            raw[idx] = 1.0;
            panel.floored[idx] = 1;
        } else if (v < 0.0) {
            throw ComputeError("preprocess: negative count " + std::to_string(v));
        }
    }
    panel.values = std::move(raw);
    return panel;
}

LogPanel log_transform(const CountPanel& panel) {
    LogPanel out;
    out.entities = panel.entities;
    out.dates = panel.dates;
    out.values.resize(panel.values.size());
    for (std::size_t idx = 0; idx < panel.values.size(); ++idx) {
        const double v = panel.values[idx];
        if (v < 1.0)
            throw ComputeError("log_transform: value " + std::to_string(v) +
                               " below 1; panel was not preprocessed");
        out.values[idx] = std::log(v);
    }
    return out;
}

RollingPanel rolling_window(const LogPanel& panel, int w) {
    const int n = panel.n();
    const int T = panel.T();
    if (w < 1)
        throw ComputeError("rolling_window: window must be >= 1");
    if (w > T)
        throw ComputeError("rolling_window: window " + std::to_string(w) +
                           " exceeds series length " + std::to_string(T));

    RollingPanel out;
    out.entities = panel.entities;
    out.dates = panel.dates;
    out.window = w;
    out.values.resize(static_cast<std::size_t>(n) * T * w);
    for (int t = 0; t < T; ++t) {
        for (int i = 0; i < n; ++i) {
            double* dst = out.values.data() + (static_cast<std::size_t>(t) * n + i) * w;
            for (int c = 0; c < w; ++c) {
                const int src_t = std::max(0, t - w + 1 + c);
                dst[c] = panel.value(i, src_t);
            }
        }
    }
    return out;
}

} // namespace clusterlag
