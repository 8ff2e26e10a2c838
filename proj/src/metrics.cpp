#include "mcvd/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace mcvd::metrics {

namespace {

std::pair<double, double> mean_and_sample_std(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double var = 0.0;
    if (xs.size() > 1) {
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= n - 1.0;
    }
    return {mean, std::sqrt(var)};
}

}  // namespace

ReceivedSignal bin_signal(const std::vector<engine::HitRecordSet>& replications,
                          double bin_width, double t_end) {
    if (bin_width <= 0.0 || t_end <= 0.0) {
        throw std::invalid_argument("bin_signal: bin_width and t_end must be positive");
    }
    const auto bins = static_cast<std::size_t>(std::ceil(t_end / bin_width - 1e-9));
    ReceivedSignal signal;
    signal.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        signal.bin_edges[i] = std::min(static_cast<double>(i) * bin_width, t_end);
    }
    std::vector<std::vector<double>> counts(bins,
                                            std::vector<double>(replications.size(), 0.0));
    for (std::size_t r = 0; r < replications.size(); ++r) {
        for (const auto& hit : replications[r].hits) {
            // Hit times lie in (0, t_end]; a bin owns its right edge.
            auto idx = static_cast<std::size_t>(
                std::max(0.0, std::ceil(hit.time / bin_width - 1e-9) - 1.0));
            idx = std::min(idx, bins - 1);
            counts[idx][r] += 1.0;
        }
    }
    signal.mean_counts.resize(bins);
    signal.std_counts.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        auto [mean, sd] = mean_and_sample_std(counts[i]);
        signal.mean_counts[i] = mean;
        signal.std_counts[i] = sd;
    }
    return signal;
}

double itr(const engine::HitRecordSet& hits, double t_s, double t_end) {
    if (t_s > t_end) {
        throw std::invalid_argument("itr: t_s must not exceed t_end");
    }
    long long total = 0;
    long long early = 0;
    for (const auto& hit : hits.hits) {
        if (hit.time <= t_end) {
            ++total;
            if (hit.time <= t_s) {
                ++early;
            }
        }
    }
    if (total == 0) {
        throw UndefinedMetricError("itr: no molecules received");
    }
    return static_cast<double>(total - early) / static_cast<double>(total);
}

ItrResult aggregate(const std::vector<double>& per_replication_itr) {
    if (per_replication_itr.empty()) {
        throw std::invalid_argument("aggregate: need at least one replication");
    }
    ItrResult res;
    auto [mean, sd] = mean_and_sample_std(per_replication_itr);
    res.itr_mean = mean;
    res.itr_std = sd;
    res.replications = static_cast<int>(per_replication_itr.size());
    return res;
}

std::pair<double, double> hemisphere_fractions(const engine::HitRecordSet& hits,
                                               const geometry::Point3& axis,
                                               const geometry::Point3& rx_center) {
    if (hits.hits.empty()) {
        throw UndefinedMetricError("hemisphere_fractions: no hits");
    }
    long long back = 0;
    for (const auto& hit : hits.hits) {
        const double dot = (hit.position.x - rx_center.x) * axis.x +
                           (hit.position.y - rx_center.y) * axis.y +
                           (hit.position.z - rx_center.z) * axis.z;
        if (dot > 0.0) {
            ++back;  // past the Rx center, away from the Tx
        }
    }
    const double back_frac = static_cast<double>(back) / static_cast<double>(hits.hits.size());
    return {1.0 - back_frac, back_frac};
}

SweepResult find_optimal_renz(const std::vector<ItrResult>& grid) {
    if (grid.empty()) {
        throw std::invalid_argument("find_optimal_renz: empty grid");
    }
    SweepResult sweep;
    sweep.grid = grid;
    std::size_t best = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i].itr_mean < grid[best].itr_mean) {
            best = i;
        }
    }
    sweep.r_enz_star = grid[best].enzyme_radius;
    sweep.itr_min = grid[best].itr_mean;
    return sweep;
}

LineFit fit_renz_star_vs_distance(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) {
        throw std::invalid_argument("fit: need at least two points");
    }
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
    }
    const double n = static_cast<double>(points.size());
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("fit: all distances are equal");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

}  // namespace mcvd::metrics
