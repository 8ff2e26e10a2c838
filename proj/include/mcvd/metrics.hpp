#pragma once

#include <utility>
#include <vector>

#include "mcvd/engine.hpp"

namespace mcvd::metrics {

struct UndefinedMetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-bin mean and standard deviation of received-molecule counts across
/// replications. Bins tile (0, t_end].
struct ReceivedSignal {
    std::vector<double> bin_edges;  // size = bins + 1
    std::vector<double> mean_counts;
    std::vector<double> std_counts;
};

ReceivedSignal bin_signal(const std::vector<engine::HitRecordSet>& replications,
                          double bin_width, double t_end);

/// Interference-to-total-received ratio for a single-emission hit record:
/// (F(t_end) - F(t_s)) / F(t_end), with F(t) = hits no later than t.
/// Throws UndefinedMetricError when no molecule was received at all.
double itr(const engine::HitRecordSet& hits, double t_s, double t_end);

struct ItrResult {
    engine::Scenario scenario = engine::Scenario::StArx;
    double distance = 0.0;
    double enzyme_radius = 0.0;
    double symbol_period = 0.0;
    double unit_half_life = 0.0;
    double itr_mean = 0.0;
    double itr_std = 0.0;
    int replications = 0;
};

/// Mean and sample standard deviation over per-replication ITR values.
ItrResult aggregate(const std::vector<double>& per_replication_itr);

/// Fraction of hits on the Tx-facing (front) and opposite (back)
/// hemisphere of the Rx. axis is the unit vector from Tx toward Rx.
std::pair<double, double> hemisphere_fractions(const engine::HitRecordSet& hits,
                                               const geometry::Point3& axis,
                                               const geometry::Point3& rx_center = {});

struct SweepResult {
    std::vector<ItrResult> grid;
    double r_enz_star = 0.0;
    double itr_min = 0.0;
};

/// Argmin of itr_mean over an r_enz grid; ties go to the smaller radius.
SweepResult find_optimal_renz(const std::vector<ItrResult>& grid);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares of r_enz_star against distance.
LineFit fit_renz_star_vs_distance(const std::vector<std::pair<double, double>>& points);

}  // namespace mcvd::metrics
