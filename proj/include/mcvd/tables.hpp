#pragma once

#include <string>
#include <vector>

#include "mcvd/engine.hpp"
#include "mcvd/metrics.hpp"

namespace mcvd::io {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OptimumRow {
    double distance = 0.0;
    double symbol_period = 0.0;
    double unit_half_life = 0.0;  // orders the rows; not serialized
    double r_enz_star = 0.0;
    double itr_min = 0.0;
};

/// All numeric fields are serialized with 9 significant digits.
std::string format_number(double v);

// CSV emitters. Rows are written in the order given; callers sort
// canonically so outputs are byte-stable regardless of thread count.
void write_signal_csv(const std::string& path, const metrics::ReceivedSignal& signal);
void write_itr_csv(const std::string& path, const std::vector<metrics::ItrResult>& rows);
void write_hits_csv(const std::string& path,
                    const std::vector<engine::HitRecordSet>& replications);
void write_optimum_csv(const std::string& path, const std::vector<OptimumRow>& rows);

/// Sorts by (scenario, d, r_enz, t_s, half_life).
void sort_canonically(std::vector<metrics::ItrResult>& rows);

}  // namespace mcvd::io
