#pragma once

#include <vector>

#include "mcvd/config.hpp"
#include "mcvd/metrics.hpp"
#include "mcvd/tables.hpp"

namespace mcvd::orchestrate {

/// ITR over the plan's sweep grid. Each grid point runs a single-emission
/// experiment (one impulse at t = 0, observed until t_end); ITR for every
/// configured t_s is computed from the same hit records and averaged
/// across replications. Rows come back in canonical order.
std::vector<metrics::ItrResult> run_sweep(const io::ExperimentPlan& plan);

/// r_enz* search: for every (d, t_s, half_life) combination, sweeps the
/// plan's r_enz grid and reports the argmin. Uses the first scenario.
std::vector<io::OptimumRow> run_optimum(const io::ExperimentPlan& plan);

struct SimulateOutput {
    std::vector<engine::HitRecordSet> replications;  // multi-symbol run
    metrics::ReceivedSignal signal;
    metrics::ItrResult itr;  // from a single-emission companion run
};

SimulateOutput run_simulate(const io::ExperimentPlan& plan);

}  // namespace mcvd::orchestrate
