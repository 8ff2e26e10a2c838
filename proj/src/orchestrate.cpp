#include "mcvd/orchestrate.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mcvd::orchestrate {

namespace {

template <typename T>
std::vector<T> axis_or(const std::vector<T>& axis, T base_value) {
    return axis.empty() ? std::vector<T>{base_value} : axis;
}

metrics::ItrResult itr_point(const engine::SimulationConfig& cfg, double t_s,
                             const std::vector<engine::HitRecordSet>& reps) {
    std::vector<double> values;
    values.reserve(reps.size());
    for (const auto& rep : reps) {
        values.push_back(metrics::itr(rep, t_s, cfg.t_end));
    }
    auto res = metrics::aggregate(values);
    res.scenario = cfg.scenario;
    res.distance = cfg.distance;
    res.enzyme_radius = cfg.enzyme_radius;
    res.symbol_period = t_s;
    res.unit_half_life = cfg.unit_half_life;
    return res;
}

std::vector<metrics::ItrResult> sweep_impl(const io::ExperimentPlan& plan) {
    const auto scenarios = axis_or(plan.scenarios, plan.base.scenario);
    const auto distances = axis_or(plan.distances, plan.base.distance);
    const auto radii = axis_or(plan.enzyme_radii, plan.base.enzyme_radius);
    const auto periods = axis_or(plan.symbol_periods, plan.base.symbol_period);
    const auto half_lives = axis_or(plan.half_lives, plan.base.unit_half_life);

    std::vector<metrics::ItrResult> rows;
    for (auto scenario : scenarios) {
        for (double d : distances) {
            for (double r_enz : radii) {
                for (double hl : half_lives) {
                    engine::SimulationConfig cfg = plan.base;
                    cfg.scenario = scenario;
                    cfg.distance = d;
                    cfg.enzyme_radius = r_enz;
                    cfg.unit_half_life = hl;
                    cfg.bit_sequence = {1};  // single emission for ITR
                    const auto reps = engine::run_experiment(cfg, plan.threads);
                    for (double t_s : periods) {
                        rows.push_back(itr_point(cfg, t_s, reps));
                    }
                }
            }
        }
    }
    io::sort_canonically(rows);
    return rows;
}

}  // namespace

std::vector<metrics::ItrResult> run_sweep(const io::ExperimentPlan& plan) {
    return sweep_impl(plan);
}

std::vector<io::OptimumRow> run_optimum(const io::ExperimentPlan& plan) {
    io::ExperimentPlan single = plan;
    single.scenarios = {plan.base.scenario};
    const auto rows = sweep_impl(single);

    // Group rows by (d, t_s, half_life) and find the argmin over r_enz.
    std::map<std::tuple<double, double, double>, std::vector<metrics::ItrResult>> groups;
    for (const auto& row : rows) {
        groups[{row.distance, row.symbol_period, row.unit_half_life}].push_back(row);
    }
    std::vector<io::OptimumRow> out;
    for (auto& [key, grid] : groups) {
        std::sort(grid.begin(), grid.end(), [](const auto& a, const auto& b) {
            return a.enzyme_radius < b.enzyme_radius;
        });
        const auto sweep = metrics::find_optimal_renz(grid);
        io::OptimumRow row;
        row.distance = std::get<0>(key);
        row.symbol_period = std::get<1>(key);
        row.unit_half_life = std::get<2>(key);
        row.r_enz_star = sweep.r_enz_star;
        row.itr_min = sweep.itr_min;
        out.push_back(row);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(a.distance, a.symbol_period, a.unit_half_life) <
               std::make_tuple(b.distance, b.symbol_period, b.unit_half_life);
    });
    return out;
}

SimulateOutput run_simulate(const io::ExperimentPlan& plan) {
    SimulateOutput out;
    out.replications = engine::run_experiment(plan.base, plan.threads);
    out.signal = metrics::bin_signal(out.replications, plan.base.signal_bin_width,
                                     plan.base.t_end);
    engine::SimulationConfig single = plan.base;
    single.bit_sequence = {1};
    const auto reps = engine::run_experiment(single, plan.threads);
    out.itr = itr_point(single, single.symbol_period, reps);
    return out;
}

}  // namespace mcvd::orchestrate
