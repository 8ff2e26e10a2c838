#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "mcvd/analytic.hpp"
#include "mcvd/config.hpp"
#include "mcvd/orchestrate.hpp"
#include "mcvd/tables.hpp"

namespace {

namespace fs = std::filesystem;
using namespace mcvd;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io::IoError("io error: cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Overrides {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> reps;
    std::optional<int> threads;
    bool dump_hits = false;
};

void add_common(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("--config", ov.config_path, "experiment plan file")->required();
    cmd->add_option("--out", ov.out_dir, "output directory");
    cmd->add_option("--seed", ov.seed, "master seed override");
    cmd->add_option("--reps", ov.reps, "replication count override");
    cmd->add_option("--threads", ov.threads, "worker thread budget");
    cmd->add_flag("--dump-hits", ov.dump_hits, "also write raw hits.csv");
}

io::ExperimentPlan load_plan(const Overrides& ov) {
    io::ExperimentPlan plan = io::parse_config(read_file(ov.config_path));
    if (!ov.out_dir.empty()) plan.out_dir = ov.out_dir;
    if (ov.seed) plan.base.master_seed = *ov.seed;
    if (ov.reps) plan.base.replications = *ov.reps;
    if (ov.threads) plan.threads = *ov.threads;
    if (ov.dump_hits) plan.dump_hits = true;
    fs::create_directories(plan.out_dir);
    return plan;
}

std::vector<double> renz_grid_or_default(const io::ExperimentPlan& plan) {
    if (!plan.enzyme_radii.empty()) {
        return plan.enzyme_radii;
    }
    std::vector<double> grid;
    for (double r = 2.0; r <= 26.0; r += 2.0) {
        grid.push_back(r);
    }
    return grid;
}

int cmd_geometry(const Overrides& ov) {
    auto plan = load_plan(ov);
    const auto radii = renz_grid_or_default(plan);
    std::ofstream out(fs::path(plan.out_dir) / "geometry.csv");
    if (!out) {
        throw io::IoError("io error: cannot write geometry.csv");
    }
    out << "scenario,d_um,r_enz_um,v_lp_um3,v_totenz_um3,half_life_eff_s\n";
    const auto distances = plan.distances.empty()
                               ? std::vector<double>{plan.base.distance}
                               : plan.distances;
    for (auto scenario : plan.scenarios) {
        for (double d : distances) {
            for (double r_enz : radii) {
                engine::SimulationConfig cfg = plan.base;
                cfg.scenario = scenario;
                cfg.distance = d;
                cfg.enzyme_radius = r_enz;
                const auto setup = engine::build_scenario(cfg);
                const double v_lp = geometry::overlap_volume(setup.geom);
                const double v_tot = setup.geom.enzyme
                                         ? geometry::total_enzyme_volume(setup.geom)
                                         : 0.0;
                const double hl = setup.kin ? setup.kin->effective_half_life : 0.0;
                out << engine::scenario_name(scenario) << ',' << io::format_number(d)
                    << ',' << io::format_number(r_enz) << ',' << io::format_number(v_lp)
                    << ',' << io::format_number(v_tot) << ',' << io::format_number(hl)
                    << '\n';
            }
        }
    }
    return 0;
}

int cmd_simulate(const Overrides& ov) {
    auto plan = load_plan(ov);
    const auto result = orchestrate::run_simulate(plan);
    io::write_signal_csv((fs::path(plan.out_dir) / "signal.csv").string(), result.signal);
    io::write_itr_csv((fs::path(plan.out_dir) / "itr.csv").string(), {result.itr});
    if (plan.dump_hits) {
        io::write_hits_csv((fs::path(plan.out_dir) / "hits.csv").string(),
                           result.replications);
    }
    return 0;
}

int cmd_sweep(const Overrides& ov) {
    auto plan = load_plan(ov);
    const auto rows = orchestrate::run_sweep(plan);
    io::write_itr_csv((fs::path(plan.out_dir) / "itr.csv").string(), rows);
    return 0;
}

int cmd_optimum(const Overrides& ov) {
    auto plan = load_plan(ov);
    plan.enzyme_radii = renz_grid_or_default(plan);
    const auto rows = orchestrate::run_optimum(plan);
    io::write_optimum_csv((fs::path(plan.out_dir) / "optimum.csv").string(), rows);

    // OLS of r_enz* against distance, one fit per (t_s, half_life).
    std::map<std::pair<double, double>, std::vector<std::pair<double, double>>> groups;
    for (const auto& row : rows) {
        groups[{row.symbol_period, row.unit_half_life}].emplace_back(row.distance,
                                                                     row.r_enz_star);
    }
    for (const auto& [key, points] : groups) {
        if (points.size() < 2) {
            continue;
        }
        const auto fit = metrics::fit_renz_star_vs_distance(points);
        std::cout << "fit t_s=" << io::format_number(key.first)
                  << " half_life=" << io::format_number(key.second)
                  << " slope=" << io::format_number(fit.slope)
                  << " intercept=" << io::format_number(fit.intercept) << "\n";
    }
    return 0;
}

struct AnalyticOpts {
    double d = 4.0;
    double r_r = 5.0;
    double D = 100.0;
    double lambda = 0.0;
    double t_max = 2.0;
    int points = 400;
    std::string out_path = "analytic.csv";
};

int cmd_analytic(const AnalyticOpts& opts) {
    analytic::ChannelParams params{opts.d, opts.r_r, opts.D, opts.lambda};
    std::ofstream out(opts.out_path);
    if (!out) {
        throw io::IoError("io error: cannot write '" + opts.out_path + "'");
    }
    out << "t_s,h,F\n";
    for (int i = 1; i <= opts.points; ++i) {
        const double t = opts.t_max * static_cast<double>(i) / opts.points;
        const double h = analytic::hit_rate_enzyme(t, params);
        const double F = opts.lambda == 0.0 ? analytic::hit_cdf(t, params)
                                            : analytic::hit_cdf_enzyme(t, params);
        out << io::format_number(t) << ',' << io::format_number(h) << ','
            << io::format_number(F) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo simulator for enzymatic molecular-communication channels"};
    app.require_subcommand(1);

    Overrides geom_ov, sim_ov, sweep_ov, opt_ov;
    AnalyticOpts an;

    auto* geom = app.add_subcommand("geometry", "enzyme-volume and half-life tables");
    add_common(geom, geom_ov);
    auto* sim = app.add_subcommand("simulate", "run one configuration");
    add_common(sim, sim_ov);
    auto* sweep = app.add_subcommand("sweep", "ITR over a parameter grid");
    add_common(sweep, sweep_ov);
    auto* optimum = app.add_subcommand("optimum", "r_enz* search and distance fits");
    add_common(optimum, opt_ov);

    auto* analytic_cmd = app.add_subcommand("analytic", "closed-form channel curves");
    analytic_cmd->add_option("--d", an.d, "Tx-to-Rx-surface distance (um)");
    analytic_cmd->add_option("--r-r", an.r_r, "receiver radius (um)");
    analytic_cmd->add_option("--D", an.D, "diffusion coefficient (um^2/s)");
    analytic_cmd->add_option("--lambda", an.lambda, "degradation factor (1/s)");
    analytic_cmd->add_option("--t-max", an.t_max, "time horizon (s)");
    analytic_cmd->add_option("--points", an.points, "sample count");
    analytic_cmd->add_option("--out", an.out_path, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (geom->parsed()) return cmd_geometry(geom_ov);
        if (sim->parsed()) return cmd_simulate(sim_ov);
        if (sweep->parsed()) return cmd_sweep(sweep_ov);
        if (optimum->parsed()) return cmd_optimum(opt_ov);
        if (analytic_cmd->parsed()) return cmd_analytic(an);
    } catch (const io::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const engine::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const io::IoError& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return 3;
    } catch (const analytic::NumericError& e) {
        std::cerr << "error: numeric: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
