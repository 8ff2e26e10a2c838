#include "mcvd/engine.hpp"

#include <cmath>

#include "mcvd/parallel.hpp"

namespace mcvd::engine {

namespace {

struct ScenarioTraits {
    const char* name;
    bool sphere_tx;
    bool enzymes;
};

constexpr ScenarioTraits kTraits[] = {
    {"PT-ARx", false, true},        {"PT-ATx", false, true},
    {"ST-ARx", true, true},         {"ST-ATx", true, true},
    {"everywhere-PT", false, true}, {"everywhere-ST", true, true},
    {"none-PT", false, false},      {"none-ST", true, false},
};

const ScenarioTraits& traits(Scenario s) { return kTraits[static_cast<int>(s)]; }

geometry::ChannelGeometry make_geometry(const SimulationConfig& cfg, double r_enz) {
    using namespace geometry;
    ChannelGeometry geom;
    geom.surface_distance = cfg.distance;
    geom.rx = SphereBody{{0.0, 0.0, 0.0}, cfg.rx_radius, BodyBehavior::Absorbing};
    if (traits(cfg.scenario).sphere_tx) {
        geom.tx = SphereBody{{cfg.distance + 2.0 * cfg.rx_radius, 0.0, 0.0},
                             cfg.rx_radius, BodyBehavior::Reflecting};
    } else {
        geom.tx = SphereBody{{cfg.distance + cfg.rx_radius, 0.0, 0.0}, 0.0,
                             BodyBehavior::PassivePoint};
    }
    switch (cfg.scenario) {
        case Scenario::PtArx:
        case Scenario::StArx:
            geom.enzyme = EnzymeRegion{geom.rx.center, cfg.rx_radius + r_enz,
                                       EnzymeAnchor::AroundRx};
            break;
        case Scenario::PtAtx:
        case Scenario::StAtx:
            // Extended radius measured beyond the anchor body's surface; a
            // point Tx has zero body radius, so its region radius is r_enz.
            geom.enzyme = EnzymeRegion{geom.tx.center, geom.tx.radius + r_enz,
                                       EnzymeAnchor::AroundTx};
            break;
        case Scenario::EverywherePt:
        case Scenario::EverywhereSt:
            geom.enzyme = EnzymeRegion{geom.rx.center, cfg.everywhere_radius,
                                       EnzymeAnchor::Everywhere};
            break;
        case Scenario::NonePt:
        case Scenario::NoneSt:
            break;
    }
    return geom;
}

void validate(const SimulationConfig& cfg) {
    if (cfg.diffusion <= 0.0) throw ConfigError("config: D must be positive");
    if (cfg.rx_radius <= 0.0) throw ConfigError("config: r_r must be positive");
    if (cfg.distance <= 0.0) throw ConfigError("config: d must be positive");
    if (cfg.molecules_per_symbol <= 0) throw ConfigError("config: molecules must be positive");
    if (cfg.symbol_period <= 0.0) throw ConfigError("config: t_s must be positive");
    if (cfg.t_end <= 0.0) throw ConfigError("config: t_end must be positive");
    if (cfg.symbol_period > cfg.t_end) throw ConfigError("config: t_s must not exceed t_end");
    if (cfg.time_step <= 0.0) throw ConfigError("config: delta_t must be positive");
    if (cfg.replications < 1) throw ConfigError("config: replications must be >= 1");
    if (cfg.signal_bin_width <= 0.0) throw ConfigError("config: bin_width must be positive");
    if (traits(cfg.scenario).enzymes) {
        if (cfg.enzyme_radius <= 0.0) throw ConfigError("config: r_enz must be positive");
        if (cfg.unit_half_life <= 0.0) throw ConfigError("config: half_life must be positive");
        if ((cfg.scenario == Scenario::EverywherePt || cfg.scenario == Scenario::EverywhereSt) &&
            cfg.everywhere_radius <= 0.0) {
            throw ConfigError("config: everywhere_radius must be positive");
        }
    }
    for (int b : cfg.bit_sequence) {
        if (b != 0 && b != 1) throw ConfigError("config: bits must be 0 or 1");
    }
}

}  // namespace

const char* scenario_name(Scenario s) { return traits(s).name; }

std::optional<Scenario> scenario_from_name(const std::string& name) {
    for (int i = 0; i < 8; ++i) {
        if (name == kTraits[i].name) {
            return static_cast<Scenario>(i);
        }
    }
    return std::nullopt;
}

bool scenario_has_sphere_tx(Scenario s) { return traits(s).sphere_tx; }
bool scenario_has_enzymes(Scenario s) { return traits(s).enzymes; }

ScenarioSetup build_scenario(const SimulationConfig& cfg) {
    validate(cfg);
    ScenarioSetup setup;
    setup.geom = make_geometry(cfg, cfg.enzyme_radius);
    if (traits(cfg.scenario).enzymes) {
        const double v_tot = geometry::total_enzyme_volume(setup.geom);
        // Reference volume: the same scenario at r_enz = 1 um. "Everywhere"
        // borrows the around-Rx reference so every scenario normalizes to
        // one physical enzyme amount.
        SimulationConfig ref_cfg = cfg;
        if (cfg.scenario == Scenario::EverywherePt) ref_cfg.scenario = Scenario::PtArx;
        if (cfg.scenario == Scenario::EverywhereSt) ref_cfg.scenario = Scenario::StArx;
        const double v_ref = geometry::total_enzyme_volume(make_geometry(ref_cfg, 1.0));
        setup.kin = kinetics::make_spec(cfg.unit_half_life, v_tot, v_ref);
    }
    setup.diffusion = cfg.diffusion;
    // Emission from the Tx point, which for a sphere Tx is the surface
    // point nearest the Rx; both sit at gap distance d from the Rx surface.
    setup.emission_point = {cfg.distance + cfg.rx_radius, 0.0, 0.0};

    std::vector<int> bits = cfg.bit_sequence;
    if (bits.empty()) {
        const auto n = static_cast<std::size_t>(
            std::max(1.0, std::floor(cfg.t_end / cfg.symbol_period + 1e-9)));
        bits.assign(n, 1);
    }
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == 1) {
            setup.emission_times.push_back(static_cast<double>(k) * cfg.symbol_period);
        }
    }
    return setup;
}

void step_particles(std::vector<Molecule>& molecules, const ScenarioSetup& setup,
                    double dt, double now, double step_survival, rng::Sampler& sampler,
                    std::vector<Hit>& hits, long long& degraded) {
    const double sigma = std::sqrt(2.0 * setup.diffusion * dt);

    const geometry::Point3 rx_c = setup.geom.rx.center;
    const double rx_r2 = setup.geom.rx.radius * setup.geom.rx.radius;

    const bool reflecting_tx =
        setup.geom.tx.behavior == geometry::BodyBehavior::Reflecting;
    const geometry::Point3 tx_c = setup.geom.tx.center;
    const double tx_r2 = setup.geom.tx.radius * setup.geom.tx.radius;

    const bool degrading = setup.kin.has_value() && step_survival < 1.0;
    geometry::Point3 enz_c;
    double enz_r2 = 0.0;
    if (setup.geom.enzyme) {
        enz_c = setup.geom.enzyme->center;
        enz_r2 = setup.geom.enzyme->outer_radius * setup.geom.enzyme->outer_radius;
    }

    auto dist2 = [](const geometry::Point3& p, const geometry::Point3& c) {
        const double dx = p.x - c.x;
        const double dy = p.y - c.y;
        const double dz = p.z - c.z;
        return dx * dx + dy * dy + dz * dz;
    };

    std::size_t write = 0;
    for (std::size_t read = 0; read < molecules.size(); ++read) {
        Molecule m = molecules[read];
        m.previous_position = m.position;
        m.position.x += sigma * sampler.normal();
        m.position.y += sigma * sampler.normal();
        m.position.z += sigma * sampler.normal();

        if (reflecting_tx && dist2(m.position, tx_c) <= tx_r2) {
            // Bounced off the Tx: put back where the step started.
            m.position = m.previous_position;
        } else if (dist2(m.position, rx_c) <= rx_r2) {
            hits.push_back({now, m.position});
            continue;
        } else if (degrading && dist2(m.position, enz_c) <= enz_r2) {
            if (sampler.uniform() > step_survival) {
                ++degraded;
                continue;
            }
        }
        molecules[write++] = m;
    }
    molecules.resize(write);
}

HitRecordSet run_replication(const SimulationConfig& cfg, std::uint64_t seed,
                             int replication_id) {
    const ScenarioSetup setup = build_scenario(cfg);
    rng::Sampler sampler(seed);

    const double dt = cfg.time_step;
    const auto n_steps = static_cast<long long>(std::ceil(cfg.t_end / dt - 1e-9));
    std::vector<long long> emit_steps;
    emit_steps.reserve(setup.emission_times.size());
    for (double t : setup.emission_times) {
        const auto s = static_cast<long long>(std::llround(t / dt));
        if (s < n_steps) {
            emit_steps.push_back(s);
        }
    }

    HitRecordSet out;
    out.replication_id = replication_id;

    std::vector<Molecule> molecules;
    molecules.reserve(static_cast<std::size_t>(cfg.molecules_per_symbol) * emit_steps.size());

    const double step_survival =
        setup.kin ? kinetics::survival_probability(dt, setup.kin->effective_half_life) : 1.0;
    std::size_t next_emission = 0;

    for (long long step = 0; step < n_steps; ++step) {
        while (next_emission < emit_steps.size() && emit_steps[next_emission] == step) {
            for (long long m = 0; m < cfg.molecules_per_symbol; ++m) {
                molecules.push_back({setup.emission_point, setup.emission_point});
            }
            out.emitted_total += cfg.molecules_per_symbol;
            ++next_emission;
        }
        const double now = static_cast<double>(step + 1) * dt;
        step_particles(molecules, setup, dt, now, step_survival, sampler, out.hits,
                       out.degraded_total);
    }
    out.survivors = static_cast<long long>(molecules.size());
    return out;
}

std::vector<HitRecordSet> run_experiment(const SimulationConfig& cfg, int threads) {
    validate(cfg);
    std::vector<HitRecordSet> results(static_cast<std::size_t>(cfg.replications));
    parallel_for(results.size(), threads, [&](std::size_t i) {
        results[i] = run_replication(cfg, rng::derive_seed(cfg.master_seed, i),
                                     static_cast<int>(i));
    });
    return results;
}

}  // namespace mcvd::engine
