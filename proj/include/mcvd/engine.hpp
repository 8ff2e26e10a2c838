#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcvd/geometry.hpp"
#include "mcvd/kinetics.hpp"
#include "mcvd/rng.hpp"

namespace mcvd::engine {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Scenario {
    PtArx,         // point Tx, enzymes around Rx
    PtAtx,         // point Tx, enzymes around Tx
    StArx,         // sphere Tx, enzymes around Rx
    StAtx,         // sphere Tx, enzymes around Tx
    EverywherePt,  // point Tx, enzymes spread in a large sphere
    EverywhereSt,
    NonePt,  // no enzymes
    NoneSt,
};

const char* scenario_name(Scenario s);
std::optional<Scenario> scenario_from_name(const std::string& name);
bool scenario_has_sphere_tx(Scenario s);
bool scenario_has_enzymes(Scenario s);

struct SimulationConfig {
    double diffusion = 100.0;        // D, um^2/s
    double rx_radius = 5.0;          // r_r, um (also the sphere-Tx radius)
    double enzyme_radius = 2.0;      // extended enzyme radius r_enz, um
    double distance = 4.0;           // surface gap d, um
    long long molecules_per_symbol = 50000;
    double symbol_period = 0.1;      // t_s, s
    double t_end = 2.0;              // s
    double unit_half_life = 0.002;   // s, at the 1 um reference area
    double time_step = 1e-5;         // s
    Scenario scenario = Scenario::StArx;
    std::vector<int> bit_sequence;   // empty -> all ones, floor(t_end / t_s) symbols
    int replications = 50;
    std::uint64_t master_seed = 1;
    double signal_bin_width = 0.005; // s
    // um; four times the longest Tx-Rx center distance (d=10 with a sphere
    // Tx gives 20 um). Large enough that spreading the enzyme budget over
    // it leaves the channel nearly degradation-free.
    double everywhere_radius = 80.0;
};

struct Hit {
    double time = 0.0;
    geometry::Point3 position;
};

struct HitRecordSet {
    int replication_id = 0;
    std::vector<Hit> hits;
    long long emitted_total = 0;
    long long degraded_total = 0;
    long long survivors = 0;  // alive at t_end; hits + degraded + survivors = emitted
};

struct Molecule {
    geometry::Point3 position;
    geometry::Point3 previous_position;
};

/// Geometry, kinetics, and the emission plan resolved from a config.
struct ScenarioSetup {
    geometry::ChannelGeometry geom;
    std::optional<kinetics::KineticsSpec> kin;  // empty for the no-enzyme scenarios
    geometry::Point3 emission_point;
    std::vector<double> emission_times;
    double diffusion = 0.0;  // um^2/s
};

ScenarioSetup build_scenario(const SimulationConfig& cfg);

/// One diffusion step for every molecule: Gaussian displacement per axis,
/// Tx reflection, Rx absorption, then the degradation draw. Absorbed and
/// degraded molecules are removed; hits are appended with time `now`.
void step_particles(std::vector<Molecule>& molecules, const ScenarioSetup& setup,
                    double dt, double now, double step_survival, rng::Sampler& sampler,
                    std::vector<Hit>& hits, long long& degraded);

HitRecordSet run_replication(const SimulationConfig& cfg, std::uint64_t seed,
                             int replication_id = 0);

/// Runs cfg.replications independent replications, each with its own RNG
/// stream derived from the master seed. Results are slotted by replication
/// id, so the output does not depend on the thread count.
std::vector<HitRecordSet> run_experiment(const SimulationConfig& cfg, int threads = 1);

}  // namespace mcvd::engine
