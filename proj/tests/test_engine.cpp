#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcvd/analytic.hpp"
#include "mcvd/engine.hpp"
#include "mcvd/kinetics.hpp"

using namespace mcvd;
using namespace mcvd::engine;

namespace {

SimulationConfig desk_config(Scenario s) {
    SimulationConfig cfg;
    cfg.scenario = s;
    cfg.molecules_per_symbol = 5000;
    cfg.replications = 4;
    cfg.time_step = 1e-4;
    cfg.t_end = 0.5;
    cfg.symbol_period = 0.1;
    cfg.master_seed = 99;
    return cfg;
}

bool same_hits(const HitRecordSet& a, const HitRecordSet& b) {
    if (a.hits.size() != b.hits.size() || a.emitted_total != b.emitted_total ||
        a.degraded_total != b.degraded_total || a.survivors != b.survivors) {
        return false;
    }
    for (std::size_t i = 0; i < a.hits.size(); ++i) {
        if (a.hits[i].time != b.hits[i].time || a.hits[i].position.x != b.hits[i].position.x ||
            a.hits[i].position.y != b.hits[i].position.y ||
            a.hits[i].position.z != b.hits[i].position.z) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("build_scenario geometry placement") {
    SimulationConfig cfg = desk_config(Scenario::StArx);
    cfg.distance = 4.0;
    cfg.enzyme_radius = 8.0;
    auto setup = build_scenario(cfg);
    CHECK(setup.geom.tx.center.x == doctest::Approx(14.0));
    CHECK(setup.geom.tx.behavior == geometry::BodyBehavior::Reflecting);
    CHECK(setup.geom.rx.center.x == 0.0);
    CHECK(setup.geom.enzyme->center.x == 0.0);
    CHECK(setup.geom.enzyme->outer_radius == doctest::Approx(13.0));
    CHECK(setup.emission_point.x == doctest::Approx(9.0));

    cfg.scenario = Scenario::PtArx;
    setup = build_scenario(cfg);
    CHECK(setup.geom.tx.center.x == doctest::Approx(9.0));
    CHECK(setup.geom.tx.radius == 0.0);
    CHECK(setup.geom.tx.behavior == geometry::BodyBehavior::PassivePoint);

    cfg.scenario = Scenario::NonePt;
    setup = build_scenario(cfg);
    CHECK_FALSE(setup.geom.enzyme.has_value());
    CHECK_FALSE(setup.kin.has_value());

    cfg.scenario = Scenario::EverywhereSt;
    cfg.distance = 10.0;
    setup = build_scenario(cfg);
    CHECK(setup.geom.enzyme->outer_radius == doctest::Approx(80.0));
    cfg.everywhere_radius = 40.0;
    setup = build_scenario(cfg);
    CHECK(setup.geom.enzyme->outer_radius == doctest::Approx(40.0));
}

TEST_CASE("build_scenario emission plan") {
    SimulationConfig cfg = desk_config(Scenario::NoneSt);
    cfg.symbol_period = 0.1;
    cfg.t_end = 0.4;
    auto setup = build_scenario(cfg);  // default bits: all ones
    REQUIRE(setup.emission_times.size() == 4);
    CHECK(setup.emission_times[2] == doctest::Approx(0.2));

    cfg.bit_sequence = {1, 0, 1};
    setup = build_scenario(cfg);
    REQUIRE(setup.emission_times.size() == 2);
    CHECK(setup.emission_times[1] == doctest::Approx(0.2));
}

TEST_CASE("build_scenario config validation") {
    SimulationConfig cfg = desk_config(Scenario::StArx);
    cfg.enzyme_radius = -1.0;
    CHECK_THROWS_AS(build_scenario(cfg), ConfigError);
    cfg = desk_config(Scenario::StArx);
    cfg.symbol_period = 2.0 * cfg.t_end;
    CHECK_THROWS_AS(build_scenario(cfg), ConfigError);
    cfg = desk_config(Scenario::StArx);
    cfg.bit_sequence = {1, 2};
    CHECK_THROWS_AS(build_scenario(cfg), ConfigError);
}

TEST_CASE("one free step has per-axis variance 2 D dt") {
    // Molecules far from every body so no interaction can trigger.
    SimulationConfig cfg = desk_config(Scenario::NonePt);
    auto setup = build_scenario(cfg);
    const double dt = 1e-5;
    const std::size_t n = 100000;
    std::vector<Molecule> molecules(n, Molecule{{1000.0, 0.0, 0.0}, {1000.0, 0.0, 0.0}});
    rng::Sampler sampler(5);
    std::vector<Hit> hits;
    long long degraded = 0;
    step_particles(molecules, setup, dt, dt, 1.0, sampler, hits, degraded);
    REQUIRE(molecules.size() == n);
    CHECK(hits.empty());
    const double expected = 2.0 * cfg.diffusion * dt;
    for (int axis = 0; axis < 3; ++axis) {
        double var = 0.0;
        for (const auto& m : molecules) {
            const double dx = axis == 0   ? m.position.x - m.previous_position.x
                              : axis == 1 ? m.position.y - m.previous_position.y
                                          : m.position.z - m.previous_position.z;
            var += dx * dx;
        }
        var /= static_cast<double>(n);
        // 3-sigma band of the chi^2 sampling distribution of the variance.
        const double band = 3.0 * expected * std::sqrt(2.0 / static_cast<double>(n));
        CHECK(std::abs(var - expected) < band);
    }
}

TEST_CASE("reflection restores the pre-step position exactly") {
    SimulationConfig cfg = desk_config(Scenario::NoneSt);
    cfg.diffusion = 0.01;  // tiny steps so a surface molecule often re-enters
    auto setup = build_scenario(cfg);
    const geometry::Point3 start{setup.geom.tx.center.x - setup.geom.tx.radius, 0.0, 0.0};
    rng::Sampler sampler(17);
    int reflected = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Molecule> one{{start, start}};
        std::vector<Hit> hits;
        long long degraded = 0;
        step_particles(one, setup, 1e-4, 1e-4, 1.0, sampler, hits, degraded);
        REQUIRE(one.size() == 1);
        const auto& m = one[0];
        const double tx_dist = geometry::distance(m.position, setup.geom.tx.center);
        if (m.position.x == start.x && m.position.y == start.y && m.position.z == start.z) {
            ++reflected;
        } else {
            CHECK(tx_dist > setup.geom.tx.radius);  // never ends inside the Tx
        }
    }
    CHECK(reflected > 50);
}

TEST_CASE("no degradation without enzymes or with infinite half-life") {
    SimulationConfig cfg = desk_config(Scenario::NoneSt);
    cfg.t_end = 0.1;
    const auto rep = run_replication(cfg, 3);
    CHECK(rep.degraded_total == 0);
    CHECK(kinetics::survival_probability(1e-4, 1e300) == 1.0);
}

TEST_CASE("pinned molecules decay at the effective half-life rate") {
    // Enzyme region everywhere, bodies pushed out of reach, no diffusion
    // escape: survivors after n steps follow 2^(-n dt / hl).
    SimulationConfig cfg = desk_config(Scenario::EverywherePt);
    cfg.distance = 4.0;
    auto setup = build_scenario(cfg);
    setup.geom.rx.center = {1e7, 0, 0};
    setup.geom.tx.center = {1e7, 0, 0};
    setup.diffusion = 1e-6;
    const double dt = 1e-4;
    const double hl = 0.02;
    const double survival = kinetics::survival_probability(dt, hl);
    const std::size_t n0 = 20000;
    std::vector<Molecule> molecules(n0, Molecule{{0, 0, 0}, {0, 0, 0}});
    rng::Sampler sampler(23);
    std::vector<Hit> hits;
    long long degraded = 0;
    const int steps = 1000;
    for (int i = 0; i < steps; ++i) {
        step_particles(molecules, setup, dt, (i + 1) * dt, survival, sampler, hits, degraded);
    }
    CHECK(hits.empty());
    const double p = std::pow(2.0, -steps * dt / hl);
    const double sd = std::sqrt(n0 * p * (1.0 - p));
    // 99% binomial band (2.58 sigma).
    CHECK(std::abs(static_cast<double>(molecules.size()) - n0 * p) < 2.58 * sd + 1.0);
    CHECK(degraded + static_cast<long long>(molecules.size()) == static_cast<long long>(n0));
}

TEST_CASE("all-zero bit sequence emits nothing") {
    SimulationConfig cfg = desk_config(Scenario::StArx);
    cfg.bit_sequence = {0, 0, 0};
    const auto rep = run_replication(cfg, 1);
    CHECK(rep.emitted_total == 0);
    CHECK(rep.hits.empty());
    CHECK(rep.survivors == 0);
}

TEST_CASE("conservation and hit-time bounds") {
    SimulationConfig cfg = desk_config(Scenario::StArx);
    cfg.distance = 4.0;
    cfg.enzyme_radius = 8.0;
    const auto rep = run_replication(cfg, 7);
    CHECK(rep.emitted_total == 5 * cfg.molecules_per_symbol);
    CHECK(static_cast<long long>(rep.hits.size()) + rep.degraded_total + rep.survivors ==
          rep.emitted_total);
    CHECK(rep.hits.size() > 0);
    for (const auto& hit : rep.hits) {
        CHECK(hit.time > 0.0);
        CHECK(hit.time <= cfg.t_end + 1e-12);
        // Hit positions are inside the Rx.
        CHECK(geometry::distance(hit.position, {0, 0, 0}) <= cfg.rx_radius);
    }
}

TEST_CASE("same seed gives bitwise-identical results") {
    SimulationConfig cfg = desk_config(Scenario::StAtx);
    const auto a = run_replication(cfg, 12345, 0);
    const auto b = run_replication(cfg, 12345, 0);
    CHECK(same_hits(a, b));
    const auto c = run_replication(cfg, 12346, 0);
    CHECK_FALSE(same_hits(a, c));
}

TEST_CASE("run_experiment is independent of thread count") {
    SimulationConfig cfg = desk_config(Scenario::PtArx);
    cfg.replications = 6;
    const auto serial = run_experiment(cfg, 1);
    const auto parallel = run_experiment(cfg, 4);
    REQUIRE(serial.size() == 6);
    REQUIRE(parallel.size() == 6);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].replication_id == static_cast<int>(i));
        CHECK(same_hits(serial[i], parallel[i]));
    }
}

TEST_CASE("empirical hit CDF matches the analytic oracle (reduced scale)") {
    SimulationConfig cfg = desk_config(Scenario::NonePt);
    cfg.distance = 4.0;
    cfg.molecules_per_symbol = 20000;
    cfg.t_end = 0.2;
    cfg.symbol_period = 0.2;
    cfg.bit_sequence = {1};
    cfg.time_step = 1e-5;
    const auto rep = run_replication(cfg, 31);
    const analytic::ChannelParams params{4.0, 5.0, 100.0, 0.0};
    for (double t : {0.05, 0.2}) {
        long long count = 0;
        for (const auto& hit : rep.hits) {
            if (hit.time <= t) ++count;
        }
        const double empirical =
            static_cast<double>(count) / static_cast<double>(cfg.molecules_per_symbol);
        CHECK(empirical ==
              doctest::Approx(analytic::hit_cdf(t, params)).epsilon(0.08));
    }
}
