#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcvd/kinetics.hpp"

using namespace mcvd::kinetics;

TEST_CASE("degradation_factor") {
    CHECK(degradation_factor(M_LN2) == doctest::Approx(1.0));
    CHECK(degradation_factor(0.002) == doctest::Approx(346.574).epsilon(1e-5));
    CHECK(degradation_factor(2.0 * 0.37) == doctest::Approx(0.5 * degradation_factor(0.37)));
    CHECK_THROWS_AS(degradation_factor(0.0), KineticsError);
    CHECK_THROWS_AS(degradation_factor(-1.0), KineticsError);
}

TEST_CASE("concentration_decay") {
    CHECK(concentration_decay(3.5, 12.0, 0.0) == 3.5);
    CHECK(concentration_decay(3.5, M_LN2 / 0.01, 0.01) == doctest::Approx(1.75));
    CHECK(concentration_decay(0.0, 99.0, 5.0) == 0.0);
}

TEST_CASE("effective_half_life") {
    CHECK(effective_half_life(0.002, 500.0, 500.0) == doctest::Approx(0.002));
    CHECK(effective_half_life(0.002, 1000.0, 500.0) == doctest::Approx(0.004));
    // ST-ARx shells: r_enz=2 over the r_enz=1 reference is 218/91.
    CHECK(effective_half_life(0.002, 913.1563, 381.1799) ==
          doctest::Approx(0.004791209).epsilon(1e-6));
    CHECK_THROWS_AS(effective_half_life(0.0, 1.0, 1.0), KineticsError);
    CHECK_THROWS_AS(effective_half_life(0.002, -1.0, 1.0), KineticsError);
}

TEST_CASE("survival_probability") {
    CHECK(survival_probability(0.002, 0.002) == doctest::Approx(0.5));
    CHECK(survival_probability(1e-5, 1e300) == doctest::Approx(1.0));
    CHECK(survival_probability(1e-5, 0.002) == doctest::Approx(0.9965403).epsilon(1e-7));
    CHECK_THROWS_AS(survival_probability(0.0, 1.0), KineticsError);
}

TEST_CASE("survival composes multiplicatively over steps") {
    const double dt = 1e-5;
    const double hl = 0.0037;
    const int n = 250;
    double product = 1.0;
    for (int i = 0; i < n; ++i) {
        product *= survival_probability(dt, hl);
    }
    CHECK(product == doctest::Approx(survival_probability(n * dt, hl)).epsilon(1e-12));
}

TEST_CASE("constant enzyme amount across scenarios") {
    // With the same unit half-life and reference, Lambda_eff / V_totenz is
    // fixed, no matter the scenario volume.
    const double unit = 0.004;
    const double v_ref = 381.1799;
    const double a = effective_half_life(unit, 913.16, v_ref) / 913.16;
    const double b = effective_half_life(unit, 267035.4, v_ref) / 267035.4;
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("make_spec ties factor and half-life together") {
    const auto spec = make_spec(0.002, 913.1563, 381.1799);
    CHECK(spec.degradation_factor * spec.effective_half_life ==
          doctest::Approx(M_LN2).epsilon(1e-15));
}
