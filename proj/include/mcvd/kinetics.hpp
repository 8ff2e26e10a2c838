#pragma once

#include <stdexcept>

namespace mcvd::kinetics {

struct KineticsError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Degradation parameters for one scenario at one enzyme-area size.
/// The effective half-life scales the unit half-life by the ratio of the
/// current enzyme volume to the reference volume (the same scenario at an
/// extended radius of 1 um), so the total enzyme amount stays constant.
struct KineticsSpec {
    double unit_half_life = 0.0;      // seconds, at the 1 um reference area
    double reference_volume = 0.0;    // um^3
    double effective_half_life = 0.0; // seconds
    double degradation_factor = 0.0;  // 1/s, ln2 / effective_half_life
};

/// ln2 / half_life
double degradation_factor(double half_life);

/// C0 * exp(-lambda * t)
double concentration_decay(double c0, double lambda, double t);

/// unit_half_life * v_totenz / v_ref
double effective_half_life(double unit_half_life, double v_totenz, double v_ref);

/// Probability of one molecule not degrading over a step of dt inside the
/// enzyme area: 2^(-dt / half_life_eff).
double survival_probability(double dt, double half_life_eff);

KineticsSpec make_spec(double unit_half_life, double v_totenz, double v_ref);

}  // namespace mcvd::kinetics
