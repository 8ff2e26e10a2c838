#include "mcvd/kinetics.hpp"

#include <cmath>

namespace mcvd::kinetics {

double degradation_factor(double half_life) {
    if (half_life <= 0.0) {
        throw KineticsError("degradation_factor: half-life must be positive");
    }
    return M_LN2 / half_life;
}

double concentration_decay(double c0, double lambda, double t) {
    if (c0 < 0.0 || lambda < 0.0 || t < 0.0) {
        throw KineticsError("concentration_decay: negative input");
    }
    return c0 * std::exp(-lambda * t);
}

double effective_half_life(double unit_half_life, double v_totenz, double v_ref) {
    if (unit_half_life <= 0.0 || v_totenz <= 0.0 || v_ref <= 0.0) {
        throw KineticsError("effective_half_life: inputs must be positive");
    }
    return unit_half_life * v_totenz / v_ref;
}

double survival_probability(double dt, double half_life_eff) {
    if (dt <= 0.0 || half_life_eff <= 0.0) {
        throw KineticsError("survival_probability: inputs must be positive");
    }
    return std::exp2(-dt / half_life_eff);
}

KineticsSpec make_spec(double unit_half_life, double v_totenz, double v_ref) {
    KineticsSpec spec;
    spec.unit_half_life = unit_half_life;
    spec.reference_volume = v_ref;
    spec.effective_half_life = effective_half_life(unit_half_life, v_totenz, v_ref);
    spec.degradation_factor = degradation_factor(spec.effective_half_life);
    return spec;
}

}  // namespace mcvd::kinetics
