#pragma once

#include <stdexcept>

namespace mcvd::analytic {

struct AnalyticError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point-Tx / absorbing-sphere-Rx channel. lambda = 0 means no enzymes.
struct ChannelParams {
    double d = 0.0;       // um, Tx point to Rx surface
    double r_r = 0.0;     // um
    double D = 0.0;       // um^2/s
    double lambda = 0.0;  // 1/s
};

/// First-hit probability density at the Rx, no enzymes.
double hit_rate(double t, const ChannelParams& p);

/// Density with uniform enzymatic decay: hit_rate(t) * exp(-lambda t).
double hit_rate_enzyme(double t, const ChannelParams& p);

/// Closed-form integral of hit_rate: (r_r/(d+r_r)) erfc(d / (2 sqrt(D t))).
/// Tends to r_r/(d+r_r) as t -> inf.
double hit_cdf(double t, const ChannelParams& p);

/// Adaptive quadrature of hit_rate_enzyme over (0, t], relative tolerance
/// 1e-8. The interval is split at the density peak d^2/(6D).
double hit_cdf_enzyme(double t, const ChannelParams& p);

/// Time at which hit_rate attains its maximum: d^2 / (6 D).
double peak_time(const ChannelParams& p);

}  // namespace mcvd::analytic
