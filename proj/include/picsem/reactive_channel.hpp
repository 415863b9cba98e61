#pragma once

#include <string>
#include <vector>

#include "picsem/system.hpp"

namespace picsem {

/// Estimated cumulative internalisation probability P_i(t|r0) over a time
/// grid, with per-sample binomial standard error. Immutable once built.
struct ImpulseResponse {
    std::vector<double> times;
    std::vector<double> p_i;      // non-decreasing, in [0,1]
    std::vector<double> std_err;  // sqrt(p_i (1-p_i) / trials)
    long trials = 0;
    double p_bind = 0.0;          // binding attempt probability actually used
    std::vector<std::string> warnings;

    // Cumulative probability at the last grid time <= t (0 before the grid).
    double value_at(double t) const;
};

/// Particle-based estimate of the channel impulse response.
///
/// Each trial follows one particle released at distance r0 through a
/// four-state lifecycle (FREE, BOUND, INTERNALISED, DEGRADED):
///  - FREE: per-axis Gaussian displacement with sd sqrt(2 D dt) per step.
///    Contact with the receiver sphere within a step is detected exactly in
///    the radial coordinate: a step ending inside touches with certainty,
///    otherwise with the Brownian-bridge probability
///    exp(-(r1-a)(r2-a)/(D dt)).  Each contact is a binding attempt with
///    probability p_bind = kappa sqrt(pi dt / D) / 2, kappa = k_f/(4 pi a^2);
///    the factor 1/2 accounts for contacts being twice as frequent as
///    end-of-step-inside events, keeping the surface reactivity at kappa.
///    Failed attempts on a step ending inside reflect specularly to 2a - r.
///    Degradation occurs within a step with probability 1 - exp(-k_d dt);
///    a same-step race between degradation and contact is resolved by
///    sampled sub-step times.
///  - BOUND: leaves with probability 1 - exp(-(k_b+k_i) dt) per step; on
///    leaving it is internalised with probability k_i/(k_b+k_i), else it
///    re-enters FREE at radius a (1 + 1e-6). Bound particles do not degrade.
///
/// Deterministic for a given (params, settings) including settings.seed,
/// independent of settings.threads. If the raw binding probability exceeds
/// settings.p_bind_warn it is clamped to 1 and a warning is recorded.
ImpulseResponse simulate_impulse(const SystemParameters& params,
                                 const SimulationSettings& settings);

/// First-passage probability to a perfectly absorbing sphere by time t:
/// (a/r0) erfc((r0-a) / (2 sqrt(D t))).
double hitting_probability_absorbing(double D, double a, double r0, double t);

/// Eventual hitting probability of a perfectly absorbing sphere for a
/// particle subject to first-order decay: (a/r0) exp(-(r0-a) sqrt(k_d/D)).
double eventual_hit_with_degradation(double D, double a, double r0, double k_d);

} // namespace picsem
