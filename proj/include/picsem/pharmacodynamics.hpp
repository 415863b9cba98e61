#pragma once

#include "picsem/system.hpp"

namespace picsem {

enum class DeltaClass { Positive, Negative, Zero };

struct DeltaViability {
    double value = 0.0;  // v_actual - v_intervened
    DeltaClass cls = DeltaClass::Zero;
};

struct DoseResponse {
    double c_int = 0.0;       // internalised concentration, particle/cell
    double viability = 1.0;
    long n_particles = 0;
    double p_i_at_tau = 0.0;
};

/// Particle budget N(lambda, tau) = floor(lambda tau).
long particle_budget(double lambda, double tau);

/// C_int = p_i * N.
double internalised_concentration(double p_i, long n_particles);

/// Hill dose-response viability 1 / (1 + (c_int/c_th)^n); equals 1/2 at
/// c_int = c_th and is strictly decreasing in c_int.
double viability(double c_int, double c_th, double n);

/// Viability difference with its causal classification; |dv| <= epsilon
/// counts as Zero.
DeltaViability delta_viability(double v_actual, double v_intervened,
                               double epsilon = 1e-2);

/// Budget, concentration and viability for one parameter set at its tau.
DoseResponse dose_response(const SystemParameters& params, double p_i_at_tau);

} // namespace picsem
