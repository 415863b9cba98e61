#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace picsem {

// The five parameters that can be altered by a counter-factual intervention.
enum class ParameterId { Lambda, KD, KF, KB, KI };

const char* to_string(ParameterId id);
ParameterId parameter_from_string(const std::string& name);

/// Full physical/chemical/channel parameter set. SI units throughout:
/// rates in s^-1 (k_f in particle^-1 m^3 s^-1), lengths in m, tau in s.
struct SystemParameters {
    double tau = 0.02;       // symbol interval, s
    double lambda = 1000.0;  // particle release rate, particle/s
    double k_d = 2e4;        // degradation rate, 1/s
    double k_f = 1e-14;      // binding rate, particle^-1 m^3/s
    double k_b = 2e4;        // unbinding rate, 1/s
    double k_i = 1e3;        // internalisation rate, 1/s
    double D = 5e-9;         // diffusion coefficient, m^2/s
    double a = 0.5e-6;       // receiver radius, m
    double r0 = 1e-6;        // transmitter-receiver centre distance, m
    double c_th = 0.05;      // threshold concentration, particle/cell
    double n = 10.0;         // Hill coefficient
    double epsilon = 1e-2;   // tolerated viability variation

    static SystemParameters defaults() { return {}; }

    double get(ParameterId id) const;
    void set(ParameterId id, double value);
    SystemParameters with(ParameterId id, double value) const;

    // Throws std::invalid_argument naming the offending field. Reaction
    // rates may be zero (a zero k_f disables the binding pathway entirely);
    // geometry, tau, lambda and c_th must be strictly positive and the
    // release point must lie outside the receiver.
    void validate() const;
};

/// Knobs of the Monte Carlo estimator, not of the physical model.
/// `threads` affects speed only, never results (trial streams are derived
/// from (seed, trial index), so the merge is order-independent).
struct SimulationSettings {
    double dt = 1e-6;               // time step, s
    long trials = 100000;           // Monte Carlo particle count
    uint64_t seed = 123456789ULL;   // master random seed
    std::vector<double> time_grid;  // strictly increasing sample times in (0, tau]
    int threads = 0;                // 0 = hardware concurrency
    double p_bind_warn = 1.0;       // diagnostic threshold for the raw binding probability

    static SimulationSettings defaults(double tau);

    // Requires dt <= tau/100 and a nonempty strictly increasing grid ending
    // at or before tau.
    void validate(double tau) const;
};

/// Uniform grid of `points` sample times on (0, tau], last point == tau.
std::vector<double> uniform_time_grid(double tau, int points);

} // namespace picsem
