#pragma once

#include <vector>

namespace picsem {

/// One operating point of the particle intensity channel. The crossover
/// probability mu_p = (1 - p_i)^n_particles is fixed at construction.
struct ChannelPoint {
    double p_i = 0.0;
    long n_particles = 0;
    double mu_p = 1.0;
    double tau = 1.0;

    ChannelPoint(double p_i, long n_particles, double tau);
};

struct OptimalInput {
    double p1_star = 0.0;         // capacity-achieving release probability
    double mutual_info_bits = 0.0;
    double capacity = 0.0;        // bit/s, mutual_info_bits / tau
};

/// Binary entropy in bits, with 0 log 0 := 0.
double binary_entropy(double q);

/// (1 - p_i)^n, evaluated in the log domain; n = 0 gives 1.
double crossover_probability(double p_i, long n_particles);

/// P(Y = y | release w.p. p) for y in {0..N}: C(N,y) (p P_i)^y (1-p P_i)^(N-y).
std::vector<double> binomial_output_pmf(double p, const ChannelPoint& point);

/// Mutual information of the binary-input channel reduced to a Z channel:
/// H2(p1 (1-mu)) - p1 H2(mu), in bits.
double mutual_information_z(double p1, double mu_p);

/// d I / d p1 of the Z-channel mutual information:
/// (1-mu) log2[(1 - p1(1-mu)) / (p1(1-mu))] - H2(mu).
double mutual_information_z_derivative(double p1, double mu_p);

/// Capacity-achieving input p1* = (1/(1-mu)) / (1 + 2^(H2(mu)/(1-mu)))
/// plus the achieved mutual information and capacity at symbol interval tau.
/// mu_p = 1 is rejected (useless channel; callers treat its capacity as 0).
OptimalInput optimal_input(double mu_p, double tau = 1.0);

/// Closed-form capacity (1/tau) log2(1 + (1-mu) mu^(mu/(1-mu))) in bit/s,
/// continuous limits at mu = 0 and mu = 1.
double capacity_closed_form(double mu_p, double tau);

/// I(X;Y) computed from the full joint distribution over {0..N} with binary
/// input {release, silent} weighted (p1, 1-p1). Exhaustive oracle for the
/// Z-channel reduction; requires N <= 64.
double mutual_information_bruteforce(double p1, const ChannelPoint& point);

/// max_p1 of mutual_information_bruteforce / tau, by grid scan (step 1e-5)
/// refined with ternary search (the Z-channel mutual information is concave
/// in p1). Exhaustive oracle for capacity_closed_form; requires N <= 64.
double capacity_bruteforce(const ChannelPoint& point);

} // namespace picsem
