#include "picsem/pic_information.hpp"

#include <cmath>
#include <stdexcept>

namespace picsem {

namespace {

constexpr double kLn2 = 0.6931471805599453094;

void require_probability(double q, const char* name) {
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
}

// -x log2 x with the 0 log 0 := 0 convention.
double nlog2(double x) {
    return x > 0.0 ? -x * std::log2(x) : 0.0;
}

} // namespace

ChannelPoint::ChannelPoint(double p_i_, long n_particles_, double tau_)
    : p_i(p_i_), n_particles(n_particles_), tau(tau_) {
    require_probability(p_i_, "p_i");
    if (n_particles_ < 0) throw std::invalid_argument("n_particles must be >= 0");
    if (!(tau_ > 0)) throw std::invalid_argument("tau must be positive");
    mu_p = crossover_probability(p_i_, n_particles_);
}

double binary_entropy(double q) {
    require_probability(q, "q");
    return nlog2(q) + nlog2(1.0 - q);
}

double crossover_probability(double p_i, long n_particles) {
    require_probability(p_i, "p_i");
    if (n_particles < 0) throw std::invalid_argument("n_particles must be >= 0");
    if (n_particles == 0) return 1.0;  // empty product
    if (p_i == 0.0) return 1.0;
    if (p_i == 1.0) return 0.0;
    return std::exp(static_cast<double>(n_particles) * std::log1p(-p_i));
}

std::vector<double> binomial_output_pmf(double p, const ChannelPoint& point) {
    require_probability(p, "p");
    const long n = point.n_particles;
    const double q = p * point.p_i;  // per-particle detection probability
    std::vector<double> pmf(static_cast<size_t>(n) + 1, 0.0);
    if (q == 0.0) {
        pmf[0] = 1.0;
        return pmf;
    }
    if (q == 1.0) {
        pmf[static_cast<size_t>(n)] = 1.0;
        return pmf;
    }
    const double lq = std::log(q), l1q = std::log1p(-q);
    for (long y = 0; y <= n; ++y) {
        const double lc = std::lgamma(static_cast<double>(n) + 1.0) -
                          std::lgamma(static_cast<double>(y) + 1.0) -
                          std::lgamma(static_cast<double>(n - y) + 1.0);
        pmf[static_cast<size_t>(y)] =
            std::exp(lc + static_cast<double>(y) * lq +
                     static_cast<double>(n - y) * l1q);
    }
    return pmf;
}

double mutual_information_z(double p1, double mu_p) {
    require_probability(p1, "p1");
    require_probability(mu_p, "mu_p");
    return binary_entropy(p1 * (1.0 - mu_p)) - p1 * binary_entropy(mu_p);
}

double mutual_information_z_derivative(double p1, double mu_p) {
    require_probability(p1, "p1");
    require_probability(mu_p, "mu_p");
    const double x = p1 * (1.0 - mu_p);
    if (x <= 0.0 || x >= 1.0)
        throw std::invalid_argument("derivative undefined at p1 (1-mu) in {0, 1}");
    return (1.0 - mu_p) * std::log2((1.0 - x) / x) - binary_entropy(mu_p);
}

OptimalInput optimal_input(double mu_p, double tau) {
    require_probability(mu_p, "mu_p");
    if (mu_p == 1.0)
        throw std::invalid_argument("mu_p = 1 has no capacity-achieving input");
    if (!(tau > 0)) throw std::invalid_argument("tau must be positive");
    OptimalInput out;
    const double h = binary_entropy(mu_p) / (1.0 - mu_p);
    out.p1_star = (1.0 / (1.0 - mu_p)) / (1.0 + std::exp2(h));
    out.mutual_info_bits = mutual_information_z(out.p1_star, mu_p);
    out.capacity = out.mutual_info_bits / tau;
    return out;
}

double capacity_closed_form(double mu_p, double tau) {
    require_probability(mu_p, "mu_p");
    if (!(tau > 0)) throw std::invalid_argument("tau must be positive");
    if (mu_p == 0.0) return 1.0 / tau;  // 0^0 := 1
    if (mu_p == 1.0) return 0.0;
    const double pw = std::exp(mu_p / (1.0 - mu_p) * std::log(mu_p));
    return std::log1p((1.0 - mu_p) * pw) / kLn2 / tau;
}

double mutual_information_bruteforce(double p1, const ChannelPoint& point) {
    require_probability(p1, "p1");
    if (point.n_particles > 64)
        throw std::invalid_argument("bruteforce supports N <= 64 only");
    const auto pmf = binomial_output_pmf(1.0, point);  // law given release
    // H(Y): output mixture of the release law (weight p1) and a point mass
    // at y = 0 (weight 1-p1).
    double h_y = nlog2(p1 * pmf[0] + (1.0 - p1));
    double h_cond = nlog2(pmf[0]);
    for (size_t y = 1; y < pmf.size(); ++y) {
        h_y += nlog2(p1 * pmf[y]);
        h_cond += nlog2(pmf[y]);
    }
    return h_y - p1 * h_cond;
}

double capacity_bruteforce(const ChannelPoint& point) {
    if (point.n_particles > 64)
        throw std::invalid_argument("bruteforce supports N <= 64 only");
    const auto pmf = binomial_output_pmf(1.0, point);
    auto mi = [&](double p1) {
        double h_y = nlog2(p1 * pmf[0] + (1.0 - p1));
        double h_cond = nlog2(pmf[0]);
        for (size_t y = 1; y < pmf.size(); ++y) {
            h_y += nlog2(p1 * pmf[y]);
            h_cond += nlog2(pmf[y]);
        }
        return h_y - p1 * h_cond;
    };

    // Coarse scan at step 1e-5, then ternary refinement; the Z-channel
    // mutual information is concave in p1, so the maximum is unimodal.
    constexpr double kStep = 1e-5;
    double best = 0.0;
    long best_i = 0;
    const long steps = static_cast<long>(std::llround(1.0 / kStep));
    for (long i = 0; i <= steps; ++i) {
        const double v = mi(static_cast<double>(i) * kStep);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double lo = static_cast<double>(best_i > 0 ? best_i - 1 : 0) * kStep;
    double hi = static_cast<double>(best_i < steps ? best_i + 1 : steps) * kStep;
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (mi(m1) < mi(m2))
            lo = m1;
        else
            hi = m2;
    }
    best = std::max(best, mi(0.5 * (lo + hi)));
    return best / point.tau;
}

} // namespace picsem
