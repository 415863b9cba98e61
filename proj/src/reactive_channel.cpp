#include "picsem/reactive_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "picsem/seeding.hpp"

namespace picsem {

double ImpulseResponse::value_at(double t) const {
    auto it = std::upper_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return 0.0;
    return p_i[static_cast<size_t>(it - times.begin()) - 1];
}

double hitting_probability_absorbing(double D, double a, double r0, double t) {
    if (!(D > 0) || !(a > 0)) throw std::invalid_argument("D and a must be positive");
    if (!(r0 > a)) throw std::invalid_argument("r0 must exceed a");
    if (!(t > 0)) throw std::invalid_argument("t must be positive");
    return (a / r0) * std::erfc((r0 - a) / (2.0 * std::sqrt(D * t)));
}

double eventual_hit_with_degradation(double D, double a, double r0, double k_d) {
    if (!(D > 0) || !(a > 0)) throw std::invalid_argument("D and a must be positive");
    if (!(r0 > a)) throw std::invalid_argument("r0 must exceed a");
    if (!(k_d >= 0)) throw std::invalid_argument("k_d must be non-negative");
    return (a / r0) * std::exp(-(r0 - a) * std::sqrt(k_d / D));
}

namespace {

struct StepModel {
    double sigma;      // per-axis displacement sd
    double inv_Ddt;    // 1 / (D dt)
    double a;
    double r0;
    double p_bind;     // binding attempt probability per contact
    double p_deg;      // degradation probability per step
    double k_d_dt;     // k_d * dt
    double p_leave;    // probability of leaving BOUND per step
    double p_int;      // internalisation share on leaving
    double dt;
    long n_steps;
};

// One particle. Returns the internalisation time, or a negative value if the
// particle degraded or the horizon ran out.
double run_trial(const StepModel& m, uint64_t stream_seed) {
    std::mt19937_64 rng(stream_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    double x = 0.0, y = 0.0, z = m.r0;
    double r = m.r0;
    bool bound = false;

    for (long k = 0; k < m.n_steps; ++k) {
        if (bound) {
            if (m.p_leave > 0.0 && uni(rng) < m.p_leave) {
                if (uni(rng) < m.p_int) return static_cast<double>(k + 1) * m.dt;
                // re-release just outside the surface, along the current radius
                const double f = m.a * (1.0 + 1e-6) / r;
                x *= f; y *= f; z *= f;
                r = m.a * (1.0 + 1e-6);
                bound = false;
            }
            continue;
        }

        double nx = x + m.sigma * gauss(rng);
        double ny = y + m.sigma * gauss(rng);
        double nz = z + m.sigma * gauss(rng);
        double nr = std::sqrt(nx * nx + ny * ny + nz * nz);

        // Contact detection: certain if the step ends inside; otherwise the
        // exact radial bridge probability exp(-(r-a)(nr-a)/(D dt)).
        bool touched = false;
        if (nr < m.a) {
            touched = true;
        } else if (m.p_bind > 0.0) {
            const double ex = (r - m.a) * (nr - m.a) * m.inv_Ddt;
            if (ex < 40.0 && uni(rng) < std::exp(-ex)) touched = true;
        }

        // Sub-step times (as fractions of dt) resolve the race between
        // degradation and contact within the same step.
        double t_death = 2.0, t_touch = 2.0;
        if (m.p_deg > 0.0 && uni(rng) < m.p_deg)
            t_death = -std::log1p(-uni(rng) * m.p_deg) / m.k_d_dt;
        if (touched) t_touch = uni(rng);

        if (t_death <= 1.0 && t_death < t_touch) return -1.0;  // degraded
        if (touched) {
            if (m.p_bind >= 1.0 || uni(rng) < m.p_bind) {
                const double f = m.a / nr;  // surface projection
                x = nx * f; y = ny * f; z = nz * f;
                r = m.a;
                bound = true;
                continue;
            }
            if (t_death <= 1.0) return -1.0;  // degraded after the failed attempt
            if (nr < m.a) {  // specular reflection back outside
                const double f = (2.0 * m.a - nr) / nr;
                nx *= f; ny *= f; nz *= f;
                nr = 2.0 * m.a - nr;
            }
        }
        x = nx; y = ny; z = nz;
        r = nr;
    }
    return -1.0;
}

} // namespace

ImpulseResponse simulate_impulse(const SystemParameters& params,
                                 const SimulationSettings& settings) {
    params.validate();
    settings.validate(params.tau);

    const double horizon = settings.time_grid.back();
    StepModel m{};
    m.sigma = std::sqrt(2.0 * params.D * settings.dt);
    m.inv_Ddt = 1.0 / (params.D * settings.dt);
    m.a = params.a;
    m.r0 = params.r0;
    m.dt = settings.dt;
    m.n_steps = static_cast<long>(std::ceil(horizon / settings.dt - 1e-9));
    m.p_deg = -std::expm1(-params.k_d * settings.dt);
    m.k_d_dt = params.k_d * settings.dt;
    const double rate_out = params.k_b + params.k_i;
    m.p_leave = -std::expm1(-rate_out * settings.dt);
    m.p_int = rate_out > 0.0 ? params.k_i / rate_out : 0.0;

    // Surface reactivity kappa = k_f / (4 pi a^2); attempt probability per
    // contact is kappa sqrt(pi dt / D) / 2 (contacts happen twice as often
    // as end-of-step-inside events).
    const double kappa = params.k_f / (4.0 * std::numbers::pi * params.a * params.a);
    const double p_bind_raw =
        0.5 * kappa * std::sqrt(std::numbers::pi * settings.dt / params.D);
    m.p_bind = std::min(1.0, p_bind_raw);

    ImpulseResponse out;
    out.times = settings.time_grid;
    out.trials = settings.trials;
    out.p_bind = m.p_bind;
    if (p_bind_raw > settings.p_bind_warn)
        out.warnings.push_back(
            "binding attempt probability " + std::to_string(p_bind_raw) +
            " exceeds " + std::to_string(settings.p_bind_warn) +
            " and was clamped to 1; dt is too coarse for this k_f");

    const size_t bins = out.times.size();
    int n_threads = settings.threads > 0
                        ? settings.threads
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    n_threads = static_cast<int>(
        std::min<long>(n_threads, settings.trials));

    // Per-thread integer histograms over the time grid; the merge is a sum,
    // so the result does not depend on the partition.
    std::vector<std::vector<long>> partial(
        static_cast<size_t>(n_threads), std::vector<long>(bins, 0));
    const uint64_t master = settings.seed;
    const long trials = settings.trials;
    const double time_back = out.times.back();

    auto worker = [&](int tix) {
        auto& counts = partial[static_cast<size_t>(tix)];
        for (long trial = tix; trial < trials; trial += n_threads) {
            const uint64_t s = derive_seed(master, kTrialSalt,
                                           static_cast<uint64_t>(trial));
            double t_int = run_trial(m, s);
            if (t_int < 0.0) continue;
            if (t_int > time_back) t_int = time_back;  // last partial step
            const auto idx = static_cast<size_t>(
                std::lower_bound(out.times.begin(), out.times.end(), t_int) -
                out.times.begin());
            counts[idx]++;
        }
    };

    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
    }

    std::vector<long> cumulative(bins, 0);
    long running = 0;
    for (size_t k = 0; k < bins; ++k) {
        for (int t = 0; t < n_threads; ++t)
            running += partial[static_cast<size_t>(t)][k];
        cumulative[k] = running;
    }

    out.p_i.resize(bins);
    out.std_err.resize(bins);
    const auto n = static_cast<double>(trials);
    for (size_t k = 0; k < bins; ++k) {
        const double p = static_cast<double>(cumulative[k]) / n;
        out.p_i[k] = p;
        out.std_err[k] = std::sqrt(p * (1.0 - p) / n);
    }
    return out;
}

} // namespace picsem
