#include "picsem/system.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace picsem {

const char* to_string(ParameterId id) {
    switch (id) {
        case ParameterId::Lambda: return "lambda";
        case ParameterId::KD: return "k_d";
        case ParameterId::KF: return "k_f";
        case ParameterId::KB: return "k_b";
        case ParameterId::KI: return "k_i";
    }
    return "?";
}

ParameterId parameter_from_string(const std::string& name) {
    if (name == "lambda") return ParameterId::Lambda;
    if (name == "k_d") return ParameterId::KD;
    if (name == "k_f") return ParameterId::KF;
    if (name == "k_b") return ParameterId::KB;
    if (name == "k_i") return ParameterId::KI;
    throw std::invalid_argument("unknown intervention parameter '" + name +
                                "' (expected lambda, k_d, k_f, k_b or k_i)");
}

double SystemParameters::get(ParameterId id) const {
    switch (id) {
        case ParameterId::Lambda: return lambda;
        case ParameterId::KD: return k_d;
        case ParameterId::KF: return k_f;
        case ParameterId::KB: return k_b;
        case ParameterId::KI: return k_i;
    }
    throw std::logic_error("bad ParameterId");
}

void SystemParameters::set(ParameterId id, double value) {
    switch (id) {
        case ParameterId::Lambda: lambda = value; return;
        case ParameterId::KD: k_d = value; return;
        case ParameterId::KF: k_f = value; return;
        case ParameterId::KB: k_b = value; return;
        case ParameterId::KI: k_i = value; return;
    }
    throw std::logic_error("bad ParameterId");
}

SystemParameters SystemParameters::with(ParameterId id, double value) const {
    SystemParameters p = *this;
    p.set(id, value);
    return p;
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

void require_finite(double v, const char* name) {
    require(std::isfinite(v), std::string(name) + " must be finite");
}

} // namespace

void SystemParameters::validate() const {
    for (auto [v, name] : {std::pair{tau, "tau"}, {lambda, "lambda"},
                           {k_d, "k_d"}, {k_f, "k_f"}, {k_b, "k_b"},
                           {k_i, "k_i"}, {D, "D"}, {a, "a"}, {r0, "r0"},
                           {c_th, "c_th"}, {n, "n"}, {epsilon, "epsilon"}})
        require_finite(v, name);
    require(tau > 0, "tau must be positive");
    require(lambda > 0, "lambda must be positive");
    require(D > 0, "D must be positive");
    require(a > 0, "a must be positive");
    require(r0 > 0, "r0 must be positive");
    require(c_th > 0, "c_th must be positive");
    require(k_d >= 0, "k_d must be non-negative");
    require(k_f >= 0, "k_f must be non-negative");
    require(k_b >= 0, "k_b must be non-negative");
    require(k_i >= 0, "k_i must be non-negative");
    require(n >= 1, "n must be >= 1");
    require(epsilon >= 0 && epsilon < 1, "epsilon must be in [0, 1)");
    require(r0 > a, "r0 must exceed a (release point outside the receiver)");
}

SimulationSettings SimulationSettings::defaults(double tau) {
    SimulationSettings s;
    s.time_grid = uniform_time_grid(tau, 200);
    return s;
}

void SimulationSettings::validate(double tau) const {
    require(std::isfinite(dt) && dt > 0, "dt must be positive");
    require(dt <= tau / 100.0, "dt must be <= tau/100");
    require(trials >= 1, "trials must be >= 1");
    require(!time_grid.empty(), "time_grid must be nonempty");
    require(time_grid.front() > 0, "time_grid entries must be positive");
    for (size_t i = 1; i < time_grid.size(); ++i)
        require(time_grid[i] > time_grid[i - 1],
                "time_grid must be strictly increasing");
    require(time_grid.back() <= tau, "time_grid must end at or before tau");
    require(threads >= 0, "threads must be >= 0");
}

std::vector<double> uniform_time_grid(double tau, int points) {
    if (points < 1) throw std::invalid_argument("time grid needs >= 1 point");
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k)
        grid[k] = tau * static_cast<double>(k + 1) / static_cast<double>(points);
    grid.back() = tau;
    return grid;
}

} // namespace picsem
