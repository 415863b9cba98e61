#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "picsem/pharmacodynamics.hpp"
#include "picsem/pic_information.hpp"
#include "picsem/reactive_channel.hpp"
#include "picsem/system.hpp"

namespace picsem {

enum class ScaleKind { Linear, Log };

/// Which parameter is scrambled, over what range and grid.
struct InterventionSpec {
    ParameterId parameter = ParameterId::Lambda;
    double range_min = 0.0;
    double range_max = 0.0;
    int grid_points = 61;
    ScaleKind scale = ScaleKind::Linear;

    // Intervention ranges and grids used throughout: lambda [1000,4000],
    // k_d [1000,20000], k_f [1e-14,4e-14] (log), k_b [5000,20000],
    // k_i [1000,5000]; 61 points each.
    static InterventionSpec defaults(ParameterId id);

    void validate() const;
    std::vector<double> grid() const;
};

struct SweepPoint {
    double param_value = 0.0;
    double p_i_at_tau = 0.0;
    double mu_p = 1.0;
    double c_int = 0.0;
    double viability = 1.0;
    double capacity_bps = 0.0;
};

struct SweepCurve {
    InterventionSpec spec;
    double tau = 0.0;
    std::vector<SweepPoint> points;  // ordered by param_value
};

struct SemanticResult {
    double s_epsilon = 0.0;       // bit/s
    double critical_value = 0.0;  // parameter units
    long admissible_set_size = 0;
    double v_min = 0.0;
    std::optional<std::pair<double, double>> meaningless_range;
};

struct TemporalProfile {
    ParameterId parameter;
    std::vector<double> tau;
    std::vector<double> s_epsilon;
};

/// Impulse responses backing one intervention family. Interventions on the
/// reaction rates need a fresh simulation per grid point (seed derived from
/// (settings.seed, point index)); a lambda intervention leaves the impulse
/// response untouched and `impulses` holds the single shared response.
struct FamilyImpulses {
    InterventionSpec spec;
    std::vector<double> grid;
    std::vector<ImpulseResponse> impulses;
    bool shared = false;
};

FamilyImpulses simulate_family(const InterventionSpec& spec,
                               const SystemParameters& params,
                               const SimulationSettings& settings);

/// One sweep point from an already-simulated impulse response for the
/// overridden parameter set.
SweepPoint evaluate_point(const SystemParameters& params, ParameterId id,
                          double value, double tau,
                          const ImpulseResponse& impulse);

/// Fresh-simulation flavour; lambda interventions should prefer the shared
/// overload above, reaction-rate interventions need this one.
SweepPoint evaluate_point(const SystemParameters& params, ParameterId id,
                          double value, const SimulationSettings& settings);

SweepCurve curve_from_family(const FamilyImpulses& family,
                             const SystemParameters& params, double tau);

/// Full viability/capacity curve for one intervention.
SweepCurve sweep(const InterventionSpec& spec, const SystemParameters& params,
                 const SimulationSettings& settings);

/// Minimum channel capacity among interventions whose viability reaches the
/// minimum achievable one within epsilon. critical_value is the parameter
/// value attaining that minimum capacity (ties broken toward the range end
/// with the higher viability, i.e. the least intervention effort); the
/// meaningless range spans admissible points whose capacity strictly
/// exceeds s_epsilon.
SemanticResult extract_semantic_information(const SweepCurve& curve,
                                            double epsilon);

TemporalProfile profile_from_family(const FamilyImpulses& family,
                                    const SystemParameters& params,
                                    const std::vector<double>& tau_grid);

/// S_epsilon(tau) over tau_grid for each intervention family. Impulse
/// responses are simulated once to max(tau_grid) and reused for every tau.
std::vector<TemporalProfile> temporal_profile(
    const std::vector<InterventionSpec>& specs, const SystemParameters& params,
    const SimulationSettings& settings, const std::vector<double>& tau_grid);

} // namespace picsem
