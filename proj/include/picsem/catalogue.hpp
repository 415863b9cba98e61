#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "picsem/config.hpp"
#include "picsem/intervention.hpp"

namespace picsem {

inline constexpr const char* kVersion = "0.1.0";

// Fixed interchange schemas; golden-file tests pin these strings.
inline constexpr const char* kSweepCsvHeader =
    "param,value,p_i,mu_p,c_int,viability,capacity_bps";
inline constexpr const char* kImpulseCsvHeader = "t,p_i,stderr";
inline constexpr const char* kTemporalCsvHeader = "param,tau,s_epsilon_bps";

/// Published reference values for the default scenario, kept alongside the
/// computed results so the catalogue records its own deviation from them.
struct ReferenceTarget {
    ParameterId parameter;
    double s_epsilon;       // bit/s
    double critical_value;  // parameter units
};
const std::vector<ReferenceTarget>& reference_targets();

struct SweepResult {
    SweepCurve curve;
    SemanticResult semantic;
};

struct CatalogueMetadata {
    uint64_t seed = 0;
    std::string version = kVersion;
    double epsilon = 0.0;
    double tau = 0.0;
    double timing_seconds = 0.0;   // excluded from determinism comparisons
    std::string created_utc;       // excluded from determinism comparisons
};

struct SemanticCatalogue {
    CatalogueMetadata metadata;
    std::vector<SweepResult> sweeps;
    std::vector<double> temporal_tau;
    std::vector<TemporalProfile> temporal;
};

/// Executes every enabled sweep plus the temporal profiles. Reaction-rate
/// impulse responses are simulated once per grid point to the longest
/// horizon needed and serve both the tau = params.tau sweep curve and the
/// temporal profile.
SemanticCatalogue run_catalogue(const RunConfig& config);

/// run_catalogue + file outputs into config.output_dir: one CSV and one SVG
/// per sweep, a temporal CSV/SVG and catalogue.json (subset per
/// config.formats). Partial outputs are removed if any step fails.
SemanticCatalogue run_catalogue_to_files(const RunConfig& config);

std::string sweep_to_csv(const SweepCurve& curve);
std::string impulse_to_csv(const ImpulseResponse& impulse);
std::string temporal_to_csv(const std::vector<TemporalProfile>& profiles);
std::string catalogue_to_json(const SemanticCatalogue& catalogue);

std::string sweep_to_svg(const SweepCurve& curve, const SemanticResult& semantic);
std::string temporal_to_svg(const std::vector<TemporalProfile>& profiles);

} // namespace picsem
