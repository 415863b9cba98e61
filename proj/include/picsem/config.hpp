#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "picsem/intervention.hpp"
#include "picsem/system.hpp"

namespace picsem {

enum class OutputFormat { Csv, Json, Svg };

const char* to_string(OutputFormat f);
OutputFormat format_from_string(const std::string& name);

/// Everything a catalogue run needs, with the default scenario baked in.
/// Parses from flat INI-style text ([system], [simulation], [interventions],
/// [intervention.<param>], [temporal], [output]); unknown keys are rejected
/// with the key name and line number.
struct RunConfig {
    SystemParameters params;

    double dt = 1e-6;
    long trials = 100000;
    uint64_t seed = 123456789ULL;
    int time_points = 200;
    int threads = 0;

    std::vector<InterventionSpec> interventions;  // Table of enabled sweeps

    double temporal_tau_min = 0.010;
    double temporal_tau_max = 0.025;
    int temporal_points = 31;

    std::string output_dir = "out";
    std::vector<OutputFormat> formats = {OutputFormat::Csv, OutputFormat::Json,
                                         OutputFormat::Svg};

    static RunConfig defaults();

    SimulationSettings make_settings() const;
    std::vector<double> tau_grid() const;
    void validate() const;

    bool operator==(const RunConfig&) const = default;
};

/// Parse config text; empty text yields RunConfig::defaults(). Throws
/// std::invalid_argument with line/key diagnostics.
RunConfig parse_config(const std::string& text);

/// Lossless rendering; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& config);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

} // namespace picsem
