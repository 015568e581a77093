#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Command-line surface: flag/config-file parsing with CLI > file > default
// precedence, scenario presets for the bundled figures, and CSV/JSON curve
// emission with a reproducible byte layout.
//
// Exit status contract: 0 success, 2 usage error, 1 runtime error.

namespace spinboost {

enum class SweepMode { WignerAngle, EntropyCurve, TwoPoint, Figure };
enum class OutputFormat { Csv, Json };

struct SweepConfig {
    SweepMode mode = SweepMode::EntropyCurve;
    std::string figure;  // fig1 | fig2a | fig2b, set iff mode == Figure
    double v1 = 0.985;
    double theta_deg = 90.0;
    double sigma = 1.0;
    double xi_min = 0.0;
    double xi_max = 12.0;
    int xi_steps = 60;
    int nodes = 48;
    std::string output = "sweep.csv";
    OutputFormat format = OutputFormat::Csv;
    bool no_timestamp = false;
};

// Malformed or contradictory configuration; maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --help was requested; carries the usage text, maps to exit status 0.
struct HelpRequested : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse flags (without the program name) plus an optional --config JSON
// file; flags win over file keys, file keys over defaults. Unknown flags
// and unknown file keys are rejected by name.
SweepConfig parse_config(const std::vector<std::string>& args);

// Execute the sweep and write the output file(s). Figure mode writes one
// file per preset scenario, tagging the file name. Returns the paths
// written; throws std::runtime_error on I/O failure.
std::vector<std::string> run(const SweepConfig& config);

// parse_config + run with the exit-status contract applied.
int sweep_main(int argc, const char* const* argv);

}  // namespace spinboost
