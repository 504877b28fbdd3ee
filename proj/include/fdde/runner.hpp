#ifndef FDDE_RUNNER_HPP
#define FDDE_RUNNER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdde/analysis.hpp"
#include "fdde/problem.hpp"

namespace fdde {

// A full experiment description: the problem, which schemes to run, and where
// the CSV artifacts go.
struct RunConfig {
    ProblemConfig problem;
    std::vector<std::string> schemes;
    std::string output_dir = ".";
    bool emit_plot_data = false;
    std::optional<std::string> preset; // which preset seeded this config, if any
};

/// All recognized scheme labels, in canonical order.
const std::vector<std::string>& known_schemes();

/// True if `label` belongs to `family` (e.g. "rk4" is conformable-only).
bool scheme_matches_family(const std::string& label, Family family);

/// Runs one scheme by label on the given problem. Throws std::invalid_argument
/// for unknown labels or family mismatches.
Trajectory run_scheme(const ProblemConfig& cfg, const std::string& label);

/// Benchmark presets ex1..ex5 (conformable examples) and caputo-bench.
/// Throws std::invalid_argument for unknown names.
RunConfig preset_config(const std::string& name);

/// Parses a JSON experiment description. Unknown keys are rejected; all
/// semantic problems are reported together in one std::invalid_argument.
/// Malformed JSON raises std::invalid_argument with the parser position.
RunConfig parse_config(const std::string& source);

/// Serializes a RunConfig to JSON accepted by parse_config (round-trips).
std::string serialize_config(const RunConfig& config);

struct RunSummary {
    std::vector<std::string> files;               // everything written
    std::map<std::string, ErrorReport> errors;    // per scheme, vs the series
    bool any_diverged = false;
};

/// Executes every scheme in the config, writes `<scheme>.csv` per scheme plus
/// `errors.csv` (and `plotdata.csv` when requested) into output_dir.
/// I/O failures surface as std::system_error with the path in the message.
RunSummary run_experiment(const RunConfig& config);

} // namespace fdde

#endif
