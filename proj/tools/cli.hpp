#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sombor/generators.hpp"

namespace sombor::cli {

enum class Command { gen, index, spectrum, energy, verify, table };
enum class OutputFormat { plain, json, csv, markdown, edgelist };
enum class MatrixKind { adjacency, sombor };

struct CliConfig {
    Command command = Command::index;
    std::vector<std::string> specs;              // --spec (repeatable for verify)
    std::string file;                            // --file
    std::vector<int> m_values = {1, 2, 3};       // --m, "a..b" inclusive
    std::vector<int> n_values = {4};             // --n (table), "a..b" inclusive
    std::optional<ShadowConvention> convention;  // restricts shadow claims when set
    std::optional<double> tolerance;             // overrides per-claim defaults
    OutputFormat format = OutputFormat::plain;
    MatrixKind matrix = MatrixKind::adjacency;   // spectrum/energy
    std::string out_path;                        // empty: stdout
    bool strict = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when --help is requested; carries the rendered help text.
struct HelpRequested {
    std::string text;
};

/// Parses arguments (program name excluded). Throws UsageError on unknown
/// flags, malformed values or invalid flag combinations; HelpRequested for
/// --help.
CliConfig parse_args(const std::vector<std::string>& args);

/// Runs a parsed command. Writes results to `out` (or the configured --out
/// file) and diagnostics to `err`. Returns the process exit status: 0 on
/// success, 2 when a strict verify saw a mismatch. IO and parameter failures
/// throw; run() maps them to status 1.
int execute(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse + execute with error mapping; backs main().
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sombor::cli
