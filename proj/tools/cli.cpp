#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sombor/claims.hpp"
#include "sombor/invariants.hpp"
#include "sombor/report.hpp"

namespace sombor::cli {
namespace {

std::vector<int> parse_range(const std::string& text, const std::string& flag, int minimum) {
    auto parse_one = [&](const std::string& piece) {
        try {
            size_t used = 0;
            int value = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            return value;
        } catch (const std::exception&) {
            throw UsageError(flag + ": expected integer or a..b range, got \"" + text + "\"");
        }
    };
    int lo = 0, hi = 0;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        lo = parse_one(text.substr(0, dots));
        hi = parse_one(text.substr(dots + 2));
    } else {
        lo = hi = parse_one(text);
    }
    if (lo > hi) throw UsageError(flag + ": empty range " + text);
    if (lo < minimum)
        throw UsageError(flag + ": values must be >= " + std::to_string(minimum));
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

OutputFormat parse_format(const std::string& text, const std::string& flag) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "markdown") return OutputFormat::markdown;
    if (text == "edgelist") return OutputFormat::edgelist;
    if (text == "plain") return OutputFormat::plain;
    throw UsageError(flag + ": unknown format \"" + text + "\"");
}

struct RawArgs {
    std::vector<std::string> specs;
    std::string file;
    std::string m_text;
    std::string n_text;
    std::string convention;
    std::string format;
    std::string matrix;
    std::string out_path;
    double tolerance = -1.0;
    bool tolerance_set = false;
    bool strict = false;
};

void add_spec_options(CLI::App* cmd, RawArgs& raw, bool multiple) {
    auto* spec = cmd->add_option("--spec", raw.specs, "graph spec, e.g. cycle(6)|splitting(m=1)");
    if (!multiple) spec->expected(0, 1);
    cmd->add_option("--file", raw.file, "edge-list input file");
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Sombor index and Sombor energy toolkit for regular-graph transforms"};
    app.require_subcommand(1);
    RawArgs raw;

    CLI::App* gen = app.add_subcommand("gen", "generate a graph and write its edge list");
    add_spec_options(gen, raw, false);
    gen->add_option("--format", raw.format, "edgelist (default)");
    gen->add_option("--out", raw.out_path, "output path (default stdout)");

    CLI::App* index = app.add_subcommand("index", "Sombor index of a graph");
    add_spec_options(index, raw, false);
    index->add_option("--format", raw.format, "plain (default) or json");
    index->add_option("--out", raw.out_path, "output path (default stdout)");

    CLI::App* spectrum = app.add_subcommand("spectrum", "descending eigenvalues of a graph matrix");
    add_spec_options(spectrum, raw, false);
    spectrum->add_option("--matrix", raw.matrix, "adjacency (default) or sombor");
    spectrum->add_option("--format", raw.format, "plain (default) or json");
    spectrum->add_option("--out", raw.out_path, "output path (default stdout)");

    CLI::App* energy = app.add_subcommand("energy", "sum of absolute eigenvalues");
    add_spec_options(energy, raw, false);
    energy->add_option("--matrix", raw.matrix, "adjacency (default) or sombor");
    energy->add_option("--format", raw.format, "plain (default) or json");
    energy->add_option("--out", raw.out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "evaluate the claim registry on instances");
    add_spec_options(verify, raw, true);
    verify->add_option("--m", raw.m_text, "m values, integer or a..b (default 1..3)");
    verify->add_option("--convention", raw.convention, "restrict shadow claims: definition|example");
    verify->add_option("--tol", raw.tolerance, "tolerance override for all claims")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", raw.format, "markdown (default), csv or json");
    verify->add_option("--out", raw.out_path, "output path (default stdout)");
    verify->add_flag("--strict", raw.strict, "exit 2 if any claim mismatches");

    CLI::App* table = app.add_subcommand("table", "summary-table cells, formula vs direct");
    table->add_option("--n", raw.n_text, "family size values, integer or a..b (default 4)");
    table->add_option("--m", raw.m_text, "m values, integer or a..b (default 1..3)");
    table->add_option("--convention", raw.convention, "restrict shadow claims: definition|example");
    table->add_option("--tol", raw.tolerance, "tolerance override for all claims")
        ->check(CLI::PositiveNumber);
    table->add_option("--format", raw.format, "markdown (default), csv or json");
    table->add_option("--out", raw.out_path, "output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CliConfig config;
    CLI::App* active = app.get_subcommands().front();
    const std::string name = active->get_name();
    raw.tolerance_set = active->count("--tol") > 0;

    if (name == "gen") config.command = Command::gen;
    else if (name == "index") config.command = Command::index;
    else if (name == "spectrum") config.command = Command::spectrum;
    else if (name == "energy") config.command = Command::energy;
    else if (name == "verify") config.command = Command::verify;
    else config.command = Command::table;

    config.specs = raw.specs;
    config.file = raw.file;
    config.out_path = raw.out_path;
    config.strict = raw.strict;
    if (raw.tolerance_set) config.tolerance = raw.tolerance;
    if (!raw.convention.empty()) {
        try {
            config.convention = parse_convention(raw.convention);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--convention: ") + e.what());
        }
    }
    if (!raw.m_text.empty()) config.m_values = parse_range(raw.m_text, "--m", 1);
    if (!raw.n_text.empty()) config.n_values = parse_range(raw.n_text, "--n", 1);

    // Per-command format defaults and validity.
    switch (config.command) {
        case Command::gen:
            config.format = raw.format.empty() ? OutputFormat::edgelist
                                               : parse_format(raw.format, "--format");
            if (config.format != OutputFormat::edgelist)
                throw UsageError("--format: gen writes edgelist only");
            break;
        case Command::index:
        case Command::spectrum:
        case Command::energy:
            config.format =
                raw.format.empty() ? OutputFormat::plain : parse_format(raw.format, "--format");
            if (config.format != OutputFormat::plain && config.format != OutputFormat::json)
                throw UsageError("--format: expected plain or json for this command");
            break;
        case Command::verify:
        case Command::table:
            config.format =
                raw.format.empty() ? OutputFormat::markdown : parse_format(raw.format, "--format");
            if (config.format != OutputFormat::markdown && config.format != OutputFormat::csv &&
                config.format != OutputFormat::json)
                throw UsageError("--format: expected markdown, csv or json for this command");
            break;
    }

    if (!raw.matrix.empty()) {
        if (raw.matrix == "adjacency") config.matrix = MatrixKind::adjacency;
        else if (raw.matrix == "sombor") config.matrix = MatrixKind::sombor;
        else throw UsageError("--matrix: expected adjacency or sombor");
    }

    // Input presence rules.
    const bool needs_one_input = config.command == Command::gen || config.command == Command::index ||
                                 config.command == Command::spectrum ||
                                 config.command == Command::energy;
    if (needs_one_input) {
        if (config.specs.size() + (config.file.empty() ? 0 : 1) != 1)
            throw UsageError(name + " requires exactly one of --spec or --file");
        if (config.command == Command::gen && !config.file.empty())
            throw UsageError("gen requires --spec");
    }
    if (config.command == Command::verify && !config.specs.empty() && !config.file.empty())
        throw UsageError("verify takes --spec or --file, not both");

    // Validate spec grammar early so usage errors surface as such.
    for (const std::string& s : config.specs) {
        try {
            GraphSpec::parse(s);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--spec: ") + e.what());
        }
    }
    return config;
}

namespace {

struct NamedGraph {
    std::string label;
    Graph graph{0};
};

NamedGraph load_input(const CliConfig& config) {
    if (!config.file.empty()) {
        std::ifstream in(config.file);
        if (!in) throw std::runtime_error("cannot open file " + config.file);
        Graph g = read_edge_list(in);
        return {config.file, std::move(g)};
    }
    GraphSpec spec = GraphSpec::parse(config.specs.front());
    return {spec.to_string(), generate(spec)};
}

DenseSymMatrix matrix_of(const Graph& g, MatrixKind kind) {
    return kind == MatrixKind::adjacency ? adjacency_matrix(g) : sombor_matrix(g);
}

std::string_view matrix_name(MatrixKind kind) {
    return kind == MatrixKind::adjacency ? "adjacency" : "sombor";
}

SuiteOptions suite_options(const CliConfig& config, bool table_only) {
    SuiteOptions options;
    if (config.convention)
        options.conventions = {*config.convention};
    options.tolerance = config.tolerance;
    options.table_claims_only = table_only;
    return options;
}

std::string render_report(const std::vector<ClaimResult>& results, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return report_json(results);
        case OutputFormat::csv: return report_csv(results);
        default: return report_markdown(results);
    }
}

int emit(const CliConfig& config, std::ostream& out, const std::string& text) {
    if (config.out_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(config.out_path);
    if (!file) throw std::runtime_error("cannot open output file " + config.out_path);
    file << text;
    return 0;
}

}  // namespace

int execute(const CliConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
        case Command::gen: {
            NamedGraph input = load_input(config);
            std::ostringstream text;
            write_edge_list(text, input.graph);
            return emit(config, out, text.str());
        }
        case Command::index: {
            NamedGraph input = load_input(config);
            const double value = sombor_index(input.graph);
            std::string text = config.format == OutputFormat::json
                                   ? "{\"command\":\"index\",\"input\":\"" +
                                         json_escape(input.label) +
                                         "\",\"value\":" + format_double(value) + "}\n"
                                   : format_double(value) + "\n";
            return emit(config, out, text);
        }
        case Command::spectrum: {
            NamedGraph input = load_input(config);
            const Spectrum spec = symmetric_eigenvalues(matrix_of(input.graph, config.matrix));
            std::string text;
            if (config.format == OutputFormat::json) {
                text = "{\"command\":\"spectrum\",\"input\":\"" + json_escape(input.label) +
                       "\",\"matrix\":\"" + std::string(matrix_name(config.matrix)) +
                       "\",\"eigenvalues\":[";
                for (size_t i = 0; i < spec.values.size(); ++i) {
                    if (i) text += ',';
                    text += format_double(spec.values[i]);
                }
                text += "]}\n";
            } else {
                for (double v : spec.values) text += format_double(v) + "\n";
            }
            return emit(config, out, text);
        }
        case Command::energy: {
            NamedGraph input = load_input(config);
            const double value = energy(matrix_of(input.graph, config.matrix));
            std::string text =
                config.format == OutputFormat::json
                    ? "{\"command\":\"energy\",\"input\":\"" + json_escape(input.label) +
                          "\",\"matrix\":\"" + std::string(matrix_name(config.matrix)) +
                          "\",\"value\":" + format_double(value) + "}\n"
                    : format_double(value) + "\n";
            return emit(config, out, text);
        }
        case Command::verify: {
            std::vector<ClaimResult> results;
            if (!config.file.empty()) {
                std::ifstream in(config.file);
                if (!in) throw std::runtime_error("cannot open file " + config.file);
                GraphSpec spec;
                spec.family = Family::custom;
                spec.label = config.file;
                std::vector<std::pair<GraphSpec, Graph>> bases;
                bases.emplace_back(spec, read_edge_list(in));
                results = run_suite_on(bases, config.m_values, suite_options(config, false));
            } else {
                std::vector<GraphSpec> specs;
                for (const std::string& s : config.specs) specs.push_back(GraphSpec::parse(s));
                if (specs.empty()) specs = default_verify_specs();
                results = run_suite(specs, config.m_values, suite_options(config, false));
            }
            emit(config, out, render_report(results, config.format));
            for (const ClaimResult& r : results)
                if (!r.error.empty())
                    err << "warning: " << r.claim_id << " on " << r.instance << ": " << r.error
                        << "\n";
            const bool any_mismatch = std::any_of(results.begin(), results.end(), [](const auto& r) {
                return r.verdict == Verdict::mismatch;
            });
            return config.strict && any_mismatch ? 2 : 0;
        }
        case Command::table: {
            std::vector<GraphSpec> specs;
            for (int n : config.n_values) {
                specs.push_back(GraphSpec::parse("cycle(" + std::to_string(n) + ")"));
                specs.push_back(GraphSpec::parse("complete(" + std::to_string(n) + ")"));
                specs.push_back(GraphSpec::parse("hypercube(" + std::to_string(n) + ")"));
                specs.push_back(GraphSpec::parse("complete_bipartite(" + std::to_string(n) + "," +
                                                 std::to_string(n) + ")"));
            }
            auto results = run_suite(specs, config.m_values, suite_options(config, true));
            emit(config, out, render_report(results, config.format));
            for (const ClaimResult& r : results)
                if (!r.error.empty())
                    err << "warning: " << r.claim_id << " on " << r.instance << ": " << r.error
                        << "\n";
            return 0;
        }
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return execute(parse_args(args), out, err);
    } catch (const HelpRequested& help) {
        out << help.text;
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sombor::cli
