#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/generators.hpp"
#include "sombor/graph.hpp"

namespace sombor {

enum class Verdict { match, mismatch, inapplicable };

std::string_view to_string(Verdict v);

/// One (base graph, transform parameter) point a claim is evaluated at.
struct ClaimInstance {
    GraphSpec spec;  // base description; family gates table-row claims
    Graph base{0};
    int m = 1;
    ShadowConvention convention = ShadowConvention::definition;
};

/// A closed-form identity paired with an independent direct evaluator.
///
/// The formula side is a function of (n, k, m) plus, for energy identities,
/// the base graph energy as an auxiliary input. The direct side rebuilds the
/// transformed graph and computes the quantity from first definitions. The
/// registry never asserts a formula; deviations are reported, not judged.
struct Claim {
    std::string id;
    std::string description;  // the claimed identity, in plain math notation
    bool uses_m = true;
    bool uses_convention = false;
    bool needs_aux_energy = false;
    double default_tolerance = 1e-9;
    std::function<bool(const ClaimInstance&)> applicable;
    std::function<double(int n, int k, int m, double aux_energy)> formula;
    std::function<double(const ClaimInstance&)> direct;
};

struct ClaimResult {
    std::string claim_id;
    std::string instance;  // rendered descriptor, e.g. "cycle(6) m=2 example"
    double formula_value = 0.0;
    double direct_value = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;  // abs_dev / max(|direct_value|, 1)
    Verdict verdict = Verdict::inapplicable;
    std::string error;  // non-empty when evaluation failed

    // sort keys (not serialized)
    std::string instance_spec;
    int instance_m = 0;
    int instance_conv = 0;
};

/// The built-in registry: the two index identities for the splitting and
/// shadow transforms of k-regular graphs, the regularity statement for the
/// shadow, the two energy identities with their reduced-matrix companions,
/// the structural energy identity that follows from the Kronecker
/// factorization, and one claim per published summary-table cell.
const std::vector<Claim>& builtin_claims();

/// Looks up a claim by id. Throws std::invalid_argument on an unknown id.
const Claim& find_claim(std::string_view id);

/// Closed-form side of a claim. Throws std::invalid_argument on an unknown id
/// or when the claim needs aux_energy and none is given.
double evaluate_formula(std::string_view id, int n, int k, int m,
                        std::optional<double> aux_energy = std::nullopt);

/// Evaluates both sides on one instance. A deviation beyond tol is a
/// mismatch verdict, not an error; a failed applicability predicate yields
/// verdict inapplicable with NaN values.
ClaimResult check_claim(const Claim& claim, const ClaimInstance& instance, double tol);

struct SuiteOptions {
    std::vector<ShadowConvention> conventions = {ShadowConvention::definition,
                                                 ShadowConvention::example};
    std::optional<double> tolerance;       // overrides per-claim defaults when set
    bool table_claims_only = false;        // restrict to the summary-table cells
};

/// Evaluates every applicable (claim, instance) pair exactly once; claims that
/// ignore m or the convention are evaluated at a single representative point.
/// Per-instance failures become rows with an error note instead of aborting.
/// Rows are sorted by (claim id, spec string, m, convention).
std::vector<ClaimResult> run_suite(const std::vector<GraphSpec>& specs,
                                   const std::vector<int>& m_values,
                                   const SuiteOptions& options = {});

/// Same, over pre-built base graphs (e.g. one read from a file, described by
/// a Family::custom spec).
std::vector<ClaimResult> run_suite_on(const std::vector<std::pair<GraphSpec, Graph>>& bases,
                                      const std::vector<int>& m_values,
                                      const SuiteOptions& options = {});

/// Default instance set for the verify command: one representative of each
/// summary-table family at desk scale.
std::vector<GraphSpec> default_verify_specs();

}  // namespace sombor
