#pragma once

#include <span>
#include <string>
#include <string_view>

namespace sombor {

struct ClaimResult;

/// Locale-independent shortest decimal with the given number of significant
/// digits (std::to_chars general format). Reports use 12, matrix dumps 17.
std::string format_double(double value, int significant_digits = 12);

/// Minimal JSON string escaping (quotes, backslashes, control characters).
std::string json_escape(std::string_view text);

// Claim-report serializations. All three print floats with 12 significant
// digits; rows keep the order they were given in, so sorted input yields
// byte-identical output across runs.
std::string report_json(std::span<const ClaimResult> results);
std::string report_csv(std::span<const ClaimResult> results);
std::string report_markdown(std::span<const ClaimResult> results);

}  // namespace sombor
