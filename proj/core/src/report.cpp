#include "sombor/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sombor/claims.hpp"

namespace sombor {

std::string format_double(double value, int significant_digits) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, significant_digits);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::string json_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

namespace {

// NaN has no JSON literal; nulls mark values that were never computed.
std::string json_number(double v) { return std::isnan(v) ? "null" : format_double(v); }

void append_row_fields(std::string& out, const ClaimResult& r, bool json) {
    if (json) {
        out += "{\"claim_id\":\"" + json_escape(r.claim_id) + "\"";
        out += ",\"instance\":\"" + json_escape(r.instance) + "\"";
        out += ",\"formula_value\":" + json_number(r.formula_value);
        out += ",\"direct_value\":" + json_number(r.direct_value);
        out += ",\"abs_dev\":" + json_number(r.abs_dev);
        out += ",\"rel_dev\":" + json_number(r.rel_dev);
        out += ",\"verdict\":\"" + std::string(to_string(r.verdict)) + "\"";
        if (!r.error.empty()) out += ",\"error\":\"" + json_escape(r.error) + "\"";
        out += "}";
    }
}

std::string csv_quote(std::string_view field) {
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

}  // namespace

std::string report_json(std::span<const ClaimResult> results) {
    std::string out = "[";
    for (size_t i = 0; i < results.size(); ++i) {
        out += i ? ",\n " : "\n ";
        append_row_fields(out, results[i], true);
    }
    out += results.empty() ? "]\n" : "\n]\n";
    return out;
}

std::string report_csv(std::span<const ClaimResult> results) {
    std::string out = "claim_id,instance,formula_value,direct_value,abs_dev,rel_dev,verdict\n";
    for (const ClaimResult& r : results) {
        out += r.claim_id;
        out += ',' + csv_quote(r.instance);
        out += ',' + format_double(r.formula_value);
        out += ',' + format_double(r.direct_value);
        out += ',' + format_double(r.abs_dev);
        out += ',' + format_double(r.rel_dev);
        out += ',';
        out += to_string(r.verdict);
        out += '\n';
    }
    return out;
}

std::string report_markdown(std::span<const ClaimResult> results) {
    std::string out =
        "| claim | instance | formula | direct | abs dev | rel dev | verdict |\n"
        "|---|---|---|---|---|---|---|\n";
    size_t matches = 0, mismatches = 0, inapplicable = 0;
    for (const ClaimResult& r : results) {
        out += "| " + r.claim_id + " | " + r.instance + " | " + format_double(r.formula_value) +
               " | " + format_double(r.direct_value) + " | " + format_double(r.abs_dev) + " | " +
               format_double(r.rel_dev) + " | " + std::string(to_string(r.verdict));
        if (!r.error.empty()) out += " (" + r.error + ")";
        out += " |\n";
        switch (r.verdict) {
            case Verdict::match: ++matches; break;
            case Verdict::mismatch: ++mismatches; break;
            case Verdict::inapplicable: ++inapplicable; break;
        }
    }
    out += "\n" + std::to_string(results.size()) + " rows: " + std::to_string(matches) +
           " match, " + std::to_string(mismatches) + " mismatch, " +
           std::to_string(inapplicable) + " inapplicable\n";
    return out;
}

}  // namespace sombor
