// Ingestion and reporting used by the CLI: JSON/CSV weight parsing and the
// deterministic codebook/table/DOT renderings.
#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "alphatree/core.hpp"

namespace alphatree {

enum class OutputFormat { Json, Table, Dot };

/// JSON object {"weights": [...]} with positive integers or decimal strings.
WeightList parse_weights_json(const std::string& text);

/// One entry per non-empty line.
WeightList parse_weights_csv(const std::string& text);

/// Sniffs JSON ('{' or '[') vs CSV.
WeightList parse_weights_auto(const std::string& text);

/// Comma-separated inline list, e.g. "24,12,9".
WeightList parse_weights_inline(const std::string& csv);

/// Codebook report: per-symbol records plus a summary with the exact cost
/// fraction, a 12-significant-digit float rendering, and, for normalized
/// inputs, entropy and the closed-form bounds. Byte-deterministic for fixed
/// input and flags.
std::string emit_codebook(const CodeBook& cb, const WeightList& w, OutputFormat format);

/// The JSON form of the same report, for callers that append extra sections
/// before printing.
nlohmann::ordered_json codebook_json(const CodeBook& cb, const WeightList& w);

std::string format_double(double v);  // %.12g

}  // namespace alphatree
