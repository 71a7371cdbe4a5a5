#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "congruence/verify.hpp"

namespace congruence {

enum class OutputFormat { Json, Csv, Text };

/// "json", "csv" or "text". Throws InvalidArgument.
OutputFormat parse_output_format(std::string_view name);

/// Array of {"claim","p","modulus","lhs","rhs","holds","ns"} objects, keys in
/// that order, two-space indent, trailing newline.
std::string to_json(const std::vector<CongruenceReport>& reports);
/// Inverse of to_json. Throws InvalidArgument on malformed input.
std::vector<CongruenceReport> reports_from_json(std::string_view text);

/// Header row plus one row per report, same columns as JSON.
std::string to_csv(const std::vector<CongruenceReport>& reports);
std::vector<CongruenceReport> reports_from_csv(std::string_view text);

/// Human-readable lines; failures list their details.
std::string to_text(const std::vector<CongruenceReport>& reports);

std::string format_reports(const std::vector<CongruenceReport>& reports, OutputFormat format);

}  // namespace congruence
