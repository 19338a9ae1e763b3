#pragma once

#include <string>

#include "wildram/ramfilt.hpp"

namespace wildram {

/// JSON keys, in order: group, case, upper_jumps, lower_jumps, orders,
/// different_degree, genus, status, notes. Jumps are integers or "a/b"
/// strings; absent different degree or genus is null. Output is deterministic
/// and ends with a newline.
std::string report_to_json(const RamReport& r);

/// Inverse of report_to_json. Throws ParseError on malformed input.
RamReport report_from_json(const std::string& text);

std::string report_to_text(const RamReport& r);

/// 0 FormulaOnly/OracleConfirmed, 2 Undetermined, 3 DiscrepancyFlag.
int exit_code(Status s);

constexpr int kExitHardError = 1;

}  // namespace wildram
