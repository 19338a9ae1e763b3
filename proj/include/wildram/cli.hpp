#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wildram/job.hpp"
#include "wildram/ramfilt.hpp"

namespace wildram {

enum class Command { Reduce, Jumps, Genus, Verify };

std::string to_string(Command c);
std::optional<Command> command_from_string(const std::string& s);

struct RunOptions {
    /// Oracle working precision; overrides the job's `prec` line.
    std::optional<std::int64_t> prec;
};

/// Dispatches one job. Throws on hard errors (InvalidInput for a job that does
/// not fit the command, plus whatever the pipelines raise).
RamReport run(const JobSpec& job, Command cmd, const RunOptions& opts = {});

struct SuiteOptions {
    std::int64_t trials = 100;
    std::uint64_t seed = 1;
    std::optional<std::int64_t> prec;
    FieldPtr field;  // null: cycle through p = 2, 3, 5
};

/// Random reduced Witt vectors with pole orders up to 12; both oracles are
/// compared with the jump formulas. OracleConfirmed iff every trial that ran
/// matched; DiscrepancyFlag lists the mismatches.
RamReport run_verification_suite(const SuiteOptions& opts);

/// Whole command line: `wildram <reduce|jumps|genus|verify> [FILE|-] [--json]
/// [--prec N] [--trials N --seed S]`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wildram
