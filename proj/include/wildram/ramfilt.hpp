#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildram/asreduce.hpp"
#include "wildram/witt.hpp"

namespace wildram {

using Rational = boost::rational<std::int64_t>;

enum class Numbering { Lower, Upper };

/// Ramification jumps of G_0 with the subgroup orders between them.
///
/// orders[0] = |G_0|, orders[j] is the order just after jumps[j-1], and the
/// last entry is 1. Lower jumps are integers. Orders form a strictly
/// decreasing divisor chain.
struct JumpProfile {
    Numbering numbering = Numbering::Lower;
    std::vector<Rational> jumps;
    std::vector<std::int64_t> orders{1};
    std::string group = "trivial";

    /// Validates; a missing trailing 1 in orders is appended.
    static JumpProfile make(Numbering numbering, std::vector<Rational> jumps, std::vector<std::int64_t> orders,
                            std::string group = {});

    /// s_j = [G_0 : G_{l_j}] for j = 1..r (index j-1 in the result).
    std::vector<std::int64_t> indices() const;

    friend bool operator==(const JumpProfile&, const JumpProfile&) = default;
};

JumpProfile lower_to_upper(const JumpProfile& lower);
/// Throws InvalidInput if a lower jump comes out non-integral.
JumpProfile upper_to_lower(const JumpProfile& upper);

/// phi(v) = integral_0^v du / [G_0 : G_u] for the lower profile, v >= 0.
Rational herbrand_phi(const JumpProfile& lower, Rational v);
/// Inverse of herbrand_phi.
Rational herbrand_psi(const JumpProfile& lower, Rational u);

/// sum_{i >= 0} (|G_i| - 1).
std::int64_t different_degree(const JumpProfile& lower);

/// Lower profile of the Artin-Schreier extension; requires WildReduced.
JumpProfile jumps_p_cyclic(const ReducedAS& f);

/// Lower profile of the cyclic extension of degree p^2. Requires a wild first
/// component; a second component without a wild pole counts as n1 = 0.
JumpProfile jumps_p2_cyclic(const ReducedWitt2& v);

/// Upper jumps (n0, max(p n0, n1)) of the cyclic extension of degree p^2.
std::pair<std::int64_t, std::int64_t> p2_upper_jumps(std::int64_t p, std::int64_t n0, std::int64_t n1);

enum class Status { FormulaOnly, OracleConfirmed, Undetermined, DiscrepancyFlag };

std::string to_string(Status s);
std::optional<Status> status_from_string(const std::string& s);

struct RamReport {
    std::string group;
    std::string case_label;
    std::vector<Rational> upper_jumps;
    std::vector<Rational> lower_jumps;
    std::vector<std::int64_t> orders;
    std::optional<std::int64_t> different_degree;
    std::optional<std::int64_t> genus;
    Status status = Status::FormulaOnly;
    std::vector<std::string> notes;

    friend bool operator==(const RamReport&, const RamReport&) = default;
};

/// Report carrying both numberings and the different degree of a lower profile.
RamReport report_from_lower(const JumpProfile& lower, std::string case_label);

/// Report for a single Artin-Schreier datum (any kind).
RamReport report_as(const ReducedAS& f);
/// Report for a single Witt vector of length 2 (any kinds).
RamReport report_witt2(const ReducedWitt2& v);

/// Compositum of two Artin-Schreier extensions. Throws InvalidInput if they
/// coincide or either one is not wildly ramified.
RamReport compositum_p_cyclic(const LaurentSeries& f, const LaurentSeries& g);

/// Compositum of two cyclic extensions of degree p^2. Throws InvalidInput if
/// they coincide or either first component is not wild.
RamReport compositum_p2(const WittVec2& v, const WittVec2& w);

std::string group_cyclic(std::int64_t order);

}  // namespace wildram
