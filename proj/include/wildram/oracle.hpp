#pragma once

#include <cstdint>
#include <optional>

#include "wildram/asreduce.hpp"

namespace wildram {

/// Oracles re-derive lower jumps from an explicit model of the extension:
/// with a0^p - a0 = alpha0 and y = a0^{-1/n0} a uniformizer of M = K(a0),
/// the local parameter t of K is computed as a power series x(y) in y.
/// No jump formula is consulted.
///
/// prec is the number of y-adic digits of x(y) computed past its leading term
/// y^p. kDefaultPrec selects p^2 (n0 + n1) + 2p^2 + 4.

constexpr std::int64_t kDefaultPrec = 0;

std::int64_t default_oracle_prec(std::int64_t p, std::int64_t n0, std::int64_t n1);

/// x(y) with alpha0(x(y)) = y^{-p n0} - y^{-n0}, known modulo y^{p + prec}.
/// Throws RootNotInField when the leading coefficient of t^{n0} alpha0 has no
/// n0-th root in the coefficient field.
LaurentSeries local_parameter_in_y(const LaurentSeries& alpha0, std::int64_t n0, std::int64_t prec);

/// Unique lower jump of K(a)/K, a^p - a = f, read as v(sigma(y) - y) - 1
/// where sigma(a) = a + 1. Also checks that x(sigma(y)) = x(y).
std::int64_t oracle_p_cyclic_jump(const ReducedAS& f, std::int64_t prec = kDefaultPrec);

/// Second lower jump of the cyclic extension of degree p^2 given by v: the
/// conductor over M of a1^p - a1 = alpha1(x(y)) - W, where (a0^p, a1^p) -_w
/// (a0, a1) = (alpha0, alpha1) and W is the second Witt coordinate of
/// (a0^p, 0) -_w (a0, 0). p-divisible poles are stripped by p-th roots until
/// the leading exponent is prime to p.
std::int64_t oracle_p2_second_jump(const ReducedWitt2& v, std::int64_t prec = kDefaultPrec);

struct DerivativeReport {
    std::int64_t dx_dy;           // v_M(dx/dy)
    std::int64_t dx_dy_expected;  // p n0 - n0 + p - 1
    std::optional<std::int64_t> dlhs_dy;           // v_M(d/dy alpha1(x(y))), alpha1 wild only
    std::optional<std::int64_t> dlhs_dy_expected;  // (n0 - n1) p - n0 - 1
};

/// Throws AssertionFailure when a computed valuation differs from the expected one.
DerivativeReport oracle_derivative_check(const ReducedWitt2& v, std::int64_t prec = kDefaultPrec);

}  // namespace wildram
