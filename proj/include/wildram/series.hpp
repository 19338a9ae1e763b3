#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "wildram/field.hpp"

namespace wildram {

/// Truncated Laurent series sum c_k t^k + O(t^prec) over F_{p^e}.
///
/// Coefficients are stored densely from the valuation upward; the first
/// stored coefficient is always nonzero. A series with no stored coefficient
/// is either exact zero (prec == kExact) or zero-to-precision, and reading the
/// valuation of the latter throws. Values are immutable.
///
/// Precision follows the usual propagation rules; kExact marks Laurent
/// polynomials known exactly. Operations whose exact result would be an
/// infinite series take a precision cap and throw InsufficientPrecision when
/// none is given.
class LaurentSeries {
public:
    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

    explicit LaurentSeries(FieldPtr ctx, std::int64_t prec = kExact);
    /// Drops coefficients at or above prec.
    LaurentSeries(FieldPtr ctx, const std::map<std::int64_t, FieldElem>& terms, std::int64_t prec = kExact);

    static LaurentSeries zero(FieldPtr ctx, std::int64_t prec = kExact) { return LaurentSeries(std::move(ctx), prec); }
    static LaurentSeries constant(FieldPtr ctx, FieldElem c, std::int64_t prec = kExact);
    static LaurentSeries monomial(FieldPtr ctx, FieldElem c, std::int64_t k, std::int64_t prec = kExact);
    static LaurentSeries one(FieldPtr ctx, std::int64_t prec = kExact);
    /// coeffs[i] is the coefficient of t^{start+i}; zeros are allowed and stripped.
    static LaurentSeries from_dense(FieldPtr ctx, std::int64_t start, std::vector<FieldElem> coeffs,
                                    std::int64_t prec = kExact);

    const FieldPtr& ctx() const noexcept { return ctx_; }
    const FieldCtx& field() const noexcept { return *ctx_; }
    std::int64_t prec() const noexcept { return prec_; }
    bool is_exact() const noexcept { return prec_ >= kExact; }
    /// No stored coefficient (exact zero or zero-to-precision).
    bool has_no_terms() const noexcept { return coeffs_.empty(); }
    bool is_exact_zero() const noexcept { return coeffs_.empty() && is_exact(); }

    /// Lowest exponent with a nonzero coefficient. Throws InsufficientPrecision
    /// on zero-to-precision, InvalidInput on exact zero.
    std::int64_t valuation() const;
    /// Valuation if known, otherwise prec (a lower bound in both cases).
    std::int64_t valuation_bound() const noexcept { return coeffs_.empty() ? prec_ : start_; }
    /// Largest stored exponent (requires at least one term).
    std::int64_t degree() const;
    FieldElem leading_coefficient() const;
    /// Coefficient of t^k; throws InsufficientPrecision for k >= prec.
    FieldElem coeff(std::int64_t k) const;
    /// Nonzero stored terms, ascending.
    std::map<std::int64_t, FieldElem> terms() const;
    std::size_t term_count() const noexcept;
    /// Raw dense storage: dense()[i] is the coefficient of t^{start()+i}.
    std::int64_t start() const noexcept { return start_; }
    const std::vector<FieldElem>& dense() const noexcept { return coeffs_; }

    /// Keeps only coefficients below n; new prec is min(prec, n).
    LaurentSeries truncated(std::int64_t n) const;
    /// Same coefficients, but marked as known only modulo t^n. Used when an
    /// exact value stands in for an approximation.
    LaurentSeries with_prec(std::int64_t n) const { return truncated(n); }

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries scaled(FieldElem c) const;
    /// Multiplication by t^k.
    LaurentSeries shifted(std::int64_t k) const;

    /// Same field, same precision and same coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    /// Coefficients agree below min(a.prec, b.prec).
    bool agrees_with(const LaurentSeries& other) const;

    /// "2*t^-5 + t^-1 + 1 + O(t^20)"; exact series omit the O-term.
    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();

    FieldPtr ctx_;
    std::int64_t start_ = 0;
    std::vector<FieldElem> coeffs_;
    std::int64_t prec_ = kExact;
};

void require_same_field(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse; prec of the result is prec(a) - 2 val(a), capped.
LaurentSeries invert(const LaurentSeries& a, std::int64_t cap = LaurentSeries::kExact);

/// a^k for integer k; negative k goes through invert.
LaurentSeries pow(const LaurentSeries& a, std::int64_t k, std::int64_t cap = LaurentSeries::kExact);

/// n-th root of a unit series (valuation 0), gcd(n, p) = 1. The constant term
/// of the root is the smallest n-th root of a's constant term.
LaurentSeries nth_root_one_unit(const LaurentSeries& a, std::int64_t n, std::int64_t cap = LaurentSeries::kExact);

/// n-th root of t^{n m} * unit; throws InvalidInput if n does not divide the valuation.
LaurentSeries nth_root(const LaurentSeries& a, std::int64_t n, std::int64_t cap = LaurentSeries::kExact);

/// Coefficientwise inverse Frobenius with exponents divided by p. Every
/// stored exponent must be divisible by p.
LaurentSeries pth_root(const LaurentSeries& a);

/// a^p computed as coefficient Frobenius plus exponent scaling.
LaurentSeries frobenius(const LaurentSeries& a);

/// Termwise d/dt.
LaurentSeries derivative(const LaurentSeries& a);

/// a(s). Requires val(s) >= 1, or val(s) <= -1 with a an exact polynomial in t^{-1}.
LaurentSeries substitute(const LaurentSeries& a, const LaurentSeries& s, std::int64_t cap = LaurentSeries::kExact);

}  // namespace wildram
