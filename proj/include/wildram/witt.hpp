#pragma once

#include <string>

#include "wildram/series.hpp"

namespace wildram {

/// Length-2 Witt vector (a0, a1) over k((t)).
struct WittVec2 {
    LaurentSeries a0;
    LaurentSeries a1;

    WittVec2(LaurentSeries c0, LaurentSeries c1);
    static WittVec2 zero(const FieldPtr& ctx);

    const FieldPtr& ctx() const noexcept { return a0.ctx(); }
    /// Smaller of the two component precisions.
    std::int64_t prec() const noexcept { return std::min(a0.prec(), a1.prec()); }
    bool is_exact() const noexcept { return a0.is_exact() && a1.is_exact(); }

    friend bool operator==(const WittVec2& x, const WittVec2& y) { return x.a0 == y.a0 && x.a1 == y.a1; }
    bool agrees_with(const WittVec2& other) const;

    /// "W2(a0 ; a1)".
    std::string to_string() const;
};

WittVec2 witt_add(const WittVec2& a, const WittVec2& b);
WittVec2 witt_sub(const WittVec2& a, const WittVec2& b);
WittVec2 witt_neg(const WittVec2& a);
/// c-fold Witt sum of a (c may be negative).
WittVec2 witt_multiple(const WittVec2& a, std::int64_t c);

/// (x0^p, x1^p) -_w (x0, x1).
WittVec2 frobenius_minus_id(const WittVec2& x);

/// Bracket polynomials S(X, Y) = sum_i c_i X^i Y^{p-i}, c_i in F_p, such that
/// the second Witt coordinate of a +_w b (resp. a -_w b) is a1 + b1 + S_add(a0, b0)
/// (resp. a1 - b1 + S_sub(a0, b0)). Entry i of the result is c_i, 0 <= i <= p.
std::vector<std::int64_t> witt_add_bracket(std::uint32_t p);
std::vector<std::int64_t> witt_sub_bracket(std::uint32_t p);

}  // namespace wildram
