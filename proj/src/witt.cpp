#include "wildram/witt.hpp"

#include "wildram/errors.hpp"

namespace wildram {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, b = ((a % p) + p) % p, k = p - 2;
    while (k > 0) {
        if (k & 1) r = r * b % p;
        b = b * b % p;
        k >>= 1;
    }
    return r;
}

// C(p, i) / p = (-1)^{i-1} / i mod p for 0 < i < p.
std::int64_t binom_over_p(std::int64_t i, std::int64_t p) {
    std::int64_t s = (i % 2 == 1) ? 1 : p - 1;
    return s * mod_inverse(i, p) % p;
}

// sum_i c_i X^i Y^{p-i} with shared powers.
LaurentSeries eval_bracket(const std::vector<std::int64_t>& c, const LaurentSeries& x, const LaurentSeries& y) {
    const FieldCtx& f = x.field();
    const std::size_t p = f.p();
    std::vector<LaurentSeries> xp{LaurentSeries::one(x.ctx())};
    std::vector<LaurentSeries> yp{LaurentSeries::one(x.ctx())};
    for (std::size_t i = 1; i <= p; ++i) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    LaurentSeries acc = LaurentSeries::zero(x.ctx());
    for (std::size_t i = 0; i <= p; ++i) {
        if (c[i] == 0) continue;
        acc = acc + (xp[i] * yp[p - i]).scaled(f.from_int(c[i]));
    }
    return acc;
}

}  // namespace

WittVec2::WittVec2(LaurentSeries c0, LaurentSeries c1) : a0(std::move(c0)), a1(std::move(c1)) {
    require_same_field(a0, a1);
}

WittVec2 WittVec2::zero(const FieldPtr& ctx) { return {LaurentSeries::zero(ctx), LaurentSeries::zero(ctx)}; }

bool WittVec2::agrees_with(const WittVec2& other) const {
    return a0.agrees_with(other.a0) && a1.agrees_with(other.a1);
}

std::string WittVec2::to_string() const { return "W2(" + a0.to_string() + " ; " + a1.to_string() + ")"; }

// (X^p + Y^p - (X + Y)^p) / p: c_i = -C(p,i)/p for 0 < i < p.
std::vector<std::int64_t> witt_add_bracket(std::uint32_t p) {
    std::vector<std::int64_t> c(p + 1, 0);
    for (std::uint32_t i = 1; i < p; ++i) c[i] = (p - binom_over_p(i, p)) % p;
    return c;
}

// (X^p - Y^p - (X - Y)^p) / p: c_i = -C(p,i) (-1)^{p-i} / p for 0 < i < p,
// and c_0 = (-1 - (-1)^p) / p, which is nonzero only for p = 2.
std::vector<std::int64_t> witt_sub_bracket(std::uint32_t p) {
    std::vector<std::int64_t> c(p + 1, 0);
    for (std::uint32_t i = 1; i < p; ++i) {
        std::int64_t b = binom_over_p(i, p);
        c[i] = ((p - i) % 2 == 0) ? (p - b) % p : b;
    }
    if (p == 2) c[0] = 1;
    return c;
}

WittVec2 witt_add(const WittVec2& a, const WittVec2& b) {
    require_same_field(a.a0, b.a0);
    const auto c = witt_add_bracket(a.a0.field().p());
    return {a.a0 + b.a0, a.a1 + b.a1 + eval_bracket(c, a.a0, b.a0)};
}

WittVec2 witt_sub(const WittVec2& a, const WittVec2& b) {
    require_same_field(a.a0, b.a0);
    const auto c = witt_sub_bracket(a.a0.field().p());
    return {a.a0 - b.a0, a.a1 - b.a1 + eval_bracket(c, a.a0, b.a0)};
}

WittVec2 witt_neg(const WittVec2& a) { return witt_sub(WittVec2::zero(a.ctx()), a); }

WittVec2 witt_multiple(const WittVec2& a, std::int64_t c) {
    if (c < 0) return witt_neg(witt_multiple(a, -c));
    WittVec2 acc = WittVec2::zero(a.ctx());
    WittVec2 base = a;
    while (c > 0) {
        if (c & 1) acc = witt_add(acc, base);
        c >>= 1;
        if (c > 0) base = witt_add(base, base);
    }
    return acc;
}

WittVec2 frobenius_minus_id(const WittVec2& x) {
    return witt_sub({frobenius(x.a0), frobenius(x.a1)}, x);
}

}  // namespace wildram
