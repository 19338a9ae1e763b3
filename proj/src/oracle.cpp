#include "wildram/oracle.hpp"

#include <algorithm>

#include "wildram/errors.hpp"

namespace wildram {

namespace {

LaurentSeries mono(const FieldPtr& f, std::int64_t k, std::int64_t c = 1) {
    return LaurentSeries::monomial(f, f->from_int(c), k);
}

// Valuation read that must lie strictly below the precision floor.
std::int64_t read_valuation(const LaurentSeries& s, const char* what) {
    if (s.has_no_terms() || s.valuation() >= s.prec())
        throw InsufficientPrecision(std::string(what) + ": valuation not visible at precision " +
                                    std::to_string(s.prec()));
    return s.valuation();
}

std::int64_t resolve_prec(std::int64_t prec, std::int64_t p, std::int64_t n0, std::int64_t n1) {
    if (prec == kDefaultPrec) return default_oracle_prec(p, n0, n1);
    if (prec < 0) throw InvalidInput("oracle precision must be positive");
    return prec;
}

// g with h(g(s)) = s modulo s^n, h = h1 s + ..., by Newton iteration.
LaurentSeries reversion(const LaurentSeries& h, std::int64_t n) {
    const FieldPtr& F = h.ctx();
    const LaurentSeries s = mono(F, 1);
    const LaurentSeries dh = derivative(h);
    LaurentSeries g = LaurentSeries::monomial(F, F->inv(h.coeff(1)), 1);
    std::int64_t cur = 2;
    while (cur < n) {
        cur = std::min(2 * cur, n);
        const LaurentSeries gc = g.with_prec(cur);
        const LaurentSeries err = (substitute(h, gc, cur) - s).truncated(cur);
        const LaurentSeries slope = substitute(dh, gc, cur - 1);
        g = (g - (err * invert(slope, cur)).truncated(cur)).truncated(cur);
        g = LaurentSeries::from_dense(F, g.start(), g.dense());
    }
    return g.with_prec(n);
}

// Smallest exponent prime to p among the stored terms below the precision.
std::optional<std::int64_t> first_coprime(const LaurentSeries& s, std::int64_t p) {
    for (auto [k, c] : s.terms())
        if (k % p != 0) return k;
    return std::nullopt;
}

}  // namespace

std::int64_t default_oracle_prec(std::int64_t p, std::int64_t n0, std::int64_t n1) {
    return p * p * (n0 + n1) + 2 * p * p + 4;
}

LaurentSeries local_parameter_in_y(const LaurentSeries& alpha0, std::int64_t n0, std::int64_t prec) {
    const FieldPtr& F = alpha0.ctx();
    const std::int64_t p = F->p();
    if (n0 <= 0 || n0 % p == 0 || alpha0.valuation() != -n0)
        throw InvalidInput("local_parameter_in_y needs a reduced datum with pole order " + std::to_string(n0));
    const std::int64_t y_prec = p + prec;
    // Enough t-adic digits for x(y) to be known modulo y^{y_prec}.
    const std::int64_t t_prec = y_prec / p + 2;

    // alpha0 = t^{-n0} u0 = s^{-n0} with s = t u0^{-1/n0} = h(t).
    const LaurentSeries u0 = alpha0.shifted(n0);
    const LaurentSeries h = nth_root_one_unit(invert(u0, t_prec), n0, t_prec).shifted(1).truncated(t_prec);
    const LaurentSeries g = reversion(h, t_prec);

    // s = y^p (1 - y^{(p-1) n0})^{-1/n0}, so s^{-n0} = y^{-p n0} - y^{-n0}.
    const std::int64_t rel = y_prec - p;
    const LaurentSeries one_minus = LaurentSeries::one(F) - mono(F, (p - 1) * n0);
    const LaurentSeries z = nth_root_one_unit(invert(one_minus, rel), n0, rel).shifted(p);
    const LaurentSeries x = substitute(g, z, y_prec).truncated(y_prec);

    const LaurentSeries check = substitute(alpha0, x, y_prec) - (mono(F, -p * n0) - mono(F, -n0));
    if (check.prec() <= 0)
        throw InsufficientPrecision("precision " + std::to_string(prec) + " cannot confirm alpha0(x(y))");
    if (!check.has_no_terms())
        throw AssertionFailure("alpha0(x(y)) differs from y^{-p n0} - y^{-n0}: " + check.to_string("y"));
    return x;
}

std::int64_t oracle_p_cyclic_jump(const ReducedAS& f, std::int64_t prec) {
    if (f.kind != ASKind::WildReduced) throw InvalidInput("oracle_p_cyclic_jump needs a wild datum");
    const FieldPtr& F = f.f_red.ctx();
    const std::int64_t p = F->p(), n0 = f.pole_order;
    prec = resolve_prec(prec, p, n0, 0);
    const LaurentSeries x = local_parameter_in_y(f.f_red, n0, prec);
    const std::int64_t y_prec = x.prec();

    // sigma(a) = a + 1 with a = y^{-n0}: sigma(y) = y (1 + y^{n0})^{-1/n0}.
    // The root must have constant term 1: any other n0-th root of unity
    // composes sigma with y -> zeta y, which moves t.
    const LaurentSeries one_plus = LaurentSeries::one(F) + mono(F, n0);
    const LaurentSeries root = nth_root_one_unit(invert(one_plus, y_prec), n0, y_prec);
    const LaurentSeries sy = root.scaled(F->inv(root.leading_coefficient())).shifted(1).truncated(y_prec);
    if (!substitute(x, sy, y_prec).agrees_with(x))
        throw AssertionFailure("sigma does not fix the local parameter of K");
    const LaurentSeries pw = pow(sy, -n0, y_prec);
    if (!pw.agrees_with(mono(F, -n0) + LaurentSeries::one(F)))
        throw AssertionFailure("sigma(y)^{-n0} differs from y^{-n0} + 1");
    return read_valuation(sy - mono(F, 1), "sigma(y) - y") - 1;
}

namespace {

struct P2Model {
    std::int64_t p, n0, n1;
    LaurentSeries x;       // x(y)
    LaurentSeries alpha1;  // alpha1(x(y))
};

P2Model build_p2(const ReducedWitt2& v, std::int64_t prec) {
    if (v.kind0 != ASKind::WildReduced) throw InvalidInput("the p^2 oracle needs a wild first component");
    const FieldPtr& F = v.vec_red.ctx();
    const std::int64_t p = F->p(), n0 = v.n0;
    const std::int64_t n1 = v.kind1 == ASKind::WildReduced ? v.n1 : 0;
    prec = resolve_prec(prec, p, n0, n1);
    LaurentSeries x = local_parameter_in_y(v.vec_red.a0, n0, prec);
    LaurentSeries a1 = substitute(v.vec_red.a1, x, x.prec());
    return {p, n0, n1, std::move(x), std::move(a1)};
}

}  // namespace

std::int64_t oracle_p2_second_jump(const ReducedWitt2& v, std::int64_t prec) {
    const P2Model m = build_p2(v, prec);
    const FieldPtr& F = m.x.ctx();
    const std::int64_t p = m.p, n0 = m.n0, n1 = m.n1;

    if (n1 > 0) {
        // The alpha1 part has its smallest exponent prime to p at (n0 - n1) p - n0.
        const std::int64_t expect = (n0 - n1) * p - n0;
        if (m.alpha1.prec() <= expect)
            throw InsufficientPrecision("alpha1(x(y)) is not known down to y^" + std::to_string(expect));
        const auto got = first_coprime(m.alpha1, p);
        if (!got || *got != expect)
            throw AssertionFailure("smallest exponent prime to p in alpha1(x(y)) is " +
                                   (got ? std::to_string(*got) : std::string("absent")) + ", expected " +
                                   std::to_string(expect));
    }

    const WittVec2 a0_vec(mono(F, -n0), LaurentSeries::zero(F));
    const LaurentSeries w = frobenius_minus_id(a0_vec).a1;
    LaurentSeries rhs = m.alpha1 - w;
    if (rhs.prec() <= 0) throw InsufficientPrecision("polar part of a1^p - a1 is not fully known");

    // a1 -> a1 - c^{1/p} y^{-k}: removes c y^{-pk}, adds c^{1/p} y^{-k}.
    while (!rhs.has_no_terms() && rhs.valuation() < 0 && rhs.valuation() % p == 0) {
        const std::int64_t k = rhs.valuation() / p;
        const LaurentSeries b = LaurentSeries::monomial(F, F->pth_root(rhs.leading_coefficient()), k);
        rhs = rhs - frobenius(b) + b;
    }
    const std::int64_t val = read_valuation(rhs, "a1^p - a1 over M");
    if (val >= 0) throw AssertionFailure("a1^p - a1 has no pole over M; the extension would not be totally ramified");
    return -val;
}

DerivativeReport oracle_derivative_check(const ReducedWitt2& v, std::int64_t prec) {
    const P2Model m = build_p2(v, prec);
    const std::int64_t p = m.p, n0 = m.n0, n1 = m.n1;
    DerivativeReport r{};
    r.dx_dy = read_valuation(derivative(m.x), "dx/dy");
    r.dx_dy_expected = p * n0 - n0 + p - 1;
    if (r.dx_dy != r.dx_dy_expected)
        throw AssertionFailure("v(dx/dy) = " + std::to_string(r.dx_dy) + ", expected " +
                               std::to_string(r.dx_dy_expected));
    if (n1 > 0) {
        r.dlhs_dy = read_valuation(derivative(m.alpha1), "d/dy alpha1(x(y))");
        r.dlhs_dy_expected = (n0 - n1) * p - n0 - 1;
        if (*r.dlhs_dy != *r.dlhs_dy_expected)
            throw AssertionFailure("v(d/dy alpha1(x(y))) = " + std::to_string(*r.dlhs_dy) + ", expected " +
                                   std::to_string(*r.dlhs_dy_expected));
    }
    return r;
}

}  // namespace wildram
