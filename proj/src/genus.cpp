#include "wildram/genus.hpp"

#include <algorithm>

#include "wildram/errors.hpp"

namespace wildram {

std::string to_string(CoverKind k) {
    switch (k) {
        case CoverKind::PCyclic: return "pcyclic";
        case CoverKind::Elementary: return "elementary";
        case CoverKind::Cyclic: return "cyclic";
    }
    return "?";
}

LaurentSeries x_poly_to_local(const LaurentSeries& poly) {
    if (!poly.is_exact()) throw InvalidInput("cover data must be exact polynomials in x");
    std::map<std::int64_t, FieldElem> t;
    for (auto [k, c] : poly.terms()) {
        if (k < 0) throw InvalidInput("cover data must be polynomials in x; x^" + std::to_string(k) +
                                      " would add a branch point at x = 0");
        t.emplace(-k, c);
    }
    return LaurentSeries(poly.ctx(), t);
}

CoverSpec CoverSpec::from_x_polynomials(CoverKind kind, const LaurentSeries& poly0, const LaurentSeries& poly1) {
    require_same_field(poly0, poly1);
    return {kind, x_poly_to_local(poly0), x_poly_to_local(poly1)};
}

namespace {

struct Poles {
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    std::optional<std::int64_t> drop;  // Elementary with n0 = n1 only
};

ReducedAS wild_or_throw(const LaurentSeries& f, const char* what) {
    ReducedAS r = reduce_as(f);
    if (r.kind != ASKind::WildReduced)
        throw InvalidInput(std::string(what) + " is " + to_string(r.kind) + "; the cover is not branched at infinity");
    return r;
}

Poles elementary_poles(const CoverSpec& c) {
    const FieldCtx& F = c.f0.field();
    const ReducedAS a = wild_or_throw(c.f0, "first datum"), b = wild_or_throw(c.f1, "second datum");
    if (as_equivalence(a.f_red, b.f_red)) throw InvalidInput("the two data define the same Artin-Schreier extension");
    Poles P{std::min(a.pole_order, b.pole_order), std::max(a.pole_order, b.pole_order), std::nullopt};
    if (P.n0 != P.n1) return P;
    for (std::int64_t s = 1; s < std::int64_t(F.p()); ++s) {
        const ReducedAS h = reduce_as(a.f_red + b.f_red.scaled(F.from_int(s)));
        if (h.kind == ASKind::Unramified)
            throw InvalidInput("a combination of the data is a constant of nonzero trace; the cover contains a "
                               "constant field extension");
        if (h.kind == ASKind::WildReduced && h.pole_order < P.n0) P.drop = h.pole_order;
    }
    return P;
}

ReducedWitt2 cyclic_reduced(const CoverSpec& c) {
    ReducedWitt2 r = reduce_witt2({c.f0, c.f1});
    if (r.kind0 != ASKind::WildReduced)
        throw InvalidInput("first Witt component is " + to_string(r.kind0) + "; the cover is not totally ramified");
    return r;
}

Rational halve(std::int64_t twice, const char* what) {
    if (twice < 0 || twice % 2 != 0)
        throw AssertionFailure(std::string(what) + " produced 2g = " + std::to_string(twice));
    return Rational(twice / 2);
}

std::string show(Rational r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

GenusValue genus_closed_form(const CoverSpec& c) {
    const std::int64_t p = c.f0.field().p();
    switch (c.kind) {
        case CoverKind::PCyclic: {
            const std::int64_t r = wild_or_throw(c.f0, "datum").pole_order;
            return {halve((p - 1) * (r - 1), "p-cyclic closed form"), "p-cyclic"};
        }
        case CoverKind::Elementary: {
            const Poles P = elementary_poles(c);
            if (P.n0 < P.n1)
                return {halve((P.n1 - 1) * p * p - (P.n1 - P.n0) * p - P.n0 + 1, "noncyclic closed form"),
                        "noncyclic, n0 < n1"};
            if (!P.drop)
                return {halve((P.n0 - 1) * p * p - P.n0 + 1, "noncyclic closed form"), "noncyclic, n0 = n1, no drop"};
            const std::int64_t d = *P.drop;
            return {Rational((d - 1) * p * p - (P.n0 - d) * p - d + 1, 2),
                    "noncyclic, n0 = n1, drop to " + std::to_string(d)};
        }
        case CoverKind::Cyclic: {
            const ReducedWitt2 r = cyclic_reduced(c);
            const std::int64_t n0 = r.n0, n1 = r.kind1 == ASKind::WildReduced ? r.n1 : 0;
            if (n1 <= p * n0)
                return {halve(n0 * (p - 1) * (p * p + 1) - p * p + 1, "cyclic closed form"), "cyclic, n1 <= p*n0"};
            return {halve((n1 - 1) * p * p - (n1 - n0) * p - n0 + 1, "cyclic closed form"), "cyclic, n1 > p*n0"};
        }
    }
    throw InvalidInput("unknown cover kind");
}

JumpProfile cover_profile(const CoverSpec& c) {
    const std::int64_t p = c.f0.field().p();
    switch (c.kind) {
        case CoverKind::PCyclic: return jumps_p_cyclic(wild_or_throw(c.f0, "datum"));
        case CoverKind::Elementary: {
            const Poles P = elementary_poles(c);
            const std::string group = "(Z/" + std::to_string(p) + ")^2";
            std::vector<Rational> up;
            std::vector<std::int64_t> orders;
            if (P.n0 < P.n1) {
                up = {Rational(P.n0), Rational(P.n1)};
                orders = {p * p, p, 1};
            } else if (P.drop) {
                up = {Rational(*P.drop), Rational(P.n0)};
                orders = {p * p, p, 1};
            } else {
                up = {Rational(P.n0)};
                orders = {p * p, 1};
            }
            return upper_to_lower(JumpProfile::make(Numbering::Upper, up, orders, group));
        }
        case CoverKind::Cyclic: return jumps_p2_cyclic(cyclic_reduced(c));
    }
    throw InvalidInput("unknown cover kind");
}

GenusValue genus_via_rh(const CoverSpec& c) {
    const JumpProfile lower = cover_profile(c);
    const std::int64_t order = lower.orders.front();
    const std::int64_t deg_r = different_degree(lower);
    return {halve(-2 * order + deg_r + 2, "Riemann-Hurwitz"), "Riemann-Hurwitz, deg R = " + std::to_string(deg_r)};
}

RamReport genus_report(const CoverSpec& c) {
    const JumpProfile lower = cover_profile(c);
    const GenusValue closed = genus_closed_form(c);
    const GenusValue rh = genus_via_rh(c);
    RamReport r = report_from_lower(lower, to_string(c.kind) + " cover: " + closed.branch);
    r.genus = rh.genus.numerator();
    if (closed.genus != rh.genus) {
        r.status = Status::DiscrepancyFlag;
        r.notes.push_back("closed-form value: genus " + show(closed.genus));
        r.notes.push_back("Riemann-Hurwitz value: genus " + show(rh.genus) + " (reported)");
    } else {
        r.notes.push_back("closed form and Riemann-Hurwitz agree: genus " + show(rh.genus));
    }
    return r;
}

}  // namespace wildram
