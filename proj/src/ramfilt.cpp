#include "wildram/ramfilt.hpp"

#include <algorithm>
#include <set>

#include "wildram/errors.hpp"

namespace wildram {

namespace {

std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    while (k-- > 0) r *= b;
    return r;
}

std::string rat_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string join(const std::vector<std::int64_t>& xs) {
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : ", ") + std::to_string(x);
    return "{" + s + "}";
}

// Orders p^N, p^{N-1}, ..., 1 for N distinct jumps.
std::vector<std::int64_t> full_chain(std::int64_t p, std::size_t n) {
    std::vector<std::int64_t> o;
    for (std::size_t i = 0; i <= n; ++i) o.push_back(ipow(p, int(n - i)));
    return o;
}

RamReport report_from_upper(std::vector<std::int64_t> upper, std::vector<std::int64_t> orders, std::string group,
                            std::string case_label) {
    std::sort(upper.begin(), upper.end());
    std::vector<Rational> u(upper.begin(), upper.end());
    const auto lower = upper_to_lower(JumpProfile::make(Numbering::Upper, u, std::move(orders), std::move(group)));
    return report_from_lower(lower, std::move(case_label));
}

RamReport undetermined(std::string group, std::string case_label, std::string why) {
    RamReport r;
    r.group = std::move(group);
    r.case_label = std::move(case_label);
    r.status = Status::Undetermined;
    r.notes.push_back(std::move(why));
    return r;
}

// Union of upper jump sets, valid only when its size is log_p of the order.
void check_union(std::size_t count, std::int64_t p, std::int64_t group_order) {
    if (ipow(p, int(count)) != group_order)
        throw AssertionFailure("upper jump union of size " + std::to_string(count) +
                               " does not match a group of order " + std::to_string(group_order));
}

}  // namespace

JumpProfile JumpProfile::make(Numbering numbering, std::vector<Rational> jumps, std::vector<std::int64_t> orders,
                              std::string group) {
    if (orders.size() == jumps.size()) orders.push_back(1);
    if (orders.size() != jumps.size() + 1)
        throw InvalidInput("a profile with " + std::to_string(jumps.size()) + " jumps needs " +
                           std::to_string(jumps.size() + 1) + " orders");
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        if (jumps[i] <= 0) throw InvalidInput("jumps must be positive");
        if (i > 0 && jumps[i] <= jumps[i - 1]) throw InvalidInput("jumps must be strictly increasing");
        if (numbering == Numbering::Lower && jumps[i].denominator() != 1)
            throw InvalidInput("lower jumps must be integers (got " + rat_str(jumps[i]) + ")");
    }
    if (orders.back() != 1) throw InvalidInput("the last order must be 1");
    for (std::size_t i = 1; i < orders.size(); ++i)
        if (orders[i] < 1 || orders[i] >= orders[i - 1] || orders[i - 1] % orders[i] != 0)
            throw InvalidInput("orders must form a strictly decreasing divisor chain");
    JumpProfile j;
    j.numbering = numbering;
    j.jumps = std::move(jumps);
    j.orders = std::move(orders);
    j.group = group.empty() ? (j.orders[0] == 1 ? "trivial" : "order " + std::to_string(j.orders[0])) : std::move(group);
    return j;
}

std::vector<std::int64_t> JumpProfile::indices() const {
    std::vector<std::int64_t> s;
    for (std::size_t j = 0; j < jumps.size(); ++j) s.push_back(orders[0] / orders[j]);
    return s;
}

JumpProfile lower_to_upper(const JumpProfile& lower) {
    if (lower.numbering != Numbering::Lower) throw InvalidInput("lower_to_upper expects a lower profile");
    const auto s = lower.indices();
    std::vector<Rational> u;
    Rational acc = 0, prev = 0;
    for (std::size_t j = 0; j < lower.jumps.size(); ++j) {
        acc += (lower.jumps[j] - prev) / s[j];
        prev = lower.jumps[j];
        u.push_back(acc);
    }
    return JumpProfile::make(Numbering::Upper, std::move(u), lower.orders, lower.group);
}

JumpProfile upper_to_lower(const JumpProfile& upper) {
    if (upper.numbering != Numbering::Upper) throw InvalidInput("upper_to_lower expects an upper profile");
    const auto s = upper.indices();
    std::vector<Rational> l;
    Rational acc = 0, prev = 0;
    for (std::size_t j = 0; j < upper.jumps.size(); ++j) {
        acc += (upper.jumps[j] - prev) * s[j];
        prev = upper.jumps[j];
        l.push_back(acc);
    }
    return JumpProfile::make(Numbering::Lower, std::move(l), upper.orders, upper.group);
}

Rational herbrand_phi(const JumpProfile& lower, Rational v) {
    if (lower.numbering != Numbering::Lower) throw InvalidInput("herbrand_phi expects a lower profile");
    if (v < 0) throw InvalidInput("herbrand_phi is evaluated on v >= 0");
    Rational acc = 0, prev = 0;
    for (std::size_t j = 0; j < lower.jumps.size(); ++j) {
        const Rational slope(lower.orders[j], lower.orders[0]);
        if (v <= lower.jumps[j]) return acc + (v - prev) * slope;
        acc += (lower.jumps[j] - prev) * slope;
        prev = lower.jumps[j];
    }
    return acc + (v - prev) * Rational(lower.orders.back(), lower.orders[0]);
}

Rational herbrand_psi(const JumpProfile& lower, Rational u) {
    if (lower.numbering != Numbering::Lower) throw InvalidInput("herbrand_psi expects a lower profile");
    if (u < 0) throw InvalidInput("herbrand_psi is evaluated on u >= 0");
    Rational acc = 0, prev = 0;  // acc = phi(prev)
    for (std::size_t j = 0; j < lower.jumps.size(); ++j) {
        const Rational slope(lower.orders[j], lower.orders[0]);
        const Rational next = acc + (lower.jumps[j] - prev) * slope;
        if (u <= next) return prev + (u - acc) / slope;
        acc = next;
        prev = lower.jumps[j];
    }
    return prev + (u - acc) / Rational(lower.orders.back(), lower.orders[0]);
}

std::int64_t different_degree(const JumpProfile& lower) {
    if (lower.numbering != Numbering::Lower) throw InvalidInput("different_degree expects a lower profile");
    std::int64_t d = 0, prev = -1;
    for (std::size_t j = 0; j < lower.jumps.size(); ++j) {
        const std::int64_t l = lower.jumps[j].numerator();
        d += (l - prev) * (lower.orders[j] - 1);
        prev = l;
    }
    return d;
}

std::pair<std::int64_t, std::int64_t> p2_upper_jumps(std::int64_t p, std::int64_t n0, std::int64_t n1) {
    return {n0, std::max(p * n0, n1)};
}

std::string group_cyclic(std::int64_t order) { return order == 1 ? "trivial" : "Z/" + std::to_string(order); }

JumpProfile jumps_p_cyclic(const ReducedAS& f) {
    if (f.kind != ASKind::WildReduced)
        throw InvalidInput("jumps_p_cyclic needs a wildly ramified datum (got " + to_string(f.kind) + ")");
    const std::int64_t p = f.f_red.field().p();
    return JumpProfile::make(Numbering::Lower, {Rational(f.pole_order)}, {p, 1}, group_cyclic(p));
}

JumpProfile jumps_p2_cyclic(const ReducedWitt2& v) {
    if (v.kind0 != ASKind::WildReduced)
        throw InvalidInput("jumps_p2_cyclic needs a wild first component (got " + to_string(v.kind0) + ")");
    const std::int64_t p = v.vec_red.a0.field().p();
    const std::int64_t n0 = v.n0;
    const std::int64_t n1 = v.kind1 == ASKind::WildReduced ? v.n1 : 0;
    const std::int64_t l2 = n1 <= n0 * p ? n0 * (p * p - p + 1) : p * (n1 - n0) + n0;
    return JumpProfile::make(Numbering::Lower, {Rational(n0), Rational(l2)}, {p * p, p, 1}, group_cyclic(p * p));
}

std::string to_string(Status s) {
    switch (s) {
        case Status::FormulaOnly: return "FormulaOnly";
        case Status::OracleConfirmed: return "OracleConfirmed";
        case Status::Undetermined: return "Undetermined";
        case Status::DiscrepancyFlag: return "DiscrepancyFlag";
    }
    return "?";
}

std::optional<Status> status_from_string(const std::string& s) {
    for (auto st : {Status::FormulaOnly, Status::OracleConfirmed, Status::Undetermined, Status::DiscrepancyFlag})
        if (to_string(st) == s) return st;
    return std::nullopt;
}

RamReport report_from_lower(const JumpProfile& lower, std::string case_label) {
    RamReport r;
    r.group = lower.group;
    r.case_label = std::move(case_label);
    r.lower_jumps = lower.jumps;
    r.upper_jumps = lower_to_upper(lower).jumps;
    r.orders = lower.orders;
    r.different_degree = different_degree(lower);
    return r;
}

RamReport report_as(const ReducedAS& f) {
    const std::int64_t p = f.f_red.field().p();
    switch (f.kind) {
        case ASKind::WildReduced:
            return report_from_lower(jumps_p_cyclic(f), "p-cyclic, pole order " + std::to_string(f.pole_order));
        case ASKind::Unramified: {
            RamReport r = report_from_lower(JumpProfile{}, "p-cyclic, unramified");
            r.group = group_cyclic(p);
            r.notes.push_back("constant term of trace " + std::to_string(f.const_trace) +
                              " gives an unramified extension; inertia is trivial");
            return r;
        }
        case ASKind::Trivial: break;
    }
    return report_from_lower(JumpProfile{}, "trivial extension");
}

RamReport report_witt2(const ReducedWitt2& v) {
    const std::int64_t p = v.vec_red.a0.field().p();
    if (v.kind0 != ASKind::WildReduced)
        return undetermined(group_cyclic(p * p), "p^2-cyclic, first component " + to_string(v.kind0),
                            "hypothesis failed: the first Witt component has no pole prime to p, so the extension is "
                            "not totally ramified");
    const std::int64_t n1 = v.kind1 == ASKind::WildReduced ? v.n1 : 0;
    const std::string branch = n1 <= v.n0 * p ? "n1 <= p*n0" : "n1 > p*n0";
    RamReport r = report_from_lower(jumps_p2_cyclic(v), "p^2-cyclic, " + branch + " (n0=" + std::to_string(v.n0) +
                                                            ", n1=" + std::to_string(n1) + ")");
    if (v.kind1 != ASKind::WildReduced)
        r.notes.push_back("second component is " + to_string(v.kind1) + "; treated as pole order 0");
    return r;
}

RamReport compositum_p_cyclic(const LaurentSeries& f, const LaurentSeries& g) {
    require_same_field(f, g);
    const FieldCtx& F = f.field();
    const std::int64_t p = F.p();
    const ReducedAS rf = reduce_as(f), rg = reduce_as(g);
    if (rf.kind != ASKind::WildReduced || rg.kind != ASKind::WildReduced)
        throw InvalidInput("compositum_p_cyclic needs two wildly ramified data");
    if (auto c = as_equivalence(rf.f_red, rg.f_red))
        throw InvalidInput("the two data define the same extension (f = " + std::to_string(*c) +
                           " g modulo x^p - x)");
    const std::string group = "(Z/" + std::to_string(p) + ")^2";
    const std::int64_t i = rf.pole_order, j = rg.pole_order;
    if (i != j) {
        check_union(2, p, p * p);
        return report_from_upper({i, j}, {p * p, p, 1}, group, "p-cyclic compositum, distinct jumps");
    }
    std::optional<std::int64_t> l;
    for (std::int64_t a = 1; a < p; ++a) {
        const ReducedAS h = reduce_as(rf.f_red + rg.f_red.scaled(F.from_int(a)));
        if (h.kind == ASKind::Unramified) {
            RamReport r = report_from_upper({i}, {p, 1}, group, "p-cyclic compositum, not totally ramified");
            r.notes.push_back("f + " + std::to_string(a) + "*g is unramified; inertia group is Z/" +
                              std::to_string(p) + " and orders refer to it");
            return r;
        }
        if (h.kind == ASKind::WildReduced && h.pole_order < i) l = h.pole_order;
    }
    if (l) {
        check_union(2, p, p * p);
        return report_from_upper({*l, i}, {p * p, p, 1}, group,
                                 "p-cyclic compositum, equal jumps with drop to " + std::to_string(*l));
    }
    return report_from_upper({i}, {p * p, 1}, group, "p-cyclic compositum, equal jumps without drop");
}

namespace {

// Default working precision for the p^2 analyses.
std::int64_t default_prec(std::int64_t p, std::int64_t n0, std::int64_t n1) {
    return p * p * (n0 + n1) + 2 * p * p + 4;
}

// -(h + h^p + h^{p^2} + ...) to precision n for h of positive valuation.
LaurentSeries as_preimage_positive(const LaurentSeries& h, std::int64_t n) {
    LaurentSeries acc = LaurentSeries::zero(h.ctx(), n);
    if (h.has_no_terms()) return acc;
    LaurentSeries cur = h.truncated(n);
    while (!cur.has_no_terms()) {
        acc = acc - cur;
        cur = frobenius(cur).truncated(n);
    }
    return acc;
}

void add_printed_formula_notes(RamReport& r, const char* name, std::int64_t p, std::int64_t n0, std::int64_t n1) {
    if (n1 <= p * n0)
        r.notes.push_back(std::string("printed first-branch second jump for ") + name + " is n0(p-1) = " +
                          std::to_string(n0 * (p - 1)) + "; the lower jumps give p*n0 = " + std::to_string(p * n0) +
                          ", which is used");
    else
        r.notes.push_back(std::string("printed second-branch jump for ") + name + " is v(alpha1) = " +
                          std::to_string(-n1) + "; read as n1 = " + std::to_string(n1));
}

}  // namespace

RamReport compositum_p2(const WittVec2& v, const WittVec2& w) {
    require_same_field(v.a0, w.a0);
    const FieldCtx& F = v.a0.field();
    const std::int64_t p = F.p();
    const ReducedWitt2 rv = reduce_witt2(v), rw = reduce_witt2(w);
    if (rv.kind0 != ASKind::WildReduced || rw.kind0 != ASKind::WildReduced)
        throw InvalidInput("compositum_p2 needs two Witt vectors with wild first components");
    const auto n1v = rv.kind1 == ASKind::WildReduced ? rv.n1 : 0;
    const auto n1w = rw.kind1 == ASKind::WildReduced ? rw.n1 : 0;
    const auto [u0, u1] = p2_upper_jumps(p, rv.n0, n1v);
    const auto [v0, v1] = p2_upper_jumps(p, rw.n0, n1w);
    const Equivalence eq = equivalence_class_test(rv.vec_red, rw.vec_red);
    const std::string ps = std::to_string(p), p2s = std::to_string(p * p);

    if (eq.kind == EquivKind::Equal)
        throw InvalidInput("the two Witt vectors define the same extension (v = " + std::to_string(eq.c) +
                           " w modulo F-1)");

    const std::string jumps_note = "upper jumps of the factors: " + join({u0, u1}) + " and " + join({v0, v1});
    RamReport r;
    if (eq.kind == EquivKind::Disjoint) {
        const std::string group = "Z/" + p2s + " x Z/" + p2s;
        const std::int64_t order = p * p * p * p;
        if (u0 != v0) {
            std::set<std::int64_t> all{u0, u1, v0, v1};
            if (all.size() != 4) {
                r = undetermined(group, "linearly disjoint, u0 != v0",
                                 "hypothesis failed: u0, u1, v0, v1 are not all distinct; first upper jump is w0 = " +
                                     std::to_string(std::min(u0, v0)));
            } else {
                check_union(4, p, order);
                r = report_from_upper({all.begin(), all.end()}, full_chain(p, 4), group, "linearly disjoint, u0 != v0");
            }
        } else {
            std::optional<std::int64_t> l;
            bool unramified = false;
            for (std::int64_t c = 1; c < p; ++c) {
                const ReducedAS h = reduce_as(rv.vec_red.a0 + rw.vec_red.a0.scaled(F.from_int(c)));
                if (h.kind == ASKind::WildReduced && h.pole_order < u0) l = h.pole_order;
                if (h.kind == ASKind::Unramified) unramified = true;
            }
            if (unramified) {
                r = undetermined(group, "linearly disjoint, u0 = v0",
                                 "hypothesis failed: alpha0 + c*beta0 is unramified for some c, so the compositum is "
                                 "not totally ramified");
            } else if (u1 == v1) {
                r = undetermined(group, "linearly disjoint, u0 = v0",
                                 "hypothesis failed: u1 = v1 = " + std::to_string(u1) + "; first upper jump is w0 = " +
                                     std::to_string(l ? *l : u0));
            } else if (l) {
                std::set<std::int64_t> all{*l, u0, u1, v1};
                check_union(all.size(), p, order);
                r = report_from_upper({all.begin(), all.end()}, full_chain(p, 4), group,
                                      "linearly disjoint, u0 = v0 with drop to " + std::to_string(*l));
            } else {
                std::vector<std::int64_t> jumps{u0, u1, v1};
                std::sort(jumps.begin() + 1, jumps.end());
                const std::vector<std::int64_t> orders{order, p * p, p, 1};
                r = report_from_upper(jumps, orders, group, "linearly disjoint, u0 = v0 without drop");
            }
        }
        add_printed_formula_notes(r, "the first factor", p, rv.n0, n1v);
        add_printed_formula_notes(r, "the second factor", p, rw.n0, n1w);
    } else {
        const std::string group = "Z/" + p2s + " x Z/" + ps;
        const std::int64_t order = p * p * p;
        const std::int64_t c = eq.c;
        if (u1 != v1) {
            std::set<std::int64_t> all{u0, u1, v1};
            check_union(all.size(), p, order);
            r = report_from_upper({all.begin(), all.end()}, full_chain(p, 3), group,
                                  "shared subfield (c=" + std::to_string(c) + "), u1 != v1");
        } else {
            // Move alpha so that alpha0 = c beta0 exactly, then read the third subextension.
            const std::int64_t n = default_prec(p, std::max(rv.n0, rw.n0), std::max(n1v, n1w));
            const FieldElem ce = F.from_int(c);
            const ReducedAS d = reduce_as(rv.vec_red.a0 - rw.vec_red.a0.scaled(ce));
            const LaurentSeries x = d.shift + as_preimage_positive(d.f_red, n);
            const WittVec2 alpha =
                witt_sub(rv.vec_red, frobenius_minus_id({x, LaurentSeries::zero(v.ctx())}));
            const LaurentSeries gap = alpha.a0 - rw.vec_red.a0.scaled(ce);
            if (!gap.has_no_terms())
                throw AssertionFailure("alignment of first components left " + gap.to_string());
            const ReducedAS third = reduce_as(alpha.a1 - rw.vec_red.a1.scaled(ce));
            const std::string label = "shared subfield (c=" + std::to_string(c) + "), u1 = v1";
            if (third.kind != ASKind::WildReduced) {
                r = undetermined(group, label,
                                 "hypothesis failed: alpha1 - c*beta1 reduces to " + to_string(third.kind));
            } else if (third.pole_order == u0 || third.pole_order == u1) {
                r = undetermined(group, label,
                                 "hypothesis failed: -v(alpha1 - c*beta1) = " + std::to_string(third.pole_order) +
                                     " collides with u0 or u1");
            } else {
                std::set<std::int64_t> all{u0, u1, third.pole_order};
                check_union(all.size(), p, order);
                r = report_from_upper({all.begin(), all.end()}, full_chain(p, 3), group, label);
                r.notes.push_back("third subextension has jump " + std::to_string(third.pole_order));
            }
        }
    }
    r.notes.insert(r.notes.begin(), jumps_note);
    return r;
}

}  // namespace wildram
