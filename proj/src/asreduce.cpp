#include "wildram/asreduce.hpp"

#include <map>

#include "wildram/errors.hpp"

namespace wildram {

std::string to_string(ASKind k) {
    switch (k) {
        case ASKind::WildReduced: return "WildReduced";
        case ASKind::Unramified: return "Unramified";
        case ASKind::Trivial: return "Trivial";
    }
    return "?";
}

std::string to_string(const Equivalence& e) {
    switch (e.kind) {
        case EquivKind::Equal: return "Equal(" + std::to_string(e.c) + ")";
        case EquivKind::SharedSubfield: return "SharedSubfield(" + std::to_string(e.c) + ")";
        case EquivKind::Disjoint: return "Disjoint";
    }
    return "?";
}

namespace {

// Root of x^p - x = c in the field; requires trace(c) = 0.
FieldElem as_root(const FieldCtx& f, FieldElem c) {
    for (auto x : f.elements())
        if (f.sub(f.frobenius(x), x) == c) return x;
    throw AssertionFailure("x^p - x = c has no root although trace(c) = 0");
}

FieldElem min_of_trace(const FieldCtx& f, std::uint32_t tr) {
    for (auto x : f.elements())
        if (f.trace(x) == tr) return x;
    throw AssertionFailure("trace map is not surjective");
}

}  // namespace

ReducedAS reduce_as(const LaurentSeries& f) {
    const FieldCtx& F = f.field();
    const std::int64_t p = F.p();
    const std::int64_t N = f.prec();
    std::map<std::int64_t, FieldElem> terms = f.terms();
    std::map<std::int64_t, FieldElem> shift;

    // Ascending sweep over poles; each cancellation only feeds a higher exponent.
    for (auto it = terms.begin(); it != terms.end() && it->first < 0;) {
        const auto [k, c] = *it;
        if (k % p != 0) {
            ++it;
            continue;
        }
        const FieldElem d = F.pth_root(c);
        const std::int64_t m = k / p;
        it = terms.erase(it);
        if (m < N) {
            FieldElem& slot = terms[m];
            slot = F.add(slot, d);
            if (slot.is_zero()) terms.erase(m);
        }
        FieldElem& s = shift[m];
        s = F.add(s, d);
        if (s.is_zero()) shift.erase(m);
        it = terms.lower_bound(k);
    }

    std::int64_t pole = 0;
    if (!terms.empty() && terms.begin()->first < 0) pole = -terms.begin()->first;

    std::uint32_t tr = 0;
    if (N > 0) {
        auto cit = terms.find(0);
        const FieldElem c = cit == terms.end() ? F.zero() : cit->second;
        tr = F.trace(c);
        const FieldElem target = min_of_trace(F, tr);
        const FieldElem x = as_root(F, F.sub(c, target));
        if (!x.is_zero()) shift[0] = F.add(shift[0], x);
        if (target.is_zero())
            terms.erase(0);
        else
            terms[0] = target;
    } else if (pole == 0) {
        throw InsufficientPrecision("Artin-Schreier reduction reached the precision floor O(t^" + std::to_string(N) +
                                    ") without a surviving pole");
    }

    ReducedAS r{LaurentSeries(f.ctx(), terms, N), LaurentSeries(f.ctx(), shift), ASKind::Trivial, pole, tr};
    if (pole > 0)
        r.kind = ASKind::WildReduced;
    else if (tr != 0)
        r.kind = ASKind::Unramified;
    return r;
}

ReducedWitt2 reduce_witt2(const WittVec2& v) {
    const FieldPtr& ctx = v.ctx();
    const ReducedAS r0 = reduce_as(v.a0);
    const WittVec2 v1 = witt_sub(v, frobenius_minus_id({r0.shift, LaurentSeries::zero(ctx)}));
    if (!v1.a0.agrees_with(r0.f_red))
        throw AssertionFailure("first Witt component changed during second-component propagation");
    const ReducedAS r1 = reduce_as(v1.a1);
    WittVec2 red{r0.f_red, r1.f_red};
    WittVec2 shift{r0.shift, r1.shift};
    return {std::move(red), std::move(shift), r0.kind, r1.kind, r0.pole_order, r1.pole_order};
}

std::optional<std::int64_t> as_equivalence(const LaurentSeries& f, const LaurentSeries& g) {
    require_same_field(f, g);
    const FieldCtx& F = f.field();
    for (std::int64_t c = 1; c < std::int64_t(F.p()); ++c)
        if (reduce_as(f - g.scaled(F.from_int(c))).kind == ASKind::Trivial) return c;
    return std::nullopt;
}

Equivalence equivalence_class_test(const WittVec2& v, const WittVec2& w) {
    const std::int64_t p = v.a0.field().p();
    auto c = as_equivalence(v.a0, w.a0);
    if (!c) return {EquivKind::Disjoint, 0};
    for (std::int64_t j = 0; j < p; ++j) {
        const std::int64_t cc = *c + p * j;
        const auto r = reduce_witt2(witt_sub(v, witt_multiple(w, cc)));
        if (r.kind0 == ASKind::Trivial && r.kind1 == ASKind::Trivial) return {EquivKind::Equal, cc};
    }
    return {EquivKind::SharedSubfield, *c};
}

}  // namespace wildram
