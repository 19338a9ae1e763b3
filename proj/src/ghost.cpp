#include "wildram/ghost.hpp"

#include <algorithm>

#include "wildram/errors.hpp"

namespace wildram {

namespace {

constexpr std::int64_t kExact = LaurentSeries::kExact;

// Arithmetic in GR(p^2, e) = (Z/p^2)[x] / (lifted modulus). Elements are
// e residues mod p^2, low degree first.
class GaloisRing {
public:
    explicit GaloisRing(const FieldCtx& f) : p_(f.p()), m_(std::uint64_t(f.p()) * f.p()), e_(f.e()) {
        for (auto c : f.modulus()) mod_.push_back(c);
    }

    std::size_t e() const noexcept { return e_; }
    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t m() const noexcept { return m_; }

    void mul_acc(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
        if (e_ == 1) {
            out[0] = (out[0] + a[0] * b[0]) % m_;
            return;
        }
        std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
        for (std::size_t i = 0; i < e_; ++i)
            for (std::size_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % m_;
        for (std::size_t d = prod.size(); d-- > e_;) {
            const std::uint64_t lead = prod[d];
            if (lead == 0) continue;
            for (std::size_t i = 0; i < e_; ++i)
                prod[d - e_ + i] = (prod[d - e_ + i] + (m_ - lead) * mod_[i]) % m_;
        }
        for (std::size_t i = 0; i < e_; ++i) out[i] = (out[i] + prod[i]) % m_;
    }

private:
    std::uint64_t p_;
    std::uint64_t m_;
    std::size_t e_;
    std::vector<std::uint64_t> mod_;
};

// Truncated Laurent series over GR(p^2, e); c holds e residues per exponent.
struct GRSeries {
    std::int64_t start = 0;
    std::vector<std::uint64_t> c;
    std::int64_t prec = kExact;

    std::size_t len(std::size_t e) const { return c.size() / e; }
};

std::int64_t lowest_nonzero(const GRSeries& s, std::size_t e) {
    for (std::size_t k = 0; k < s.len(e); ++k)
        for (std::size_t i = 0; i < e; ++i)
            if (s.c[k * e + i] != 0) return s.start + std::int64_t(k);
    return s.prec;
}

GRSeries lift(const LaurentSeries& a) {
    const FieldCtx& f = a.field();
    GRSeries r;
    r.prec = a.prec();
    r.start = a.start();
    for (FieldElem x : a.dense())
        for (auto d : f.coords(x)) r.c.push_back(d);
    return r;
}

GRSeries add(const GaloisRing& R, const GRSeries& a, const GRSeries& b, bool negate_b) {
    const std::size_t e = R.e();
    GRSeries r;
    r.prec = std::min(a.prec, b.prec);
    if (a.c.empty() && b.c.empty()) return r;
    std::int64_t lo = std::min(a.c.empty() ? b.start : a.start, b.c.empty() ? a.start : b.start);
    std::int64_t hi = std::max(a.start + std::int64_t(a.len(e)), b.start + std::int64_t(b.len(e)));
    hi = std::min(hi, r.prec);
    r.start = lo;
    if (hi <= lo) return r;
    r.c.assign(std::size_t(hi - lo) * e, 0);
    auto put = [&](const GRSeries& s, bool neg) {
        for (std::size_t k = 0; k < s.len(e); ++k) {
            std::int64_t x = s.start + std::int64_t(k);
            if (x >= hi) break;
            for (std::size_t i = 0; i < e; ++i) {
                std::uint64_t v = s.c[k * e + i];
                if (neg) v = (R.m() - v) % R.m();
                auto& dst = r.c[std::size_t(x - lo) * e + i];
                dst = (dst + v) % R.m();
            }
        }
    };
    put(a, false);
    put(b, negate_b);
    return r;
}

GRSeries mul(const GaloisRing& R, const GRSeries& a, const GRSeries& b) {
    const std::size_t e = R.e();
    auto sat = [](std::int64_t x, std::int64_t y) { return (x >= kExact || y >= kExact) ? kExact : x + y; };
    GRSeries r;
    r.prec = std::min(sat(a.prec, lowest_nonzero(b, e)), sat(b.prec, lowest_nonzero(a, e)));
    if (a.c.empty() || b.c.empty()) return r;
    r.start = a.start + b.start;
    std::int64_t n = std::int64_t(a.len(e) + b.len(e)) - 1;
    if (r.prec < kExact) n = std::min(n, r.prec - r.start);
    if (n <= 0) {
        r.c.clear();
        return r;
    }
    r.c.assign(std::size_t(n) * e, 0);
    for (std::size_t i = 0; i < a.len(e); ++i)
        for (std::size_t j = 0; j < b.len(e) && std::int64_t(i + j) < n; ++j)
            R.mul_acc(&a.c[i * e], &b.c[j * e], &r.c[(i + j) * e]);
    return r;
}

GRSeries power(const GaloisRing& R, const GRSeries& a, std::uint64_t k) {
    GRSeries r = a;
    for (std::uint64_t i = 1; i < k; ++i) r = mul(R, r, a);
    return r;
}

GRSeries times_p(const GaloisRing& R, GRSeries a) {
    for (auto& v : a.c) v = v * R.p() % R.m();
    return a;
}

LaurentSeries reduce_mod_p(const FieldPtr& ctx, const GRSeries& a, bool divide_by_p) {
    const FieldCtx& f = *ctx;
    const std::size_t e = f.e();
    const std::uint64_t p = f.p();
    std::vector<FieldElem> out;
    std::vector<std::int64_t> coords(e);
    for (std::size_t k = 0; k < a.len(e); ++k) {
        for (std::size_t i = 0; i < e; ++i) {
            std::uint64_t v = a.c[k * e + i];
            if (divide_by_p) {
                if (v % p != 0) throw AssertionFailure("ghost inversion: second ghost component is not divisible by p");
                v /= p;
            }
            coords[i] = std::int64_t(v % p);
        }
        out.push_back(f.from_coords(coords));
    }
    return LaurentSeries::from_dense(ctx, a.start, std::move(out), a.prec);
}

WittVec2 ghost_combine(const WittVec2& a, const WittVec2& b, bool subtract) {
    require_same_field(a.a0, b.a0);
    const FieldPtr& ctx = a.ctx();
    const GaloisRing R(*ctx);
    const std::uint64_t p = R.p();

    const GRSeries A0 = lift(a.a0), A1 = lift(a.a1), B0 = lift(b.a0), B1 = lift(b.a1);
    const GRSeries ga = add(R, power(R, A0, p), times_p(R, A1), false);
    const GRSeries gb = add(R, power(R, B0, p), times_p(R, B1), false);
    const GRSeries w0 = add(R, A0, B0, subtract);
    const GRSeries w1 = add(R, ga, gb, subtract);

    // Any lift C0 of c0 works: (C0 + p D)^p = C0^p mod p^2.
    LaurentSeries c0 = reduce_mod_p(ctx, w0, false);
    const GRSeries rest = add(R, w1, power(R, lift(c0), p), true);
    LaurentSeries c1 = reduce_mod_p(ctx, rest, true);
    return {std::move(c0), std::move(c1)};
}

}  // namespace

WittVec2 ghost_oracle_add(const WittVec2& a, const WittVec2& b) { return ghost_combine(a, b, false); }

WittVec2 ghost_oracle_sub(const WittVec2& a, const WittVec2& b) { return ghost_combine(a, b, true); }

}  // namespace wildram
