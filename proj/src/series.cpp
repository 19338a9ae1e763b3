#include "wildram/series.hpp"

#include <algorithm>
#include <numeric>

#include "wildram/errors.hpp"

namespace wildram {

namespace {

constexpr std::int64_t kExact = LaurentSeries::kExact;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a >= kExact || b >= kExact) return kExact;
    return std::min(a + b, kExact);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
    return q;
}

// Truncated product of dense coefficient arrays, keeping `len` output slots.
std::vector<FieldElem> dense_mul(const FieldCtx& f, const std::vector<FieldElem>& a,
                                 const std::vector<FieldElem>& b, std::size_t len) {
    std::vector<FieldElem> out(len);
    if (a.empty() || b.empty() || len == 0) return out;
    // Outer loop over the sparser operand.
    const bool swap = std::count_if(a.begin(), a.end(), [](FieldElem c) { return !c.is_zero(); }) >
                      std::count_if(b.begin(), b.end(), [](FieldElem c) { return !c.is_zero(); });
    const auto& x = swap ? b : a;
    const auto& y = swap ? a : b;

    if (f.e() == 1) {
        const std::uint64_t p = f.p();
        std::vector<std::uint64_t> acc(len, 0);
        // (p-1)^2 < 2^40, so 2^23 accumulations cannot overflow.
        std::size_t pending = 0;
        for (std::size_t i = 0; i < x.size() && i < len; ++i) {
            const std::uint64_t xi = x[i].code;
            if (xi == 0) continue;
            const std::size_t jmax = std::min(y.size(), len - i);
            std::uint64_t* dst = acc.data() + i;
            for (std::size_t j = 0; j < jmax; ++j) dst[j] += xi * y[j].code;
            if (++pending == (1u << 23)) {
                for (auto& v : acc) v %= p;
                pending = 0;
            }
        }
        for (std::size_t k = 0; k < len; ++k) out[k] = {std::uint32_t(acc[k] % p)};
        return out;
    }

    for (std::size_t i = 0; i < x.size() && i < len; ++i) {
        if (x[i].is_zero()) continue;
        const std::size_t jmax = std::min(y.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (y[j].is_zero()) continue;
            out[i + j] = f.add(out[i + j], f.mul(x[i], y[j]));
        }
    }
    return out;
}

}  // namespace

void require_same_field(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.ctx() != b.ctx() && !a.field().same_field(b.field())) throw ContextMismatch();
}

LaurentSeries::LaurentSeries(FieldPtr ctx, std::int64_t prec) : ctx_(std::move(ctx)), prec_(std::min(prec, kExact)) {}

LaurentSeries::LaurentSeries(FieldPtr ctx, const std::map<std::int64_t, FieldElem>& terms, std::int64_t prec)
    : ctx_(std::move(ctx)), prec_(std::min(prec, kExact)) {
    std::map<std::int64_t, FieldElem> kept;
    for (auto [k, c] : terms)
        if (k < prec_ && !c.is_zero()) kept.emplace(k, c);
    if (kept.empty()) return;
    start_ = kept.begin()->first;
    coeffs_.assign(std::size_t(kept.rbegin()->first - start_ + 1), FieldElem{});
    for (auto [k, c] : kept) coeffs_[std::size_t(k - start_)] = c;
}

LaurentSeries LaurentSeries::from_dense(FieldPtr ctx, std::int64_t start, std::vector<FieldElem> coeffs,
                                        std::int64_t prec) {
    LaurentSeries s(std::move(ctx), prec);
    s.start_ = start;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::constant(FieldPtr ctx, FieldElem c, std::int64_t prec) {
    return monomial(std::move(ctx), c, 0, prec);
}

LaurentSeries LaurentSeries::monomial(FieldPtr ctx, FieldElem c, std::int64_t k, std::int64_t prec) {
    return from_dense(std::move(ctx), k, {c}, prec);
}

LaurentSeries LaurentSeries::one(FieldPtr ctx, std::int64_t prec) {
    FieldElem c = ctx->one();
    return constant(std::move(ctx), c, prec);
}

void LaurentSeries::normalize() {
    if (!coeffs_.empty() && prec_ < kExact) {
        std::int64_t keep = prec_ - start_;
        if (keep <= 0)
            coeffs_.clear();
        else if (std::int64_t(coeffs_.size()) > keep)
            coeffs_.resize(std::size_t(keep));
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        start_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + std::ptrdiff_t(lead));
        start_ += std::int64_t(lead);
    }
}

std::int64_t LaurentSeries::valuation() const {
    if (coeffs_.empty()) {
        if (is_exact()) throw InvalidInput("valuation of exact zero");
        throw InsufficientPrecision("series is zero to precision O(t^" + std::to_string(prec_) +
                                    "); valuation unknown");
    }
    return start_;
}

std::int64_t LaurentSeries::degree() const {
    if (coeffs_.empty()) throw InvalidInput("degree of a series without terms");
    return start_ + std::int64_t(coeffs_.size()) - 1;
}

FieldElem LaurentSeries::leading_coefficient() const {
    valuation();
    return coeffs_.front();
}

FieldElem LaurentSeries::coeff(std::int64_t k) const {
    if (k >= prec_)
        throw InsufficientPrecision("coefficient of t^" + std::to_string(k) + " lies beyond O(t^" +
                                    std::to_string(prec_) + ")");
    if (coeffs_.empty() || k < start_ || k >= start_ + std::int64_t(coeffs_.size())) return {};
    return coeffs_[std::size_t(k - start_)];
}

std::map<std::int64_t, FieldElem> LaurentSeries::terms() const {
    std::map<std::int64_t, FieldElem> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.emplace(start_ + std::int64_t(i), coeffs_[i]);
    return out;
}

std::size_t LaurentSeries::term_count() const noexcept {
    return std::size_t(std::count_if(coeffs_.begin(), coeffs_.end(), [](FieldElem c) { return !c.is_zero(); }));
}

LaurentSeries LaurentSeries::truncated(std::int64_t n) const {
    LaurentSeries r = *this;
    r.prec_ = std::min(prec_, n);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = ctx_->neg(c);
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a, b);
    const std::int64_t prec = std::min(a.prec_, b.prec_);
    if (a.coeffs_.empty()) return b.truncated(prec);
    if (b.coeffs_.empty()) return a.truncated(prec);
    const std::int64_t lo = std::min(a.start_, b.start_);
    std::int64_t hi = std::max(a.degree(), b.degree()) + 1;
    if (prec < kExact) hi = std::min(hi, prec);
    if (hi <= lo) return LaurentSeries(a.ctx_, prec);
    std::vector<FieldElem> out(std::size_t(hi - lo));
    const FieldCtx& f = *a.ctx_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        std::int64_t k = a.start_ + std::int64_t(i);
        if (k < hi) out[std::size_t(k - lo)] = a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        std::int64_t k = b.start_ + std::int64_t(i);
        if (k < hi) out[std::size_t(k - lo)] = f.add(out[std::size_t(k - lo)], b.coeffs_[i]);
    }
    return LaurentSeries::from_dense(a.ctx_, lo, std::move(out), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) return LaurentSeries(a.ctx_);
    const std::int64_t prec =
        std::min(sat_add(a.prec_, b.valuation_bound()), sat_add(b.prec_, a.valuation_bound()));
    if (a.coeffs_.empty() || b.coeffs_.empty()) return LaurentSeries(a.ctx_, prec);
    const std::int64_t start = a.start_ + b.start_;
    std::int64_t len = std::int64_t(a.coeffs_.size() + b.coeffs_.size()) - 1;
    if (prec < kExact) len = std::min(len, prec - start);
    if (len <= 0) return LaurentSeries(a.ctx_, prec);
    auto out = dense_mul(*a.ctx_, a.coeffs_, b.coeffs_, std::size_t(len));
    return LaurentSeries::from_dense(a.ctx_, start, std::move(out), prec);
}

LaurentSeries LaurentSeries::scaled(FieldElem c) const {
    if (c.is_zero()) return LaurentSeries(ctx_, prec_);
    LaurentSeries r = *this;
    for (auto& x : r.coeffs_) x = ctx_->mul(x, c);
    return r;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
    LaurentSeries r = *this;
    if (!r.coeffs_.empty()) r.start_ += k;
    r.prec_ = sat_add(prec_, k);
    return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.field().same_field(b.field())) return false;
    return a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.start_ == b.start_);
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
    if (!field().same_field(other.field())) return false;
    const std::int64_t n = std::min(prec_, other.prec_);
    return truncated(n).terms() == other.truncated(n).terms();
}

std::string LaurentSeries::to_string(const std::string& var) const {
    std::string s;
    const FieldCtx& f = *ctx_;
    for (auto [k, c] : terms()) {
        if (!s.empty()) s += " + ";
        const bool unit = c == f.one();
        if (k == 0) {
            s += f.to_string(c);
            continue;
        }
        if (!unit) s += f.to_string(c) + "*";
        s += var;
        if (k != 1) s += "^" + std::to_string(k);
    }
    if (!is_exact()) {
        if (!s.empty()) s += " + ";
        s += "O(" + var + "^" + std::to_string(prec_) + ")";
    }
    if (s.empty()) s = "0";
    return s;
}

LaurentSeries invert(const LaurentSeries& a, std::int64_t cap) {
    const std::int64_t v = a.valuation();
    const FieldCtx& f = a.field();
    if (a.term_count() == 1 && a.is_exact())
        return LaurentSeries::monomial(a.ctx(), f.inv(a.leading_coefficient()), -v).truncated(cap);
    std::int64_t prec = std::min(a.is_exact() ? kExact : a.prec() - 2 * v, cap);
    if (prec >= kExact)
        throw InsufficientPrecision("inverse of a non-monomial exact series needs a precision cap");
    const std::int64_t len = prec + v;  // relative length of the unit inverse
    if (len <= 0) return LaurentSeries(a.ctx(), prec);

    const auto& u = a.dense();
    const FieldElem u0inv = f.inv(u[0]);
    std::vector<std::size_t> support;
    for (std::size_t j = 1; j < u.size(); ++j)
        if (!u[j].is_zero()) support.push_back(j);
    std::vector<FieldElem> b(static_cast<std::size_t>(len));
    b[0] = u0inv;
    const FieldElem minus_u0inv = f.neg(u0inv);
    for (std::size_t k = 1; k < std::size_t(len); ++k) {
        FieldElem acc{};
        if (f.e() == 1) {
            std::uint64_t s = 0;
            for (std::size_t j : support) {
                if (j > k) break;
                s += std::uint64_t(u[j].code) * b[k - j].code;
                if ((s >> 62) != 0) s %= f.p();
            }
            acc = {std::uint32_t(s % f.p())};
        } else {
            for (std::size_t j : support) {
                if (j > k) break;
                acc = f.add(acc, f.mul(u[j], b[k - j]));
            }
        }
        b[k] = f.mul(minus_u0inv, acc);
    }
    return LaurentSeries::from_dense(a.ctx(), -v, std::move(b), prec);
}

LaurentSeries pow(const LaurentSeries& a, std::int64_t k, std::int64_t cap) {
    if (k == 0) return LaurentSeries::one(a.ctx()).truncated(cap);
    if (a.has_no_terms()) {
        if (k < 0) a.valuation();  // throws
        if (a.is_exact()) return a;
        return LaurentSeries(a.ctx(), std::min(k * a.prec(), cap));
    }
    const std::int64_t v = a.valuation();
    if (k < 0) {
        const std::int64_t m = -k;
        // a^{-1} has valuation -v; its m-th power reaches cap when a^{-1} is
        // known to cap + (m - 1) v.
        const std::int64_t inv_cap = cap >= kExact ? kExact : cap + (m - 1) * v;
        return pow(invert(a, inv_cap), m, cap);
    }
    const std::int64_t total_val = k * v;
    auto trunc_for = [&](const LaurentSeries& x, std::int64_t power) {
        if (cap >= kExact) return x;
        return x.truncated(cap - total_val + power * v);
    };
    LaurentSeries result = LaurentSeries::one(a.ctx());
    std::int64_t result_pow = 0;
    LaurentSeries base = trunc_for(a, 1);
    std::int64_t base_pow = 1;
    std::int64_t e = k;
    while (true) {
        if (e & 1) {
            result_pow += base_pow;
            result = trunc_for(result * base, result_pow);
        }
        e >>= 1;
        if (e == 0) break;
        base_pow *= 2;
        base = trunc_for(base * base, base_pow);
    }
    return result.truncated(cap);
}

LaurentSeries nth_root_one_unit(const LaurentSeries& a, std::int64_t n, std::int64_t cap) {
    const FieldCtx& f = a.field();
    if (n <= 0 || n % std::int64_t(f.p()) == 0)
        throw InvalidInput("root index " + std::to_string(n) + " must be positive and prime to p");
    if (a.valuation() != 0) throw InvalidInput("nth_root_one_unit needs a series of valuation 0");
    const FieldElem c0 = a.leading_coefficient();
    auto r0 = f.min_nth_root(c0, n);
    if (!r0)
        throw RootNotInField("no " + std::to_string(n) + "-th root of " + f.to_string(c0) + " in F_" +
                             std::to_string(f.size()));
    if (a.is_exact() && a.term_count() == 1) return LaurentSeries::constant(a.ctx(), *r0).truncated(cap);
    const std::int64_t prec = std::min(a.prec(), cap);
    if (prec >= kExact) throw InsufficientPrecision("root of a non-constant exact series needs a precision cap");
    if (prec <= 0) return LaurentSeries(a.ctx(), prec);

    // Newton: r <- r - (r^n - a) / (n r^{n-1}); the correct digits double each step.
    LaurentSeries r = LaurentSeries::constant(a.ctx(), *r0);
    const FieldElem n_elem = f.from_int(n);
    std::int64_t cur = 1;
    while (cur < prec) {
        cur = std::min(2 * cur, prec);
        LaurentSeries rn1 = pow(r, n - 1, cur);
        LaurentSeries diff = ((rn1 * r).truncated(cur) - a.truncated(cur)).truncated(cur);
        LaurentSeries denom = rn1.scaled(n_elem).truncated(cur);
        r = (r - (diff * invert(denom, cur)).truncated(cur)).truncated(cur);
        // The approximation is carried as an exact polynomial.
        r = LaurentSeries::from_dense(a.ctx(), r.start(), r.dense());
    }
    return LaurentSeries::from_dense(a.ctx(), r.start(), r.dense(), prec);
}

LaurentSeries nth_root(const LaurentSeries& a, std::int64_t n, std::int64_t cap) {
    const std::int64_t v = a.valuation();
    if (n <= 0 || v % n != 0)
        throw InvalidInput("valuation " + std::to_string(v) + " is not divisible by root index " + std::to_string(n));
    const std::int64_t m = v / n;
    const std::int64_t inner_cap = cap >= kExact ? kExact : cap - m;
    return nth_root_one_unit(a.shifted(-v), n, inner_cap).shifted(m);
}

LaurentSeries pth_root(const LaurentSeries& a) {
    const FieldCtx& f = a.field();
    const std::int64_t p = f.p();
    std::map<std::int64_t, FieldElem> out;
    for (auto [k, c] : a.terms()) {
        if (k % p != 0)
            throw InvalidInput("pth_root: exponent " + std::to_string(k) + " is not divisible by p = " +
                               std::to_string(p));
        out.emplace(k / p, f.pth_root(c));
    }
    const std::int64_t prec = a.is_exact() ? kExact : ceil_div(a.prec(), p);
    return LaurentSeries(a.ctx(), out, prec);
}

LaurentSeries frobenius(const LaurentSeries& a) {
    const FieldCtx& f = a.field();
    const std::int64_t p = f.p();
    std::map<std::int64_t, FieldElem> out;
    for (auto [k, c] : a.terms()) out.emplace(k * p, f.frobenius(c));
    const std::int64_t prec = a.is_exact() ? kExact : a.prec() * p;
    return LaurentSeries(a.ctx(), out, prec);
}

LaurentSeries derivative(const LaurentSeries& a) {
    const FieldCtx& f = a.field();
    std::map<std::int64_t, FieldElem> out;
    for (auto [k, c] : a.terms()) {
        FieldElem d = f.mul(f.from_int(k), c);
        if (!d.is_zero()) out.emplace(k - 1, d);
    }
    const std::int64_t prec = a.is_exact() ? kExact : a.prec() - 1;
    return LaurentSeries(a.ctx(), out, prec);
}

LaurentSeries substitute(const LaurentSeries& a, const LaurentSeries& s, std::int64_t cap) {
    require_same_field(a, s);
    const std::int64_t vs = s.valuation();
    if (vs == 0) throw InvalidInput("substitute: a series of valuation 0 needs infinitely many terms");
    if (vs < 0) {
        if (!a.is_exact())
            throw InsufficientPrecision("substitute: unknown high-order terms become poles under a pole substitution");
        std::map<std::int64_t, FieldElem> reflected;
        for (auto [k, c] : a.terms()) {
            if (k > 0) throw InvalidInput("substitute: a pole substitution requires a polynomial in t^-1");
            reflected.emplace(-k, c);
        }
        const LaurentSeries ar(a.ctx(), reflected);
        return substitute(ar, invert(s, cap), cap);
    }

    if (a.has_no_terms()) {
        if (a.is_exact()) return a;
        return LaurentSeries(a.ctx(), std::min(a.prec() * vs, cap));
    }
    const std::int64_t va = a.valuation();
    const auto a_terms = a.terms();

    // Precision: unknown terms of a contribute O(t^{prec(a) vs}); s^k is known
    // to k vs + (prec(s) - vs) for every k != 0.
    std::int64_t prec = std::min(cap, a.is_exact() ? kExact : a.prec() * vs);
    if (!s.is_exact()) {
        const std::int64_t rel = s.prec() - vs;
        for (auto [k, c] : a_terms) {
            if (k == 0) continue;
            prec = std::min(prec, k * vs + rel);
            break;
        }
    }
    if (prec >= kExact) {
        const bool needs_inverse = va < 0 && s.term_count() > 1;
        if (needs_inverse)
            throw InsufficientPrecision("substitute: negative powers of a non-monomial exact series need a cap");
    }

    // a(s) = s^va * B(s), B(T) = sum_j a_{va+j} T^j, evaluated by Horner.
    const std::int64_t base = va * vs;
    const std::int64_t rel_prec = prec >= kExact ? kExact : prec - base;
    const std::int64_t deg = a.degree();
    LaurentSeries horner = LaurentSeries::zero(a.ctx());
    for (std::int64_t k = deg; k >= va; --k) {
        horner = horner * s;
        auto it = a_terms.find(k);
        if (it != a_terms.end()) horner = horner + LaurentSeries::constant(a.ctx(), it->second);
        if (rel_prec < kExact) horner = horner.truncated(rel_prec);
    }
    LaurentSeries lead = pow(s, va, prec);
    return (lead * horner).truncated(prec);
}

}  // namespace wildram
