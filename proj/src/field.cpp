#include "wildram/field.hpp"

#include <algorithm>
#include <numeric>

#include "wildram/errors.hpp"

namespace wildram {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Remainder of a by monic b over F_p; both low to high.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t sub = std::uint64_t(lead) * b[i] % p;
                a[shift + i] = std::uint32_t((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

// Next coefficient vector in the counting order where c0 is most significant.
bool next_coeffs(std::vector<std::uint32_t>& c, std::uint32_t p) {
    for (std::size_t i = c.size(); i-- > 0;) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    if (poly.size() < 2 || poly.back() != 1) return false;
    const std::size_t deg = poly.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::vector<std::uint32_t> low(d, 0);
        do {
            std::vector<std::uint32_t> div = low;
            div.push_back(1);
            auto r = poly_rem(poly, div, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
        } while (next_coeffs(low, p));
    }
    return true;
}

std::shared_ptr<const FieldCtx> FieldCtx::make(std::uint32_t p, std::uint32_t e,
                                               std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw InvalidInput("p must be prime (got " + std::to_string(p) + ")");
    if (e < 1) throw InvalidInput("extension degree e must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxSize) throw InvalidInput("field size p^e exceeds the supported maximum");
    }
    if (modulus.empty()) {
        std::vector<std::uint32_t> low(e, 0);
        do {
            std::vector<std::uint32_t> cand = low;
            cand.push_back(1);
            if (is_irreducible_mod_p(cand, p)) {
                modulus = std::move(cand);
                break;
            }
        } while (next_coeffs(low, p));
    } else {
        if (modulus.size() != e + 1) throw InvalidInput("modulus must have degree e");
        for (auto& c : modulus) {
            if (c >= p) throw InvalidInput("modulus coefficients must lie in [0, p)");
        }
        if (modulus.back() != 1) throw InvalidInput("modulus must be monic");
        if (!is_irreducible_mod_p(modulus, p)) throw InvalidInput("modulus is reducible over F_p");
    }

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->q_ = std::uint32_t(q);
    ctx->modulus_ = std::move(modulus);
    ctx->pow_p_.assign(e, 1);
    for (std::uint32_t i = e - 1; i-- > 0;) ctx->pow_p_[i] = ctx->pow_p_[i + 1] * p;
    ctx->build_tables();
    return ctx;
}

std::uint32_t FieldCtx::encode(std::span<const std::uint32_t> coords) const {
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < e_; ++i) code += coords[i] * pow_p_[i];
    return code;
}

std::vector<std::uint32_t> FieldCtx::coords(FieldElem a) const {
    std::vector<std::uint32_t> c(e_);
    for (std::uint32_t i = 0; i < e_; ++i) c[i] = (a.code / pow_p_[i]) % p_;
    return c;
}

FieldElem FieldCtx::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return {std::uint32_t(r) * pow_p_[0]};
}

FieldElem FieldCtx::from_coords(std::span<const std::int64_t> coords) const {
    if (coords.size() > e_) throw InvalidInput("too many coordinates for F_" + std::to_string(q_));
    std::vector<std::uint32_t> c(e_, 0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        std::int64_t r = coords[i] % std::int64_t(p_);
        c[i] = std::uint32_t(r < 0 ? r + p_ : r);
    }
    return {encode(c)};
}

std::vector<FieldElem> FieldCtx::elements() const {
    std::vector<FieldElem> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
    return out;
}

FieldElem FieldCtx::add_slow(FieldElem a, FieldElem b) const noexcept {
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t da = (a.code / pow_p_[i]) % p_;
        std::uint32_t db = (b.code / pow_p_[i]) % p_;
        code += ((da + db) % p_) * pow_p_[i];
    }
    return {code};
}

std::vector<std::uint32_t> FieldCtx::poly_mulmod(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(a[i]) * b[j]) % p_);
    auto r = poly_rem(std::move(prod), modulus_, p_);
    r.resize(e_, 0);
    return r;
}

void FieldCtx::build_tables() {
    neg_.resize(q_);
    for (std::uint32_t c = 0; c < q_; ++c) {
        auto v = coords({c});
        for (auto& d : v) d = (p_ - d) % p_;
        neg_[c] = encode(v);
    }

    const std::uint32_t order = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(2 * std::size_t(order), 0);
    std::vector<std::uint32_t> one(e_, 0);
    one[0] = 1;

    // Candidate generators in increasing order; x itself is tried first since
    // it is primitive for most default moduli.
    std::vector<std::uint32_t> candidates;
    if (e_ > 1) {
        std::vector<std::uint32_t> x(e_, 0);
        x[1] = 1;
        candidates.push_back(encode(x));
    }
    for (std::uint32_t c = 1; c < q_; ++c) candidates.push_back(c);

    for (std::uint32_t g : candidates) {
        auto gc = coords({g});
        std::vector<std::uint32_t> cur = one;
        bool primitive = true;
        for (std::uint32_t k = 0; k < order; ++k) {
            std::uint32_t code = encode(cur);
            if (k > 0 && code == encode(one)) {
                primitive = false;
                break;
            }
            exp_[k] = code;
            log_[code] = k;
            cur = poly_mulmod(cur, gc);
        }
        if (primitive) break;
    }
    for (std::uint32_t k = 0; k < order; ++k) exp_[k + order] = exp_[k];

    if (e_ > 1 && q_ <= 1024) {
        add_table_.resize(std::size_t(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) add_table_[std::size_t(a) * q_ + b] = add_slow({a}, {b}).code;
    }
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw InvalidInput("division by zero in F_" + std::to_string(q_));
    const std::uint32_t order = q_ - 1;
    return {exp_[(order - log_[a.code]) % order]};
}

FieldElem FieldCtx::pow(FieldElem a, std::int64_t k) const {
    if (a.is_zero()) {
        if (k > 0) return {};
        if (k == 0) return one();
        throw InvalidInput("zero raised to a negative power");
    }
    const std::int64_t order = q_ - 1;
    std::int64_t r = (std::int64_t(log_[a.code]) * (k % order)) % order;
    if (r < 0) r += order;
    return {exp_[r]};
}

FieldElem FieldCtx::pth_root(FieldElem a) const {
    std::int64_t k = 1;
    for (std::uint32_t i = 1; i < e_; ++i) k *= p_;
    return pow(a, k);
}

std::vector<FieldElem> FieldCtx::nth_roots(FieldElem a, std::int64_t n) const {
    if (n <= 0) throw InvalidInput("root index must be positive");
    std::vector<FieldElem> out;
    for (std::uint32_t c = 0; c < q_; ++c)
        if (pow({c}, n) == a) out.push_back({c});
    return out;
}

std::optional<FieldElem> FieldCtx::min_nth_root(FieldElem a, std::int64_t n) const {
    if (n <= 0) throw InvalidInput("root index must be positive");
    for (std::uint32_t c = 0; c < q_; ++c)
        if (pow({c}, n) == a) return FieldElem{c};
    return std::nullopt;
}

std::uint32_t FieldCtx::trace(FieldElem a) const {
    FieldElem acc{};
    FieldElem cur = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
        acc = add(acc, cur);
        cur = frobenius(cur);
    }
    return acc.code / pow_p_[0];
}

bool FieldCtx::in_prime_field(FieldElem a) const noexcept { return a.code % pow_p_[0] == 0; }

std::string FieldCtx::to_string(FieldElem a) const {
    if (e_ == 1) return std::to_string(a.code);
    auto c = coords(a);
    std::string s = "[";
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

}  // namespace wildram
