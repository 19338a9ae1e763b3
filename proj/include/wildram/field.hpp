#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wildram {

/// Element of a finite field F_{p^e}, meaningful only together with its FieldCtx.
///
/// The code packs the coordinate vector (c0, c1, ..., c_{e-1}) over F_p as
/// c0*p^{e-1} + c1*p^{e-2} + ... + c_{e-1}, so comparing codes is the
/// lexicographic order on coordinate vectors. That order is the tie-break used
/// whenever a root has to be chosen.
struct FieldElem {
    std::uint32_t code = 0;

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// F_{p^e} = F_p[x]/(modulus), with log/antilog tables built at construction.
class FieldCtx {
public:
    /// Largest supported field size; tables are O(q).
    static constexpr std::uint32_t kMaxSize = 1u << 20;

    /// modulus holds coefficients low to high (length e+1, monic). Empty picks
    /// the lexicographically first monic irreducible polynomial of degree e.
    /// Throws InvalidInput if p is not prime, e < 1, the field is too large or
    /// the modulus is reducible.
    static std::shared_ptr<const FieldCtx> make(std::uint32_t p, std::uint32_t e,
                                                std::vector<std::uint32_t> modulus = {});

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t size() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool same_field(const FieldCtx& other) const noexcept {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    FieldElem zero() const noexcept { return {}; }
    FieldElem one() const noexcept { return from_int(1); }
    /// Image of an integer under Z -> F_p -> F_{p^e}.
    FieldElem from_int(std::int64_t v) const noexcept;
    FieldElem from_coords(std::span<const std::int64_t> coords) const;
    std::vector<std::uint32_t> coords(FieldElem a) const;
    /// Every element, in increasing order.
    std::vector<FieldElem> elements() const;

    FieldElem add(FieldElem a, FieldElem b) const noexcept {
        if (e_ == 1) {
            std::uint32_t s = a.code + b.code;
            return {s >= p_ ? s - p_ : s};
        }
        if (!add_table_.empty()) return {add_table_[std::size_t(a.code) * q_ + b.code]};
        return add_slow(a, b);
    }
    FieldElem neg(FieldElem a) const noexcept { return {neg_[a.code]}; }
    FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        if (a.code == 0 || b.code == 0) return {};
        return {exp_[log_[a.code] + log_[b.code]]};
    }
    /// Throws InvalidInput on zero.
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    /// a^k for any integer k (negative k requires a != 0).
    FieldElem pow(FieldElem a, std::int64_t k) const;
    FieldElem frobenius(FieldElem a) const { return pow(a, p_); }
    /// Unique p-th root (inverse Frobenius).
    FieldElem pth_root(FieldElem a) const;
    /// All n-th roots of a, ascending.
    std::vector<FieldElem> nth_roots(FieldElem a, std::int64_t n) const;
    /// Smallest n-th root of a in the coordinate order, if any.
    std::optional<FieldElem> min_nth_root(FieldElem a, std::int64_t n) const;
    /// Absolute trace to F_p, returned as an integer in [0, p).
    std::uint32_t trace(FieldElem a) const;
    bool in_prime_field(FieldElem a) const noexcept;

    /// Integer for e = 1, coordinate list "[c0,c1,...]" otherwise.
    std::string to_string(FieldElem a) const;

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

private:
    FieldCtx() = default;

    FieldElem add_slow(FieldElem a, FieldElem b) const noexcept;
    std::uint32_t encode(std::span<const std::uint32_t> coords) const;
    std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pow_p_;  // p^(e-1-i) for coordinate i
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1)
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> add_table_;  // q*q entries when q is small
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

bool is_prime(std::uint64_t n) noexcept;

/// True iff the monic polynomial (coefficients low to high) is irreducible over F_p.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace wildram
