#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wildram/series.hpp"
#include "wildram/witt.hpp"

namespace wildram {

enum class ASKind { WildReduced, Unramified, Trivial };

std::string to_string(ASKind k);

/// Normal form of an Artin-Schreier datum f modulo the image of x -> x^p - x.
///
/// f - f_red = shift^p - shift holds exactly (to f's precision). Pole terms of
/// f_red have exponents prime to p. The constant term is the smallest field
/// element of its trace class. Terms of positive valuation are kept: they
/// always lie in the image and never affect the classification.
struct ReducedAS {
    LaurentSeries f_red;
    LaurentSeries shift;
    ASKind kind;
    std::int64_t pole_order = 0;    // n when WildReduced
    std::uint32_t const_trace = 0;  // trace of the constant term of f_red

    std::int64_t conductor() const noexcept { return kind == ASKind::WildReduced ? pole_order : 0; }
};

/// Throws InsufficientPrecision when no surviving pole is found and the
/// constant term lies beyond the precision.
ReducedAS reduce_as(const LaurentSeries& f);

/// original -_w vec_red = frobenius_minus_id(shift).
struct ReducedWitt2 {
    WittVec2 vec_red;
    WittVec2 shift;
    ASKind kind0;
    ASKind kind1;
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;

    bool fully_wild() const noexcept { return kind0 == ASKind::WildReduced && kind1 == ASKind::WildReduced; }
};

ReducedWitt2 reduce_witt2(const WittVec2& v);

/// c in 1..p-1 with f - c g in the Artin-Schreier image, if any.
std::optional<std::int64_t> as_equivalence(const LaurentSeries& f, const LaurentSeries& g);

enum class EquivKind { Equal, SharedSubfield, Disjoint };

struct Equivalence {
    EquivKind kind;
    std::int64_t c = 0;  // unit mod p for SharedSubfield, unit mod p^2 for Equal
};

std::string to_string(const Equivalence& e);

/// Compares the cyclic extensions of degree p^2 defined by v and w.
Equivalence equivalence_class_test(const WittVec2& v, const WittVec2& w);

}  // namespace wildram
