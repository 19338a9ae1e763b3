#pragma once

#include <cstdint>
#include <string>

#include "wildram/ramfilt.hpp"

namespace wildram {

enum class CoverKind { PCyclic, Elementary, Cyclic };

std::string to_string(CoverKind k);

/// Cover of the projective line branched only at infinity, described by
/// polynomials in x. Data is stored in the local variable t = 1/x at infinity.
struct CoverSpec {
    CoverKind kind;
    LaurentSeries f0;  // PCyclic: the datum; Elementary: first datum; Cyclic: alpha0
    LaurentSeries f1;  // Elementary: second datum; Cyclic: alpha1; PCyclic: unused (zero)

    /// poly0/poly1 are exact series whose exponents are read as powers of x
    /// (all >= 0). Throws InvalidInput on negative exponents or inexact input.
    static CoverSpec from_x_polynomials(CoverKind kind, const LaurentSeries& poly0, const LaurentSeries& poly1);
};

/// Maps a polynomial in x (stored with exponents >= 0) to the local variable t = 1/x.
LaurentSeries x_poly_to_local(const LaurentSeries& poly);

/// genus is an integer except for the printed expression in the flagged
/// noncyclic branch, which can be negative or half-integral.
struct GenusValue {
    Rational genus;
    std::string branch;
};

/// Closed forms for the genus; the noncyclic equal-jump case with a drop
/// returns the printed expression.
GenusValue genus_closed_form(const CoverSpec& c);

/// Riemann-Hurwitz with Hilbert's different formula from the computed lower jumps.
GenusValue genus_via_rh(const CoverSpec& c);

/// Lower jump profile of the inertia group at the point over infinity.
JumpProfile cover_profile(const CoverSpec& c);

/// Full report: jumps from the profile, genus from the RH route. Status is
/// DiscrepancyFlag when the closed form disagrees, with both values in notes.
RamReport genus_report(const CoverSpec& c);

}  // namespace wildram
