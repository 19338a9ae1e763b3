#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildram/genus.hpp"
#include "wildram/witt.hpp"

namespace wildram {

/// Job file grammar (one statement per line, '#' starts a comment):
///
///   field p=<prime> e=<degree> [modulus=[m0,m1,...,1]]
///   prec <N>
///   as: <series>
///   witt2: W2(<series> ; <series>)
///   cover pcyclic: <x-poly>
///   cover elementary: <x-poly> ; <x-poly>
///   cover cyclic: W2(<x-poly> ; <x-poly>)
///
///   series  := [p=<p> e=<e> [modulus=[...]] ';'] term {(+|-) term} + O(t^N)
///   term    := coeff | [coeff ['*']] t ['^' int]
///   coeff   := int | '[' int {',' int} ']'
///   x-poly  := terms in x with exponents >= 0, no O-term
///
/// A job holds one or two `as` blocks, one or two `witt2` blocks, or a single
/// `cover` block. Two blocks describe a compositum.

enum class BlockKind { AS, Witt2, Cover };

std::string to_string(BlockKind k);

struct ExtensionBlock {
    BlockKind kind;
    CoverKind cover = CoverKind::PCyclic;  // Cover only
    LaurentSeries a;  // AS datum, first Witt component, or first x-polynomial
    LaurentSeries b;  // second Witt component or x-polynomial; zero otherwise
    int line = 0;

    WittVec2 witt() const { return {a, b}; }
    CoverSpec cover_spec() const { return CoverSpec::from_x_polynomials(cover, a, b); }
};

struct JobSpec {
    FieldPtr field;
    std::optional<std::int64_t> prec;
    std::vector<ExtensionBlock> blocks;
};

/// Throws ParseError with the line and column of the offending token; semantic
/// errors (p not prime, reducible modulus, term beyond the O-term) are reported
/// the same way.
JobSpec parse_job(const std::string& text);

/// Text that parses back to the same field, precision and coefficient maps.
std::string render_job(const JobSpec& job);

/// Standalone literal "p=3 e=1; 2*t^-5 + t^-1 + 1 + O(t^20)".
LaurentSeries parse_series_literal(const std::string& text);

/// Series body over a known field ("2*t^-5 + O(t^20)").
LaurentSeries parse_series(const std::string& text, const FieldPtr& field);

/// Literal form with the field prefix; the O-term is omitted for exact series.
std::string render_series_literal(const LaurentSeries& s);

}  // namespace wildram
