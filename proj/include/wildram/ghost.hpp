#pragma once

#include "wildram/witt.hpp"

namespace wildram {

/// Witt addition and subtraction recomputed through ghost components.
///
/// Coefficients are lifted coordinate-wise to the Galois ring GR(p^2, e)
/// (modulus lifted the same way), the ghost vector (x0, x0^p + p x1) is
/// formed with honest p-th powers, combined componentwise, and mapped back.
/// Shares nothing with the bracket formulas in witt.cpp. Throws
/// AssertionFailure if the final division by p is inexact.
WittVec2 ghost_oracle_add(const WittVec2& a, const WittVec2& b);
WittVec2 ghost_oracle_sub(const WittVec2& a, const WittVec2& b);

}  // namespace wildram
