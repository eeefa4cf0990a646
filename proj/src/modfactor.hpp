#pragma once

// Factorization of squarefree integer polynomials by factoring modulo a small
// prime, Hensel lifting, and recombination of the lifted factors (trial
// division by candidates inside the Mignotte coefficient bound).

#include <gmpxx.h>

#include <vector>

namespace bmo::detail {

using ZPoly = std::vector<mpz_class>;  // coefficients, lowest degree first

/// f must be primitive, squarefree, of degree >= 2 with positive leading
/// coefficient. Returns primitive irreducible factors with positive leading
/// coefficients whose product is f.
std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f);

}  // namespace bmo::detail
