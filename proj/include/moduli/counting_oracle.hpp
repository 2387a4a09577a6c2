#pragma once

// Brute-force oracles, part one: twisted Burnside point counting over F_q for
// quotients of genus-0 configuration spaces.
//
// For a marking permutation sigma, the number of PGL2-orbits of n-tuples of
// distinct points of P^1 over the algebraic closure with Frobenius acting by
// sigma is a polynomial N_sigma(q). Averaging over a finite group G gives the
// counting polynomial of the quotient; its value at q = 1 is the Euler
// characteristic.

#include "moduli/permutation.hpp"
#include "moduli/polynomial.hpp"
#include "moduli/rational.hpp"

namespace moduli {

// m_l(q) = sum_{e | l} mu(l/e) (q^e + 1): the number of points of P^1 over
// the algebraic closure of F_q whose Frobenius orbit has exact size l.
Polynomial exact_degree_count(int l);

// N_sigma(q) = [prod over cycle lengths l: prod_{t=0}^{c_l-1} (m_l(q) - t l)] / (q^3 - q),
// where c_l is the number of l-cycles of sigma. Requires n >= 3 (PGL2 acts
// freely); the division is exact or the oracle is broken.
Polynomial twisted_count(int n, const MarkedPermutation& sigma);

// P(q) = (1/|G|) sum_{g in G} prod_i N_{g_i}(q): the counting polynomial of
// the quotient of the product of configuration spaces by the action.
Polynomial burnside_average(const PermutationGroupAction& action);

// P(1): the Euler characteristic of the quotient.
Rational burnside_quotient_chi(const PermutationGroupAction& action);

}  // namespace moduli
