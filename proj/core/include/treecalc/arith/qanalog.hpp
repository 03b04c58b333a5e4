#pragma once

#include "treecalc/arith/poly.hpp"

namespace treecalc {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
QPoly q_integer(unsigned n);

// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
QPoly q_factorial(unsigned n);

// Gaussian binomial by the division-free Pascal recurrence
//   [n, k] = [n-1, k-1] + q^k [n-1, k],
// memoized per thread. Zero when k < 0 or k > n.
QPoly q_binomial(unsigned n, int k);

} // namespace treecalc
