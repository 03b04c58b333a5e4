#pragma once

#include <cstddef>
#include <vector>

#include "treecalc/combinat/words.hpp"

namespace treecalc {

// Basis-level operations on permutations. Every list is duplicate-free and
// sorted lexicographically.

// All γ = u·v in S_{k+l} with Std(u) = a and Std(v) = b; C(k+l, k) entries.
std::vector<Permutation> convolve(const Permutation &a, const Permutation &b);

struct HalfProducts {
    std::vector<Permutation> prec; // the maximal letter lies in u
    std::vector<Permutation> succ; // the maximal letter lies in v
};

// Splits convolve(a, b) by where the maximal letter of γ sits.
// Throws EmptyOperand if a or b is empty.
HalfProducts half_products(const Permutation &a, const Permutation &b);

// All γ = u (n+1) v with Std(u) = a, Std(v) = b and n = |a| + |b|.
std::vector<Permutation> bilinear_B(const Permutation &a, const Permutation &b);

// Shuffles of a with b shifted up by |a|.
std::vector<Permutation> shifted_shuffle(const Permutation &a, const Permutation &b);

// σ with its largest letter erased.
Permutation erase_max(const Permutation &p);

// σ with its last letter removed, standardized.
Permutation drop_last(const Permutation &p);

} // namespace treecalc
