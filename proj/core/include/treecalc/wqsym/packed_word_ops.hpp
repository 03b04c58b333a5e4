#pragma once

#include <span>
#include <vector>

#include "treecalc/combinat/words.hpp"

namespace treecalc {

// Basis-level operations on packed words; lists are duplicate-free and sorted
// lexicographically.

// All packed w = v·v' with |v| = |a|, pack(v) = a and pack(v') = b, built by
// merging the letter levels of the two factors.
std::vector<PackedWord> packed_convolve(const PackedWord &a, const PackedWord &b);

// Filter version of packed_convolve: scans every packed word of length
// |a| + |b|. Kept as an oracle.
std::vector<PackedWord> packed_convolve_by_filter(const PackedWord &a, const PackedWord &b);

struct TridendriformSplit {
    std::vector<PackedWord> prec; // max(v) > max(v')
    std::vector<PackedWord> circ; // max(v) = max(v')
    std::vector<PackedWord> succ; // max(v) < max(v')
};

// Throws EmptyOperand if a or b is empty.
TridendriformSplit tridendriform_split(const PackedWord &a, const PackedWord &b);

// u with every occurrence of its maximal letter erased.
PackedWord erase_max_letter(const PackedWord &u);

// Packed words w_1 m w_2 m ... m w_k where w_1...w_k runs over
// u_1 ⋆ ... ⋆ u_k (blocks of the given lengths) and m = max + 1.
std::vector<PackedWord> sandwich(std::span<const PackedWord> words);

} // namespace treecalc
