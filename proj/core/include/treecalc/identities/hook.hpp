#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "treecalc/arith/poly.hpp"
#include "treecalc/arith/rational.hpp"
#include "treecalc/combinat/trees.hpp"
#include "treecalc/combinat/words.hpp"

namespace treecalc {

// n! / prod h_v. Throws std::invalid_argument on the empty tree and
// NonIntegerResult if the quotient is not an integer.
Rational hook_count(const BinaryTree &t);

// [n]_q! prod q^δ_v / [h_v]_q, evaluated by exact polynomial division.
QPoly qhook_imaj(const BinaryTree &t);

// The same closed form; its oracle is the inversion polynomial of the fiber.
QPoly qhook_inv(const BinaryTree &t);

// Statistics of one fiber of the decreasing-tree map.
struct FiberStats {
    std::uint64_t count = 0;
    QPoly imaj;                       // sum of q^imaj(σ)
    QPoly inv;                        // sum of q^inv(σ)
    std::vector<Permutation> members; // only filled on request
};

// One pass over S_n, grouping by the encoding of decreasing_tree(σ).
// Honors the permutation size guard.
std::map<std::string, FiberStats> decreasing_tree_fibers(std::size_t n, bool keep_members = false,
                                                         bool allow_large = false);

} // namespace treecalc
