#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "treecalc/combinat/trees.hpp"
#include "treecalc/combinat/words.hpp"

namespace treecalc {

// Exhaustive, duplicate-free enumerators. Objects are visited one at a time in
// lexicographic order of their canonical encoding (tree grammar or word
// letters), so nothing is materialized.

enum class Family { BinaryTrees, MAryTrees, PlaneTrees, Permutations, PackedWords };

std::string_view family_name(Family f);
// Accepts "binary-trees", "mary-trees", "plane-trees", "permutations", "packed-words".
Family parse_family(std::string_view name);

// Largest n each family accepts without an override.
std::size_t size_guard(Family f);

// Throws SizeGuard when n > size_guard(f) and allow_large is false.
void check_size_guard(Family f, std::size_t n, bool allow_large);

// Trees with exactly n nodes.
void for_each_binary_tree(std::size_t n, const std::function<void(const BinaryTree &)> &visit);
// (m+1)-ary trees with exactly n nodes.
void for_each_mary_tree(std::size_t m, std::size_t n, const std::function<void(const MAryTree &)> &visit);
// Plane trees (internal arity >= 2) with exactly n+1 leaves, i.e. the shapes
// reachable from words of length n. n = 0 gives the single leaf.
void for_each_plane_tree(std::size_t n, const std::function<void(const PlaneTree &)> &visit);
void for_each_permutation(std::size_t n, const std::function<void(const Permutation &)> &visit);
void for_each_packed_word(std::size_t n, const std::function<void(const PackedWord &)> &visit);

// Visits the canonical encodings of a family, checking the size guard first.
// m is only used for MAryTrees.
void enumerate(Family f, std::size_t n, std::size_t m, bool allow_large,
               const std::function<void(const std::string &)> &visit);
std::uint64_t count(Family f, std::size_t n, std::size_t m, bool allow_large);

} // namespace treecalc
