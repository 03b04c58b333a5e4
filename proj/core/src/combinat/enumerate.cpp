#include "treecalc/combinat/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "treecalc/errors.hpp"

namespace treecalc {

namespace {

// Bit s set <=> size s is admissible. All generators below emit every tree
// whose size lies in the set, in lexicographic order of the encoding. Since
// encodings are prefix-free, a node's encoding compares as the tuple of its
// children's encodings, which is what the nested recursion produces.
using SizeSet = std::uint64_t;

constexpr unsigned max_size_in(SizeSet s) { return 63U - static_cast<unsigned>(std::countl_zero(s)); }

constexpr SizeSet sizes_up_to(unsigned max) { return max >= 63 ? ~SizeSet{0} : ((SizeSet{2} << max) - 1); }

void gen_binary(SizeSet sizes, const std::function<void(const BinaryTree &)> &emit)
{
    // '(' sorts before '_' so every node tree precedes the empty tree.
    const SizeSet node_sizes = sizes & ~SizeSet{1};
    if (node_sizes != 0) {
        const SizeSet left_sizes = sizes_up_to(max_size_in(node_sizes) - 1);
        gen_binary(left_sizes, [&](const BinaryTree &left) {
            const SizeSet right_sizes = node_sizes >> (left.size() + 1);
            if (right_sizes != 0) {
                gen_binary(right_sizes, [&](const BinaryTree &right) { emit(BinaryTree::node(left, right)); });
            }
        });
    }
    if ((sizes & 1) != 0) {
        emit(BinaryTree{});
    }
}

void gen_mary(std::size_t m, SizeSet sizes, const std::function<void(const MAryTree &)> &emit);

void gen_mary_children(std::size_t m, SizeSet remaining, std::vector<MAryTree> &prefix,
                       const std::function<void(const MAryTree &)> &emit)
{
    if (prefix.size() == m) {
        gen_mary(m, remaining, [&](const MAryTree &last) {
            std::vector<MAryTree> children = prefix;
            children.push_back(last);
            emit(MAryTree::node(m, std::move(children)));
        });
        return;
    }
    gen_mary(m, sizes_up_to(max_size_in(remaining)), [&](const MAryTree &child) {
        const SizeSet rest = remaining >> child.size();
        if (rest != 0) {
            prefix.push_back(child);
            gen_mary_children(m, rest, prefix, emit);
            prefix.pop_back();
        }
    });
}

void gen_mary(std::size_t m, SizeSet sizes, const std::function<void(const MAryTree &)> &emit)
{
    const SizeSet node_sizes = sizes & ~SizeSet{1};
    if (node_sizes != 0) {
        std::vector<MAryTree> prefix;
        gen_mary_children(m, node_sizes >> 1, prefix, emit);
    }
    if ((sizes & 1) != 0) {
        emit(MAryTree(m));
    }
}

// Plane trees are sized by leaf count. Byte order is '(' < ')' < '*', so after
// a prefix of children the continuations come as: another internal child,
// then closing the node, then another leaf child.
bool completable(SizeSet remaining, std::size_t children)
{
    return (remaining & ~SizeSet{1}) != 0 || ((remaining & 1) != 0 && children >= 2);
}

void gen_plane_sequence(SizeSet remaining, std::vector<PlaneTree> &prefix,
                        const std::function<void(const PlaneTree &)> &emit);

void gen_plane_internal(SizeSet sizes, const std::function<void(const PlaneTree &)> &emit)
{
    std::vector<PlaneTree> prefix;
    gen_plane_sequence(sizes, prefix, emit);
}

void gen_plane_sequence(SizeSet remaining, std::vector<PlaneTree> &prefix,
                        const std::function<void(const PlaneTree &)> &emit)
{
    const std::size_t k = prefix.size();
    SizeSet child_sizes = 0;
    for (unsigned c = 2; remaining != 0 && c <= max_size_in(remaining); ++c) {
        if (completable(remaining >> c, k + 1)) {
            child_sizes |= SizeSet{1} << c;
        }
    }
    if (child_sizes != 0) {
        gen_plane_internal(child_sizes, [&](const PlaneTree &child) {
            prefix.push_back(child);
            gen_plane_sequence(remaining >> child.leaf_count(), prefix, emit);
            prefix.pop_back();
        });
    }
    if ((remaining & 1) != 0 && k >= 2) {
        emit(PlaneTree::internal(prefix));
    }
    if (completable(remaining >> 1, k + 1)) {
        prefix.emplace_back();
        gen_plane_sequence(remaining >> 1, prefix, emit);
        prefix.pop_back();
    }
}

void check_enumerable(std::size_t n)
{
    if (n >= 62) {
        throw SizeGuard("enumeration size " + std::to_string(n) + " is beyond any supported range");
    }
}

void gen_packed(std::size_t n, Letters &word, std::uint64_t used,
                const std::function<void(const PackedWord &)> &visit)
{
    const std::size_t i = word.size();
    if (i == n) {
        visit(PackedWord(word));
        return;
    }
    const std::size_t remaining_after = n - i - 1;
    for (int c = 1; c <= static_cast<int>(n); ++c) {
        const std::uint64_t next = used | (std::uint64_t{1} << c);
        const unsigned top = 63U - static_cast<unsigned>(std::countl_zero(next));
        const auto missing = static_cast<std::size_t>(top) - static_cast<std::size_t>(std::popcount(next));
        if (missing <= remaining_after) {
            word.push_back(c);
            gen_packed(n, word, next, visit);
            word.pop_back();
        }
    }
}

} // namespace

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::BinaryTrees:
        return "binary-trees";
    case Family::MAryTrees:
        return "mary-trees";
    case Family::PlaneTrees:
        return "plane-trees";
    case Family::Permutations:
        return "permutations";
    case Family::PackedWords:
        return "packed-words";
    }
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (Family f : {Family::BinaryTrees, Family::MAryTrees, Family::PlaneTrees, Family::Permutations,
                     Family::PackedWords}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw ParseError("unknown family '" + std::string(name) + "'");
}

std::size_t size_guard(Family f)
{
    switch (f) {
    case Family::BinaryTrees:
        return 14;
    case Family::MAryTrees:
        return 10;
    case Family::PlaneTrees:
        return 10;
    case Family::Permutations:
        return 12;
    case Family::PackedWords:
        return 9;
    }
    return 0;
}

void check_size_guard(Family f, std::size_t n, bool allow_large)
{
    if (!allow_large && n > size_guard(f)) {
        throw SizeGuard(std::string(family_name(f)) + ": n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(size_guard(f)) + " (use --unsafe-large to override)");
    }
}

void for_each_binary_tree(std::size_t n, const std::function<void(const BinaryTree &)> &visit)
{
    check_enumerable(n);
    gen_binary(SizeSet{1} << n, visit);
}

void for_each_mary_tree(std::size_t m, std::size_t n, const std::function<void(const MAryTree &)> &visit)
{
    check_enumerable(n);
    if (m == 0) {
        throw std::invalid_argument("m-ary trees need m >= 1");
    }
    gen_mary(m, SizeSet{1} << n, visit);
}

void for_each_plane_tree(std::size_t n, const std::function<void(const PlaneTree &)> &visit)
{
    check_enumerable(n);
    if (n == 0) {
        visit(PlaneTree{});
        return;
    }
    gen_plane_internal(SizeSet{1} << (n + 1), visit);
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation &)> &visit)
{
    Letters w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_packed_word(std::size_t n, const std::function<void(const PackedWord &)> &visit)
{
    check_enumerable(n);
    Letters word;
    word.reserve(n);
    gen_packed(n, word, 0, visit);
}

void enumerate(Family f, std::size_t n, std::size_t m, bool allow_large,
               const std::function<void(const std::string &)> &visit)
{
    check_size_guard(f, n, allow_large);
    switch (f) {
    case Family::BinaryTrees:
        for_each_binary_tree(n, [&](const BinaryTree &t) { visit(t.encode()); });
        break;
    case Family::MAryTrees:
        for_each_mary_tree(m, n, [&](const MAryTree &t) { visit(t.encode()); });
        break;
    case Family::PlaneTrees:
        for_each_plane_tree(n, [&](const PlaneTree &t) { visit(t.encode()); });
        break;
    case Family::Permutations:
        for_each_permutation(n, [&](const Permutation &p) { visit(p.to_string()); });
        break;
    case Family::PackedWords:
        for_each_packed_word(n, [&](const PackedWord &w) { visit(w.to_string()); });
        break;
    }
}

std::uint64_t count(Family f, std::size_t n, std::size_t m, bool allow_large)
{
    check_size_guard(f, n, allow_large);
    std::uint64_t total = 0;
    switch (f) {
    case Family::BinaryTrees:
        for_each_binary_tree(n, [&](const BinaryTree &) { ++total; });
        break;
    case Family::MAryTrees:
        for_each_mary_tree(m, n, [&](const MAryTree &) { ++total; });
        break;
    case Family::PlaneTrees:
        for_each_plane_tree(n, [&](const PlaneTree &) { ++total; });
        break;
    case Family::Permutations:
        for_each_permutation(n, [&](const Permutation &) { ++total; });
        break;
    case Family::PackedWords:
        for_each_packed_word(n, [&](const PackedWord &) { ++total; });
        break;
    }
    return total;
}

} // namespace treecalc
