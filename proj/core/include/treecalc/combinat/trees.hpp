#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecalc/combinat/words.hpp"

namespace treecalc {

// Unlabeled incomplete binary tree. Immutable; subtrees are shared.
//
// Grammar:  BinaryTree ::= "_" | "(" BinaryTree "," BinaryTree ")"
class BinaryTree {
public:
    BinaryTree() = default; // empty tree

    static BinaryTree node(BinaryTree left, BinaryTree right);
    static BinaryTree parse(std::string_view text);

    bool empty() const { return node_ == nullptr; }
    std::size_t size() const { return size_; }
    // Precondition: !empty()
    const BinaryTree &left() const;
    const BinaryTree &right() const;

    std::string encode() const;

    friend bool operator==(const BinaryTree &a, const BinaryTree &b);

private:
    struct Node;
    void encode_into(std::string &out) const;

    std::shared_ptr<const Node> node_;
    std::size_t size_ = 0;
};

struct BinaryTree::Node {
    BinaryTree left;
    BinaryTree right;
};

inline const BinaryTree &BinaryTree::left() const { return node_->left; }
inline const BinaryTree &BinaryTree::right() const { return node_->right; }

// Tree in which every node has exactly m+1 ordered child slots.
//
// Grammar (m given out of band):  MAryTree ::= "_" | "(" MAryTree{m+1} ")"
class MAryTree {
public:
    explicit MAryTree(std::size_t m) : m_(m) {}

    // Throws std::invalid_argument unless there are m+1 children of arity m.
    static MAryTree node(std::size_t m, std::vector<MAryTree> children);
    static MAryTree parse(std::size_t m, std::string_view text);

    std::size_t arity_parameter() const { return m_; }
    bool empty() const { return children_ == nullptr; }
    std::size_t size() const { return size_; }
    const std::vector<MAryTree> &children() const { return *children_; }

    std::string encode() const;

    friend bool operator==(const MAryTree &a, const MAryTree &b);

private:
    void encode_into(std::string &out) const;

    std::size_t m_;
    std::shared_ptr<const std::vector<MAryTree>> children_;
    std::size_t size_ = 0;
};

// Plane tree whose internal nodes all have at least two children. A leaf
// stands for an empty subtree, so a tree built from a word of length n has
// n+1 leaves.
//
// Grammar:  PlaneTree ::= "*" | "(" PlaneTree{2,} ")"
class PlaneTree {
public:
    PlaneTree() = default; // leaf

    // Throws std::invalid_argument when fewer than two children are given.
    static PlaneTree internal(std::vector<PlaneTree> children);
    static PlaneTree parse(std::string_view text);

    bool is_leaf() const { return children_ == nullptr; }
    std::size_t internal_count() const { return internal_; }
    std::size_t leaf_count() const { return leaves_; }
    const std::vector<PlaneTree> &children() const { return *children_; }

    std::string encode() const;

    friend bool operator==(const PlaneTree &a, const PlaneTree &b);

private:
    void encode_into(std::string &out) const;

    std::shared_ptr<const std::vector<PlaneTree>> children_;
    std::size_t internal_ = 0;
    std::size_t leaves_ = 1;
};

// Per-node subtree sizes (hooks) and right-subtree sizes, both sorted
// ascending. right_sizes is only filled for binary trees.
struct HookData {
    std::vector<std::size_t> hooks;
    std::vector<std::size_t> right_sizes;
};

// Throws std::invalid_argument on an empty tree.
HookData hook_data(const BinaryTree &t);
HookData hook_data(const MAryTree &t);

// Shape of the decreasing tree: the maximum is the root, the factors to its
// left and right give the subtrees.
BinaryTree decreasing_tree(const Permutation &p);

// Splits w at the occurrences of its maximum and grafts the trees of the
// blocks on a common root; the empty word gives a leaf.
PlaneTree plane_tree_of_word(std::span<const int> w);

} // namespace treecalc
