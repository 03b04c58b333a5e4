#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/combinat/trees.hpp"
#include "treecalc/errors.hpp"

namespace treecalc {

// What the fixed-point engines need from a series type.
template <class S>
concept SeriesLike = std::copyable<S> && requires(const S a, const S b, std::size_t n) {
    { a + b } -> std::convertible_to<S>;
    { a.valuation() } -> std::same_as<std::optional<std::size_t>>;
    { a.order() } -> std::convertible_to<std::size_t>;
    { S::monomial(n, n) } -> std::convertible_to<S>;
    { a.truncated(n) } -> std::convertible_to<S>;
};

template <class S>
using BinaryOp = std::function<S(const S &, const S &)>;

// Multilinear operator; receives exactly as many arguments as the tree node
// has children.
template <class S>
using MultiOp = std::function<S(std::span<const S>)>;

// Plane family: F(k, args) with k = args.size() >= 2.
template <class S>
using PlaneFamily = std::function<S(std::size_t, std::span<const S>)>;

template <class Tree, class S>
struct TreeTerm {
    Tree tree;
    S term;
};

// Sum of the terms of a tree expansion, optionally keeping every term.
// Terms are ordered by (node count, tree encoding).
template <class Tree, class S>
class TreeExpansion {
public:
    explicit TreeExpansion(S zero) : sum_(std::move(zero)) {}

    void add(Tree tree, const S &term, bool keep)
    {
        sum_ = sum_ + term;
        ++count_;
        if (keep) {
            terms_.push_back({std::move(tree), term});
        }
    }

    const S &sum() const { return sum_; }
    const std::vector<TreeTerm<Tree, S>> &terms() const { return terms_; }
    // Number of trees that contributed, kept or not.
    std::size_t tree_count() const { return count_; }

private:
    S sum_;
    std::vector<TreeTerm<Tree, S>> terms_;
    std::size_t count_ = 0;
};

// Throws ValuationViolation unless val term >= expected.
template <SeriesLike S>
void require_valuation(const S &term, std::size_t expected, const std::string &what)
{
    const auto v = term.valuation();
    if (v && *v < expected) {
        throw ValuationViolation(what + ": valuation " + std::to_string(*v) + " < " + std::to_string(expected));
    }
}

// val B(t^i, t^j) >= i+j+1 on every probe pair visible at this order.
template <SeriesLike S>
void probe_binary(const BinaryOp<S> &op, std::size_t order)
{
    for (std::size_t i = 0; i <= order; ++i) {
        for (std::size_t j = 0; i + j < order; ++j) {
            require_valuation(op(S::monomial(i, order), S::monomial(j, order)), i + j + 1,
                              "B(t^" + std::to_string(i) + ",t^" + std::to_string(j) + ")");
        }
    }
}

// Probes F on all-constant arguments and on each unit exponent vector:
// val F(t^i_1, ..., t^i_k) >= sum i + raise.
template <SeriesLike S>
void probe_multi(const MultiOp<S> &op, std::size_t arity, std::size_t raise, std::size_t order)
{
    const auto check = [&](std::size_t slot, std::size_t e) {
        std::vector<S> args(arity, S::monomial(0, order));
        args[slot] = S::monomial(e, order);
        require_valuation(op(std::span<const S>(args)), e + raise,
                          "F_" + std::to_string(arity) + " probe at slot " + std::to_string(slot));
    };
    check(0, 0);
    for (std::size_t slot = 0; slot < arity; ++slot) {
        for (std::size_t e = 1; e + raise <= order; ++e) {
            check(slot, e);
        }
    }
}

// Evaluates B_T(a) recursively, memoizing subtrees up to memo_max_size nodes.
template <SeriesLike S>
class BinaryTermEvaluator {
public:
    BinaryTermEvaluator(BinaryOp<S> op, S leaf, std::size_t memo_max_size = 8)
        : op_(std::move(op)), leaf_(std::move(leaf)), memo_max_(memo_max_size)
    {
    }

    S operator()(const BinaryTree &t)
    {
        if (t.empty()) {
            return leaf_;
        }
        std::string key;
        if (t.size() <= memo_max_) {
            key = t.encode();
            if (auto it = memo_.find(key); it != memo_.end()) {
                return it->second;
            }
        }
        S value = op_((*this)(t.left()), (*this)(t.right()));
        require_valuation(value, t.size(), "tree " + (key.empty() ? t.encode() : key));
        if (!key.empty()) {
            memo_.emplace(std::move(key), value);
        }
        return value;
    }

private:
    BinaryOp<S> op_;
    S leaf_;
    std::size_t memo_max_;
    std::unordered_map<std::string, S> memo_;
};

template <SeriesLike S>
class MAryTermEvaluator {
public:
    MAryTermEvaluator(MultiOp<S> op, S leaf, std::size_t memo_max_size = 8)
        : op_(std::move(op)), leaf_(std::move(leaf)), memo_max_(memo_max_size)
    {
    }

    S operator()(const MAryTree &t)
    {
        if (t.empty()) {
            return leaf_;
        }
        std::string key;
        if (t.size() <= memo_max_) {
            key = t.encode();
            if (auto it = memo_.find(key); it != memo_.end()) {
                return it->second;
            }
        }
        std::vector<S> args;
        args.reserve(t.children().size());
        for (const auto &c : t.children()) {
            args.push_back((*this)(c));
        }
        S value = op_(std::span<const S>(args));
        require_valuation(value, t.size(), "tree " + (key.empty() ? t.encode() : key));
        if (!key.empty()) {
            memo_.emplace(std::move(key), value);
        }
        return value;
    }

private:
    MultiOp<S> op_;
    S leaf_;
    std::size_t memo_max_;
    std::unordered_map<std::string, S> memo_;
};

template <SeriesLike S>
class PlaneTermEvaluator {
public:
    PlaneTermEvaluator(PlaneFamily<S> family, S leaf) : family_(std::move(family)), leaf_(std::move(leaf)) {}

    S operator()(const PlaneTree &t)
    {
        if (t.is_leaf()) {
            return leaf_;
        }
        std::string key = t.encode();
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        std::vector<S> args;
        args.reserve(t.children().size());
        for (const auto &c : t.children()) {
            args.push_back((*this)(c));
        }
        S value = family_(args.size(), std::span<const S>(args));
        require_valuation(value, t.leaf_count() - 1, "tree " + key);
        memo_.emplace(std::move(key), value);
        return value;
    }

private:
    PlaneFamily<S> family_;
    S leaf_;
    std::unordered_map<std::string, S> memo_;
};

// x = a + B(x, x) expanded as the sum of B_T(a) over binary trees with at most
// `order` nodes (the empty tree contributes a). Probes B first.
template <SeriesLike S>
TreeExpansion<BinaryTree, S> fixed_point_binary(const BinaryOp<S> &op, const S &a, std::size_t order,
                                                bool keep_terms = true)
{
    probe_binary(op, order);
    const S leaf = a.truncated(order);
    BinaryTermEvaluator<S> eval(op, leaf);
    TreeExpansion<BinaryTree, S> out{S(order)};
    for (std::size_t n = 0; n <= order; ++n) {
        for_each_binary_tree(n, [&](const BinaryTree &t) { out.add(t, eval(t), keep_terms); });
    }
    return out;
}

// x = a + F(x, ..., x) with F of arity m+1, over (m+1)-ary trees.
template <SeriesLike S>
TreeExpansion<MAryTree, S> fixed_point_mary(std::size_t m, const MultiOp<S> &op, const S &a, std::size_t order,
                                            bool keep_terms = true)
{
    probe_multi(op, m + 1, 1, order);
    const S leaf = a.truncated(order);
    MAryTermEvaluator<S> eval(op, leaf);
    TreeExpansion<MAryTree, S> out{S(order)};
    for (std::size_t n = 0; n <= order; ++n) {
        for_each_mary_tree(m, n, [&](const MAryTree &t) { out.add(t, eval(t), keep_terms); });
    }
    return out;
}

// x = a + sum_{k>=2} F_k(x, ..., x) over plane trees. The family must satisfy
// val F_k(t^i_1, ..., t^i_k) >= sum i + k - 1, so a tree with n+1 leaves
// contributes from order n on and the expansion stops at n = order.
template <SeriesLike S>
TreeExpansion<PlaneTree, S> fixed_point_plane(const PlaneFamily<S> &family, const S &a, std::size_t order,
                                              bool keep_terms = true)
{
    for (std::size_t k = 2; k <= order + 1; ++k) {
        probe_multi<S>([&](std::span<const S> args) { return family(k, args); }, k, k - 1, order);
    }
    const S leaf = a.truncated(order);
    PlaneTermEvaluator<S> eval(family, leaf);
    TreeExpansion<PlaneTree, S> out{S(order)};
    for (std::size_t n = 0; n <= order; ++n) {
        for_each_plane_tree(n, [&](const PlaneTree &t) { out.add(t, eval(t), keep_terms); });
    }
    return out;
}

// Picard iteration x <- a + B(x, x); each pass fixes one more coefficient.
template <SeriesLike S>
S picard_binary(const BinaryOp<S> &op, const S &a, std::size_t order)
{
    const S leaf = a.truncated(order);
    S x = leaf;
    for (std::size_t i = 0; i <= order; ++i) {
        x = leaf + op(x, x);
    }
    return x;
}

template <SeriesLike S>
S picard_mary(std::size_t m, const MultiOp<S> &op, const S &a, std::size_t order)
{
    const S leaf = a.truncated(order);
    S x = leaf;
    for (std::size_t i = 0; i <= order; ++i) {
        const std::vector<S> args(m + 1, x);
        x = leaf + op(std::span<const S>(args));
    }
    return x;
}

template <SeriesLike S>
S picard_plane(const PlaneFamily<S> &family, const S &a, std::size_t order)
{
    const S leaf = a.truncated(order);
    S x = leaf;
    for (std::size_t i = 0; i <= order; ++i) {
        S next = leaf;
        for (std::size_t k = 2; k <= order + 1; ++k) {
            const std::vector<S> args(k, x);
            next = next + family(k, std::span<const S>(args));
        }
        x = next;
    }
    return x;
}

// JSON array of coefficient strings.
template <class Series>
nlohmann::json series_to_json(const Series &s)
{
    auto out = nlohmann::json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if constexpr (requires { s.coefficient_string(n); }) {
            out.push_back(s.coefficient_string(n));
        } else {
            out.push_back(s[n].to_string());
        }
    }
    return out;
}

template <class Tree, class S>
nlohmann::json expansion_to_json(const TreeExpansion<Tree, S> &e)
{
    nlohmann::json out;
    out["sum"] = series_to_json(e.sum());
    out["tree_count"] = e.tree_count();
    auto terms = nlohmann::json::array();
    for (const auto &t : e.terms()) {
        terms.push_back({{"tree", t.tree.encode()}, {"term", series_to_json(t.term)}});
    }
    out["terms"] = std::move(terms);
    return out;
}

} // namespace treecalc
