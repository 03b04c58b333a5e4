#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "treecalc/algebra/linear_combination.hpp"
#include "treecalc/arith/poly.hpp"
#include "treecalc/arith/ring.hpp"
#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/combinat/trees.hpp"
#include "treecalc/errors.hpp"
#include "treecalc/series/binomial_poly.hpp"
#include "treecalc/wqsym/packed_word_ops.hpp"

namespace treecalc {

// Finite linear combination of M_u over packed words u.
template <Ring R>
class WQSymElement {
public:
    WQSymElement() = default;

    static WQSymElement basis_element(const PackedWord &u, const R &coeff = R{1})
    {
        WQSymElement x;
        x.add(u, coeff);
        return x;
    }
    static WQSymElement unit() { return basis_element(PackedWord()); }

    const LinearCombination<PackedWord, R> &terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add(const PackedWord &u, const R &coeff) { terms_.add(u, coeff); }
    R coefficient(const PackedWord &u) const { return terms_.coefficient(u); }

    // Keeps the terms with |u| <= max_length.
    WQSymElement truncated(std::size_t max_length) const
    {
        WQSymElement out;
        for (const auto &[u, c] : terms_) {
            if (u.size() <= max_length) {
                out.add(u, c);
            }
        }
        return out;
    }

    template <class F>
    WQSymElement map_coefficients(F &&f) const
    {
        WQSymElement out;
        for (const auto &[u, c] : terms_) {
            out.add(u, f(c));
        }
        return out;
    }

    WQSymElement &operator+=(const WQSymElement &o)
    {
        terms_ += o.terms_;
        return *this;
    }
    WQSymElement &operator-=(const WQSymElement &o)
    {
        terms_ -= o.terms_;
        return *this;
    }
    friend WQSymElement operator+(WQSymElement a, const WQSymElement &b) { return a += b; }
    friend WQSymElement operator-(WQSymElement a, const WQSymElement &b) { return a -= b; }

    WQSymElement scaled(const R &c) const
    {
        WQSymElement out;
        out.terms_ = terms_.scaled(c);
        return out;
    }

    friend bool operator==(const WQSymElement &, const WQSymElement &) = default;

private:
    LinearCombination<PackedWord, R> terms_;
};

namespace detail {

template <Ring R, class BasisOp>
WQSymElement<R> extend_bilinear(const WQSymElement<R> &x, const WQSymElement<R> &y,
                                std::optional<std::size_t> max_length, BasisOp &&op)
{
    WQSymElement<R> out;
    for (const auto &[a, ca] : x) {
        for (const auto &[b, cb] : y) {
            if (max_length && a.size() + b.size() > *max_length) {
                continue;
            }
            const R c = ca * cb;
            for (const auto &w : op(a, b)) {
                out.add(w, c);
            }
        }
    }
    return out;
}

template <Ring R>
void require_augmentation(const WQSymElement<R> &x, const char *op)
{
    for (const auto &[u, c] : x) {
        if (u.empty()) {
            throw EmptyOperand(std::string(op) + " is undefined on the unit");
        }
    }
}

} // namespace detail

// M_a M_b = sum of M_w over w in a ⋆ b. With max_length, longer terms are skipped.
template <Ring R>
WQSymElement<R> product(const WQSymElement<R> &x, const WQSymElement<R> &y,
                        std::optional<std::size_t> max_length = std::nullopt)
{
    return detail::extend_bilinear(x, y, max_length,
                                   [](const PackedWord &a, const PackedWord &b) { return packed_convolve(a, b); });
}

template <Ring R>
WQSymElement<R> prec(const WQSymElement<R> &x, const WQSymElement<R> &y)
{
    detail::require_augmentation(x, "prec");
    detail::require_augmentation(y, "prec");
    return detail::extend_bilinear(x, y, std::nullopt, [](const PackedWord &a, const PackedWord &b) {
        return tridendriform_split(a, b).prec;
    });
}

template <Ring R>
WQSymElement<R> circ(const WQSymElement<R> &x, const WQSymElement<R> &y)
{
    detail::require_augmentation(x, "circ");
    detail::require_augmentation(y, "circ");
    return detail::extend_bilinear(x, y, std::nullopt, [](const PackedWord &a, const PackedWord &b) {
        return tridendriform_split(a, b).circ;
    });
}

template <Ring R>
WQSymElement<R> succ(const WQSymElement<R> &x, const WQSymElement<R> &y)
{
    detail::require_augmentation(x, "succ");
    detail::require_augmentation(y, "succ");
    return detail::extend_bilinear(x, y, std::nullopt, [](const PackedWord &a, const PackedWord &b) {
        return tridendriform_split(a, b).succ;
    });
}

// δM_u = M_u' with every occurrence of max(u) erased; δ(unit) = 0.
template <Ring R>
WQSymElement<R> delta(const WQSymElement<R> &x)
{
    WQSymElement<R> out;
    for (const auto &[u, c] : x) {
        if (!u.empty()) {
            out.add(erase_max_letter(u), c);
        }
    }
    return out;
}

// F_k(x_1, ..., x_k), multilinear; on basis words the sum of M_w over
// w = w_1 m w_2 m ... m w_k. Arguments are expanded left to right.
template <Ring R>
WQSymElement<R> f_k(std::span<const WQSymElement<R>> args)
{
    if (args.empty()) {
        throw std::invalid_argument("f_k needs at least one argument");
    }
    WQSymElement<R> out;
    std::vector<PackedWord> words(args.size());
    const auto recurse = [&](const auto &self, std::size_t i, const R &coeff) -> void {
        if (i == args.size()) {
            for (const auto &w : sandwich(std::span<const PackedWord>(words))) {
                out.add(w, coeff);
            }
            return;
        }
        for (const auto &[u, c] : args[i]) {
            words[i] = u;
            self(self, i + 1, coeff * c);
        }
    };
    recurse(recurse, 0, R{1});
    return out;
}

// ψ(M_u) = C(t, max(u)).
template <Ring R>
BinomialPoly<R> psi(const WQSymElement<R> &x)
{
    BinomialPoly<R> out;
    for (const auto &[u, c] : x) {
        out.add(static_cast<std::size_t>(u.max_letter()), c);
    }
    return out;
}

// Sum of M_u over packed words of length n with plane_tree_of_word(u) = t.
template <Ring R = Rational>
WQSymElement<R> tree_fiber_element(const PlaneTree &t, std::size_t n, bool allow_large = false)
{
    check_size_guard(Family::PackedWords, n, allow_large);
    WQSymElement<R> out;
    if (t.leaf_count() != n + 1) {
        return out;
    }
    for_each_packed_word(n, [&](const PackedWord &u) {
        if (plane_tree_of_word(u.letters()) == t) {
            out.add(u, R{1});
        }
    });
    return out;
}

// X_N = sum over |u| <= N of q^|u| M_u.
inline WQSymElement<QPoly> x_element_q(std::size_t max_length)
{
    WQSymElement<QPoly> out;
    for (std::size_t n = 0; n <= max_length; ++n) {
        for_each_packed_word(n, [&](const PackedWord &u) { out.add(u, QPoly::monomial(n)); });
    }
    return out;
}

// {"terms":[{"word":"1121","coeff":"1"},...]}
template <Ring R>
nlohmann::json to_json(const WQSymElement<R> &x)
{
    auto terms = nlohmann::json::array();
    for (const auto &[u, c] : x) {
        terms.push_back({{"word", u.to_string()}, {"coeff", c.to_string()}});
    }
    return {{"terms", std::move(terms)}};
}

} // namespace treecalc
