#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "treecalc/algebra/linear_combination.hpp"
#include "treecalc/arith/poly.hpp"
#include "treecalc/arith/qanalog.hpp"
#include "treecalc/arith/ring.hpp"
#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/combinat/trees.hpp"
#include "treecalc/combinat/words.hpp"
#include "treecalc/errors.hpp"
#include "treecalc/fqsym/permutation_ops.hpp"
#include "treecalc/series/qfactorial_series.hpp"
#include "treecalc/series/truncated_series.hpp"

namespace treecalc {

// F_σ = G_{σ^-1}.
enum class Basis { G, F };

inline const char *basis_name(Basis b) { return b == Basis::G ? "G" : "F"; }

// Finite linear combination of G_σ or F_σ. Degree is the size of σ.
template <Ring R>
class FQSymElement {
public:
    explicit FQSymElement(Basis b = Basis::G) : basis_(b) {}

    static FQSymElement basis_element(Basis b, const Permutation &p, const R &coeff = R{1})
    {
        FQSymElement x(b);
        x.add(p, coeff);
        return x;
    }
    static FQSymElement unit(Basis b = Basis::G) { return basis_element(b, Permutation()); }

    Basis basis() const { return basis_; }
    const LinearCombination<Permutation, R> &terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add(const Permutation &p, const R &coeff) { terms_.add(p, coeff); }
    R coefficient(const Permutation &p) const { return terms_.coefficient(p); }

    // Largest degree present; empty for zero.
    std::optional<std::size_t> max_degree() const
    {
        std::optional<std::size_t> d;
        for (const auto &[p, c] : terms_) {
            if (!d || p.size() > *d) {
                d = p.size();
            }
        }
        return d;
    }

    FQSymElement homogeneous_component(std::size_t n) const
    {
        FQSymElement out(basis_);
        for (const auto &[p, c] : terms_) {
            if (p.size() == n) {
                out.add(p, c);
            }
        }
        return out;
    }

    // Drops every term of degree > max_degree.
    FQSymElement truncated(std::size_t max_degree) const
    {
        FQSymElement out(basis_);
        for (const auto &[p, c] : terms_) {
            if (p.size() <= max_degree) {
                out.add(p, c);
            }
        }
        return out;
    }

    FQSymElement &operator+=(const FQSymElement &o)
    {
        require_same_basis(o, "sum");
        terms_ += o.terms_;
        return *this;
    }
    FQSymElement &operator-=(const FQSymElement &o)
    {
        require_same_basis(o, "difference");
        terms_ -= o.terms_;
        return *this;
    }
    friend FQSymElement operator+(FQSymElement a, const FQSymElement &b) { return a += b; }
    friend FQSymElement operator-(FQSymElement a, const FQSymElement &b) { return a -= b; }

    FQSymElement scaled(const R &c) const
    {
        FQSymElement out(basis_);
        out.terms_ = terms_.scaled(c);
        return out;
    }

    friend bool operator==(const FQSymElement &, const FQSymElement &) = default;

    void require_basis(Basis b, const char *op) const
    {
        if (basis_ != b) {
            throw BasisMismatch(std::string(op) + " needs the " + basis_name(b) + " basis, got " + basis_name(basis_));
        }
    }
    void require_same_basis(const FQSymElement &o, const char *op) const
    {
        if (basis_ != o.basis_) {
            throw BasisMismatch(std::string(op) + " of elements in different bases");
        }
    }

private:
    Basis basis_;
    LinearCombination<Permutation, R> terms_;
};

// Same vector written in the other basis (σ -> σ^-1 on the labels).
template <Ring R>
FQSymElement<R> change_basis(const FQSymElement<R> &x)
{
    FQSymElement<R> out(x.basis() == Basis::G ? Basis::F : Basis::G);
    for (const auto &[p, c] : x) {
        out.add(p.inverse(), c);
    }
    return out;
}

template <Ring R>
FQSymElement<R> to_g_basis(const FQSymElement<R> &x)
{
    return x.basis() == Basis::G ? x : change_basis(x);
}

template <Ring R>
FQSymElement<R> to_f_basis(const FQSymElement<R> &x)
{
    return x.basis() == Basis::F ? x : change_basis(x);
}

namespace detail {

// Bilinear extension of a basis-level operation; terms of degree above
// max_degree are never formed.
template <Ring R, class BasisOp>
FQSymElement<R> extend_bilinear(const FQSymElement<R> &x, const FQSymElement<R> &y, Basis out_basis,
                                std::size_t extra_degree, std::optional<std::size_t> max_degree, BasisOp &&op)
{
    FQSymElement<R> out(out_basis);
    for (const auto &[a, ca] : x) {
        for (const auto &[b, cb] : y) {
            if (max_degree && a.size() + b.size() + extra_degree > *max_degree) {
                continue;
            }
            const R c = ca * cb;
            for (const auto &g : op(a, b)) {
                out.add(g, c);
            }
        }
    }
    return out;
}

template <Ring R>
void require_augmentation(const FQSymElement<R> &x, const char *op)
{
    for (const auto &[p, c] : x) {
        if (p.empty()) {
            throw EmptyOperand(std::string(op) + " is undefined on degree-0 terms");
        }
    }
}

} // namespace detail

// Product of FQSym. In the G basis this is the convolution; in the F basis the
// same product is the shifted shuffle.
template <Ring R>
FQSymElement<R> product(const FQSymElement<R> &x, const FQSymElement<R> &y,
                        std::optional<std::size_t> max_degree = std::nullopt)
{
    x.require_same_basis(y, "product");
    if (x.basis() == Basis::G) {
        return detail::extend_bilinear(x, y, Basis::G, 0, max_degree,
                                       [](const Permutation &a, const Permutation &b) { return convolve(a, b); });
    }
    return detail::extend_bilinear(x, y, Basis::F, 0, max_degree,
                                   [](const Permutation &a, const Permutation &b) { return shifted_shuffle(a, b); });
}

// x ≺ y: terms of the G-basis product whose maximal letter lies in the left factor.
template <Ring R>
FQSymElement<R> prec(const FQSymElement<R> &x, const FQSymElement<R> &y)
{
    x.require_basis(Basis::G, "prec");
    y.require_basis(Basis::G, "prec");
    detail::require_augmentation(x, "prec");
    detail::require_augmentation(y, "prec");
    return detail::extend_bilinear(x, y, Basis::G, 0, std::nullopt, [](const Permutation &a, const Permutation &b) {
        return half_products(a, b).prec;
    });
}

// x ≻ y: the maximal letter lies in the right factor.
template <Ring R>
FQSymElement<R> succ(const FQSymElement<R> &x, const FQSymElement<R> &y)
{
    x.require_basis(Basis::G, "succ");
    y.require_basis(Basis::G, "succ");
    detail::require_augmentation(x, "succ");
    detail::require_augmentation(y, "succ");
    return detail::extend_bilinear(x, y, Basis::G, 0, std::nullopt, [](const Permutation &a, const Permutation &b) {
        return half_products(a, b).succ;
    });
}

// B(G_a, G_b) = sum of G_{u (n+1) v}; its derivative is G_a G_b.
template <Ring R>
FQSymElement<R> bilinear_B(const FQSymElement<R> &x, const FQSymElement<R> &y,
                           std::optional<std::size_t> max_degree = std::nullopt)
{
    x.require_basis(Basis::G, "B");
    y.require_basis(Basis::G, "B");
    return detail::extend_bilinear(x, y, Basis::G, 1, max_degree,
                                   [](const Permutation &a, const Permutation &b) { return bilinear_B(a, b); });
}

// ∂G_σ = G_σ' with the letter n erased; on the F basis this reads
// ∂F_σ = F_{Std(σ without its last letter)}. Degree-0 terms vanish.
template <Ring R>
FQSymElement<R> derive(const FQSymElement<R> &x)
{
    FQSymElement<R> out(x.basis());
    for (const auto &[p, c] : x) {
        if (!p.empty()) {
            out.add(x.basis() == Basis::G ? erase_max(p) : drop_last(p), c);
        }
    }
    return out;
}

// B_T(1): the sum of G_σ over permutations whose decreasing tree is T.
template <Ring R = Rational>
FQSymElement<R> tree_term(const BinaryTree &t)
{
    if (t.empty()) {
        return FQSymElement<R>::unit(Basis::G);
    }
    return bilinear_B(tree_term<R>(t.left()), tree_term<R>(t.right()));
}

// X_N = sum of G_σ over all σ of size <= N.
template <Ring R = Rational>
FQSymElement<R> x_element(std::size_t max_degree, Basis b = Basis::G)
{
    FQSymElement<R> out(b);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        for_each_permutation(n, [&](const Permutation &p) { out.add(p, R{1}); });
    }
    return out;
}

// φ(G_σ) = t^n / n!. F_σ maps to the same value.
template <DivisibleRing R>
TruncatedSeries<R> phi(const FQSymElement<R> &x, std::size_t order)
{
    std::vector<R> c(order + 1);
    for (const auto &[p, coeff] : x) {
        if (p.size() <= order) {
            c[p.size()] = c[p.size()] + coeff / Rational(factorial(static_cast<unsigned>(p.size())));
        }
    }
    return TruncatedSeries<R>(std::move(c));
}

// φ_q(G_σ) = q^imaj(σ) t^n / [n]_q!. In the F basis imaj(σ^-1) = maj(σ).
inline QFactorialSeries phi_q(const FQSymElement<QPoly> &x, std::size_t order)
{
    std::vector<QPoly> num(order + 1);
    for (const auto &[p, c] : x) {
        if (p.size() <= order) {
            const int stat = x.basis() == Basis::G ? imaj(p) : maj(p);
            num[p.size()] += c.shifted(static_cast<std::size_t>(stat));
        }
    }
    return QFactorialSeries(std::move(num));
}

inline QFactorialSeries phi_q(const FQSymElement<Rational> &x, std::size_t order)
{
    FQSymElement<QPoly> lifted(x.basis());
    for (const auto &[p, c] : x) {
        lifted.add(p, QPoly(c));
    }
    return phi_q(lifted, order);
}

// Homomorphism of the q-deformed algebra: G_σ and F_σ both map to t^n / [n]_q!.
inline QFactorialSeries phi_q_deformed(const FQSymElement<QPoly> &x, std::size_t order)
{
    std::vector<QPoly> num(order + 1);
    for (const auto &[p, c] : x) {
        if (p.size() <= order) {
            num[p.size()] += c;
        }
    }
    return QFactorialSeries(std::move(num));
}

// Product of the q-deformed algebra on the F basis:
//   F_a F_b = sum over γ in a ⧢ b[k] of q^(inv γ - inv a - inv b) F_γ.
inline FQSymElement<QPoly> q_shuffle_product(const FQSymElement<QPoly> &x, const FQSymElement<QPoly> &y,
                                             std::optional<std::size_t> max_degree = std::nullopt)
{
    x.require_basis(Basis::F, "q-shuffle product");
    y.require_basis(Basis::F, "q-shuffle product");
    FQSymElement<QPoly> out(Basis::F);
    for (const auto &[a, ca] : x) {
        for (const auto &[b, cb] : y) {
            if (max_degree && a.size() + b.size() > *max_degree) {
                continue;
            }
            const QPoly c = ca * cb;
            const int base = inversions(a) + inversions(b);
            for (const auto &g : shifted_shuffle(a, b)) {
                out.add(g, c.shifted(static_cast<std::size_t>(inversions(g) - base)));
            }
        }
    }
    return out;
}

// G(A) -> G(qA): the degree-n component is multiplied by q^n.
inline FQSymElement<QPoly> scale_alphabet(const FQSymElement<QPoly> &x)
{
    FQSymElement<QPoly> out(x.basis());
    for (const auto &[p, c] : x) {
        out.add(p, c.shifted(p.size()));
    }
    return out;
}

// Kronecker pairing <F_σ, G_τ> = δ_{σ,τ}; the arguments may come in either order.
template <Ring R>
R pairing(const FQSymElement<R> &x, const FQSymElement<R> &y)
{
    if (x.basis() == y.basis()) {
        throw BasisMismatch("pairing needs one F-basis and one G-basis element");
    }
    R acc{};
    for (const auto &[p, c] : x) {
        const R d = y.coefficient(p);
        if (!d.is_zero()) {
            acc = acc + c * d;
        }
    }
    return acc;
}

// {"basis":"G","terms":[{"perm":"1423","coeff":"1"},...]}; polynomial
// coefficients are rendered with to_string.
template <Ring R>
nlohmann::json to_json(const FQSymElement<R> &x)
{
    auto terms = nlohmann::json::array();
    for (const auto &[p, c] : x) {
        terms.push_back({{"perm", p.to_string()}, {"coeff", c.to_string()}});
    }
    return {{"basis", basis_name(x.basis())}, {"terms", std::move(terms)}};
}

} // namespace treecalc
