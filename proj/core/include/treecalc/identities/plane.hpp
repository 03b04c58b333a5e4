#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "treecalc/combinat/trees.hpp"
#include "treecalc/identities/report.hpp"
#include "treecalc/series/binomial_poly.hpp"
#include "treecalc/series/fixed_point.hpp"
#include "treecalc/series/truncated_series.hpp"

namespace treecalc {

// Series in q whose coefficients are polynomials in t (binomial basis).
using PlaneSeries = TruncatedSeries<BinomialPoly<Rational>>;

// F_k(x_1, ..., x_k) = q^(k-1) Σ_0^t x_1 ... x_k, applied to every
// q-coefficient. Satisfies val F_k >= sum of valuations + k - 1.
PlaneFamily<PlaneSeries> plane_q_family();

// F_T(1) in the binomial basis: the q^n coefficient of the plane-tree term
// for a tree with n+1 leaves.
BinomialPoly<Rational> plane_tree_polynomial(const PlaneTree &t);

// {k: c_k} with F_T(1) = sum c_k C(t, k). Throws NonIntegerResult if some
// coefficient is not a nonnegative integer.
std::map<std::size_t, std::uint64_t> ft_coefficients(const PlaneTree &t);

// For every packed word of length n, groups by (encoding of its plane tree,
// max letter). Honors the packed-word size guard.
std::map<std::string, std::map<std::size_t, std::uint64_t>> ft_bruteforce(std::size_t n, bool allow_large = false);

// ft_coefficients against ft_bruteforce for a single tree.
IdentityReport ft_check(const PlaneTree &t, bool allow_large = false);

// Δx = sum_{n>=2} q^(n-1) x^n for the plane expansion at the given q-order.
bool plane_q_difference_equation_holds(const PlaneSeries &x);

std::string ft_coefficients_string(const std::map<std::size_t, std::uint64_t> &c);

} // namespace treecalc
