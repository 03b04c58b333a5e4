#pragma once

#include <cstddef>
#include <string_view>

#include "treecalc/arith/poly.hpp"
#include "treecalc/arith/rational.hpp"
#include "treecalc/identities/report.hpp"
#include "treecalc/series/fixed_point.hpp"
#include "treecalc/series/truncated_series.hpp"

namespace treecalc {

using RationalSeries = TruncatedSeries<Rational>;
using AlphaSeries = TruncatedSeries<AlphaPoly>;

// B(x, y) = ∫ x y; x = 1 + B(x, x) is solved by 1/(1-t).
BinaryOp<RationalSeries> inverse_linear_op();

// B(x, y) = t x y / 2 + (1/2) ∫ x y; x = 1 + B(x, x) is solved by
// g(t) = sum (n+1)^(n-1) t^n / n!.
BinaryOp<RationalSeries> postnikov_op();

// F(x_0, ..., x_m) = (αm-1)/(m+1) t prod x + (α+1)/(m+1) ∫ prod x.
MultiOp<AlphaSeries> duliu_op(std::size_t m);

// Coefficients of g: (n+1)^(n-1) / n!.
RationalSeries eisenstein_series(std::size_t order);

// f(t) = sum C((mn+1)α, n) t^n / (mn+1).
AlphaSeries lagrange_series(std::size_t m, std::size_t order);

enum class DuLiuVariant { Las1, Las2, Las3 };
DuLiuVariant parse_duliu_variant(std::string_view name);
std::string_view duliu_variant_name(DuLiuVariant v);

// Left-hand sides: sums over trees with n nodes of the per-node products
//   las1: α + 1/h,   las2: ((h+1)α + 1 - h) / (2h),
//   las3: ((mh+1)α + 1 - h) / ((m+1)h) over (m+1)-ary trees.
AlphaPoly las1_lhs(std::size_t n);
AlphaPoly las2_lhs(std::size_t n);
AlphaPoly las3_lhs(std::size_t n, std::size_t m);

// Right-hand sides:
//   las1: prod_{i<n} ((n+1+i)α + n+1-i) / (n+1)!
//   las2: C((n+1)α, n) / (n+1),   las3: C((mn+1)α, n) / (mn+1).
AlphaPoly las1_rhs(std::size_t n);
AlphaPoly las2_rhs(std::size_t n);
AlphaPoly las3_rhs(std::size_t n, std::size_t m);

// Rewrites p(a) of degree <= n into 2^-n sum c_j (α-1)^j (α+1)^(n-j), i.e.
// λ^n p((α-1)/(α+1)) with λ = (α+1)/2. Maps the las1 sides onto the las2 sides.
AlphaPoly homogenize_las1(const AlphaPoly &p, std::size_t n);

// (n+1)^(n-1) against n!/2^n sum over binary trees of prod (1 + 1/h_v),
// cross-checked per tree by the series route.
IdentityReport postnikov_check(std::size_t n, bool allow_large = false, bool per_tree = false);

// Explicit coefficients vs. the tree expansion of x = 1 + B(x, x); also the
// residual of g = exp(t g) and the Picard iterate.
IdentityReport eisenstein_check(std::size_t order, bool allow_large = false);

// Throws VariantArityMismatch when las1/las2 are asked for m != 1.
IdentityReport duliu_check(DuLiuVariant variant, std::size_t n, std::size_t m, bool allow_large = false,
                           bool per_tree = false);

// las1 and las2 compared with each other through homogenize_las1.
IdentityReport duliu_cross_check(std::size_t n, bool allow_large = false);

// Residual of f = (1 + t f^m)^α, and f against the (m+1)-ary tree expansion.
IdentityReport lagrange_fixed_point_check(std::size_t m, std::size_t order, bool allow_large = false);

// Largest parameters accepted without an override.
inline constexpr std::size_t postnikov_guard = 12;
inline constexpr std::size_t eisenstein_guard = 10;
inline constexpr std::size_t duliu_binary_guard = 7;
inline constexpr std::size_t duliu_mary_guard = 5;
inline constexpr std::size_t duliu_max_m = 3;
inline constexpr std::size_t lagrange_max_m = 3;
inline constexpr std::size_t lagrange_guard = 8;

} // namespace treecalc
