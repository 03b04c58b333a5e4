#pragma once

#include <concepts>

#include "treecalc/arith/rational.hpp"

namespace treecalc {

// Coefficient rings shared by the series engine and the algebra modules.
// R{} is zero and R{1} is one; multiplication is assumed commutative.
template <class R>
concept Ring = std::regular<R> && std::constructible_from<R, int> &&
    requires(const R a, const R b, const Rational c) {
        { a + b } -> std::convertible_to<R>;
        { a - b } -> std::convertible_to<R>;
        { -a } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
        { a * c } -> std::convertible_to<R>;
        { a.is_zero() } -> std::same_as<bool>;
    };

// Rings that admit division by nonzero integers (needed by integration and exp).
template <class R>
concept DivisibleRing = Ring<R> && requires(const R a, const Rational c) {
    { a / c } -> std::convertible_to<R>;
};

} // namespace treecalc
