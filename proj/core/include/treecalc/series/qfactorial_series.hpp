#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "treecalc/arith/poly.hpp"
#include "treecalc/series/truncated_series.hpp"

namespace treecalc {

// Series in t whose t^n coefficient is numerator(n) / [n]_q!.
//
// This is the shape of every image of the q-specialization, and it keeps
// q-series arithmetic inside QPoly: the product of two such coefficients is
// (a/[i]!)(b/[j]!) = a b [i+j choose i]_q / [i+j]!, and the q-integral,
// q-derivative and t -> qt substitution are all division-free.
class QFactorialSeries {
public:
    explicit QFactorialSeries(std::size_t order = 0) : num_(order + 1) {}
    explicit QFactorialSeries(std::vector<QPoly> numerators);

    // t^power at the given order (numerator [power]_q!).
    static QFactorialSeries monomial(std::size_t power, std::size_t order);
    static QFactorialSeries constant(const QPoly &c, std::size_t order);

    std::size_t order() const { return num_.size() - 1; }
    const QPoly &numerator(std::size_t n) const { return num_[n]; }
    const std::vector<QPoly> &numerators() const { return num_; }

    std::optional<std::size_t> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }
    QFactorialSeries truncated(std::size_t order) const;

    QFactorialSeries &operator+=(const QFactorialSeries &o);
    QFactorialSeries &operator-=(const QFactorialSeries &o);
    friend QFactorialSeries operator+(QFactorialSeries a, const QFactorialSeries &b) { return a += b; }
    friend QFactorialSeries operator-(QFactorialSeries a, const QFactorialSeries &b) { return a -= b; }
    friend QFactorialSeries operator*(const QFactorialSeries &a, const QFactorialSeries &b);
    QFactorialSeries scaled(const QPoly &c) const;

    friend bool operator==(const QFactorialSeries &, const QFactorialSeries &) = default;

    // Specialization q = 1: coefficient numerator(1) / n!.
    TruncatedSeries<Rational> at_q_one() const;

    // "num/[n]_q!" style rendering of one coefficient.
    std::string coefficient_string(std::size_t n) const;

private:
    std::vector<QPoly> num_;
};

// f(qt).
QFactorialSeries substitute_qt(const QFactorialSeries &f);
// D_q f = (f(qt) - f(t)) / (qt - t).
QFactorialSeries q_derivative(const QFactorialSeries &f);
// Linear, with t^n -> t^(n+1) / [n+1]_q; the top term is dropped.
QFactorialSeries q_integrate(const QFactorialSeries &f);
// B_q(f, g) = q-integral from 0 to t of f(s) g(qs).
QFactorialSeries q_bilinear(const QFactorialSeries &f, const QFactorialSeries &g);

} // namespace treecalc
