#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "treecalc/arith/poly.hpp"
#include "treecalc/arith/qanalog.hpp"
#include "treecalc/arith/ring.hpp"

namespace treecalc {

// Power series in t over R, truncated at t^order. Holds exactly order+1
// coefficients; arithmetic never produces terms beyond the order.
template <Ring R>
class TruncatedSeries {
public:
    using coefficient_type = R;

    explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}

    // Order is coeffs.size() - 1; an empty vector gives the zero series of order 0.
    explicit TruncatedSeries(std::vector<R> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) {
            c_.emplace_back();
        }
    }

    static TruncatedSeries monomial(std::size_t power, std::size_t order, const R &coeff = R{1})
    {
        TruncatedSeries s(order);
        if (power <= order) {
            s.c_[power] = coeff;
        }
        return s;
    }

    static TruncatedSeries constant(const R &c, std::size_t order) { return monomial(0, order, c); }

    std::size_t order() const { return c_.size() - 1; }
    const R &operator[](std::size_t n) const { return c_[n]; }
    R coefficient(std::size_t n) const { return n < c_.size() ? c_[n] : R{}; }
    const std::vector<R> &coefficients() const { return c_; }
    void set(std::size_t n, R value)
    {
        if (n < c_.size()) {
            c_[n] = std::move(value);
        }
    }

    // Lowest power with a nonzero coefficient; empty for the zero series.
    std::optional<std::size_t> valuation() const
    {
        for (std::size_t n = 0; n < c_.size(); ++n) {
            if (!c_[n].is_zero()) {
                return n;
            }
        }
        return std::nullopt;
    }

    bool is_zero() const { return !valuation().has_value(); }

    TruncatedSeries truncated(std::size_t order) const
    {
        std::vector<R> c(order + 1);
        std::copy_n(c_.begin(), std::min(c.size(), c_.size()), c.begin());
        return TruncatedSeries(std::move(c));
    }

    // Multiplies by t^k, keeping the order.
    TruncatedSeries shifted(std::size_t k) const
    {
        TruncatedSeries s(order());
        for (std::size_t n = 0; n + k <= order(); ++n) {
            s.c_[n + k] = c_[n];
        }
        return s;
    }

    TruncatedSeries scaled(const R &factor) const
    {
        TruncatedSeries s(order());
        for (std::size_t n = 0; n < c_.size(); ++n) {
            if (!c_[n].is_zero()) {
                s.c_[n] = c_[n] * factor;
            }
        }
        return s;
    }

    // Mixed orders combine to the smaller order.
    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t n = 0; n < c_.size(); ++n) {
            c_[n] = c_[n] + o.c_[n];
        }
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t n = 0; n < c_.size(); ++n) {
            c_[n] = c_[n] - o.c_[n];
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }

    TruncatedSeries operator-() const
    {
        TruncatedSeries s(order());
        for (std::size_t n = 0; n < c_.size(); ++n) {
            s.c_[n] = -c_[n];
        }
        return s;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        TruncatedSeries s(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= order; ++j) {
                if (!b.c_[j].is_zero()) {
                    s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
                }
            }
        }
        return s;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const Rational &c)
    {
        TruncatedSeries s(a.order());
        for (std::size_t n = 0; n < a.c_.size(); ++n) {
            s.c_[n] = a.c_[n] * c;
        }
        return s;
    }

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<R> c_;
};

// f^k, with f^0 = 1 at f's order.
template <Ring R>
TruncatedSeries<R> power(const TruncatedSeries<R> &f, std::size_t k)
{
    TruncatedSeries<R> out = TruncatedSeries<R>::constant(R{1}, f.order());
    for (std::size_t i = 0; i < k; ++i) {
        out = out * f;
    }
    return out;
}

// Term-wise antiderivative with zero constant term; the t^(order+1) term is dropped.
template <DivisibleRing R>
TruncatedSeries<R> integrate(const TruncatedSeries<R> &f)
{
    TruncatedSeries<R> s(f.order());
    for (std::size_t n = 0; n < f.order(); ++n) {
        if (!f[n].is_zero()) {
            s.set(n + 1, f[n] / Rational(n + 1));
        }
    }
    return s;
}

// Ordinary derivative; the result keeps the input order with a zero top coefficient.
template <Ring R>
TruncatedSeries<R> derivative(const TruncatedSeries<R> &f)
{
    TruncatedSeries<R> s(f.order());
    for (std::size_t n = 1; n <= f.order(); ++n) {
        s.set(n - 1, f[n] * Rational(n));
    }
    return s;
}

// f(qt): the t^n coefficient picks up q^n.
inline TruncatedSeries<QPoly> substitute_qt(const TruncatedSeries<QPoly> &f)
{
    TruncatedSeries<QPoly> s(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        s.set(n, f[n].shifted(n));
    }
    return s;
}

// D_q t^n = [n]_q t^(n-1).
inline TruncatedSeries<QPoly> q_derivative(const TruncatedSeries<QPoly> &f)
{
    TruncatedSeries<QPoly> s(f.order());
    for (std::size_t n = 1; n <= f.order(); ++n) {
        s.set(n - 1, f[n] * q_integer(static_cast<unsigned>(n)));
    }
    return s;
}

// exp(f) = sum f^k / k! for f without constant term.
template <DivisibleRing R>
TruncatedSeries<R> exp_series(const TruncatedSeries<R> &f)
{
    if (!f[0].is_zero()) {
        throw std::invalid_argument("exp_series: constant term must vanish");
    }
    TruncatedSeries<R> sum = TruncatedSeries<R>::constant(R{1}, f.order());
    TruncatedSeries<R> term = sum;
    for (std::size_t k = 1; k <= f.order(); ++k) {
        term = (term * f) * (Rational(1) / Rational(k));
        sum += term;
    }
    return sum;
}

// Generalized binomial coefficient C(beta, k) = beta (beta-1) ... (beta-k+1) / k!.
inline AlphaPoly generalized_binomial(const AlphaPoly &beta, std::size_t k)
{
    AlphaPoly out(1);
    for (std::size_t i = 0; i < k; ++i) {
        out = out * (beta - AlphaPoly(Rational(i))) / Rational(i + 1);
    }
    return out;
}

// (1+u)^beta = sum_k C(beta, k) u^k for beta of degree <= 1 in α and u
// without constant term.
inline TruncatedSeries<AlphaPoly> binomial_series(const AlphaPoly &beta, const TruncatedSeries<AlphaPoly> &u)
{
    if (beta.degree().value_or(0) > 1) {
        throw std::invalid_argument("binomial_series: exponent must be linear in alpha");
    }
    if (!u[0].is_zero()) {
        throw std::invalid_argument("binomial_series: u must have zero constant term");
    }
    TruncatedSeries<AlphaPoly> sum = TruncatedSeries<AlphaPoly>::constant(AlphaPoly(1), u.order());
    TruncatedSeries<AlphaPoly> u_power = sum;
    for (std::size_t k = 1; k <= u.order(); ++k) {
        u_power = u_power * u;
        sum += u_power.scaled(generalized_binomial(beta, k));
    }
    return sum;
}

} // namespace treecalc
