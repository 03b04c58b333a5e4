#include "treecalc/series/qfactorial_series.hpp"

#include <algorithm>

#include "treecalc/arith/qanalog.hpp"

namespace treecalc {

QFactorialSeries::QFactorialSeries(std::vector<QPoly> numerators) : num_(std::move(numerators))
{
    if (num_.empty()) {
        num_.emplace_back();
    }
}

QFactorialSeries QFactorialSeries::monomial(std::size_t power, std::size_t order)
{
    QFactorialSeries s(order);
    if (power <= order) {
        s.num_[power] = q_factorial(static_cast<unsigned>(power));
    }
    return s;
}

QFactorialSeries QFactorialSeries::constant(const QPoly &c, std::size_t order)
{
    QFactorialSeries s(order);
    s.num_[0] = c;
    return s;
}

std::optional<std::size_t> QFactorialSeries::valuation() const
{
    for (std::size_t n = 0; n < num_.size(); ++n) {
        if (!num_[n].is_zero()) {
            return n;
        }
    }
    return std::nullopt;
}

QFactorialSeries QFactorialSeries::truncated(std::size_t order) const
{
    std::vector<QPoly> c(order + 1);
    std::copy_n(num_.begin(), std::min(c.size(), num_.size()), c.begin());
    return QFactorialSeries(std::move(c));
}

QFactorialSeries &QFactorialSeries::operator+=(const QFactorialSeries &o)
{
    num_.resize(std::min(num_.size(), o.num_.size()));
    for (std::size_t n = 0; n < num_.size(); ++n) {
        num_[n] += o.num_[n];
    }
    return *this;
}

QFactorialSeries &QFactorialSeries::operator-=(const QFactorialSeries &o)
{
    num_.resize(std::min(num_.size(), o.num_.size()));
    for (std::size_t n = 0; n < num_.size(); ++n) {
        num_[n] -= o.num_[n];
    }
    return *this;
}

QFactorialSeries operator*(const QFactorialSeries &a, const QFactorialSeries &b)
{
    const std::size_t order = std::min(a.order(), b.order());
    QFactorialSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.num_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!b.num_[j].is_zero()) {
                s.num_[i + j] += a.num_[i] * b.num_[j] * q_binomial(static_cast<unsigned>(i + j), static_cast<int>(i));
            }
        }
    }
    return s;
}

QFactorialSeries QFactorialSeries::scaled(const QPoly &c) const
{
    QFactorialSeries s(order());
    for (std::size_t n = 0; n < num_.size(); ++n) {
        s.num_[n] = num_[n] * c;
    }
    return s;
}

TruncatedSeries<Rational> QFactorialSeries::at_q_one() const
{
    TruncatedSeries<Rational> s(order());
    for (std::size_t n = 0; n < num_.size(); ++n) {
        s.set(n, num_[n].evaluate(1) / Rational(factorial(static_cast<unsigned>(n))));
    }
    return s;
}

std::string QFactorialSeries::coefficient_string(std::size_t n) const
{
    if (num_[n].is_zero() || n <= 1) {
        return num_[n].to_string();
    }
    return "(" + num_[n].to_string() + ")/[" + std::to_string(n) + "]_q!";
}

QFactorialSeries substitute_qt(const QFactorialSeries &f)
{
    std::vector<QPoly> c(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n) {
        c[n] = f.numerator(n).shifted(n);
    }
    return QFactorialSeries(std::move(c));
}

QFactorialSeries q_derivative(const QFactorialSeries &f)
{
    // [n]_q t^(n-1) a / [n]_q! = t^(n-1) a / [n-1]_q!
    std::vector<QPoly> c(f.order() + 1);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        c[n - 1] = f.numerator(n);
    }
    return QFactorialSeries(std::move(c));
}

QFactorialSeries q_integrate(const QFactorialSeries &f)
{
    // t^(n+1) a / ([n]_q! [n+1]_q) = t^(n+1) a / [n+1]_q!
    std::vector<QPoly> c(f.order() + 1);
    for (std::size_t n = 0; n < f.order(); ++n) {
        c[n + 1] = f.numerator(n);
    }
    return QFactorialSeries(std::move(c));
}

QFactorialSeries q_bilinear(const QFactorialSeries &f, const QFactorialSeries &g)
{
    return q_integrate(f * substitute_qt(g));
}

} // namespace treecalc
