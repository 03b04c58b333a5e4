#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treecalc/arith/rational.hpp"
#include "treecalc/arith/ring.hpp"
#include "treecalc/series/truncated_series.hpp"

namespace treecalc {

// Polynomial in t written in the binomial basis { C(t, k) : k >= 0 }.
template <Ring R>
class BinomialPoly {
public:
    BinomialPoly() = default;

    // Constant polynomial c * C(t, 0).
    BinomialPoly(int c) // NOLINT(google-explicit-constructor)
    {
        add(0, R{c});
    }

    static BinomialPoly basis(std::size_t k, const R &coeff = R{1})
    {
        BinomialPoly p;
        p.add(k, coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const
    {
        if (c_.empty()) {
            return std::nullopt;
        }
        return c_.rbegin()->first;
    }
    R coefficient(std::size_t k) const
    {
        auto it = c_.find(k);
        return it == c_.end() ? R{} : it->second;
    }
    const std::map<std::size_t, R> &terms() const { return c_; }

    void add(std::size_t k, const R &coeff)
    {
        if (coeff.is_zero()) {
            return;
        }
        auto [it, inserted] = c_.try_emplace(k, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (it->second.is_zero()) {
                c_.erase(it);
            }
        }
    }

    BinomialPoly &operator+=(const BinomialPoly &o)
    {
        for (const auto &[k, v] : o.c_) {
            add(k, v);
        }
        return *this;
    }
    BinomialPoly &operator-=(const BinomialPoly &o)
    {
        for (const auto &[k, v] : o.c_) {
            add(k, -v);
        }
        return *this;
    }
    friend BinomialPoly operator+(BinomialPoly a, const BinomialPoly &b) { return a += b; }
    friend BinomialPoly operator-(BinomialPoly a, const BinomialPoly &b) { return a -= b; }
    BinomialPoly operator-() const
    {
        BinomialPoly p;
        for (const auto &[k, v] : c_) {
            p.c_.emplace(k, -v);
        }
        return p;
    }

    // C(t,i) C(t,j) = sum_{k=max(i,j)}^{i+j} C(k,i) C(i,k-j) C(t,k)
    friend BinomialPoly operator*(const BinomialPoly &a, const BinomialPoly &b)
    {
        BinomialPoly p;
        for (const auto &[i, x] : a.c_) {
            for (const auto &[j, y] : b.c_) {
                const R xy = x * y;
                for (std::size_t k = std::max(i, j); k <= i + j; ++k) {
                    const BigInt mult = binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) *
                                        binomial(static_cast<unsigned>(i), static_cast<unsigned>(k - j));
                    p.add(k, xy * Rational(mult));
                }
            }
        }
        return p;
    }

    friend BinomialPoly operator*(const BinomialPoly &a, const Rational &c)
    {
        BinomialPoly p;
        for (const auto &[k, v] : a.c_) {
            p.add(k, v * c);
        }
        return p;
    }

    friend BinomialPoly operator/(const BinomialPoly &a, const Rational &c)
        requires DivisibleRing<R>
    {
        BinomialPoly p;
        for (const auto &[k, v] : a.c_) {
            p.add(k, v / c);
        }
        return p;
    }

    // Value at a nonnegative integer t.
    R evaluate(unsigned t) const
    {
        R acc{};
        for (const auto &[k, v] : c_) {
            if (k <= t) {
                acc = acc + v * Rational(binomial(t, static_cast<unsigned>(k)));
            }
        }
        return acc;
    }

    friend bool operator==(const BinomialPoly &, const BinomialPoly &) = default;

    // e.g. "C(t,2)+6*C(t,3)+6*C(t,4)"
    std::string to_string() const
    {
        if (c_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto &[k, v] : c_) {
            std::string coeff = v.to_string();
            if (!out.empty()) {
                out += "+";
            }
            const std::string basis = "C(t," + std::to_string(k) + ")";
            if (coeff == "1") {
                out += basis;
            } else {
                out += (coeff.find_first_of("+-", 1) != std::string::npos ? "(" + coeff + ")" : coeff) + "*" + basis;
            }
        }
        return out;
    }

private:
    std::map<std::size_t, R> c_;
};

// Discrete integral: sum_{s=0}^{t-1} C(s,k) = C(t,k+1).
template <Ring R>
BinomialPoly<R> discrete_sum(const BinomialPoly<R> &p)
{
    BinomialPoly<R> out;
    for (const auto &[k, v] : p.terms()) {
        out.add(k + 1, v);
    }
    return out;
}

// Forward difference: Δ C(t,k) = C(t,k-1), Δ C(t,0) = 0.
template <Ring R>
BinomialPoly<R> finite_difference(const BinomialPoly<R> &p)
{
    BinomialPoly<R> out;
    for (const auto &[k, v] : p.terms()) {
        if (k > 0) {
            out.add(k - 1, v);
        }
    }
    return out;
}

// Stirling numbers of the second kind S(n, k) for 0 <= k <= n <= max_n.
std::vector<std::vector<BigInt>> stirling2_table(std::size_t max_n);

// t^n = sum_k S(n,k) k! C(t,k). Coefficient i of the input multiplies t^i.
template <Ring R>
BinomialPoly<R> monomial_to_binomial(const std::vector<R> &powers)
{
    const auto stirling = stirling2_table(powers.empty() ? 0 : powers.size() - 1);
    BinomialPoly<R> out;
    for (std::size_t n = 0; n < powers.size(); ++n) {
        if (powers[n].is_zero()) {
            continue;
        }
        for (std::size_t k = 0; k <= n; ++k) {
            const BigInt mult = stirling[n][k] * factorial(static_cast<unsigned>(k));
            if (mult != 0) {
                out.add(k, powers[n] * Rational(mult));
            }
        }
    }
    return out;
}

template <Ring R>
BinomialPoly<R> monomial_to_binomial(const TruncatedSeries<R> &powers)
{
    return monomial_to_binomial(powers.coefficients());
}

// Expands C(t,k) = t (t-1) ... (t-k+1) / k! into monomials; the result has
// order equal to the degree of p (0 for the zero polynomial).
template <DivisibleRing R>
TruncatedSeries<R> binomial_to_monomial(const BinomialPoly<R> &p)
{
    const std::size_t deg = p.degree().value_or(0);
    TruncatedSeries<R> out(deg);
    std::vector<R> acc(deg + 1);
    for (const auto &[k, v] : p.terms()) {
        // falling factorial t(t-1)...(t-k+1) as integer coefficients
        std::vector<BigInt> falling{1};
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<BigInt> next(falling.size() + 1, 0);
            for (std::size_t j = 0; j < falling.size(); ++j) {
                next[j + 1] += falling[j];
                next[j] -= falling[j] * static_cast<unsigned long>(i);
            }
            falling = std::move(next);
        }
        const Rational inv_fact = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
        for (std::size_t j = 0; j < falling.size(); ++j) {
            if (falling[j] != 0) {
                acc[j] = acc[j] + v * (Rational(falling[j]) * inv_fact);
            }
        }
    }
    return TruncatedSeries<R>(std::move(acc));
}

inline std::vector<std::vector<BigInt>> stirling2_table(std::size_t max_n)
{
    std::vector<std::vector<BigInt>> s(max_n + 1, std::vector<BigInt>(max_n + 1, 0));
    s[0][0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            s[n][k] = s[n - 1][k - 1] + s[n - 1][k] * static_cast<unsigned long>(k);
        }
    }
    return s;
}

} // namespace treecalc
