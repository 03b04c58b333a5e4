#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treecalc/arith/rational.hpp"
#include "treecalc/errors.hpp"

namespace treecalc {

struct QVariable {
    static constexpr std::string_view name = "q";
};

struct AlphaVariable {
    static constexpr std::string_view name = "\xce\xb1"; // α
};

// Dense univariate polynomial with rational coefficients, lowest degree first.
// The variable tag keeps q-polynomials and α-polynomials from mixing.
// Canonical form: no trailing zero coefficient; the zero polynomial is empty.
template <class Var>
class Poly {
public:
    Poly() = default;

    Poly(const Rational &constant) // NOLINT(google-explicit-constructor)
    {
        if (!constant.is_zero()) {
            coeffs_.push_back(constant);
        }
    }

    template <std::integral I>
    Poly(I constant) : Poly(Rational(constant)) // NOLINT(google-explicit-constructor)
    {
    }

    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(1); }

    static Poly monomial(std::size_t power, const Rational &coeff = Rational(1))
    {
        Poly p;
        if (!coeff.is_zero()) {
            p.coeffs_.assign(power + 1, Rational());
            p.coeffs_[power] = coeff;
        }
        return p;
    }

    static constexpr std::string_view variable_name() { return Var::name; }

    // Empty for the zero polynomial.
    std::optional<std::size_t> degree() const
    {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }

    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
    const std::vector<Rational> &coefficients() const { return coeffs_; }

    Rational evaluate(const Rational &x) const
    {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    // Same polynomial times var^k.
    Poly shifted(std::size_t k) const
    {
        if (is_zero() || k == 0) {
            return *this;
        }
        Poly p;
        p.coeffs_.assign(k, Rational());
        p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return p;
    }

    // Drops every monomial of degree > max_degree.
    Poly truncated(std::size_t max_degree) const
    {
        if (coeffs_.size() <= max_degree + 1) {
            return *this;
        }
        return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(max_degree + 1)));
    }

    Poly &operator+=(const Poly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Poly &operator-=(const Poly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Poly &operator*=(const Rational &c)
    {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto &x : coeffs_) {
            x *= c;
        }
        return *this;
    }

    Poly &operator/=(const Rational &c)
    {
        for (auto &x : coeffs_) {
            x /= c;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
    friend Poly operator*(const Rational &c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Rational &c) { return a /= c; }
    template <std::integral I>
    friend Poly operator*(Poly a, I c)
    {
        return a *= Rational(c);
    }
    template <std::integral I>
    friend Poly operator*(I c, Poly a)
    {
        return a *= Rational(c);
    }

    Poly operator-() const
    {
        Poly p = *this;
        for (auto &x : p.coeffs_) {
            x = -x;
        }
        return p;
    }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (!b.coeffs_[j].is_zero()) {
                    out[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return Poly(std::move(out));
    }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }

    friend bool operator==(const Poly &, const Poly &) = default;

    // Ascending monomials, e.g. "q^2+q^3+q^4", "1/2-α+3*α^2"; "0" for zero.
    std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational &c = coeffs_[k];
            if (c.is_zero()) {
                continue;
            }
            std::string term;
            const bool negative = c.sign() < 0;
            const Rational magnitude = negative ? -c : c;
            if (k == 0) {
                term = magnitude.to_string();
            } else {
                if (!magnitude.is_one()) {
                    term = magnitude.to_string() + "*";
                }
                term += Var::name;
                if (k > 1) {
                    term += "^" + std::to_string(k);
                }
            }
            if (negative) {
                out += "-";
            } else if (!out.empty()) {
                out += "+";
            }
            out += term;
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << p.to_string(); }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

using QPoly = Poly<QVariable>;
using AlphaPoly = Poly<AlphaVariable>;

// Quotient of num by den when den divides num exactly.
// Throws NonExactDivision on a nonzero remainder and std::domain_error when den is zero.
template <class Var>
Poly<Var> exact_poly_div(const Poly<Var> &num, const Poly<Var> &den)
{
    if (den.is_zero()) {
        throw std::domain_error("exact_poly_div: zero divisor");
    }
    if (num.is_zero()) {
        return {};
    }
    const std::size_t dd = *den.degree();
    if (*num.degree() < dd) {
        throw NonExactDivision("exact_poly_div: " + num.to_string() + " is not divisible by " + den.to_string());
    }
    std::vector<Rational> rem = num.coefficients();
    const Rational &lead = den.coefficients().back();
    std::vector<Rational> quot(rem.size() - dd);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational c = rem[k + dd] / lead;
        quot[k] = c;
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k + j] -= c * den.coefficients()[j];
        }
    }
    for (std::size_t j = 0; j < dd; ++j) {
        if (!rem[j].is_zero()) {
            throw NonExactDivision("exact_poly_div: " + num.to_string() + " is not divisible by " + den.to_string());
        }
    }
    return Poly<Var>(std::move(quot));
}

} // namespace treecalc
