#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace treecalc {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) // NOLINT(google-explicit-constructor): integers are rationals
        : value_(to_mpz(value))
    {
    }

    Rational(const BigInt &value) : value_(value) {} // NOLINT(google-explicit-constructor)

    // Throws std::domain_error if den == 0.
    Rational(const BigInt &num, const BigInt &den);

    // Accepts "p", "-p", "p/q". Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // "p/q", or "p" when q == 1.
    std::string to_string() const;

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    // Throws std::domain_error on division by zero.
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const
    {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

    const mpq_class &raw() const { return value_; }

private:
    template <std::integral I>
    static BigInt to_mpz(I value)
    {
        if constexpr (std::is_signed_v<I>) {
            return BigInt(static_cast<long>(value));
        } else {
            return BigInt(static_cast<unsigned long>(value));
        }
    }

    mpq_class value_{0};
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

} // namespace treecalc

template <>
struct std::hash<treecalc::Rational> {
    std::size_t operator()(const treecalc::Rational &r) const noexcept
    {
        return std::hash<std::string>{}(r.to_string());
    }
};
