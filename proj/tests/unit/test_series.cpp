#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treecalc/arith/qanalog.hpp"
#include "treecalc/series/binomial_poly.hpp"
#include "treecalc/series/qfactorial_series.hpp"
#include "treecalc/series/truncated_series.hpp"

using namespace treecalc;

namespace {

using RSeries = TruncatedSeries<Rational>;

RSeries random_series(oracle::Gen &gen, std::size_t order)
{
    std::vector<Rational> c(order + 1);
    for (auto &x : c) {
        x = gen.uniform(0, 2) == 0 ? Rational(0) : gen.rational();
    }
    return RSeries(std::move(c));
}

Rational binom_rational(const Rational &t, std::size_t k)
{
    Rational r(1);
    for (std::size_t i = 0; i < k; ++i) {
        r = r * (t - Rational(i)) / Rational(i + 1);
    }
    return r;
}

} // namespace

TEST(TruncatedSeries, RingAxiomsOnRandomValues)
{
    oracle::Gen gen(21);
    for (int i = 0; i < 60; ++i) {
        const RSeries a = random_series(gen, 6);
        const RSeries b = random_series(gen, 6);
        const RSeries c = random_series(gen, 6);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(TruncatedSeries, OrderAndValuation)
{
    const RSeries t = RSeries::monomial(1, 4);
    EXPECT_EQ(t.order(), 4u);
    EXPECT_EQ(t.valuation(), 1u);
    EXPECT_EQ(power(t, 5).valuation(), std::nullopt);
    EXPECT_EQ(power(t, 4)[4], Rational(1));
    EXPECT_EQ((t + RSeries::constant(Rational(1), 2)).order(), 2u);
    EXPECT_EQ(t.shifted(2), RSeries::monomial(3, 4));
}

TEST(TruncatedSeries, CalculusAndExp)
{
    const RSeries t = RSeries::monomial(1, 8);
    const RSeries e = exp_series(t);
    for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(e[n], Rational(1) / oracle::factorial(static_cast<unsigned>(n)));
    }
    EXPECT_EQ(derivative(e).truncated(7), e.truncated(7));
    EXPECT_EQ(integrate(derivative(e)) + RSeries::constant(Rational(1), 8), e);
}

TEST(TruncatedSeries, GeneralizedBinomialSeries)
{
    // (1+t)^α at α = 3 is a cubic.
    const AlphaPoly alpha = AlphaPoly::variable();
    const auto u = TruncatedSeries<AlphaPoly>::monomial(1, 5);
    const auto s = binomial_series(alpha, u);
    const std::vector<int> expected = {1, 3, 3, 1, 0, 0};
    for (std::size_t n = 0; n <= 5; ++n) {
        EXPECT_EQ(s[n].evaluate(Rational(3)), Rational(expected[n]));
        EXPECT_EQ(s[n].evaluate(Rational(BigInt(1), BigInt(2))), binom_rational(Rational(BigInt(1), BigInt(2)), n));
    }
    EXPECT_EQ(generalized_binomial(alpha * 2, 1).to_string(), "2*α");
}

TEST(QFactorialSeries, QIntegral)
{
    const QFactorialSeries t = QFactorialSeries::monomial(1, 4);
    const QFactorialSeries integral = q_integrate(t);
    // t -> t^2 / [2]_q; numerators are over [2]_q! = [2]_q, so the numerator is 1.
    EXPECT_EQ(integral.numerator(2), QPoly(1));
    EXPECT_EQ(integral.coefficient_string(2), "(1)/[2]_q!");
    EXPECT_EQ(q_derivative(integral).truncated(3), t.truncated(3));
}

TEST(QFactorialSeries, MatchesRationalSeriesAtQOne)
{
    oracle::Gen gen(22);
    for (int i = 0; i < 40; ++i) {
        std::vector<QPoly> na(6), nb(6);
        for (std::size_t n = 0; n < 6; ++n) {
            na[n] = gen.poly<QVariable>(3);
            nb[n] = gen.poly<QVariable>(3);
        }
        const QFactorialSeries a(na), b(nb);
        EXPECT_EQ((a * b).at_q_one(), a.at_q_one() * b.at_q_one());
        EXPECT_EQ((a + b).at_q_one(), a.at_q_one() + b.at_q_one());
        EXPECT_EQ(q_derivative(q_integrate(a)).truncated(4), a.truncated(4));
        EXPECT_EQ(q_integrate(a).at_q_one(), integrate(a.at_q_one()));
    }
}

TEST(QFactorialSeries, SubstituteAndDerivative)
{
    // D_q f = (f(qt) - f(t)) / ((q-1) t): checked coefficientwise on t^n.
    for (std::size_t n = 1; n <= 6; ++n) {
        const QFactorialSeries tn = QFactorialSeries::monomial(n, 7);
        const QFactorialSeries d = q_derivative(tn);
        EXPECT_EQ(d, QFactorialSeries::monomial(n - 1, 7).scaled(q_integer(static_cast<unsigned>(n))));
        const QFactorialSeries sub = substitute_qt(tn);
        EXPECT_EQ(sub, tn.scaled(QPoly::monomial(n)));
    }
}

TEST(BinomialPoly, MonomialConversion)
{
    const std::vector<Rational> t2 = {0, 0, 1};
    EXPECT_EQ(monomial_to_binomial(t2).to_string(), "C(t,1)+2*C(t,2)");
    const std::vector<Rational> t3 = {0, 0, 0, 1};
    EXPECT_EQ(monomial_to_binomial(t3).to_string(), "C(t,1)+6*C(t,2)+6*C(t,3)");
}

TEST(BinomialPoly, DiscreteSumOfCube)
{
    const std::vector<Rational> t3 = {0, 0, 0, 1};
    const auto sum = discrete_sum(monomial_to_binomial(t3));
    EXPECT_EQ(sum, BinomialPoly<Rational>::basis(2) + BinomialPoly<Rational>::basis(3, 6) +
                       BinomialPoly<Rational>::basis(4, 6));
    EXPECT_EQ(sum.to_string(), "C(t,2)+6*C(t,3)+6*C(t,4)");
    // Oracle: sum_{s<t} s^3 directly.
    for (unsigned t = 0; t <= 10; ++t) {
        Rational acc;
        for (unsigned s = 0; s < t; ++s) {
            acc += Rational(s * s * s);
        }
        EXPECT_EQ(sum.evaluate(t), acc);
    }
}

TEST(BinomialPoly, BasisRoundTripToDegree12)
{
    oracle::Gen gen(23);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rational> c(13);
        for (auto &x : c) {
            x = gen.rational();
        }
        const RSeries mono(c);
        const auto bin = monomial_to_binomial(mono);
        const auto back = binomial_to_monomial(bin);
        ASSERT_LE(back.order(), 12u);
        for (std::size_t n = 0; n <= 12; ++n) {
            EXPECT_EQ(n <= back.order() ? back[n] : Rational(0), c[n]) << n;
        }
        for (unsigned t = 0; t <= 6; ++t) {
            Rational direct;
            Rational tp(1);
            for (std::size_t n = 0; n <= 12; ++n) {
                direct += c[n] * tp;
                tp *= Rational(t);
            }
            EXPECT_EQ(bin.evaluate(t), direct);
        }
    }
}

TEST(BinomialPoly, ProductAndDifferenceAgreeWithEvaluation)
{
    oracle::Gen gen(24);
    for (int i = 0; i < 40; ++i) {
        BinomialPoly<Rational> a, b;
        for (std::size_t k = 0; k <= 4; ++k) {
            a.add(k, gen.rational());
            b.add(k, gen.rational());
        }
        const auto prod = a * b;
        const auto diff = finite_difference(a);
        for (unsigned t = 0; t <= 10; ++t) {
            EXPECT_EQ(prod.evaluate(t), a.evaluate(t) * b.evaluate(t));
            EXPECT_EQ(diff.evaluate(t), a.evaluate(t + 1) - a.evaluate(t));
        }
        EXPECT_EQ(finite_difference(discrete_sum(a)), a);
    }
}
