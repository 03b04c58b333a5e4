#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/errors.hpp"
#include "treecalc/identities/functional.hpp"
#include "treecalc/identities/plane.hpp"
#include "treecalc/series/fixed_point.hpp"
#include "treecalc/series/qfactorial_series.hpp"

using namespace treecalc;

namespace {

Rational hook_product(const std::string &encoding)
{
    Rational p(1);
    for (std::size_t h : oracle::hooks_of_encoding(encoding)) {
        p *= Rational(h);
    }
    return p;
}

} // namespace

TEST(FixedPoint, InverseLinearSumsToGeometricSeries)
{
    const auto one = RationalSeries::constant(Rational(1), 8);
    const auto e = fixed_point_binary(inverse_linear_op(), one, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(e.sum()[n], Rational(1)) << n;
    }
    EXPECT_EQ(e.tree_count(), 1u + 1 + 2 + 5 + 14 + 42 + 132 + 429 + 1430);
    EXPECT_EQ(picard_binary(inverse_linear_op(), one, 8), e.sum());
}

TEST(FixedPoint, InverseLinearTreeTermsAreHookQuotients)
{
    const auto one = RationalSeries::constant(Rational(1), 7);
    const auto e = fixed_point_binary(inverse_linear_op(), one, 7);
    for (const auto &term : e.terms()) {
        const std::size_t n = term.tree.size();
        ASSERT_EQ(term.term.valuation().value_or(n), n);
        if (n > 0) {
            EXPECT_EQ(term.term[n], Rational(1) / hook_product(term.tree.encode())) << term.tree.encode();
        }
    }
}

TEST(FixedPoint, WorkedTreeGivesQuarticOverEight)
{
    BinaryTermEvaluator<RationalSeries> eval(inverse_linear_op(), RationalSeries::constant(Rational(1), 5));
    const auto value = eval(BinaryTree::parse("((_,_),((_,_),_))"));
    EXPECT_EQ(value, RationalSeries::monomial(4, 5, Rational(BigInt(1), BigInt(8))));
    EXPECT_EQ(eval(BinaryTree::parse("((_,_),_)")), RationalSeries::monomial(2, 5, Rational(BigInt(1), BigInt(2))));
}

TEST(FixedPoint, PostnikovTreeTerms)
{
    const auto one = RationalSeries::constant(Rational(1), 6);
    const auto e = fixed_point_binary(postnikov_op(), one, 6);
    for (const auto &term : e.terms()) {
        const std::size_t n = term.tree.size();
        Rational expected(1);
        for (std::size_t h : oracle::hooks_of_encoding(term.tree.encode())) {
            expected *= Rational(1) + Rational(BigInt(1), BigInt(h));
            expected /= Rational(2);
        }
        EXPECT_EQ(term.term, RationalSeries::monomial(n, 6, expected)) << term.tree.encode();
    }
    EXPECT_EQ(picard_binary(postnikov_op(), one, 6), e.sum());
}

TEST(FixedPoint, RejectsOperatorsThatDoNotRaiseValuation)
{
    const BinaryOp<RationalSeries> bad = [](const RationalSeries &x, const RationalSeries &y) { return x * y; };
    EXPECT_THROW(fixed_point_binary(bad, RationalSeries::constant(Rational(1), 3), 3), ValuationViolation);
    const MultiOp<RationalSeries> bad_multi = [](std::span<const RationalSeries> xs) { return xs[0]; };
    EXPECT_THROW(fixed_point_mary(2, bad_multi, RationalSeries::constant(Rational(1), 3), 3), ValuationViolation);
    const PlaneFamily<RationalSeries> weak = [](std::size_t, std::span<const RationalSeries> xs) {
        return xs[0].shifted(1);
    };
    EXPECT_THROW(fixed_point_plane(weak, RationalSeries::constant(Rational(1), 3), 3), ValuationViolation);
}

TEST(FixedPoint, QBilinearSolvesQDifferentialEquation)
{
    const std::size_t order = 6;
    const BinaryOp<QFactorialSeries> op = [](const QFactorialSeries &f, const QFactorialSeries &g) {
        return q_bilinear(f, g);
    };
    const auto one = QFactorialSeries::constant(QPoly(1), order);
    const auto e = fixed_point_binary(op, one, order);
    const QFactorialSeries x = e.sum();
    EXPECT_EQ(q_derivative(x).truncated(order - 1), (x * substitute_qt(x)).truncated(order - 1));
    EXPECT_EQ(picard_binary(op, one, order), x);
    // q = 1 collapses to 1/(1-t).
    for (std::size_t n = 0; n <= order; ++n) {
        EXPECT_EQ(x.at_q_one()[n], Rational(1));
    }
}

TEST(FixedPoint, DuLiuTreeTermsMatchClosedForm)
{
    const std::size_t m = 2;
    const std::size_t order = 4;
    const AlphaPoly alpha = AlphaPoly::variable();
    const auto one = AlphaSeries::constant(AlphaPoly(1), order);
    const auto e = fixed_point_mary(m, duliu_op(m), one, order);
    EXPECT_EQ(e.tree_count(), 1u + 1 + 3 + 12 + 55);
    for (const auto &term : e.terms()) {
        const std::size_t n = term.tree.size();
        AlphaPoly expected(1);
        for (std::size_t h : oracle::hooks_of_encoding(term.tree.encode())) {
            const Rational hr(h);
            expected = expected * (alpha * Rational(m * h + 1) + AlphaPoly(Rational(1) - hr)) /
                       (Rational(m + 1) * hr);
        }
        EXPECT_EQ(term.term, AlphaSeries::monomial(n, order, expected)) << term.tree.encode();
    }
    EXPECT_EQ(picard_mary(m, duliu_op(m), one, order), e.sum());
}

TEST(FixedPoint, PlaneQDifferenceEquation)
{
    const std::size_t order = 5;
    const auto one = PlaneSeries::constant(BinomialPoly<Rational>(1), order);
    const auto e = fixed_point_plane(plane_q_family(), one, order);
    EXPECT_TRUE(plane_q_difference_equation_holds(e.sum()));
    EXPECT_EQ(picard_plane(plane_q_family(), one, order), e.sum());
    std::uint64_t trees = 0;
    for (std::size_t n = 0; n <= order; ++n) {
        trees += count(Family::PlaneTrees, n, 1, false);
    }
    EXPECT_EQ(e.tree_count(), trees);
    // The q^n coefficient counts packed words of length n by max letter.
    EXPECT_EQ(e.sum()[3].to_string(), "C(t,1)+6*C(t,2)+6*C(t,3)");
}

TEST(FixedPoint, ExpansionJson)
{
    const auto e = fixed_point_binary(inverse_linear_op(), RationalSeries::constant(Rational(1), 2), 2);
    const auto j = expansion_to_json(e);
    EXPECT_EQ(j["sum"], nlohmann::json({"1", "1", "1"}));
    EXPECT_EQ(j["tree_count"], 4);
    ASSERT_EQ(j["terms"].size(), 4u);
    EXPECT_EQ(j["terms"][0]["tree"], "_");
    EXPECT_EQ(j["terms"][1]["term"], nlohmann::json({"0", "1", "0"}));
}
