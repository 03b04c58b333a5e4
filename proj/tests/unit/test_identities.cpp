#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treecalc/arith/qanalog.hpp"
#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/errors.hpp"
#include "treecalc/identities/functional.hpp"
#include "treecalc/identities/hook.hpp"
#include "treecalc/identities/plane.hpp"

using namespace treecalc;

namespace {

const BinaryTree hook_shape = BinaryTree::parse("((_,_),((_,_),_))");

AlphaPoly alpha() { return AlphaPoly::variable(); }

} // namespace

TEST(Hook, CountExamples)
{
    EXPECT_EQ(hook_count(hook_shape), Rational(3));
    EXPECT_THROW(hook_count(BinaryTree()), std::invalid_argument);
    Rational total;
    for_each_binary_tree(3, [&](const BinaryTree &t) { total += hook_count(t); });
    EXPECT_EQ(total, Rational(6));
}

TEST(Hook, QHookExamples)
{
    EXPECT_EQ(qhook_imaj(hook_shape), oracle::q_sum({2, 3, 4}));
    EXPECT_EQ(qhook_imaj(hook_shape).to_string(), "q^2+q^3+q^4");
    EXPECT_EQ(qhook_inv(hook_shape), oracle::q_sum({2, 3, 4}));
    // Oracle over the three labelings: imaj and inv of 1423, 2413, 3412.
    std::vector<int> imajs, invs;
    for (const char *s : {"1423", "2413", "3412"}) {
        const auto w = parse_word(s);
        imajs.push_back(oracle::imaj(w));
        invs.push_back(oracle::inv(w));
    }
    EXPECT_EQ(oracle::q_sum(imajs), qhook_imaj(hook_shape));
    EXPECT_EQ(oracle::q_sum(invs), qhook_inv(hook_shape));
}

TEST(Hook, FibersMatchIndependentOracle)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        std::map<std::string, std::vector<int>> imaj_by_shape, inv_by_shape;
        for (const auto &w : oracle::all_permutations(static_cast<int>(n))) {
            imaj_by_shape[oracle::decreasing_shape(w)].push_back(oracle::imaj(w));
            inv_by_shape[oracle::decreasing_shape(w)].push_back(oracle::inv(w));
        }
        const auto fibers = decreasing_tree_fibers(n);
        ASSERT_EQ(fibers.size(), imaj_by_shape.size());
        for (const auto &[shape, stats] : fibers) {
            EXPECT_EQ(stats.count, imaj_by_shape[shape].size());
            EXPECT_EQ(stats.imaj, oracle::q_sum(imaj_by_shape[shape]));
            EXPECT_EQ(stats.inv, oracle::q_sum(inv_by_shape[shape]));
            const BinaryTree t = BinaryTree::parse(shape);
            EXPECT_EQ(hook_count(t), Rational(stats.count));
            EXPECT_EQ(qhook_imaj(t).evaluate(Rational(1)), hook_count(t));
        }
    }
    EXPECT_THROW(decreasing_tree_fibers(13), SizeGuard);
}

TEST(Postnikov, SmallCases)
{
    const IdentityReport r = postnikov_check(2);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.lhs, "3");
    EXPECT_EQ(r.rhs, "3");
    const IdentityReport r5 = postnikov_check(5, false, true);
    EXPECT_TRUE(r5.passed());
    EXPECT_EQ(r5.lhs, "1296");
    ASSERT_TRUE(r5.per_tree.has_value());
    EXPECT_EQ(r5.per_tree->size(), 42u);
    EXPECT_THROW(postnikov_check(0), std::invalid_argument);
    EXPECT_THROW(postnikov_check(13), SizeGuard);
}

TEST(Eisenstein, Coefficients)
{
    const RationalSeries g = eisenstein_series(6);
    EXPECT_EQ(g[2], Rational(BigInt(3), BigInt(2)));
    EXPECT_EQ(g[4], Rational(BigInt(125), BigInt(24)));
    // Residual g - exp(t g) vanishes.
    EXPECT_TRUE((g - exp_series(g.shifted(1))).is_zero());
    const IdentityReport r = eisenstein_check(7);
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.cross_checks.at("exp_residual"));
    EXPECT_TRUE(r.cross_checks.at("picard"));
}

TEST(DuLiu, SingleNode)
{
    EXPECT_EQ(las2_lhs(1), alpha());
    EXPECT_EQ(las2_rhs(1), alpha());
    EXPECT_EQ(generalized_binomial(alpha() * 2, 1) / Rational(2), alpha());
    const IdentityReport r = duliu_check(DuLiuVariant::Las2, 1, 1);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.lhs, "α");
    EXPECT_EQ(r.rhs, "α");
}

TEST(DuLiu, Las1TwoNodes)
{
    // Two shapes with hooks {1,2}: 2 (α+1)(α+1/2), against (3α+3)(4α+2)/3!.
    const AlphaPoly a1 = alpha() + AlphaPoly(1);
    const AlphaPoly a2 = alpha() + AlphaPoly(Rational(BigInt(1), BigInt(2)));
    EXPECT_EQ(las1_lhs(2), a1 * a2 * Rational(2));
    EXPECT_EQ(las1_rhs(2), (alpha() * 3 + AlphaPoly(3)) * (alpha() * 4 + AlphaPoly(2)) / Rational(6));
    EXPECT_EQ(las1_lhs(2), las1_rhs(2));
}

TEST(DuLiu, VariantsAndHomogenization)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        EXPECT_EQ(homogenize_las1(las1_lhs(n), n), las2_lhs(n)) << n;
        EXPECT_EQ(homogenize_las1(las1_rhs(n), n), las2_rhs(n)) << n;
        EXPECT_TRUE(duliu_cross_check(n).passed()) << n;
        // At α = 1 las1 is the Postnikov sum 2^n (n+1)^(n-1) / n!.
        Rational expected = Rational(1) / oracle::factorial(static_cast<unsigned>(n));
        for (std::size_t i = 0; i < n; ++i) {
            expected *= Rational(2);
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            expected *= Rational(n + 1);
        }
        EXPECT_EQ(las1_lhs(n).evaluate(Rational(1)), expected) << n;
        EXPECT_EQ(las2_lhs(n).evaluate(Rational(1)), Rational(1)) << n;
    }
}

TEST(DuLiu, Las3)
{
    EXPECT_TRUE(duliu_check(DuLiuVariant::Las3, 4, 2).passed());
    EXPECT_TRUE(duliu_check(DuLiuVariant::Las3, 3, 3).passed());
    EXPECT_THROW(duliu_check(DuLiuVariant::Las1, 2, 2), VariantArityMismatch);
    EXPECT_THROW(duliu_check(DuLiuVariant::Las3, 2, 0), std::invalid_argument);
    EXPECT_THROW(duliu_check(DuLiuVariant::Las2, 8, 1), SizeGuard);
    EXPECT_EQ(parse_duliu_variant("las3"), DuLiuVariant::Las3);
    EXPECT_EQ(duliu_variant_name(DuLiuVariant::Las1), "las1");
    EXPECT_THROW(parse_duliu_variant("las4"), ParseError);
}

TEST(Lagrange, FixedPoint)
{
    const AlphaSeries f = lagrange_series(1, 4);
    EXPECT_EQ(f[1], alpha());
    for (std::size_t m = 1; m <= 3; ++m) {
        EXPECT_TRUE(lagrange_fixed_point_check(m, 6).passed()) << m;
    }
}

TEST(Ft, ThreeBranchExample)
{
    const PlaneTree t = PlaneTree::parse("((**)(**)(***))");
    const auto c = ft_coefficients(t);
    EXPECT_EQ(c, (std::map<std::size_t, std::uint64_t>{{2, 1}, {3, 6}, {4, 6}}));
    EXPECT_EQ(ft_coefficients_string(c), R"({"2":1,"3":6,"4":6})");
    EXPECT_EQ(plane_tree_polynomial(t).to_string(), "C(t,2)+6*C(t,3)+6*C(t,4)");
    const IdentityReport r = ft_check(t);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.lhs, R"({"2":1,"3":6,"4":6})");
}

TEST(Ft, MatchesBruteForceForAllTreesUpToFive)
{
    for (std::size_t n = 0; n <= 5; ++n) {
        const auto groups = ft_bruteforce(n);
        std::size_t trees = 0;
        for_each_plane_tree(n, [&](const PlaneTree &t) {
            ++trees;
            const auto it = groups.find(t.encode());
            ASSERT_NE(it, groups.end()) << t.encode();
            EXPECT_EQ(ft_coefficients(t), it->second) << t.encode();
        });
        EXPECT_EQ(trees, groups.size());
    }
}

TEST(Report, Json)
{
    const IdentityReport r = postnikov_check(2);
    const auto j = r.to_json();
    EXPECT_EQ(j["identity"], "postnikov");
    EXPECT_EQ(j["parameters"]["n"], 2);
    EXPECT_EQ(j["equal"], true);
    EXPECT_TRUE(j.contains("cross_checks"));
    EXPECT_TRUE(j.contains("elapsed_ms"));
    EXPECT_FALSE(j.contains("per_tree"));
}
