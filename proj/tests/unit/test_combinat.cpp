#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/combinat/trees.hpp"
#include "treecalc/combinat/words.hpp"
#include "treecalc/errors.hpp"

using namespace treecalc;

namespace {

Letters digits(const std::string &s) { return parse_word(s); }

} // namespace

TEST(Words, StandardizeAndPack)
{
    const Letters w = digits("34364");
    EXPECT_EQ(standardize(w).to_string(), "13254");
    EXPECT_EQ(pack(w).to_string(), "12132");
    EXPECT_TRUE(is_packed(digits("12132")));
    EXPECT_FALSE(is_packed(digits("1313")));
    EXPECT_THROW(PackedWord(digits("13")), std::invalid_argument);
    EXPECT_THROW(Permutation(digits("122")), std::invalid_argument);
}

TEST(Words, StandardizeAndPackMatchOracleOnRandomWords)
{
    oracle::Gen gen(11);
    for (int i = 0; i < 500; ++i) {
        const int n = gen.uniform(0, 9);
        Letters w(static_cast<std::size_t>(n));
        for (auto &x : w) {
            x = gen.uniform(1, 6);
        }
        EXPECT_EQ(standardize(w).letters(), oracle::std_of(w));
        EXPECT_EQ(pack(w).letters(), oracle::pack_of(w));
        // Packing then standardizing is the same as standardizing.
        EXPECT_EQ(standardize(pack(w).letters()), standardize(w));
    }
}

TEST(Words, Statistics)
{
    const Permutation p = Permutation::parse("2413");
    EXPECT_EQ(p.inverse().to_string(), "3142");
    EXPECT_EQ(imaj(p), 4);
    EXPECT_EQ(maj(p), 2);
    EXPECT_EQ(inversions(p), 3);
}

TEST(Words, StatisticsMatchOracleExhaustively)
{
    for (int n = 0; n <= 6; ++n) {
        for (const auto &w : oracle::all_permutations(n)) {
            const Permutation p(w);
            EXPECT_EQ(maj(p), oracle::maj(w));
            EXPECT_EQ(imaj(p), oracle::imaj(w));
            EXPECT_EQ(inversions(p), oracle::inv(w));
            EXPECT_EQ(p.inverse().inverse(), p);
            EXPECT_EQ(imaj(p), maj(p.inverse()));
        }
    }
}

TEST(Words, EncodingRoundTrip)
{
    EXPECT_EQ(Permutation::parse("").size(), 0u);
    const Letters long_perm = {10, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    const Permutation p(long_perm);
    EXPECT_EQ(Permutation::parse(p.to_string()), p);
    EXPECT_EQ(PackedWord::parse("5211354").to_string(), "5211354");
    EXPECT_THROW(Permutation::parse("12a"), ParseError);
}

TEST(Trees, BinaryParseEncode)
{
    const BinaryTree t = BinaryTree::parse("((_,_),((_,_),_))");
    EXPECT_EQ(t.size(), 4u);
    EXPECT_EQ(t.encode(), "((_,_),((_,_),_))");
    EXPECT_TRUE(BinaryTree::parse("_").empty());
    EXPECT_THROW(BinaryTree::parse("((_,_)"), ParseError);
    EXPECT_THROW(BinaryTree::parse("(_,_,_)"), ParseError);
    EXPECT_THROW(BinaryTree::parse("(_,_) x"), ParseError);
}

TEST(Trees, RandomBinaryTreesRoundTrip)
{
    oracle::Gen gen(12);
    for (int i = 0; i < 200; ++i) {
        const BinaryTree t = gen.binary_tree(static_cast<std::size_t>(gen.uniform(0, 12)));
        EXPECT_EQ(BinaryTree::parse(t.encode()), t);
        if (!t.empty()) {
            EXPECT_EQ(hook_data(t).hooks, oracle::hooks_of_encoding(t.encode()));
        }
    }
}

TEST(Trees, DecreasingTree)
{
    const BinaryTree expected = BinaryTree::node(BinaryTree::node({}, {}),
                                                 BinaryTree::node(BinaryTree::node({}, {}), {}));
    EXPECT_EQ(decreasing_tree(Permutation::parse("1423")), expected);
    EXPECT_EQ(decreasing_tree(Permutation::parse("3412")), expected);
    EXPECT_EQ(decreasing_tree(Permutation::parse("2413")), expected);
    EXPECT_NE(decreasing_tree(Permutation::parse("1234")), expected);
    for (int n = 0; n <= 6; ++n) {
        for (const auto &w : oracle::all_permutations(n)) {
            EXPECT_EQ(decreasing_tree(Permutation(w)).encode(), oracle::decreasing_shape(w));
        }
    }
}

TEST(Trees, HookData)
{
    const HookData h = hook_data(BinaryTree::parse("((_,_),((_,_),_))"));
    EXPECT_EQ(h.hooks, (std::vector<std::size_t>{1, 1, 2, 4}));
    EXPECT_EQ(h.right_sizes, (std::vector<std::size_t>{0, 0, 0, 2}));

    const HookData comb = hook_data(BinaryTree::parse("(((_,_),_),_)"));
    EXPECT_EQ(comb.hooks, (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_EQ(comb.right_sizes, (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_THROW(hook_data(BinaryTree()), std::invalid_argument);
}

TEST(Trees, MAryParseEncode)
{
    const MAryTree t = MAryTree::parse(2, "((___)_(___))");
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(t.encode(), "((___)_(___))");
    EXPECT_EQ(hook_data(t).hooks, (std::vector<std::size_t>{1, 1, 3}));
    EXPECT_THROW(MAryTree::parse(2, "(__)"), ParseError);
}

TEST(Trees, PlaneTreeOfWord)
{
    EXPECT_EQ(plane_tree_of_word(digits("243411")).encode(), "((**)(**)(***))");
    EXPECT_TRUE(plane_tree_of_word(Letters{}).is_leaf());
    EXPECT_EQ(plane_tree_of_word(digits("11")).encode(), "(***)");
    EXPECT_EQ(plane_tree_of_word(digits("1")).encode(), "(**)");
    EXPECT_EQ(plane_tree_of_word(digits("12")).encode(), "((**)*)");
    const PlaneTree t = PlaneTree::parse("((**)(**)(***))");
    EXPECT_EQ(t.leaf_count(), 7u);
    EXPECT_EQ(t.internal_count(), 4u);
    EXPECT_THROW(PlaneTree::parse("(*)"), ParseError);
    EXPECT_THROW(PlaneTree::internal({PlaneTree()}), std::invalid_argument);
}

TEST(Trees, PlaneTreeLeavesTrackWordLength)
{
    for (int n = 0; n <= 5; ++n) {
        for (const auto &w : oracle::all_packed_words(n)) {
            EXPECT_EQ(plane_tree_of_word(w).leaf_count(), static_cast<std::size_t>(n) + 1);
        }
    }
}

TEST(Enumerate, CountsMatchClosedForms)
{
    const auto cat = oracle::catalan(9);
    const auto bell = oracle::ordered_bell(6);
    const auto schroeder = oracle::little_schroeder(7);
    for (std::size_t n = 0; n <= 9; ++n) {
        EXPECT_EQ(count(Family::BinaryTrees, n, 1, false), cat[n]) << n;
    }
    for (std::size_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(count(Family::PackedWords, n, 1, false), bell[n]) << n;
        EXPECT_EQ(count(Family::Permutations, n, 1, false), oracle::factorial(static_cast<unsigned>(n)).numerator());
    }
    for (std::size_t n = 0; n <= 7; ++n) {
        EXPECT_EQ(count(Family::PlaneTrees, n, 1, false), schroeder[n]) << n;
    }
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 0; n <= 5; ++n) {
            EXPECT_EQ(count(Family::MAryTrees, n, m, false), oracle::fuss_catalan(m, n)) << m << "," << n;
        }
    }
    EXPECT_EQ(count(Family::BinaryTrees, 4, 1, false), 14u);
    EXPECT_EQ(count(Family::PackedWords, 3, 1, false), 13u);
}

TEST(Enumerate, OrderedAndDuplicateFree)
{
    for (Family f : {Family::BinaryTrees, Family::MAryTrees, Family::PlaneTrees, Family::Permutations,
                     Family::PackedWords}) {
        for (std::size_t n = 0; n <= 5; ++n) {
            std::vector<std::string> seen;
            enumerate(f, n, 2, false, [&](const std::string &s) { seen.push_back(s); });
            EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end())) << family_name(f) << " " << n;
            EXPECT_EQ(std::set<std::string>(seen.begin(), seen.end()).size(), seen.size());
            EXPECT_EQ(seen.size(), count(f, n, 2, false));
        }
    }
}

TEST(Enumerate, PackedWordsMatchFilter)
{
    for (int n = 0; n <= 5; ++n) {
        std::vector<Letters> got;
        for_each_packed_word(static_cast<std::size_t>(n), [&](const PackedWord &u) { got.push_back(u.letters()); });
        EXPECT_EQ(got, oracle::all_packed_words(n));
    }
}

TEST(Enumerate, SizeGuards)
{
    EXPECT_THROW(count(Family::Permutations, 13, 1, false), SizeGuard);
    EXPECT_THROW(count(Family::PackedWords, 10, 1, false), SizeGuard);
    EXPECT_THROW(count(Family::BinaryTrees, 15, 1, false), SizeGuard);
    EXPECT_NO_THROW(check_size_guard(Family::Permutations, 13, true));
    EXPECT_EQ(parse_family("plane-trees"), Family::PlaneTrees);
    EXPECT_EQ(family_name(Family::MAryTrees), "mary-trees");
    EXPECT_THROW(parse_family("forests"), ParseError);
}
