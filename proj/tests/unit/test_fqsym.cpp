#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treecalc/arith/qanalog.hpp"
#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/errors.hpp"
#include "treecalc/fqsym/fqsym.hpp"
#include "treecalc/fqsym/permutation_ops.hpp"
#include "treecalc/identities/hook.hpp"

using namespace treecalc;

namespace {

using El = FQSymElement<Rational>;
using QEl = FQSymElement<QPoly>;

El G(const std::string &s) { return El::basis_element(Basis::G, Permutation::parse(s)); }
El F(const std::string &s) { return El::basis_element(Basis::F, Permutation::parse(s)); }
QEl Fq(const Permutation &p) { return QEl::basis_element(Basis::F, p); }

std::vector<std::string> strings(const std::vector<Permutation> &ps)
{
    std::vector<std::string> out;
    for (const auto &p : ps) {
        out.push_back(p.to_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> perms(int n)
{
    std::vector<Permutation> out;
    for (const auto &w : oracle::all_permutations(n)) {
        out.emplace_back(w);
    }
    return out;
}

// gamma in S_{k+l} with Std(prefix) = a and Std(suffix) = b, by filtering.
std::vector<std::string> convolve_oracle(const oracle::Word &a, const oracle::Word &b)
{
    std::vector<std::string> out;
    const int n = static_cast<int>(a.size() + b.size());
    for (const auto &g : oracle::all_permutations(n)) {
        const oracle::Word u(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(a.size()));
        const oracle::Word v(g.begin() + static_cast<std::ptrdiff_t>(a.size()), g.end());
        if (oracle::std_of(u) == a && oracle::std_of(v) == b) {
            out.push_back(Permutation(g).to_string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

El random_element(oracle::Gen &gen, int max_degree)
{
    El x(Basis::G);
    const int terms = gen.uniform(1, 3);
    for (int i = 0; i < terms; ++i) {
        x.add(Permutation(gen.permutation(gen.uniform(1, max_degree))), gen.rational());
    }
    return x;
}

} // namespace

TEST(PermutationOps, ConvolveExamples)
{
    EXPECT_EQ(strings(convolve(Permutation::parse("1"), Permutation::parse("1"))),
              (std::vector<std::string>{"12", "21"}));
    EXPECT_EQ(strings(convolve(Permutation::parse("12"), Permutation::parse("1"))),
              (std::vector<std::string>{"123", "132", "231"}));
    EXPECT_EQ(strings(convolve(Permutation(), Permutation::parse("21"))), (std::vector<std::string>{"21"}));
}

TEST(PermutationOps, ConvolveMatchesFilterOracle)
{
    for (int k = 0; k <= 4; ++k) {
        for (int l = 0; k + l <= 6 && l <= 4; ++l) {
            for (const auto &a : oracle::all_permutations(k)) {
                for (const auto &b : oracle::all_permutations(l)) {
                    const auto got = strings(convolve(Permutation(a), Permutation(b)));
                    EXPECT_EQ(got, convolve_oracle(a, b));
                    EXPECT_EQ(got.size(), binomial(static_cast<unsigned>(k + l), static_cast<unsigned>(k)).get_ui());
                }
            }
        }
    }
}

TEST(PermutationOps, HalfProducts)
{
    auto h = half_products(Permutation::parse("1"), Permutation::parse("1"));
    EXPECT_EQ(strings(h.prec), (std::vector<std::string>{"21"}));
    EXPECT_EQ(strings(h.succ), (std::vector<std::string>{"12"}));
    // In 132 the prefix 13 holds the maximum, so it lies on the prec side.
    h = half_products(Permutation::parse("12"), Permutation::parse("1"));
    EXPECT_EQ(strings(h.prec), (std::vector<std::string>{"132", "231"}));
    EXPECT_EQ(strings(h.succ), (std::vector<std::string>{"123"}));
    EXPECT_THROW(half_products(Permutation(), Permutation::parse("1")), EmptyOperand);

    for (const auto &a : perms(3)) {
        for (const auto &b : perms(2)) {
            const auto hp = half_products(a, b);
            std::vector<Permutation> all = hp.prec;
            all.insert(all.end(), hp.succ.begin(), hp.succ.end());
            EXPECT_EQ(strings(all), strings(convolve(a, b)));
        }
    }
}

TEST(PermutationOps, EraseMaxAndB)
{
    EXPECT_EQ(erase_max(Permutation::parse("231")).to_string(), "21");
    EXPECT_EQ(drop_last(Permutation::parse("231")).to_string(), "12");
    EXPECT_EQ(strings(bilinear_B(Permutation::parse("1"), Permutation())), (std::vector<std::string>{"12"}));
    EXPECT_EQ(strings(bilinear_B(Permutation::parse("1"), Permutation::parse("1"))),
              (std::vector<std::string>{"132", "231"}));
    EXPECT_EQ(strings(shifted_shuffle(Permutation::parse("1"), Permutation::parse("1"))),
              (std::vector<std::string>{"12", "21"}));
}

TEST(FQSym, ProductAndAssociativity)
{
    EXPECT_EQ(product(G("1"), G("1")), G("12") + G("21"));
    const El left = product(product(G("1"), G("1")), G("1"));
    EXPECT_EQ(left, product(G("1"), product(G("1"), G("1"))));
    EXPECT_EQ(left, x_element(3).homogeneous_component(3));

    oracle::Gen gen(31);
    for (int i = 0; i < 25; ++i) {
        const El a = random_element(gen, 2), b = random_element(gen, 2), c = random_element(gen, 2);
        EXPECT_EQ(product(product(a, b), c), product(a, product(b, c)));
        EXPECT_EQ(change_basis(product(a, b)), product(change_basis(a), change_basis(b)));
    }
    EXPECT_THROW(product(G("1"), F("1")), BasisMismatch);
}

TEST(FQSym, DerivationAndDendriformCompatibility)
{
    EXPECT_EQ(derive(G("231")), G("21"));
    EXPECT_EQ(derive(product(G("1"), G("1"))), G("1").scaled(Rational(2)));

    oracle::Gen gen(32);
    for (int i = 0; i < 40; ++i) {
        const El a = random_element(gen, 3), b = random_element(gen, 3);
        EXPECT_EQ(derive(product(a, b)), product(derive(a), b) + product(a, derive(b)));
        EXPECT_EQ(derive(bilinear_B(a, b)), product(a, b));
    }
    for (const auto &a : perms(2)) {
        for (const auto &b : perms(2)) {
            const El ga = El::basis_element(Basis::G, a), gb = El::basis_element(Basis::G, b);
            EXPECT_EQ(derive(prec(ga, gb)), product(derive(ga), gb));
            EXPECT_EQ(derive(succ(ga, gb)), product(ga, derive(gb)));
        }
    }
    EXPECT_THROW(prec(G(""), G("1")), EmptyOperand);
    EXPECT_THROW(prec(F("1"), F("1")), BasisMismatch);
}

TEST(FQSym, XSatisfiesDerivativeEquation)
{
    const El x = x_element(6);
    EXPECT_EQ(derive(x).truncated(5), product(x, x, 5));
}

TEST(FQSym, TreeTermOfHookShape)
{
    const El term = tree_term(BinaryTree::parse("((_,_),((_,_),_))"));
    EXPECT_EQ(term, G("1423") + G("2413") + G("3412"));
    EXPECT_EQ(to_json(G("21")).dump(), R"({"basis":"G","terms":[{"coeff":"1","perm":"21"}]})");
}

TEST(FQSym, TreeTermSupportIsDecreasingTreeFiber)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        std::map<std::string, std::set<std::string>> fibers;
        for (const auto &w : oracle::all_permutations(static_cast<int>(n))) {
            fibers[oracle::decreasing_shape(w)].insert(Permutation(w).to_string());
        }
        for_each_binary_tree(n, [&](const BinaryTree &t) {
            std::set<std::string> support;
            for (const auto &[p, c] : tree_term(t)) {
                EXPECT_EQ(c, Rational(1));
                support.insert(p.to_string());
            }
            EXPECT_EQ(support, fibers[t.encode()]) << t.encode();
        });
    }
}

TEST(FQSym, PhiIsHomomorphism)
{
    EXPECT_EQ(phi_q(G("21"), 3).numerator(2), QPoly::monomial(1));
    EXPECT_EQ(phi_q(F("21"), 3).numerator(2), QPoly::monomial(1));

    oracle::Gen gen(33);
    for (int i = 0; i < 30; ++i) {
        const El a = random_element(gen, 3), b = random_element(gen, 3);
        EXPECT_EQ(phi(product(a, b), 6), phi(a, 6) * phi(b, 6));
        EXPECT_EQ(phi_q(product(a, b), 6), phi_q(a, 6) * phi_q(b, 6));
        EXPECT_EQ(phi_q(a, 6).at_q_one(), phi(a, 6));
    }
}

TEST(FQSym, QShuffle)
{
    const Permutation one = Permutation::parse("1");
    const QEl prod = q_shuffle_product(Fq(one), Fq(one));
    QEl expected(Basis::F);
    expected.add(Permutation::parse("12"), QPoly(1));
    expected.add(Permutation::parse("21"), QPoly::monomial(1));
    EXPECT_EQ(prod, expected);

    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; k + l <= 5; ++l) {
            for (const auto &a : perms(k)) {
                for (const auto &b : perms(l)) {
                    const QEl p = q_shuffle_product(Fq(a), Fq(b));
                    El at_one(Basis::F);
                    for (const auto &[g, c] : p) {
                        at_one.add(g, c.evaluate(Rational(1)));
                    }
                    EXPECT_EQ(at_one, product(El::basis_element(Basis::F, a), El::basis_element(Basis::F, b)));
                    EXPECT_EQ(phi_q_deformed(p, 5), phi_q_deformed(Fq(a), 5) * phi_q_deformed(Fq(b), 5));
                }
            }
        }
    }
}

TEST(FQSym, ModifiedLeibnizInQDeformation)
{
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; k + l <= 4; ++l) {
            for (const auto &a : perms(k)) {
                for (const auto &b : perms(l)) {
                    const QEl fa = Fq(a), fb = Fq(b);
                    EXPECT_EQ(derive(q_shuffle_product(fa, fb)),
                              q_shuffle_product(derive(fa), scale_alphabet(fb)) + q_shuffle_product(fa, derive(fb)))
                        << a.to_string() << " " << b.to_string();
                }
            }
        }
    }
}

TEST(FQSym, PairingAdjointness)
{
    EXPECT_EQ(pairing(F("231"), G("231")), Rational(1));
    EXPECT_EQ(pairing(G("231"), F("312")), Rational(0));
    EXPECT_THROW(pairing(G("1"), G("1")), BasisMismatch);
    for (const auto &s : perms(3)) {
        for (const auto &t : perms(2)) {
            const El gs = El::basis_element(Basis::G, s), ft = El::basis_element(Basis::F, t);
            EXPECT_EQ(pairing(derive(gs), ft), pairing(gs, product(ft, F("1"))));
        }
    }
}

TEST(FQSym, BasisChangeRoundTrip)
{
    oracle::Gen gen(34);
    for (int i = 0; i < 30; ++i) {
        const El a = random_element(gen, 5);
        EXPECT_EQ(to_g_basis(to_f_basis(a)), a);
        EXPECT_EQ(to_f_basis(a).basis(), Basis::F);
    }
}

TEST(FQSym, QBilinearMatchesPhiQOfB)
{
    for (int k = 0; k <= 3; ++k) {
        for (int l = 0; k + l + 1 <= 5; ++l) {
            for (const auto &a : perms(k)) {
                for (const auto &b : perms(l)) {
                    const El ga = El::basis_element(Basis::G, a), gb = El::basis_element(Basis::G, b);
                    EXPECT_EQ(phi_q(bilinear_B(ga, gb), 5), q_bilinear(phi_q(ga, 5), phi_q(gb, 5)));
                }
            }
        }
    }
}

TEST(FQSym, QHookIsPhiQOfTreeTerm)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_binary_tree(n, [&](const BinaryTree &t) {
            const QFactorialSeries s = phi_q(tree_term(t), n);
            EXPECT_EQ(s.numerator(n), qhook_imaj(t)) << t.encode();
        });
    }
}
