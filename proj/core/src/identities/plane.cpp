#include "treecalc/identities/plane.hpp"

#include <vector>

#include <nlohmann/json.hpp>

#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/errors.hpp"

namespace treecalc {

PlaneFamily<PlaneSeries> plane_q_family()
{
    return [](std::size_t k, std::span<const PlaneSeries> args) {
        PlaneSeries prod = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) {
            prod = prod * args[i];
        }
        PlaneSeries summed(prod.order());
        for (std::size_t n = 0; n <= prod.order(); ++n) {
            summed.set(n, discrete_sum(prod[n]));
        }
        return summed.shifted(k - 1);
    };
}

BinomialPoly<Rational> plane_tree_polynomial(const PlaneTree &t)
{
    const std::size_t n = t.leaf_count() - 1;
    PlaneTermEvaluator<PlaneSeries> eval(plane_q_family(), PlaneSeries::constant(BinomialPoly<Rational>(1), n));
    return eval(t)[n];
}

std::map<std::size_t, std::uint64_t> ft_coefficients(const PlaneTree &t)
{
    std::map<std::size_t, std::uint64_t> out;
    const BinomialPoly<Rational> p = plane_tree_polynomial(t);
    for (const auto &[k, c] : p.terms()) {
        if (!c.is_integer() || c.sign() < 0 || !c.numerator().fits_ulong_p()) {
            throw NonIntegerResult("coefficient of C(t," + std::to_string(k) + ") for " + t.encode() + " is " +
                                   c.to_string());
        }
        out[k] = c.numerator().get_ui();
    }
    return out;
}

std::map<std::string, std::map<std::size_t, std::uint64_t>> ft_bruteforce(std::size_t n, bool allow_large)
{
    check_size_guard(Family::PackedWords, n, allow_large);
    std::map<std::string, std::map<std::size_t, std::uint64_t>> out;
    for_each_packed_word(n, [&](const PackedWord &u) {
        ++out[plane_tree_of_word(u.letters()).encode()][static_cast<std::size_t>(u.max_letter())];
    });
    return out;
}

std::string ft_coefficients_string(const std::map<std::size_t, std::uint64_t> &c)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto &[k, v] : c) {
        j[std::to_string(k)] = v;
    }
    return j.dump();
}

IdentityReport ft_check(const PlaneTree &t, bool allow_large)
{
    Stopwatch clock;
    const std::size_t n = t.leaf_count() - 1;
    IdentityReport r;
    r.identity = "ft";
    r.parameters = {{"tree", t.encode()}, {"n", n}};
    const auto formula = ft_coefficients(t);
    const auto groups = ft_bruteforce(n, allow_large);
    const auto it = groups.find(t.encode());
    const std::map<std::size_t, std::uint64_t> oracle = it == groups.end() ? std::map<std::size_t, std::uint64_t>{}
                                                                           : it->second;
    r.lhs = ft_coefficients_string(formula);
    r.rhs = ft_coefficients_string(oracle);
    r.equal = r.lhs == r.rhs;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

bool plane_q_difference_equation_holds(const PlaneSeries &x)
{
    const std::size_t order = x.order();
    PlaneSeries lhs(order);
    for (std::size_t n = 0; n <= order; ++n) {
        lhs.set(n, finite_difference(x[n]));
    }
    PlaneSeries rhs(order);
    PlaneSeries power = x;
    for (std::size_t k = 2; k <= order + 1; ++k) {
        power = power * x;
        rhs += power.shifted(k - 1);
    }
    return lhs == rhs;
}

} // namespace treecalc
