#include "treecalc/identities/hook.hpp"

#include <stdexcept>

#include "treecalc/arith/qanalog.hpp"
#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/errors.hpp"

namespace treecalc {

Rational hook_count(const BinaryTree &t)
{
    const HookData data = hook_data(t);
    BigInt denominator = 1;
    for (std::size_t h : data.hooks) {
        denominator *= static_cast<unsigned long>(h);
    }
    const Rational value(factorial(static_cast<unsigned>(t.size())), denominator);
    if (!value.is_integer()) {
        throw NonIntegerResult("hook count of " + t.encode() + " is " + value.to_string());
    }
    return value;
}

QPoly qhook_imaj(const BinaryTree &t)
{
    const HookData data = hook_data(t);
    std::size_t shift = 0;
    for (std::size_t d : data.right_sizes) {
        shift += d;
    }
    QPoly denominator(1);
    for (std::size_t h : data.hooks) {
        denominator *= q_integer(static_cast<unsigned>(h));
    }
    return exact_poly_div(q_factorial(static_cast<unsigned>(t.size())).shifted(shift), denominator);
}

QPoly qhook_inv(const BinaryTree &t) { return qhook_imaj(t); }

std::map<std::string, FiberStats> decreasing_tree_fibers(std::size_t n, bool keep_members, bool allow_large)
{
    check_size_guard(Family::Permutations, n, allow_large);
    std::map<std::string, FiberStats> fibers;
    for_each_permutation(n, [&](const Permutation &p) {
        FiberStats &f = fibers[decreasing_tree(p).encode()];
        ++f.count;
        f.imaj += QPoly::monomial(static_cast<std::size_t>(imaj(p)));
        f.inv += QPoly::monomial(static_cast<std::size_t>(inversions(p)));
        if (keep_members) {
            f.members.push_back(p);
        }
    });
    return fibers;
}

} // namespace treecalc
