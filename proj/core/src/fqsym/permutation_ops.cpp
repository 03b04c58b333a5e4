#include "treecalc/fqsym/permutation_ops.hpp"

#include <algorithm>

#include "treecalc/errors.hpp"

namespace treecalc {

namespace {

// Visits every k-subset of {1..n} as an increasing vector.
template <class F>
void for_each_subset(int n, int k, F &&visit)
{
    std::vector<int> chosen(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        chosen[static_cast<std::size_t>(i)] = i + 1;
    }
    while (true) {
        visit(chosen);
        int i = k - 1;
        while (i >= 0 && chosen[static_cast<std::size_t>(i)] == n - k + i + 1) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++chosen[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            chosen[static_cast<std::size_t>(j)] = chosen[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

} // namespace

std::vector<Permutation> convolve(const Permutation &a, const Permutation &b)
{
    const int k = static_cast<int>(a.size());
    const int l = static_cast<int>(b.size());
    std::vector<Permutation> out;
    std::vector<bool> in_u;
    for_each_subset(k + l, k, [&](const std::vector<int> &values) {
        // values (sorted) are the letters of u; the complement those of v.
        in_u.assign(static_cast<std::size_t>(k + l + 1), false);
        for (int x : values) {
            in_u[static_cast<std::size_t>(x)] = true;
        }
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(l));
        for (int x = 1; x <= k + l; ++x) {
            if (!in_u[static_cast<std::size_t>(x)]) {
                rest.push_back(x);
            }
        }
        Letters w;
        w.reserve(static_cast<std::size_t>(k + l));
        for (int x : a) {
            w.push_back(values[static_cast<std::size_t>(x - 1)]);
        }
        for (int x : b) {
            w.push_back(rest[static_cast<std::size_t>(x - 1)]);
        }
        out.emplace_back(std::move(w));
    });
    std::sort(out.begin(), out.end());
    return out;
}

HalfProducts half_products(const Permutation &a, const Permutation &b)
{
    if (a.empty() || b.empty()) {
        throw EmptyOperand("half products need nonempty permutations");
    }
    const int top = static_cast<int>(a.size() + b.size());
    HalfProducts out;
    for (auto &g : convolve(a, b)) {
        const auto it = std::find(g.begin(), g.end(), top);
        if (static_cast<std::size_t>(it - g.begin()) < a.size()) {
            out.prec.push_back(std::move(g));
        } else {
            out.succ.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Permutation> bilinear_B(const Permutation &a, const Permutation &b)
{
    const int top = static_cast<int>(a.size() + b.size()) + 1;
    std::vector<Permutation> out;
    for (const auto &g : convolve(a, b)) {
        Letters w(g.begin(), g.end());
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(a.size()), top);
        out.emplace_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> shifted_shuffle(const Permutation &a, const Permutation &b)
{
    const int k = static_cast<int>(a.size());
    const int l = static_cast<int>(b.size());
    std::vector<Permutation> out;
    std::vector<bool> from_a;
    // choose the positions taken by a
    for_each_subset(k + l, k, [&](const std::vector<int> &positions) {
        from_a.assign(static_cast<std::size_t>(k + l), false);
        for (int p : positions) {
            from_a[static_cast<std::size_t>(p - 1)] = true;
        }
        Letters w;
        w.reserve(static_cast<std::size_t>(k + l));
        std::size_t i = 0;
        std::size_t j = 0;
        for (int p = 0; p < k + l; ++p) {
            if (from_a[static_cast<std::size_t>(p)]) {
                w.push_back(a[i++]);
            } else {
                w.push_back(b[j++] + k);
            }
        }
        out.emplace_back(std::move(w));
    });
    std::sort(out.begin(), out.end());
    return out;
}

Permutation erase_max(const Permutation &p)
{
    const int top = static_cast<int>(p.size());
    Letters w;
    w.reserve(p.size());
    for (int x : p) {
        if (x != top) {
            w.push_back(x);
        }
    }
    return Permutation(std::move(w));
}

Permutation drop_last(const Permutation &p)
{
    if (p.empty()) {
        return p;
    }
    return standardize(std::span<const int>(p.letters().data(), p.size() - 1));
}

} // namespace treecalc
