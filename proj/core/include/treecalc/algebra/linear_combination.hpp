#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "treecalc/arith/ring.hpp"

namespace treecalc {

// Finitely supported map Key -> R with no stored zeros. Keys are kept in
// their natural order so iteration (and every dump) is deterministic.
template <class Key, Ring R>
class LinearCombination {
public:
    using map_type = std::map<Key, R>;

    LinearCombination() = default;

    void add(const Key &key, const R &coeff)
    {
        if (coeff.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    R coefficient(const Key &key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? R{} : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const map_type &terms() const { return terms_; }

    LinearCombination &operator+=(const LinearCombination &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add(k, c);
        }
        return *this;
    }

    LinearCombination &operator-=(const LinearCombination &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add(k, -c);
        }
        return *this;
    }

    LinearCombination scaled(const R &c) const
    {
        LinearCombination out;
        for (const auto &[k, v] : terms_) {
            out.add(k, v * c);
        }
        return out;
    }

    // Applies f to every coefficient, dropping zeros.
    template <class F>
    auto map_coefficients(F &&f) const
    {
        using S = std::decay_t<decltype(f(std::declval<const R &>()))>;
        LinearCombination<Key, S> out;
        for (const auto &[k, v] : terms_) {
            out.add(k, f(v));
        }
        return out;
    }

    friend bool operator==(const LinearCombination &, const LinearCombination &) = default;

private:
    map_type terms_;
};

} // namespace treecalc
