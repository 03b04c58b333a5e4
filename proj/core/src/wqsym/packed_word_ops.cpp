#include "treecalc/wqsym/packed_word_ops.hpp"

#include <algorithm>

#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/errors.hpp"

namespace treecalc {

namespace {

// Walks lattice paths from (0,0) to (p,r) with steps (1,0), (0,1), (1,1).
// Step s assigns the next level s+1 to letter i of a, letter j of b, or both.
void merge_levels(int p, int r, int i, int j, int level, std::vector<int> &map_a, std::vector<int> &map_b,
                  const PackedWord &a, const PackedWord &b, std::vector<PackedWord> &out)
{
    if (i == p && j == r) {
        Letters w;
        w.reserve(a.size() + b.size());
        for (int x : a) {
            w.push_back(map_a[static_cast<std::size_t>(x)]);
        }
        for (int x : b) {
            w.push_back(map_b[static_cast<std::size_t>(x)]);
        }
        out.emplace_back(std::move(w));
        return;
    }
    if (i < p) {
        map_a[static_cast<std::size_t>(i + 1)] = level;
        merge_levels(p, r, i + 1, j, level + 1, map_a, map_b, a, b, out);
    }
    if (j < r) {
        map_b[static_cast<std::size_t>(j + 1)] = level;
        merge_levels(p, r, i, j + 1, level + 1, map_a, map_b, a, b, out);
    }
    if (i < p && j < r) {
        map_a[static_cast<std::size_t>(i + 1)] = level;
        map_b[static_cast<std::size_t>(j + 1)] = level;
        merge_levels(p, r, i + 1, j + 1, level + 1, map_a, map_b, a, b, out);
    }
}

} // namespace

std::vector<PackedWord> packed_convolve(const PackedWord &a, const PackedWord &b)
{
    const int p = a.max_letter();
    const int r = b.max_letter();
    std::vector<int> map_a(static_cast<std::size_t>(p + 1));
    std::vector<int> map_b(static_cast<std::size_t>(r + 1));
    std::vector<PackedWord> out;
    merge_levels(p, r, 0, 0, 1, map_a, map_b, a, b, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PackedWord> packed_convolve_by_filter(const PackedWord &a, const PackedWord &b)
{
    std::vector<PackedWord> out;
    const std::size_t k = a.size();
    for_each_packed_word(a.size() + b.size(), [&](const PackedWord &w) {
        const std::span<const int> letters(w.letters());
        if (pack(letters.first(k)) == a && pack(letters.subspan(k)) == b) {
            out.push_back(w);
        }
    });
    return out;
}

TridendriformSplit tridendriform_split(const PackedWord &a, const PackedWord &b)
{
    if (a.empty() || b.empty()) {
        throw EmptyOperand("tridendriform products need nonempty packed words");
    }
    TridendriformSplit out;
    for (auto &w : packed_convolve(a, b)) {
        const auto mid = w.begin() + static_cast<std::ptrdiff_t>(a.size());
        const int left = *std::max_element(w.begin(), mid);
        const int right = *std::max_element(mid, w.end());
        if (left > right) {
            out.prec.push_back(std::move(w));
        } else if (left == right) {
            out.circ.push_back(std::move(w));
        } else {
            out.succ.push_back(std::move(w));
        }
    }
    return out;
}

PackedWord erase_max_letter(const PackedWord &u)
{
    Letters w;
    for (int x : u) {
        if (x != u.max_letter()) {
            w.push_back(x);
        }
    }
    return PackedWord(std::move(w));
}

std::vector<PackedWord> sandwich(std::span<const PackedWord> words)
{
    if (words.empty()) {
        return {};
    }
    std::vector<PackedWord> concatenations{words[0]};
    for (std::size_t i = 1; i < words.size(); ++i) {
        std::vector<PackedWord> next;
        for (const auto &c : concatenations) {
            auto part = packed_convolve(c, words[i]);
            next.insert(next.end(), part.begin(), part.end());
        }
        concatenations = std::move(next);
    }
    std::vector<PackedWord> out;
    out.reserve(concatenations.size());
    for (const auto &c : concatenations) {
        const int m = c.max_letter() + 1;
        Letters w;
        w.reserve(c.size() + words.size() - 1);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i > 0) {
                w.push_back(m);
            }
            for (std::size_t j = 0; j < words[i].size(); ++j) {
                w.push_back(c[pos++]);
            }
        }
        out.emplace_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace treecalc
