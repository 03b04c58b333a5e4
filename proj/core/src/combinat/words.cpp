#include "treecalc/combinat/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "treecalc/errors.hpp"

namespace treecalc {

namespace {

std::size_t hash_letters(const Letters &w) noexcept
{
    // FNV-1a over the letters
    std::size_t h = 1469598103934665603ULL;
    for (int x : w) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ULL;
    }
    return h ^ w.size();
}

} // namespace

std::string encode_word(std::span<const int> word)
{
    const bool digits = word.size() <= 9 && std::all_of(word.begin(), word.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (digits) {
            out.push_back(static_cast<char>('0' + word[i]));
        } else {
            if (i > 0) {
                out.push_back(',');
            }
            out += std::to_string(word[i]);
        }
    }
    return out;
}

Letters parse_word(std::string_view text)
{
    Letters out;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw ParseError("bad letter '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
            }
            out.push_back(c - '0');
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view tok = text.substr(start, comma - start);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ParseError("bad letter '" + std::string(tok) + "' in word '" + std::string(text) + "'");
        }
        const int v = std::stoi(std::string(tok));
        if (v < 1) {
            throw ParseError("letters must be positive in '" + std::string(text) + "'");
        }
        out.push_back(v);
        start = comma + 1;
    }
    return out;
}

Permutation::Permutation(Letters word) : word_(std::move(word))
{
    std::vector<bool> seen(word_.size() + 1, false);
    for (int x : word_) {
        if (x < 1 || static_cast<std::size_t>(x) > word_.size() || seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("not a permutation: " + encode_word(word_));
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    Letters w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w), Unchecked{});
}

Permutation Permutation::parse(std::string_view text)
{
    try {
        return Permutation(parse_word(text));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

Permutation Permutation::inverse() const
{
    Letters inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) {
        inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i + 1);
    }
    return Permutation(std::move(inv), Unchecked{});
}

std::string Permutation::to_string() const { return encode_word(word_); }

PackedWord::PackedWord(Letters word)
{
    if (!is_packed(word)) {
        throw std::invalid_argument("not a packed word: " + encode_word(word));
    }
    max_ = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
    word_ = std::move(word);
}

PackedWord PackedWord::parse(std::string_view text)
{
    try {
        return PackedWord(parse_word(text));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

std::string PackedWord::to_string() const { return encode_word(word_); }

Permutation standardize(std::span<const int> word)
{
    std::vector<std::size_t> order(word.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    Letters out(word.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        out[order[rank]] = static_cast<int>(rank + 1);
    }
    return Permutation(std::move(out), Permutation::Unchecked{});
}

PackedWord pack(std::span<const int> word)
{
    Letters values(word.begin(), word.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Letters out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        out[i] = static_cast<int>(std::lower_bound(values.begin(), values.end(), word[i]) - values.begin()) + 1;
    }
    return PackedWord(std::move(out), static_cast<int>(values.size()), PackedWord::Unchecked{});
}

bool is_packed(std::span<const int> word)
{
    std::vector<bool> seen(word.size() + 1, false);
    int max = 0;
    for (int x : word) {
        if (x < 1 || static_cast<std::size_t>(x) > word.size()) {
            return false;
        }
        seen[static_cast<std::size_t>(x)] = true;
        max = std::max(max, x);
    }
    for (int v = 1; v <= max; ++v) {
        if (!seen[static_cast<std::size_t>(v)]) {
            return false;
        }
    }
    return true;
}

int maj(const Permutation &p)
{
    int total = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] > p[i + 1]) {
            total += static_cast<int>(i + 1);
        }
    }
    return total;
}

int imaj(const Permutation &p)
{
    // Descent i of the inverse: the letter i+1 sits left of the letter i.
    std::vector<std::size_t> pos(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        pos[static_cast<std::size_t>(p[i])] = i;
    }
    int total = 0;
    for (std::size_t v = 1; v < p.size(); ++v) {
        if (pos[v + 1] < pos[v]) {
            total += static_cast<int>(v);
        }
    }
    return total;
}

int inversions(const Permutation &p)
{
    int total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) {
                ++total;
            }
        }
    }
    return total;
}

} // namespace treecalc

std::size_t std::hash<treecalc::Permutation>::operator()(const treecalc::Permutation &p) const noexcept
{
    return treecalc::hash_letters(p.letters());
}

std::size_t std::hash<treecalc::PackedWord>::operator()(const treecalc::PackedWord &w) const noexcept
{
    return treecalc::hash_letters(w.letters());
}
