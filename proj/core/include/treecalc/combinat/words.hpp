#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treecalc {

using Letters = std::vector<int>;

// A permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;

    // Throws std::invalid_argument unless word is a bijection onto {1..n}.
    explicit Permutation(Letters word);

    static Permutation identity(std::size_t n);

    // Digit string when n <= 9 ("2413"), comma separated otherwise.
    static Permutation parse(std::string_view text);

    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    int operator[](std::size_t i) const { return word_[i]; }
    const Letters &letters() const { return word_; }
    auto begin() const { return word_.begin(); }
    auto end() const { return word_.end(); }

    Permutation inverse() const;
    std::string to_string() const;

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &a, const Permutation &b) { return a.word_ <=> b.word_; }

private:
    struct Unchecked {};
    Permutation(Letters word, Unchecked) : word_(std::move(word)) {}
    friend Permutation standardize(std::span<const int> word);

    Letters word_;
};

// A word whose letter set is exactly {1..m}.
class PackedWord {
public:
    PackedWord() = default;

    // Throws std::invalid_argument if the word is not packed.
    explicit PackedWord(Letters word);

    static PackedWord parse(std::string_view text);

    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    int operator[](std::size_t i) const { return word_[i]; }
    const Letters &letters() const { return word_; }
    auto begin() const { return word_.begin(); }
    auto end() const { return word_.end(); }

    // Maximal letter; 0 for the empty word.
    int max_letter() const { return max_; }

    std::string to_string() const;

    friend bool operator==(const PackedWord &a, const PackedWord &b) { return a.word_ == b.word_; }
    friend auto operator<=>(const PackedWord &a, const PackedWord &b) { return a.word_ <=> b.word_; }

private:
    struct Unchecked {};
    PackedWord(Letters word, int max, Unchecked) : word_(std::move(word)), max_(max) {}
    friend PackedWord pack(std::span<const int> word);

    Letters word_;
    int max_ = 0;
};

// Relabels letters 1..n scanning the smallest letter left to right, then the
// next smallest, and so on.
Permutation standardize(std::span<const int> word);

// Order-preserving relabeling of the occurring letters onto {1..m}.
PackedWord pack(std::span<const int> word);

bool is_packed(std::span<const int> word);

// Sum of descent positions i (1-based) with p_i > p_{i+1}.
int maj(const Permutation &p);
// Major index of the inverse permutation.
int imaj(const Permutation &p);
int inversions(const Permutation &p);

// Encoding shared by permutations and packed words.
std::string encode_word(std::span<const int> word);
Letters parse_word(std::string_view text);

} // namespace treecalc

template <>
struct std::hash<treecalc::Permutation> {
    std::size_t operator()(const treecalc::Permutation &p) const noexcept;
};

template <>
struct std::hash<treecalc::PackedWord> {
    std::size_t operator()(const treecalc::PackedWord &w) const noexcept;
};
