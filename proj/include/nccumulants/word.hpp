#pragma once

// Words of the tensor algebra T(A) and bar-words of the double tensor
// algebra T(T(A)).
//
// A Word is a finite sequence of letters (interned generator indices).
// A BarWord w1|w2|...|wk is a sequence of non-empty words; the empty
// bar-word is the unit of T(T(A)). Both are immutable values.
//
// Positions inside a word are 0-based throughout the library. Position
// sets are passed either as bitmasks (bit i = position i, n <= 64) or as
// strictly increasing index sequences.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace nccum {

using Letter = std::uint8_t;
using PositionMask = std::uint64_t;

inline constexpr std::size_t max_alphabet_size = 255;
inline constexpr std::size_t max_word_length = 64;

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) {
        for (Letter l : letters) push_back(l);
    }
    explicit Word(std::span<const Letter> letters) {
        for (Letter l : letters) push_back(l);
    }

    // a^n over the single letter `letter`.
    static Word power(Letter letter, std::size_t n) {
        Word w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(letter);
        return w;
    }

    std::size_t degree() const noexcept { return code_.size(); }
    bool empty() const noexcept { return code_.empty(); }
    Letter operator[](std::size_t i) const noexcept { return static_cast<Letter>(code_[i]); }

    void push_back(Letter l) {
        if (l >= max_alphabet_size) throw DomainError("letter index exceeds alphabet cap");
        code_.push_back(static_cast<char>(l));
    }

    Word concat(const Word& other) const {
        Word w = *this;
        w.code_ += other.code_;
        return w;
    }

    // Contiguous slice [first, first + count).
    Word slice(std::size_t first, std::size_t count) const {
        Word w;
        w.code_ = code_.substr(first, count);
        return w;
    }

    // Raw byte encoding; one byte per letter.
    const std::string& code() const noexcept { return code_; }

    // Degree first, then lexicographic.
    friend bool operator<(const Word& a, const Word& b) noexcept {
        if (a.code_.size() != b.code_.size()) return a.code_.size() < b.code_.size();
        return a.code_ < b.code_;
    }
    friend bool operator==(const Word& a, const Word& b) noexcept = default;

private:
    std::string code_;
};

class BarWord {
public:
    // The unit.
    BarWord() = default;

    // A single word; the empty word maps to the unit.
    BarWord(const Word& w) : code_(w.code()) {}  // NOLINT(google-explicit-constructor)

    // Empty factors are dropped: w1|1|w2 is identified with w1|w2.
    explicit BarWord(std::span<const Word> factors) {
        for (const auto& f : factors) *this = concat(f);
    }
    BarWord(std::initializer_list<Word> factors)
        : BarWord(std::span<const Word>(factors.begin(), factors.size())) {}

    static const BarWord& unit() {
        static const BarWord u;
        return u;
    }

    bool is_unit() const noexcept { return code_.empty(); }

    std::size_t degree() const noexcept {
        return code_.size() - static_cast<std::size_t>(std::count(code_.begin(), code_.end(), separator));
    }

    std::size_t factor_count() const noexcept {
        if (code_.empty()) return 0;
        return 1 + static_cast<std::size_t>(std::count(code_.begin(), code_.end(), separator));
    }

    std::vector<Word> factors() const {
        std::vector<Word> out;
        for_each_factor([&](const Word& w) { out.push_back(w); });
        return out;
    }

    template <class F>
    void for_each_factor(F&& f) const {
        std::size_t start = 0;
        while (start < code_.size()) {
            std::size_t end = code_.find(separator, start);
            if (end == std::string::npos) end = code_.size();
            Word w;
            for (std::size_t i = start; i < end; ++i) w.push_back(static_cast<Letter>(code_[i]));
            f(w);
            start = end + 1;
        }
    }

    // Bar concatenation; the unit is two-sided neutral.
    BarWord concat(const BarWord& other) const {
        if (other.code_.empty()) return *this;
        if (code_.empty()) return other;
        BarWord r;
        r.code_.reserve(code_.size() + other.code_.size() + 1);
        r.code_ = code_;
        r.code_.push_back(separator);
        r.code_ += other.code_;
        return r;
    }

    // Returns the single factor; throws unless factor_count() == 1.
    Word as_word() const {
        if (factor_count() != 1) throw DomainError("bar-word is not a single word");
        Word w;
        for (char c : code_) w.push_back(static_cast<Letter>(c));
        return w;
    }

    const std::string& code() const noexcept { return code_; }

    // Lexicographic by factor (factors compared as Words), then by factor count.
    friend bool operator<(const BarWord& a, const BarWord& b) noexcept {
        std::string_view x = a.code_, y = b.code_;
        while (!x.empty() && !y.empty()) {
            const auto fx = next_factor(x), fy = next_factor(y);
            if (fx.size() != fy.size()) return fx.size() < fy.size();
            if (const int c = fx.compare(fy); c != 0) return c < 0;
        }
        return x.empty() && !y.empty();
    }
    friend bool operator==(const BarWord& a, const BarWord& b) noexcept = default;

private:
    static constexpr char separator = static_cast<char>(0xFF);

    // Pops the leading factor off `rest`.
    static std::string_view next_factor(std::string_view& rest) noexcept {
        const auto end = rest.find(separator);
        const auto f = rest.substr(0, end);
        rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end + 1);
        return f;
    }

    std::string code_;
};

inline BarWord bar_concat(const BarWord& a, const BarWord& b) { return a.concat(b); }

namespace detail {

inline void check_mask(const Word& w, PositionMask s) {
    if (w.degree() > max_word_length) throw DomainError("word longer than 64 letters");
    if (w.degree() < max_word_length && (s >> w.degree()) != 0)
        throw DomainError("position set exceeds word length");
}

inline PositionMask full_mask(std::size_t n) {
    return n >= 64 ? ~PositionMask{0} : (PositionMask{1} << n) - 1;
}

}  // namespace detail

inline PositionMask to_mask(std::span<const std::size_t> positions) {
    PositionMask m = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i > 0 && positions[i] <= positions[i - 1])
            throw DomainError("position sequence must be strictly increasing");
        if (positions[i] >= max_word_length) throw DomainError("position out of range");
        m |= PositionMask{1} << positions[i];
    }
    return m;
}

// a_S: the letters of w at the positions in S, in increasing order.
inline Word subword(const Word& w, PositionMask s) {
    detail::check_mask(w, s);
    Word out;
    for (std::size_t i = 0; i < w.degree(); ++i)
        if (s >> i & 1) out.push_back(w[i]);
    return out;
}

inline Word subword(const Word& w, std::span<const std::size_t> positions) {
    return subword(w, to_mask(positions));
}

// a_{J1}|...|a_{Jl} for the maximal intervals J1 < ... < Jl of [n] - S.
inline BarWord complement_components(const Word& w, PositionMask s) {
    detail::check_mask(w, s);
    BarWord out;
    Word run;
    for (std::size_t i = 0; i < w.degree(); ++i) {
        if (s >> i & 1) {
            if (!run.empty()) out = out.concat(run);
            run = Word{};
        } else {
            run.push_back(w[i]);
        }
    }
    if (!run.empty()) out = out.concat(run);
    return out;
}

inline BarWord complement_components(const Word& w, std::span<const std::size_t> positions) {
    return complement_components(w, to_mask(positions));
}

// All words of degree exactly n over `generators` letters, lexicographic.
inline std::vector<Word> words_of_degree(std::size_t generators, std::size_t n) {
    std::vector<Word> out;
    if (generators == 0) return out;
    if (n == 0) return {Word{}};
    std::vector<Letter> letters(n, 0);
    while (true) {
        out.emplace_back(std::span<const Letter>(letters));
        std::size_t i = n;
        while (i > 0 && letters[i - 1] + 1u == generators) letters[--i] = 0;
        if (i == 0) break;
        ++letters[i - 1];
    }
    return out;
}

// All words of degree 1..max_degree, ordered by degree then lexicographically.
inline std::vector<Word> all_words(std::size_t generators, std::size_t max_degree) {
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        auto ws = words_of_degree(generators, n);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

// All bar-words of total degree exactly n (n >= 1): every word of degree n
// cut by every composition of n.
inline std::vector<BarWord> bar_words_of_degree(std::size_t generators, std::size_t n) {
    std::vector<BarWord> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (const Word& w : words_of_degree(generators, n)) {
        for (PositionMask cuts = 0; cuts < (PositionMask{1} << (n - 1)); ++cuts) {
            BarWord b;
            std::size_t start = 0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                if (cuts >> i & 1) {
                    b = b.concat(w.slice(start, i + 1 - start));
                    start = i + 1;
                }
            }
            b = b.concat(w.slice(start, n - start));
            out.push_back(std::move(b));
        }
    }
    return out;
}

inline std::vector<BarWord> all_bar_words(std::size_t generators, std::size_t max_degree,
                                          bool include_unit = false) {
    std::vector<BarWord> out;
    if (include_unit) out.emplace_back();
    for (std::size_t n = 1; n <= max_degree; ++n) {
        auto bs = bar_words_of_degree(generators, n);
        out.insert(out.end(), bs.begin(), bs.end());
    }
    return out;
}

// Debug rendering: letters as 'a'+index, bars as '|', the unit as "1".
inline std::string debug_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.degree(); ++i) {
        if (w[i] < 26) s.push_back(static_cast<char>('a' + w[i]));
        else s += "<" + std::to_string(w[i]) + ">";
    }
    return s;
}

inline std::string debug_string(const BarWord& b) {
    if (b.is_unit()) return "1";
    std::string s;
    b.for_each_factor([&](const Word& w) {
        if (!s.empty()) s.push_back('|');
        s += debug_string(w);
    });
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << debug_string(w); }
inline std::ostream& operator<<(std::ostream& os, const BarWord& b) { return os << debug_string(b); }

}  // namespace nccum

template <>
struct std::hash<nccum::Word> {
    std::size_t operator()(const nccum::Word& w) const noexcept {
        return std::hash<std::string>{}(w.code());
    }
};

template <>
struct std::hash<nccum::BarWord> {
    std::size_t operator()(const nccum::BarWord& b) const noexcept {
        return std::hash<std::string>{}(b.code());
    }
};
