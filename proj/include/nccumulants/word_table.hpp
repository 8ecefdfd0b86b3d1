#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "errors.hpp"
#include "scalar.hpp"
#include "word.hpp"

namespace nccum {

// A total map from all words of degree 1..max_degree over a fixed
// alphabet to exact scalars. The word-support of a character (moments)
// or of an infinitesimal character (cumulants).
class WordTable {
public:
    WordTable() = default;
    WordTable(std::size_t generators, std::size_t max_degree)
        : generators_(generators), max_degree_(max_degree) {
        if (generators == 0 || generators > max_alphabet_size)
            throw DomainError("alphabet size out of range");
        for (const Word& w : all_words(generators, max_degree)) values_.emplace(w, Scalar(0));
    }

    template <class F>
    static WordTable generate(std::size_t generators, std::size_t max_degree, F&& value_of) {
        WordTable t(generators, max_degree);
        for (auto& [w, v] : t.values_) v = canonical(value_of(w));
        return t;
    }

    std::size_t generators() const noexcept { return generators_; }
    std::size_t max_degree() const noexcept { return max_degree_; }

    bool contains(const Word& w) const { return values_.count(w) != 0; }

    const Scalar& at(const Word& w) const {
        auto it = values_.find(w);
        if (it == values_.end())
            throw MissingValue("no value for word " + debug_string(w) + " (table covers degree <= " +
                               std::to_string(max_degree_) + ")");
        return it->second;
    }

    void set(const Word& w, Scalar v) {
        auto it = values_.find(w);
        if (it == values_.end()) throw DomainError("word outside the table's range: " + debug_string(w));
        it->second = canonical(std::move(v));
    }

    // Entries in (degree, lexicographic) order.
    const std::map<Word, Scalar>& values() const noexcept { return values_; }

    WordTable scaled(const Scalar& s) const {
        WordTable t = *this;
        for (auto& [w, v] : t.values_) v *= s;
        return t;
    }
    WordTable negated() const { return scaled(Scalar(-1)); }

    // Restriction to words of degree <= n.
    WordTable truncated(std::size_t n) const {
        if (n > max_degree_) throw MissingValue("cannot extend a table beyond its max degree");
        WordTable t(generators_, n);
        for (auto& [w, v] : t.values_) v = at(w);
        return t;
    }

    friend WordTable operator+(const WordTable& a, const WordTable& b) {
        a.check_compatible(b);
        WordTable t = a;
        for (auto& [w, v] : t.values_) v += b.at(w);
        return t;
    }
    friend WordTable operator-(const WordTable& a, const WordTable& b) {
        a.check_compatible(b);
        WordTable t = a;
        for (auto& [w, v] : t.values_) v -= b.at(w);
        return t;
    }

    friend bool operator==(const WordTable& a, const WordTable& b) = default;

    // First word (in table order) on which the two tables differ.
    std::optional<Word> first_difference(const WordTable& o) const {
        check_compatible(o);
        for (const auto& [w, v] : values_)
            if (v != o.at(w)) return w;
        return std::nullopt;
    }

    bool is_zero() const {
        for (const auto& [w, v] : values_)
            if (v != 0) return false;
        return true;
    }

private:
    void check_compatible(const WordTable& o) const {
        if (generators_ != o.generators_ || max_degree_ != o.max_degree_)
            throw DomainError("word tables over different alphabets or degree bounds");
    }

    std::size_t generators_ = 0;
    std::size_t max_degree_ = 0;
    std::map<Word, Scalar> values_;
};

}  // namespace nccum
