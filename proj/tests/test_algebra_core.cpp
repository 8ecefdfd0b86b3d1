#include <gtest/gtest.h>

#include <vector>

#include "nccumulants/errors.hpp"
#include "nccumulants/lincomb.hpp"
#include "nccumulants/scalar.hpp"
#include "nccumulants/word.hpp"
#include "nccumulants/word_table.hpp"

using namespace nccum;

namespace {
const Word a1{0}, a2{1}, a3{2}, a4{3};
const Word w123{0, 1, 2};
}  // namespace

TEST(Scalar, ParsesExactRationals) {
    EXPECT_EQ(parse_scalar("5/2"), Scalar(5, 2));
    EXPECT_EQ(parse_scalar("-7"), Scalar(-7));
    EXPECT_EQ(parse_scalar("4/6"), Scalar(2, 3));
    EXPECT_EQ(to_string(parse_scalar("4/6")), "2/3");
    EXPECT_EQ(to_string(parse_scalar("-0")), "0");
    for (const char* bad : {"", "1.5", "1/0", "a", "1/-2", " 1", "1/", "/2", "1e3"})
        EXPECT_THROW(parse_scalar(bad), ParseError) << bad;
}

TEST(Scalar, FactorialAndBinomial) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(6), 720);
    EXPECT_EQ(binomial(6, 3), 20);
    EXPECT_EQ(binomial(3, 5), 0);
}

TEST(BarConcat, Examples) {
    const BarWord left{a1.concat(a2), a3};
    EXPECT_EQ(bar_concat(left, BarWord{a4}), (BarWord{a1.concat(a2), a3, a4}));
    EXPECT_EQ(bar_concat(BarWord{}, BarWord{a1, a2}), (BarWord{a1, a2}));
    const BarWord split = bar_concat(BarWord{a1}, BarWord{a2});
    EXPECT_EQ(split.factor_count(), 2u);
    EXPECT_NE(split, BarWord(a1.concat(a2)));
}

TEST(BarWord, UnitAndDegree) {
    EXPECT_TRUE(BarWord{}.is_unit());
    EXPECT_TRUE(BarWord(Word{}).is_unit());
    EXPECT_EQ((BarWord{a1, Word{}, a2}).factor_count(), 2u);
    EXPECT_EQ((BarWord{w123, a1}).degree(), 4u);
    EXPECT_EQ(debug_string(BarWord{w123, a1}), "abc|a");
    EXPECT_EQ(debug_string(BarWord{}), "1");
}

TEST(BarWord, OrderingIsStrictWeak) {
    const auto bars = all_bar_words(2, 4, true);
    for (std::size_t i = 0; i + 1 < bars.size(); ++i) EXPECT_TRUE(bars[i] < bars[i + 1] || bars[i + 1] < bars[i]);
    for (const auto& b : bars) EXPECT_FALSE(b < b);
}

TEST(Subword, Examples) {
    const std::vector<std::size_t> s13{0, 2}, none{}, all{0, 1, 2};
    EXPECT_EQ(subword(w123, s13), (Word{0, 2}));
    EXPECT_EQ(subword(w123, none), Word{});
    EXPECT_EQ(subword(w123, all), w123);
    const std::vector<std::size_t> bad{3};
    EXPECT_THROW(subword(w123, bad), DomainError);
}

TEST(ComplementComponents, Examples) {
    const std::vector<std::size_t> s2{1}, s13{0, 2}, all{0, 1, 2};
    EXPECT_EQ(complement_components(w123, s2), (BarWord{a1, a3}));
    EXPECT_EQ(complement_components(w123, s13), BarWord(a2));
    EXPECT_TRUE(complement_components(w123, all).is_unit());
}

TEST(Words, Enumeration) {
    EXPECT_EQ(words_of_degree(2, 3).size(), 8u);
    EXPECT_EQ(all_words(2, 5).size(), 62u);
    // bar-words of degree n over k letters: k^n * 2^(n-1)
    EXPECT_EQ(bar_words_of_degree(2, 3).size(), 32u);
    EXPECT_EQ(all_bar_words(1, 3, true).size(), 1u + 1u + 2u + 4u);
    const auto ws = all_words(2, 3);
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
    EXPECT_EQ(ws.front(), a1);
}

TEST(LinComb, Arithmetic) {
    LinComb<Word> x;
    x.add(w123, Scalar(2, 3));
    x.add(w123, Scalar(1, 3));
    EXPECT_EQ(x.coefficient(w123), 1);
    EXPECT_EQ(x.size(), 1u);

    LinComb<Word> y(a1, 5);
    y += x;
    EXPECT_TRUE((y + Scalar(-1) * y).empty());
    EXPECT_TRUE((Scalar(0) * y).empty());
    EXPECT_TRUE((y - y).empty());

    const auto t = tensor(LinComb<Word>(a1, 2), LinComb<Word>(a2, 3));
    EXPECT_EQ(t.coefficient({a1, a2}), 6);
}

TEST(WordTable, TotalityAndArithmetic) {
    const WordTable t = WordTable::generate(2, 3, [](const Word& w) { return Scalar(long(w.degree())); });
    EXPECT_EQ(t.values().size(), 14u);
    EXPECT_EQ(t.at(w123.slice(0, 2)), 2);
    EXPECT_THROW(t.at(Word{0, 0, 0, 0}), MissingValue);
    EXPECT_TRUE((t - t).is_zero());
    EXPECT_EQ(t.truncated(2).values().size(), 6u);
    WordTable u = t;
    u.set(Word{1, 1}, 7);
    EXPECT_EQ(t.first_difference(u), (Word{1, 1}));
    EXPECT_FALSE(t.first_difference(t));
    EXPECT_THROW(WordTable(0, 3), DomainError);
}

TEST(WordTable, StoresCanonicalValues) {
    const WordTable t = WordTable::generate(1, 2, [](const Word&) { return Scalar(4, 6); });
    EXPECT_EQ(t.at(Word{0}), Scalar(2, 3));
    EXPECT_EQ(to_string(t.at(Word{0, 0})), "2/3");
}
