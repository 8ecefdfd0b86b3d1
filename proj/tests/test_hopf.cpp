#include <gtest/gtest.h>

#include "nccumulants/hopf.hpp"
#include "nccumulants/partitions.hpp"

using namespace nccum;

namespace {
const Word a1{0}, a2{1}, a3{2};
const BarWord one{};

SplitTensor terms(std::initializer_list<std::pair<BarWord, BarWord>> ts) {
    SplitTensor t;
    for (const auto& p : ts) t.add(p, 1);
    return t;
}
}  // namespace

TEST(Coproduct, Letter) { EXPECT_EQ(coproduct_word(a1), terms({{a1, one}, {one, a1}})); }

TEST(Coproduct, TwoLetters) {
    const Word w{0, 1};
    EXPECT_EQ(coproduct_word(w), terms({{w, one}, {one, w}, {a1, a2}, {a2, a1}}));
}

TEST(Coproduct, ThreeLettersContainsBarTerm) {
    EXPECT_EQ(coproduct_word(Word{0, 1, 2}).coefficient({a2, BarWord{a1, a3}}), 1);
}

TEST(Coproduct, Unit) { EXPECT_EQ(coproduct(one), terms({{one, one}})); }

TEST(Coproduct, BarWordIsMultiplicative) {
    const BarWord u{a1, a2};
    EXPECT_EQ(coproduct(u), terms({{u, one}, {a1, a2}, {a2, a1}, {one, u}}));
}

TEST(Coproduct, Graded) {
    for (const auto& [legs, c] : coproduct(BarWord{Word{0, 1}, a3})) EXPECT_EQ(legs.first.degree() + legs.second.degree(), 3u);
}

TEST(HalfCoproducts, Examples) {
    const Word w{0, 1};
    EXPECT_EQ(coproduct_left(w), terms({{w, one}, {a1, a2}}));
    EXPECT_EQ(coproduct_left(a1), terms({{a1, one}}));
    EXPECT_EQ(coproduct_right(w), terms({{one, w}, {a2, a1}}));
    EXPECT_EQ(coproduct_right(a1), terms({{one, a1}}));
    const Word w3{0, 1, 2};
    EXPECT_EQ(coproduct_right(w3),
              terms({{one, w3}, {a2, BarWord{a1, a3}}, {a3, Word{0, 1}}, {Word{1, 2}, a1}}));
    EXPECT_EQ(coproduct_left(w3) + coproduct_right(w3), coproduct(w3));
    EXPECT_EQ(coproduct(w3).size(), 8u);
    EXPECT_THROW(coproduct_left(one), DomainError);
}

TEST(ReducedLinearised, OneGenerator) {
    const Word a{0};
    EXPECT_TRUE(reduced_linearised_coproduct(a).empty());
    LinComb<std::pair<Word, Word>> sq;
    sq.add({a, a}, 2);
    EXPECT_EQ(reduced_linearised_coproduct(Word::power(0, 2)), sq);
    // Coefficient of a^k (x) a^(l-k) is k+1: here 3 a^2 (x) a + 2 a (x) a^2.
    LinComb<std::pair<Word, Word>> cube;
    cube.add({Word::power(0, 2), a}, 3);
    cube.add({a, Word::power(0, 2)}, 2);
    EXPECT_EQ(reduced_linearised_coproduct(Word::power(0, 3)), cube);
    for (std::size_t l = 2; l <= 7; ++l)
        for (std::size_t k = 1; k < l; ++k)
            EXPECT_EQ(reduced_linearised_coproduct(Word::power(0, l))
                          .coefficient({Word::power(0, k), Word::power(0, l - k)}),
                      Scalar(long(k + 1)));
}

TEST(IteratedReducedLeft, PowerOfOneLetter) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto t = iterated_reduced_left(Word::power(0, n), n);
        EXPECT_EQ(t.size(), 1u);
        EXPECT_EQ(t.coefficient(std::vector<Word>(n, Word{0})), factorial(static_cast<unsigned>(n)));
    }
}

TEST(IteratedReducedLeft, QEqualsOne) {
    const Word w{0, 1, 2};
    EXPECT_EQ(iterated_reduced_left(w, 1), (LinComb<std::vector<Word>>(std::vector<Word>{w})));
}

TEST(IteratedReducedLeft, MatchesMonotonePartitions) {
    const Word w{0, 1, 2};
    LinComb<std::vector<Word>> expect;
    for (auto t : std::vector<std::vector<Word>>{{Word{0, 1}, a3}, {Word{0, 2}, a2}, {Word{1, 2}, a1},
                                                  {a1, Word{1, 2}}, {a3, Word{0, 1}}})
        expect.add(t, 1);
    EXPECT_EQ(iterated_reduced_left(w, 2), expect);
    EXPECT_EQ(enumerate_monotone(3, 2).size(), 5u);
}

TEST(CoproductCache, ReturnsSameValues) {
    CoproductCache cache;
    for (const auto& u : all_bar_words(2, 4, false)) {
        EXPECT_EQ(*cache.left(u), coproduct_left(u));
        EXPECT_EQ(*cache.right(u), coproduct_right(u));
    }
}

TEST(CoproductCache, SmallCapStillCorrect) {
    CoproductCache cache(3);
    for (int round = 0; round < 2; ++round)
        for (const auto& u : all_bar_words(1, 4, false)) EXPECT_EQ(*cache.full(u), coproduct(u));
    EXPECT_LE(cache.size(), 3u * 3u);
}
