#include <gtest/gtest.h>

#include <vector>

#include "nccumulants/form.hpp"
#include "nccumulants/word_table.hpp"

using namespace nccum;

namespace {

// One-generator table with value v[n-1] on a^n.
WordTable uni(const std::vector<Scalar>& v) {
    return WordTable::generate(1, v.size(), [&](const Word& w) { return v[w.degree() - 1]; });
}

Word a(std::size_t n) { return Word::power(0, n); }

const std::vector<Scalar> ks{2, 3, Scalar(5, 7), -4, Scalar(1, 3), 6};
const Scalar k1 = ks[0], k2 = ks[1], k3 = ks[2];

WordTable random2(unsigned seed, std::size_t n) {
    return WordTable::generate(2, n, [&](const Word& w) {
        unsigned h = seed;
        for (std::size_t i = 0; i < w.degree(); ++i) h = h * 31 + w[i] + 7;
        return Scalar(long(h % 9) - 4, long(h % 3) + 1);
    });
}

}  // namespace

TEST(HalfShuffles, CubeOfOneLetter) {
    const Form k = Form::infinitesimal(uni(ks));
    Evaluator ev;
    EXPECT_EQ(ev(half_right(k, k), a(3)), 2 * k1 * k2);
    EXPECT_EQ(ev(half_left(k, k), a(3)), 3 * k1 * k2);
}

TEST(HalfShuffles, SplitConvolution) {
    const Form f = Form::character(random2(1, 5));
    const Form g = Form::infinitesimal(random2(2, 5));
    Evaluator ev;
    for (const auto& w : all_words(2, 5)) EXPECT_EQ(ev(conv(f, g), w), ev(half_left(f, g) + half_right(f, g), w));
}

TEST(HalfShuffles, UnitConventions) {
    const Form f = compose_p(Form::character(random2(3, 4)));
    const Form eps = Form::counit();
    Evaluator ev;
    for (const auto& u : all_bar_words(2, 4, true)) {
        EXPECT_EQ(ev(half_left(f, eps), u), ev(f, u));
        EXPECT_EQ(ev(half_right(eps, f), u), ev(f, u));
        EXPECT_EQ(ev(conv(eps, f), u), ev(f, u));
    }
}

TEST(HalfShuffles, AxiomA2OnThreeLetters) {
    const Form f = Form::infinitesimal(random2(4, 3));
    const Form g = Form::infinitesimal(random2(5, 3));
    const Form h = compose_p(Form::character(random2(6, 3)));
    Evaluator ev;
    const Word w{0, 1, 0};
    EXPECT_EQ(ev(half_left(half_right(f, g), h), w), ev(half_right(f, half_left(g, h)), w));
}

TEST(Evaluator, LinearCombinations) {
    const Form k = Form::infinitesimal(uni(ks));
    LinComb<BarWord> x;
    x.add(a(2), 3);
    x.add(BarWord{a(1), a(1)}, 5);
    Evaluator ev;
    EXPECT_EQ(ev.eval(k, x), 3 * k2);
}

TEST(Evaluator, MissingTableValue) {
    const Form k = Form::infinitesimal(uni({1, 2}));
    Evaluator ev;
    EXPECT_THROW(ev(k, a(3)), MissingValue);
}

TEST(ExpStar, MonotoneMomentsLowDegree) {
    const Form phi = exp_star(Form::infinitesimal(uni(ks)));
    Evaluator ev;
    EXPECT_EQ(ev(phi, a(1)), k1);
    EXPECT_EQ(ev(phi, a(2)), k2 + k1 * k1);
    EXPECT_EQ(ev(phi, a(3)), k3 + Scalar(5, 2) * k1 * k2 + k1 * k1 * k1);
}

TEST(ExpStar, LogInvertsOnWords) {
    const WordTable t = random2(7, 5);
    const Form back = log_star(exp_star(Form::infinitesimal(t)));
    Evaluator ev;
    for (const auto& w : all_words(2, 5)) EXPECT_EQ(ev(back, w), t.at(w));
}

TEST(ExpStar, RejectsFormsNotVanishingAtUnit) {
    EXPECT_THROW(exp_star(Form::counit()), InvalidForm);
    EXPECT_THROW(exp_left(Form::counit()), InvalidForm);
    EXPECT_THROW(log_star(Form::infinitesimal(uni(ks))), InvalidForm);
}

TEST(HalfExponentials, ThreeLetterExpansions) {
    const Form k = Form::infinitesimal(uni(ks));
    Evaluator ev;
    EXPECT_EQ(ev(exp_left(k), a(3)), k3 + 3 * k1 * k2 + k1 * k1 * k1);
    EXPECT_EQ(ev(exp_right(k), a(3)), k3 + 2 * k1 * k2 + k1 * k1 * k1);
    EXPECT_EQ(ev(exp_left(k), a(1)), k1);
}

// exp_left is evaluated through the fixed point X = e + a < X; compare it
// with the defining series sum_n a<(a<(...<a)) built explicitly.
TEST(HalfExponentials, FixedPointMatchesSeries) {
    const Form k = Form::infinitesimal(random2(8, 4));
    Form left_series = Form::counit(), right_series = Form::counit();
    Form left_power = k, right_power = k;
    for (int n = 1; n <= 4; ++n) {
        left_series = left_series + left_power;
        right_series = right_series + right_power;
        left_power = half_left(k, left_power);
        right_power = half_right(right_power, k);
    }
    Evaluator ev;
    for (const auto& u : all_bar_words(2, 4, true)) {
        EXPECT_EQ(ev(exp_left(k), u), ev(left_series, u));
        EXPECT_EQ(ev(exp_right(k), u), ev(right_series, u));
    }
}

TEST(HalfLogarithms, InvertHalfExponentials) {
    const WordTable t = random2(9, 5);
    const Form k = Form::infinitesimal(t);
    Evaluator ev;
    for (const auto& w : all_words(2, 5)) {
        EXPECT_EQ(ev(log_left(exp_left(k)), w), t.at(w));
        EXPECT_EQ(ev(log_right(exp_right(k)), w), t.at(w));
    }
}

TEST(HalfLogarithms, SemicircleFourthFreeCumulantVanishes) {
    const Form phi = Form::character(uni({0, 1, 0, 2}));
    Evaluator ev;
    EXPECT_EQ(ev(log_left(phi), a(4)), 0);
    EXPECT_EQ(ev(log_left(phi), a(2)), 1);
}

TEST(HalfLogarithms, BooleanSecondCumulant) {
    const Scalar m1(3, 2), m2(-2, 5);
    const Form phi = Form::character(uni({m1, m2}));
    Evaluator ev;
    EXPECT_EQ(ev(log_right(phi), a(2)), m2 - m1 * m1);
}

TEST(CharInverse, Examples) {
    Evaluator ev;
    const Form eps = Form::counit();
    for (const auto& u : all_bar_words(1, 3, true)) EXPECT_EQ(ev(char_inverse(eps), u), ev(eps, u));
    const Form phi = Form::character(uni(ks));
    EXPECT_EQ(ev(conv(phi, char_inverse(phi)), a(2)), 0);
    EXPECT_EQ(ev(char_inverse(phi), a(1)), -k1);
    EXPECT_THROW(char_inverse(Form::infinitesimal(uni(ks))), InvalidForm);
}

TEST(Evaluator, MemoizationIsTransparent) {
    const Form f = log_left(exp_star(Form::infinitesimal(random2(10, 4))));
    Evaluator cached(true), plain(false);
    for (const auto& u : all_bar_words(2, 4, true)) EXPECT_EQ(cached(f, u), plain(f, u));
    EXPECT_GT(cached.memo_size(), 0u);
    EXPECT_EQ(plain.memo_size(), 0u);
}
