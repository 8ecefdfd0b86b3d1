#pragma once

// Pre-Lie calculus on infinitesimal characters.
//
//   a |> b = a > b - b < a
//   W(a)   = sum_{k>=0} 1/(k+1)! (L_{a|>})^k (a)
//   O(a)   = sum_{m>=0} B_m/m! (L_{O(a)|>})^m (a)      (pre-Lie Magnus expansion)
//
// Infinitesimal characters are materialized as word tables up to a fixed
// degree N. Every application of |> kills degree 1 and only reads strictly
// lower degrees of its arguments, so all series above are finite on words
// of degree <= N.

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "form.hpp"
#include "scalar.hpp"
#include "word_table.hpp"

namespace nccum {

// Word-support of an infinitesimal character up to its table's max degree.
using InfChar = WordTable;

namespace detail {

inline void check_same_shape(const InfChar& a, const InfChar& b) {
    if (a.generators() != b.generators() || a.max_degree() != b.max_degree())
        throw DomainError("infinitesimal characters over different alphabets or degree bounds");
}

}  // namespace detail

// a |> b, evaluated as the form (a > b - b < a) on every word up to N.
inline InfChar triangle(const InfChar& a, const InfChar& b) {
    detail::check_same_shape(a, b);
    const Form fa = Form::infinitesimal(a);
    const Form fb = Form::infinitesimal(b);
    const Form t = half_right(fa, fb) - half_left(fb, fa);
    Evaluator ev;
    return InfChar::generate(a.generators(), a.max_degree(), [&](const Word& w) { return ev(t, w); });
}

// Bernoulli numbers with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
class BernoulliCache {
public:
    const Scalar& at(std::size_t m) {
        while (values_.size() <= m) {
            const std::size_t k = values_.size();
            if (k == 0) {
                values_.emplace_back(1);
                continue;
            }
            if (k >= 3 && k % 2 == 1) {
                values_.emplace_back(0);
                continue;
            }
            Scalar s = 0;
            for (std::size_t j = 0; j < k; ++j)
                s += binomial(static_cast<unsigned>(k + 1), static_cast<unsigned>(j)) * values_[j];
            values_.push_back(-s / Scalar(static_cast<long>(k + 1)));
        }
        return values_[m];
    }

private:
    std::vector<Scalar> values_;
};

inline Scalar bernoulli(std::size_t m) {
    BernoulliCache cache;
    return cache.at(m);
}

// W(a) = a + 1/2 a|>a + 1/6 a|>(a|>a) + ...
inline InfChar w_map(const InfChar& a) {
    InfChar result = a;
    InfChar term = a;
    for (std::size_t k = 1; k < a.max_degree(); ++k) {
        term = triangle(a, term);
        result = result + term.scaled(Scalar(1) / factorial(static_cast<unsigned>(k + 1)));
    }
    return result;
}

// Pre-Lie Magnus expansion by graded fixed-point iteration: starting from
// O = a, recompute the Bernoulli series with the current O. The degree-n
// slice is final after n rounds.
inline InfChar magnus(const InfChar& a) {
    BernoulliCache bern;
    const std::size_t n = a.max_degree();
    InfChar omega = a;
    for (std::size_t round = 0; round < n; ++round) {
        InfChar next = a;
        InfChar term = a;
        for (std::size_t m = 1; m < n; ++m) {
            term = triangle(omega, term);
            const Scalar& b = bern.at(m);
            if (b != 0) next = next + term.scaled(b / factorial(static_cast<unsigned>(m)));
        }
        if (next == omega) break;
        omega = std::move(next);
    }
    return omega;
}

}  // namespace nccum
