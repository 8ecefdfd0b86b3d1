#pragma once

// The coproduct of the double tensor algebra H = T(T(A)) and its
// splitting into left and right half-unshuffle coproducts.
//
//   Delta(a1...an) = sum_{S subset [n]} a_S (x) a_{J1}|...|a_{Jk}
//
// where J1 < ... < Jk are the maximal intervals of [n] - S. The left half
// keeps the subsets containing the first position, the right half the
// others. All three extend to bar-words multiplicatively: the full
// coproduct factor by factor, the halves by splitting only the first
// factor and multiplying with the full coproduct of the rest.
//
// The half coproducts are the "+" versions: for a word w the left half
// contains w (x) 1 and the right half contains 1 (x) w. The reduced
// versions subtract those unit terms.

#include <cstddef>
#include <cstdlib>
#include <memory>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lincomb.hpp"
#include "word.hpp"

namespace nccum {

using SplitTensor = LinComb<std::pair<BarWord, BarWord>>;
using TripleTensor = LinComb<std::tuple<BarWord, BarWord, BarWord>>;

namespace detail {

inline SplitTensor multiply(const SplitTensor& x, const SplitTensor& y) {
    SplitTensor out;
    for (const auto& [lx, cx] : x)
        for (const auto& [ly, cy] : y)
            out.add({lx.first.concat(ly.first), lx.second.concat(ly.second)}, cx * cy);
    return out;
}

inline SplitTensor unit_tensor() { return SplitTensor({BarWord{}, BarWord{}}); }

enum class Half { full, left, right };

inline SplitTensor split_word(const Word& w, Half half) {
    const std::size_t n = w.degree();
    if (n == 0) throw DomainError("coproduct of the empty word");
    if (n > 30) throw DomainError("word too long for subset enumeration");
    SplitTensor out;
    const PositionMask count = PositionMask{1} << n;
    for (PositionMask s = 0; s < count; ++s) {
        const bool has_first = (s & 1) != 0;
        if (half == Half::left && !has_first) continue;
        if (half == Half::right && has_first) continue;
        out.add({BarWord(subword(w, s)), complement_components(w, s)}, Scalar(1));
    }
    return out;
}

}  // namespace detail

// Delta on a single non-empty word: 2^n subset terms.
inline SplitTensor coproduct_word(const Word& w) {
    return detail::split_word(w, detail::Half::full);
}

// Delta on a bar-word, extended multiplicatively; Delta(1) = 1 (x) 1.
inline SplitTensor coproduct(const BarWord& u) {
    SplitTensor acc = detail::unit_tensor();
    u.for_each_factor([&](const Word& w) { acc = detail::multiply(acc, coproduct_word(w)); });
    return acc;
}

namespace detail {

inline SplitTensor half_coproduct(const BarWord& u, Half half) {
    if (u.is_unit()) throw DomainError("half coproducts are not defined on the unit");
    SplitTensor acc;
    bool first = true;
    u.for_each_factor([&](const Word& w) {
        if (first) {
            acc = split_word(w, half);
            first = false;
        } else {
            acc = multiply(acc, coproduct_word(w));
        }
    });
    return acc;
}

}  // namespace detail

// Left half-unshuffle coproduct (subsets containing the first position).
inline SplitTensor coproduct_left(const BarWord& u) {
    return detail::half_coproduct(u, detail::Half::left);
}

// Right half-unshuffle coproduct (subsets avoiding the first position).
inline SplitTensor coproduct_right(const BarWord& u) {
    return detail::half_coproduct(u, detail::Half::right);
}

inline SplitTensor reduced_coproduct(const BarWord& u) {
    SplitTensor t = coproduct(u);
    if (u.is_unit()) return SplitTensor{};
    t.add({u, BarWord{}}, Scalar(-1));
    t.add({BarWord{}, u}, Scalar(-1));
    return t;
}

inline SplitTensor reduced_coproduct_left(const BarWord& u) {
    SplitTensor t = coproduct_left(u);
    t.add({u, BarWord{}}, Scalar(-1));
    return t;
}

inline SplitTensor reduced_coproduct_right(const BarWord& u) {
    SplitTensor t = coproduct_right(u);
    t.add({BarWord{}, u}, Scalar(-1));
    return t;
}

// Projection of Delta onto T(A) (x) T(A) restricted to non-unit legs:
// the sum over splittings [n] = I1 I2 I3 into consecutive intervals with
// I2 and I1 u I3 non-empty, of a_{I1 I3} (x) a_{I2}.
inline LinComb<std::pair<Word, Word>> reduced_linearised_coproduct(const Word& w) {
    const std::size_t n = w.degree();
    if (n == 0) throw DomainError("reduced linearised coproduct of the empty word");
    LinComb<std::pair<Word, Word>> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (i == 0 && j == n) continue;
            Word outer = w.slice(0, i).concat(w.slice(j, n - j));
            out.add({outer, w.slice(i, j - i)}, Scalar(1));
        }
    }
    return out;
}

// q-1 fold left iteration of the reduced linearised coproduct:
// Dbar^[q-1] = (Dbar^[q-2] (x) id) Dbar, Dbar^[0] = id.
inline LinComb<std::vector<Word>> iterated_reduced_left(const Word& w, std::size_t q) {
    if (q < 1 || q > w.degree()) throw DomainError("iteration depth out of range");
    LinComb<std::vector<Word>> out;
    if (q == 1) {
        out.add({w}, Scalar(1));
        return out;
    }
    for (const auto& [pair, c] : reduced_linearised_coproduct(w)) {
        const auto& [outer, inner] = pair;
        if (outer.degree() < q - 1) continue;
        for (const auto& [tuple, c2] : iterated_reduced_left(outer, q - 1)) {
            auto t = tuple;
            t.push_back(inner);
            out.add(t, c * c2);
        }
    }
    return out;
}

// Per-context memo of the three coproducts. Not synchronized: confine an
// instance to one thread. When the entry count passes the cap the cache
// is dropped and rebuilt on demand.
class CoproductCache {
public:
    explicit CoproductCache(std::size_t max_entries = default_cap()) : cap_(max_entries) {}

    using Handle = std::shared_ptr<const SplitTensor>;

    Handle full(const BarWord& u) { return lookup(full_, u, [&] { return coproduct(u); }); }
    Handle left(const BarWord& u) { return lookup(left_, u, [&] { return coproduct_left(u); }); }
    Handle right(const BarWord& u) { return lookup(right_, u, [&] { return coproduct_right(u); }); }

    std::size_t size() const noexcept { return full_.size() + left_.size() + right_.size(); }

    // NCCUMULANTS_CACHE_LIMIT overrides the default entry cap.
    static std::size_t default_cap() {
        if (const char* env = std::getenv("NCCUMULANTS_CACHE_LIMIT")) {
            try {
                return static_cast<std::size_t>(std::stoull(env));
            } catch (...) {
            }
        }
        return 1u << 20;
    }

private:
    using Map = std::unordered_map<BarWord, Handle>;

    template <class Make>
    Handle lookup(Map& m, const BarWord& u, Make&& make) {
        if (auto it = m.find(u); it != m.end()) return it->second;
        if (size() >= cap_) {
            full_.clear();
            left_.clear();
            right_.clear();
        }
        return m.emplace(u, std::make_shared<const SplitTensor>(make())).first->second;
    }

    std::size_t cap_;
    Map full_, left_, right_;
};

}  // namespace nccum
