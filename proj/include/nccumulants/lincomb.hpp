#pragma once

// Sparse finite linear combinations over an ordered basis with exact
// rational coefficients. Zero coefficients are never stored.

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>

#include "scalar.hpp"

namespace nccum {

template <class Basis>
class LinComb {
public:
    using basis_type = Basis;
    using container_type = std::map<Basis, Scalar>;
    using const_iterator = typename container_type::const_iterator;

    LinComb() = default;
    explicit LinComb(const Basis& b, Scalar c = 1) { add(b, std::move(c)); }

    void add(const Basis& b, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Scalar coefficient(const Basis& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinComb& operator*=(const Scalar& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    // Apply a linear map given on basis elements: sum_b c_b * f(b).
    template <class F>
    auto map_linear(F&& f) const {
        using Out = decltype(f(std::declval<const Basis&>()));
        Out out;
        for (const auto& [b, c] : terms_) {
            Out img = f(b);
            img *= c;
            out += img;
        }
        return out;
    }

private:
    container_type terms_;
};

// a (x) b: pairs every term of `a` with every term of `b`.
template <class A, class B>
LinComb<std::pair<A, B>> tensor(const LinComb<A>& a, const LinComb<B>& b) {
    LinComb<std::pair<A, B>> out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add({x, y}, cx * cy);
    return out;
}

}  // namespace nccum
