#pragma once

// Linear forms on H = T(T(A)) and the shuffle-algebra calculus on them.
//
// A Form is an immutable expression DAG. Leaves are the counit and forms
// read off a word table (either extended as a character, multiplicative
// on bar-words, or as an infinitesimal character, vanishing on the unit
// and on every bar-word with two or more factors). Inner nodes are sums,
// scalings, the convolution product and its two half-shuffle pieces,
// the convolution inverse of a character, and the three exponentials and
// the shuffle logarithm.
//
// Values are produced by an Evaluator, which owns the memo tables. Each
// series is evaluated as a finite sum: on an argument of degree n only
// the first n convolution powers can be nonzero.
//
// Half-shuffles at non-unit arguments are evaluated against the "+" half
// coproducts, which is the same as splitting each operand into its value
// on the unit times the counit plus its reduced part and applying
//   f < e = f = e > f,   e < f = 0 = f > e
// termwise. At the unit both half-shuffles are 0.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "errors.hpp"
#include "hopf.hpp"
#include "lincomb.hpp"
#include "scalar.hpp"
#include "word.hpp"
#include "word_table.hpp"

namespace nccum {

enum class ConvKind { full, left, right };

using WordFunction = std::function<Scalar(const Word&)>;

namespace detail {

struct FormNode {
    enum class Kind {
        counit,
        character,
        infinitesimal,
        sum,
        scale,
        conv,
        compose_p,
        char_inverse,
        exp_star,
        log_star,
        exp_left,
        exp_right,
    };

    Kind kind = Kind::counit;
    ConvKind conv = ConvKind::full;
    Scalar coeff;
    WordFunction table;
    std::shared_ptr<const FormNode> a, b;
};

using NodePtr = std::shared_ptr<const FormNode>;

inline NodePtr make_node(FormNode n) { return std::make_shared<const FormNode>(std::move(n)); }

}  // namespace detail

class Evaluator;

class Form {
public:
    // The zero form.
    Form() : Form(zero_node()) {}

    static Form counit() {
        static const detail::NodePtr n = detail::make_node({});
        return Form(n);
    }

    // The character extending `values`: 1 on the unit, multiplicative on bars.
    static Form character(WordFunction values) {
        detail::FormNode n;
        n.kind = detail::FormNode::Kind::character;
        n.table = std::move(values);
        return Form(detail::make_node(std::move(n)));
    }
    static Form character(const WordTable& t) { return character(table_function(t)); }

    // The infinitesimal character extending `values`.
    static Form infinitesimal(WordFunction values) {
        detail::FormNode n;
        n.kind = detail::FormNode::Kind::infinitesimal;
        n.table = std::move(values);
        return Form(detail::make_node(std::move(n)));
    }
    static Form infinitesimal(const WordTable& t) { return infinitesimal(table_function(t)); }

    friend Form operator+(const Form& f, const Form& g) {
        detail::FormNode n;
        n.kind = detail::FormNode::Kind::sum;
        n.a = f.node_;
        n.b = g.node_;
        return Form(detail::make_node(std::move(n)));
    }
    friend Form operator*(const Scalar& c, const Form& f) {
        detail::FormNode n;
        n.kind = detail::FormNode::Kind::scale;
        n.coeff = c;
        n.a = f.node_;
        return Form(detail::make_node(std::move(n)));
    }
    friend Form operator-(const Form& f) { return Scalar(-1) * f; }
    friend Form operator-(const Form& f, const Form& g) { return f + (-g); }

    const detail::NodePtr& node() const noexcept { return node_; }

private:
    friend Form conv(const Form&, const Form&);
    friend Form half_left(const Form&, const Form&);
    friend Form half_right(const Form&, const Form&);
    friend Form compose_p(const Form&);
    friend Form char_inverse(const Form&);
    friend Form exp_star(const Form&);
    friend Form log_star(const Form&);
    friend Form exp_left(const Form&);
    friend Form exp_right(const Form&);

    explicit Form(detail::NodePtr n) : node_(std::move(n)) {}

    static detail::NodePtr zero_node() {
        static const detail::NodePtr n = [] {
            detail::FormNode z;
            z.kind = detail::FormNode::Kind::scale;
            z.coeff = 0;
            z.a = counit().node_;
            return detail::make_node(std::move(z));
        }();
        return n;
    }

    static WordFunction table_function(const WordTable& t) {
        auto shared = std::make_shared<const WordTable>(t);
        return [shared](const Word& w) -> Scalar { return shared->at(w); };
    }

    static Form binary(detail::FormNode::Kind kind, ConvKind c, const Form& f, const Form& g) {
        detail::FormNode n;
        n.kind = kind;
        n.conv = c;
        n.a = f.node_;
        n.b = g.node_;
        return Form(detail::make_node(std::move(n)));
    }
    static Form unary(detail::FormNode::Kind kind, const Form& f) {
        detail::FormNode n;
        n.kind = kind;
        n.a = f.node_;
        return Form(detail::make_node(std::move(n)));
    }

    detail::NodePtr node_;
};

// Evaluation context. Holds the memo tables for forms and coproducts; not
// synchronized, so use one Evaluator per thread. Results do not depend on
// whether memoization is on.
class Evaluator {
public:
    explicit Evaluator(bool memoize = true) : memoize_(memoize) {}

    Scalar operator()(const Form& f, const BarWord& u) { return eval(f, u); }

    Scalar eval(const Form& f, const BarWord& u) {
        pinned_.insert(f.node());
        return eval_node(f.node().get(), u);
    }

    Scalar eval(const Form& f, const LinComb<BarWord>& x) {
        Scalar s = 0;
        for (const auto& [u, c] : x) s += c * eval(f, u);
        return s;
    }

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    using Node = detail::FormNode;
    using Kind = Node::Kind;

    struct Key {
        const Node* node;
        std::uint32_t aux;  // 0: plain value; j+1: j-th convolution power
        BarWord u;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            std::size_t h = std::hash<BarWord>{}(k.u);
            h ^= std::hash<const void*>{}(k.node) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= std::hash<std::uint32_t>{}(k.aux) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }
    };

    template <class Compute>
    Scalar memoized(const Node* n, std::uint32_t aux, const BarWord& u, Compute&& compute) {
        if (!memoize_) return compute();
        Key key{n, aux, u};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Scalar v = compute();
        memo_.emplace(std::move(key), v);
        return v;
    }

    CoproductCache::Handle split(ConvKind kind, const BarWord& u) {
        if (!memoize_) {
            switch (kind) {
                case ConvKind::full: return std::make_shared<const SplitTensor>(coproduct(u));
                case ConvKind::left: return std::make_shared<const SplitTensor>(coproduct_left(u));
                case ConvKind::right: return std::make_shared<const SplitTensor>(coproduct_right(u));
            }
        }
        switch (kind) {
            case ConvKind::full: return coproducts_.full(u);
            case ConvKind::left: return coproducts_.left(u);
            case ConvKind::right: return coproducts_.right(u);
        }
        return {};
    }

    Scalar eval_node(const Node* n, const BarWord& u) {
        switch (n->kind) {
            case Kind::counit:
                return Scalar(u.is_unit() ? 1 : 0);
            case Kind::character: {
                Scalar p = 1;
                u.for_each_factor([&](const Word& w) {
                    if (p != 0) p *= canonical(n->table(w));
                });
                return p;
            }
            case Kind::infinitesimal:
                if (u.factor_count() != 1) return Scalar(0);
                return canonical(n->table(u.as_word()));
            case Kind::sum:
                return eval_node(n->a.get(), u) + eval_node(n->b.get(), u);
            case Kind::scale:
                if (n->coeff == 0) return Scalar(0);
                return n->coeff * eval_node(n->a.get(), u);
            case Kind::compose_p:
                if (u.is_unit()) return Scalar(0);
                return eval_node(n->a.get(), u);
            default:
                break;
        }
        return memoized(n, 0, u, [&] { return eval_composite(n, u); });
    }

    Scalar eval_composite(const Node* n, const BarWord& u) {
        switch (n->kind) {
            case Kind::conv: {
                if (n->conv != ConvKind::full && u.is_unit()) return Scalar(0);
                const auto terms = split(n->conv, u);
                Scalar s = 0;
                for (const auto& [legs, c] : *terms) {
                    Scalar left = eval_node(n->a.get(), legs.first);
                    if (left == 0) continue;
                    s += c * left * eval_node(n->b.get(), legs.second);
                }
                return s;
            }
            case Kind::char_inverse: {
                // sum_i (-1)^i (f o P)^{*i}; n->a is already f o P.
                if (u.is_unit()) return Scalar(1);
                Scalar s = 0;
                for (std::size_t i = 1; i <= u.degree(); ++i) {
                    Scalar t = power(n->a.get(), i, u);
                    s += (i % 2 == 0) ? t : Scalar(-t);
                }
                return s;
            }
            case Kind::exp_star: {
                if (u.is_unit()) return Scalar(1);
                Scalar s = 0;
                for (std::size_t j = 1; j <= u.degree(); ++j) s += power(n->a.get(), j, u) / factorial(j);
                return s;
            }
            case Kind::log_star: {
                if (u.is_unit()) return Scalar(0);
                Scalar s = 0;
                for (std::size_t l = 1; l <= u.degree(); ++l) {
                    Scalar t = power(n->a.get(), l, u) / Scalar(static_cast<long>(l));
                    s += (l % 2 == 1) ? t : Scalar(-t);
                }
                return s;
            }
            case Kind::exp_left: {
                // X = e + a < X; left legs are never the unit, so r has lower degree.
                if (u.is_unit()) return Scalar(1);
                Scalar s = 0;
                const auto terms = split(ConvKind::left, u);
                for (const auto& [legs, c] : *terms) {
                    Scalar left = eval_node(n->a.get(), legs.first);
                    if (left == 0) continue;
                    s += c * left * eval_node(n, legs.second);
                }
                return s;
            }
            case Kind::exp_right: {
                // Z = e + Z > a; right legs always carry the first letter.
                if (u.is_unit()) return Scalar(1);
                Scalar s = 0;
                const auto terms = split(ConvKind::right, u);
                for (const auto& [legs, c] : *terms) {
                    Scalar right = eval_node(n->a.get(), legs.second);
                    if (right == 0) continue;
                    s += c * eval_node(n, legs.first) * right;
                }
                return s;
            }
            default:
                break;
        }
        throw Error("unhandled form node");
    }

    // base^{*j}(u) for a base vanishing on the unit.
    Scalar power(const Node* base, std::size_t j, const BarWord& u) {
        if (j == 0) return Scalar(u.is_unit() ? 1 : 0);
        if (j > u.degree()) return Scalar(0);
        if (j == 1) return eval_node(base, u);
        return memoized(base, static_cast<std::uint32_t>(j + 1), u, [&] {
            Scalar s = 0;
            const auto terms = split(ConvKind::full, u);
            for (const auto& [legs, c] : *terms) {
                if (legs.first.is_unit()) continue;
                Scalar left = eval_node(base, legs.first);
                if (left == 0) continue;
                s += c * left * power(base, j - 1, legs.second);
            }
            return s;
        });
    }

    bool memoize_;
    CoproductCache coproducts_;
    std::unordered_map<Key, Scalar, KeyHash> memo_;
    // Nodes whose addresses appear in memo keys stay alive with the context.
    std::unordered_set<detail::NodePtr> pinned_;
};

namespace detail {

inline Scalar value_at_unit(const Form& f) {
    Evaluator ev;
    return ev(f, BarWord{});
}

inline void require_vanishing_at_unit(const Form& f, const char* what) {
    if (value_at_unit(f) != 0) throw InvalidForm(std::string(what) + ": argument must vanish on the unit");
}

inline void require_unital(const Form& f, const char* what) {
    if (value_at_unit(f) != 1) throw InvalidForm(std::string(what) + ": argument must take the value 1 on the unit");
}

}  // namespace detail

// f * g = m o (f (x) g) o Delta.
inline Form conv(const Form& f, const Form& g) {
    return Form::binary(detail::FormNode::Kind::conv, ConvKind::full, f, g);
}

// f < g, the left half-shuffle.
inline Form half_left(const Form& f, const Form& g) {
    return Form::binary(detail::FormNode::Kind::conv, ConvKind::left, f, g);
}

// f > g, the right half-shuffle.
inline Form half_right(const Form& f, const Form& g) {
    return Form::binary(detail::FormNode::Kind::conv, ConvKind::right, f, g);
}

// f o P with P = id - u: f on H+, zero on the unit.
inline Form compose_p(const Form& f) { return Form::unary(detail::FormNode::Kind::compose_p, f); }

// Convolution inverse of a unital form, Phi o S = sum_i (-1)^i (Phi o P)^{*i}.
inline Form char_inverse(const Form& phi) {
    detail::require_unital(phi, "char_inverse");
    return Form::unary(detail::FormNode::Kind::char_inverse, compose_p(phi));
}

inline Form exp_star(const Form& alpha) {
    detail::require_vanishing_at_unit(alpha, "exp_star");
    return Form::unary(detail::FormNode::Kind::exp_star, alpha);
}

// log*(Phi) = sum_{l>=1} (-1)^{l-1}/l (Phi o P)^{*l}.
inline Form log_star(const Form& phi) {
    detail::require_unital(phi, "log_star");
    return Form::unary(detail::FormNode::Kind::log_star, compose_p(phi));
}

// Solution of X = e + alpha < X.
inline Form exp_left(const Form& alpha) {
    detail::require_vanishing_at_unit(alpha, "exp_left");
    return Form::unary(detail::FormNode::Kind::exp_left, alpha);
}

// Solution of Z = e + Z > alpha.
inline Form exp_right(const Form& alpha) {
    detail::require_vanishing_at_unit(alpha, "exp_right");
    return Form::unary(detail::FormNode::Kind::exp_right, alpha);
}

// (Phi - e) < Phi^{-1}.
inline Form log_left(const Form& phi) { return half_left(compose_p(phi), char_inverse(phi)); }

// Phi^{-1} > (Phi - e).
inline Form log_right(const Form& phi) { return half_right(char_inverse(phi), compose_p(phi)); }

}  // namespace nccum
