#pragma once

// Moment <-> cumulant and cumulant <-> cumulant conversions.
//
// Every conversion has a primary route through the shuffle calculus on
// linear forms (half-shuffle exponentials and logarithms, the shuffle
// exponential and logarithm, the pre-Lie Magnus expansion and W) and an
// independent route through partition sums or direct recursions. The
// public entry points run both and throw RouteMismatch if they differ.
//
//   free      Phi = exp<(kappa)       moments = sum over NC of k_pi
//   boolean   Phi = exp>(beta)        moments = sum over interval partitions of r_pi
//   monotone  Phi = exp*(rho)         moments = sum over NC of h_pi / tau(pi)!
//
//   rho = O(kappa)       beta  = -W(-O(kappa))
//   rho = -O(-beta)      kappa = W(-O(-beta))
//   kappa = W(rho)       beta  = -W(-rho)

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "form.hpp"
#include "partitions.hpp"
#include "prelie.hpp"
#include "scalar.hpp"
#include "word.hpp"
#include "word_table.hpp"

namespace nccum {

enum class CumulantKind { moment, free, boolean, monotone };

inline std::string_view to_string(CumulantKind k) {
    switch (k) {
        case CumulantKind::moment: return "moment";
        case CumulantKind::free: return "free";
        case CumulantKind::boolean: return "boolean";
        case CumulantKind::monotone: return "monotone";
    }
    return "?";
}

// Accepts "moment" and "moments" for the moment kind.
inline CumulantKind parse_kind(std::string_view s) {
    if (s == "moment" || s == "moments") return CumulantKind::moment;
    if (s == "free") return CumulantKind::free;
    if (s == "boolean") return CumulantKind::boolean;
    if (s == "monotone") return CumulantKind::monotone;
    throw ParseError("unknown table kind \"" + std::string(s) + "\"");
}

// Values on every word of degree 1..N over the alphabet, tagged with what
// they are. For moments the value 1 on the empty word is implicit.
struct CumulantTable {
    CumulantKind kind = CumulantKind::moment;
    WordTable values;

    friend bool operator==(const CumulantTable&, const CumulantTable&) = default;
};

// Default degree bound per alphabet size.
inline std::size_t default_max_degree(std::size_t generators) {
    switch (generators) {
        case 1: return 6;
        case 2: return 5;
        case 3: return 4;
        default: return 3;
    }
}

// Guards the combinatorial blowup: 2^N subsets per coproduct call and
// Catalan-many partitions per word.
inline void check_size_caps(std::size_t generators, std::size_t max_degree) {
    if (generators == 0 || generators > max_alphabet_size) throw DomainError("alphabet size out of range");
    if (max_degree == 0 || max_degree > 10) throw DomainError("degree bound must be in 1..10");
    double work = 1;
    for (std::size_t i = 0; i < max_degree; ++i) work *= 2.0 * static_cast<double>(generators);
    if (work > double(1u << 20)) throw DomainError("alphabet size and degree bound exceed the work cap");
}

namespace routes {

inline WordFunction lookup(const WordTable& t) {
    return [&t](const Word& w) -> Scalar { return t.at(w); };
}

// --- cumulants -> moments -------------------------------------------------

// exp<(kappa), exp>(beta) or exp*(rho), evaluated on every word.
inline WordTable moments_via_exponential(const CumulantTable& c) {
    const Form a = Form::infinitesimal(c.values);
    Form phi;
    switch (c.kind) {
        case CumulantKind::free: phi = exp_left(a); break;
        case CumulantKind::boolean: phi = exp_right(a); break;
        case CumulantKind::monotone: phi = exp_star(a); break;
        case CumulantKind::moment: throw DomainError("table already holds moments");
    }
    Evaluator ev;
    return WordTable::generate(c.values.generators(), c.values.max_degree(),
                               [&](const Word& w) { return ev(phi, w); });
}

// Sums over NC (free), interval (boolean) or NC weighted by 1/tau! (monotone).
inline WordTable moments_via_partitions(const CumulantTable& c) {
    PartitionFamily family = PartitionFamily::noncrossing;
    PartitionWeight weight = PartitionWeight::one;
    switch (c.kind) {
        case CumulantKind::free: break;
        case CumulantKind::boolean: family = PartitionFamily::interval; break;
        case CumulantKind::monotone: weight = PartitionWeight::inverse_tree_factorial; break;
        case CumulantKind::moment: throw DomainError("table already holds moments");
    }
    const auto table = lookup(c.values);
    return WordTable::generate(c.values.generators(), c.values.max_degree(),
                               [&](const Word& w) { return partition_sum(table, w, family, weight); });
}

// --- moments -> cumulants -------------------------------------------------

// Degree-by-degree solution of Phi = e + kappa < Phi:
//   kappa(w) = m(w) - sum_{0 in S != [n]} kappa(a_S) * prod m(components of [n]-S).
inline WordTable free_by_fixed_point(const WordTable& m) {
    WordTable k(m.generators(), m.max_degree());
    for (const auto& [w, mw] : m.values()) {
        const std::size_t n = w.degree();
        Scalar v = mw;
        const PositionMask full = detail::full_mask(n);
        for (PositionMask s = 1; s < full; s += 2) {
            Scalar term = k.at(subword(w, s));
            complement_components(w, s).for_each_factor([&](const Word& c) { term *= m.at(c); });
            v -= term;
        }
        k.set(w, v);
    }
    return k;
}

// Degree-by-degree solution of Phi = e + Phi > beta:
//   beta(w) = m(w) - sum_{j=1}^{n-1} beta(w_1..w_j) m(w_{j+1}..w_n).
inline WordTable boolean_by_fixed_point(const WordTable& m) {
    WordTable b(m.generators(), m.max_degree());
    for (const auto& [w, mw] : m.values()) {
        const std::size_t n = w.degree();
        Scalar v = mw;
        for (std::size_t j = 1; j < n; ++j) v -= b.at(w.slice(0, j)) * m.at(w.slice(j, n - j));
        b.set(w, v);
    }
    return b;
}

// log<(Phi) = (Phi - e) < Phi o S, log>(Phi) = Phi o S > (Phi - e), log*(Phi).
inline WordTable cumulants_via_logarithm(const WordTable& m, CumulantKind target) {
    const Form phi = Form::character(m);
    Form c;
    switch (target) {
        case CumulantKind::free: c = log_left(phi); break;
        case CumulantKind::boolean: c = log_right(phi); break;
        case CumulantKind::monotone: c = log_star(phi); break;
        case CumulantKind::moment: throw DomainError("target must be a cumulant kind");
    }
    Evaluator ev;
    return WordTable::generate(m.generators(), m.max_degree(), [&](const Word& w) { return ev(c, w); });
}

// --- cumulants -> cumulants -----------------------------------------------

// Magnus / W compositions.
inline WordTable convert_via_prelie(const WordTable& c, CumulantKind from, CumulantKind to) {
    using K = CumulantKind;
    if (from == K::free && to == K::monotone) return magnus(c);
    if (from == K::free && to == K::boolean) return w_map(magnus(c).negated()).negated();
    if (from == K::boolean && to == K::monotone) return magnus(c.negated()).negated();
    if (from == K::boolean && to == K::free) return w_map(magnus(c.negated()).negated());
    if (from == K::monotone && to == K::free) return w_map(c);
    if (from == K::monotone && to == K::boolean) return w_map(c.negated()).negated();
    throw DomainError("no cumulant-to-cumulant route for this pair");
}

// Irreducible non-crossing partition sums where a closed formula exists
// (free<->boolean, monotone->boolean, monotone->free), otherwise the
// two-step route through moments.
inline WordTable convert_via_partitions(const WordTable& c, CumulantKind from, CumulantKind to) {
    using K = CumulantKind;
    const auto irreducible_sum = [&](PartitionWeight weight) {
        const auto table = lookup(c);
        return WordTable::generate(c.generators(), c.max_degree(), [&](const Word& w) {
            return partition_sum(table, w, PartitionFamily::irreducible, weight);
        });
    };
    if (from == K::free && to == K::boolean) return irreducible_sum(PartitionWeight::one);
    if (from == K::boolean && to == K::free) return irreducible_sum(PartitionWeight::alternating);
    if (from == K::monotone && to == K::boolean) return irreducible_sum(PartitionWeight::inverse_tree_factorial);
    if (from == K::monotone && to == K::free)
        return irreducible_sum(PartitionWeight::alternating_inverse_tree_factorial);
    if ((from == K::free || from == K::boolean) && to == K::monotone) {
        const WordTable m = moments_via_partitions(CumulantTable{from, c});
        return cumulants_via_logarithm(m, K::monotone);
    }
    throw DomainError("no partition route for this pair");
}

// Univariate monotone moment from the nested-sum formula
//   m_n = sum_s 1/s! sum_{1 = i_0 < ... < i_s = n+1} prod_j i_{j-1} h_{i_j - i_{j-1}},
// with h[k-1] = h_k.
inline Scalar univariate_monotone_moment(const std::vector<Scalar>& h, std::size_t n) {
    if (n == 0) return Scalar(1);
    if (h.size() < n) throw MissingValue("not enough monotone cumulants");
    Scalar total = 0;
    // chains 1 = i_0 < i_1 < ... < i_s = n+1: choose the interior points
    // from {2..n} via a bitmask.
    const std::size_t interior = n - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
        std::vector<std::size_t> chain{1};
        for (std::size_t b = 0; b < interior; ++b)
            if (mask >> b & 1) chain.push_back(b + 2);
        chain.push_back(n + 1);
        const std::size_t s = chain.size() - 1;
        Scalar term = Scalar(1) / factorial(static_cast<unsigned>(s));
        for (std::size_t j = 1; j <= s; ++j)
            term *= Scalar(static_cast<unsigned long>(chain[j - 1])) * h[chain[j] - chain[j - 1] - 1];
        total += term;
    }
    return total;
}

}  // namespace routes

namespace detail {

inline void require_agreement(const WordTable& primary, const WordTable& oracle, std::string_view what) {
    if (auto w = primary.first_difference(oracle)) {
        throw RouteMismatch(std::string(what) + ": routes disagree on word " + debug_string(*w) + " (" +
                            to_string(primary.at(*w)) + " vs " + to_string(oracle.at(*w)) + ")");
    }
}

}  // namespace detail

// Free/boolean via the degree-by-degree fixed point (checked against the
// half-shuffle logarithm), monotone via the shuffle logarithm (checked by
// pushing the result back through the partition route).
inline CumulantTable moments_to_cumulants(const CumulantTable& m, CumulantKind target, bool cross_check = true) {
    if (m.kind != CumulantKind::moment) throw DomainError("input table must hold moments");
    check_size_caps(m.values.generators(), m.values.max_degree());
    WordTable out;
    switch (target) {
        case CumulantKind::free:
            out = routes::free_by_fixed_point(m.values);
            if (cross_check)
                detail::require_agreement(out, routes::cumulants_via_logarithm(m.values, target), "moments->free");
            break;
        case CumulantKind::boolean:
            out = routes::boolean_by_fixed_point(m.values);
            if (cross_check)
                detail::require_agreement(out, routes::cumulants_via_logarithm(m.values, target),
                                          "moments->boolean");
            break;
        case CumulantKind::monotone:
            out = routes::cumulants_via_logarithm(m.values, target);
            if (cross_check)
                detail::require_agreement(
                    m.values, routes::moments_via_partitions(CumulantTable{CumulantKind::monotone, out}),
                    "moments->monotone");
            break;
        case CumulantKind::moment:
            throw DomainError("target must be a cumulant kind");
    }
    return CumulantTable{target, std::move(out)};
}

inline CumulantTable cumulants_to_moments(const CumulantTable& c, bool cross_check = true) {
    if (c.kind == CumulantKind::moment) throw DomainError("input table already holds moments");
    check_size_caps(c.values.generators(), c.values.max_degree());
    WordTable m = routes::moments_via_exponential(c);
    if (cross_check) detail::require_agreement(m, routes::moments_via_partitions(c), "cumulants->moments");
    return CumulantTable{CumulantKind::moment, std::move(m)};
}

// Any kind to any other kind.
inline CumulantTable convert(const CumulantTable& c, CumulantKind to, bool cross_check = true) {
    if (c.kind == to) throw DomainError("source and target kinds coincide");
    if (c.kind == CumulantKind::moment) return moments_to_cumulants(c, to, cross_check);
    if (to == CumulantKind::moment) return cumulants_to_moments(c, cross_check);
    check_size_caps(c.values.generators(), c.values.max_degree());
    WordTable out = routes::convert_via_prelie(c.values, c.kind, to);
    if (cross_check)
        detail::require_agreement(out, routes::convert_via_partitions(c.values, c.kind, to),
                                  std::string(to_string(c.kind)) + "->" + std::string(to_string(to)));
    return CumulantTable{to, std::move(out)};
}

}  // namespace nccum
