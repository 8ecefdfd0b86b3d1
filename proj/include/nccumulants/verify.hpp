#pragma once

// Identity checker: runs every structural identity of the Hopf algebra,
// the shuffle calculus and the pre-Lie layer, plus route equivalence of
// all conversions, on deterministic pseudo-random rational tables.
//
// Each identity is checked on its test objects in increasing degree, and
// a failure records the first (lowest-degree) counterexample.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "form.hpp"
#include "hopf.hpp"
#include "partitions.hpp"
#include "prelie.hpp"
#include "transforms.hpp"
#include "word.hpp"
#include "word_table.hpp"

namespace nccum {

struct IdentityResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::optional<std::string> counterexample;
    std::optional<std::size_t> counterexample_degree;
    std::string error;  // set when the check itself threw
};

struct VerifyReport {
    std::size_t max_degree = 0;
    std::size_t generators = 0;
    std::uint64_t seed = 0;
    std::vector<IdentityResult> results;

    bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
    const IdentityResult* find(std::string_view name) const {
        for (const auto& r : results)
            if (r.name == name) return &r;
        return nullptr;
    }
};

using TriangleFn = std::function<InfChar(const InfChar&, const InfChar&)>;

struct VerifyOptions {
    std::size_t max_degree = 4;
    std::size_t generators = 1;
    std::uint64_t seed = 1;
    // Replaces the pre-Lie product in the pre-Lie identity check (for
    // testing that the harness catches a broken product).
    TriangleFn triangle;
};

// Random rational table with numerators in [-4, 4] and denominators in [1, 3].
inline WordTable random_table(std::size_t generators, std::size_t max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return WordTable::generate(generators, max_degree, [&](const Word&) {
        const int p = num(rng);
        return Scalar(p, den(rng));
    });
}

namespace detail {

class IdentityChecker {
public:
    explicit IdentityChecker(IdentityResult& r) : r_(r) {}

    // Records one test object; `ok` false marks the first failure.
    void record(bool ok, const std::string& where, std::size_t degree) {
        ++r_.checked;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.counterexample = where;
            r_.counterexample_degree = degree;
        }
    }

    void compare(const WordTable& lhs, const WordTable& rhs) {
        for (const auto& [w, v] : lhs.values()) record(v == rhs.at(w), debug_string(w), w.degree());
    }

private:
    IdentityResult& r_;
};

inline TripleTensor apply_left_leg(const SplitTensor& t, const std::function<SplitTensor(const BarWord&)>& f) {
    TripleTensor out;
    for (const auto& [legs, c] : t)
        for (const auto& [inner, c2] : f(legs.first))
            out.add({inner.first, inner.second, legs.second}, c * c2);
    return out;
}

inline TripleTensor apply_right_leg(const SplitTensor& t, const std::function<SplitTensor(const BarWord&)>& f) {
    TripleTensor out;
    for (const auto& [legs, c] : t)
        for (const auto& [inner, c2] : f(legs.second))
            out.add({legs.first, inner.first, inner.second}, c * c2);
    return out;
}

}  // namespace detail

inline VerifyReport verify_suite(const VerifyOptions& opt) {
    check_size_caps(opt.generators, opt.max_degree);
    const std::size_t N = opt.max_degree;
    const std::size_t K = opt.generators;
    const std::size_t N4 = std::min<std::size_t>(N, 4);

    VerifyReport report{N, K, opt.seed, {}};
    std::mt19937_64 rng(opt.seed);

    const WordTable t1 = random_table(K, N, rng);
    const WordTable t2 = random_table(K, N, rng);
    const WordTable t3 = random_table(K, N, rng);
    const WordTable mom = random_table(K, N, rng);
    const WordTable mom2 = random_table(K, N, rng);

    const std::vector<BarWord> bars = all_bar_words(K, N, true);
    const std::vector<BarWord> bars4 = all_bar_words(K, N4, false);
    const std::vector<Word> words = all_words(K, N);

    auto run = [&](std::string name, const std::function<void(detail::IdentityChecker&)>& body) {
        IdentityResult r;
        r.name = std::move(name);
        detail::IdentityChecker chk(r);
        try {
            body(chk);
        } catch (const std::exception& e) {
            r.passed = false;
            r.error = e.what();
        }
        report.results.push_back(std::move(r));
    };

    // --- Hopf structure ---------------------------------------------------

    run("coassociativity", [&](auto& chk) {
        const std::function<SplitTensor(const BarWord&)> d = [](const BarWord& u) { return coproduct(u); };
        for (const auto& u : bars) {
            const SplitTensor t = coproduct(u);
            chk.record(detail::apply_left_leg(t, d) == detail::apply_right_leg(t, d), debug_string(u), u.degree());
        }
    });

    run("counit", [&](auto& chk) {
        for (const auto& u : bars) {
            LinComb<BarWord> left, right;
            for (const auto& [legs, c] : coproduct(u)) {
                if (legs.first.is_unit()) left.add(legs.second, c);
                if (legs.second.is_unit()) right.add(legs.first, c);
            }
            const LinComb<BarWord> expect(u);
            chk.record(left == expect && right == expect, debug_string(u), u.degree());
        }
    });

    run("coproduct-splitting", [&](auto& chk) {
        for (const auto& u : bars) {
            if (u.is_unit()) continue;
            chk.record(coproduct_left(u) + coproduct_right(u) == coproduct(u), debug_string(u), u.degree());
        }
    });

    {
        const std::function<SplitTensor(const BarWord&)> dl = [](const BarWord& u) {
            return reduced_coproduct_left(u);
        };
        const std::function<SplitTensor(const BarWord&)> dr = [](const BarWord& u) {
            return reduced_coproduct_right(u);
        };
        const std::function<SplitTensor(const BarWord&)> db = [](const BarWord& u) { return reduced_coproduct(u); };
        run("unshuffle-C1", [&](auto& chk) {
            for (const auto& u : bars) {
                if (u.is_unit()) continue;
                const SplitTensor t = reduced_coproduct_left(u);
                chk.record(detail::apply_left_leg(t, dl) == detail::apply_right_leg(t, db), debug_string(u),
                           u.degree());
            }
        });
        run("unshuffle-C2", [&](auto& chk) {
            for (const auto& u : bars) {
                if (u.is_unit()) continue;
                chk.record(detail::apply_left_leg(reduced_coproduct_left(u), dr) ==
                               detail::apply_right_leg(reduced_coproduct_right(u), dl),
                           debug_string(u), u.degree());
            }
        });
        run("unshuffle-C3", [&](auto& chk) {
            for (const auto& u : bars) {
                if (u.is_unit()) continue;
                const SplitTensor t = reduced_coproduct_right(u);
                chk.record(detail::apply_left_leg(t, db) == detail::apply_right_leg(t, dr), debug_string(u),
                           u.degree());
            }
        });
    }

    run("monotone-partition-bijection", [&](auto& chk) {
        // Distinct letters make each tuple of words a tuple of position sets.
        for (std::size_t n = 1; n <= std::min<std::size_t>(N, 6); ++n) {
            Word w;
            for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<Letter>(i));
            for (std::size_t q = 1; q <= n; ++q) {
                LinComb<std::vector<Word>> expect;
                for (const auto& m : enumerate_monotone(n, q)) {
                    std::vector<Word> t;
                    for (const auto& b : m.labelled_blocks()) {
                        Word sub;
                        for (std::size_t x : b) sub.push_back(w[x]);
                        t.push_back(sub);
                    }
                    expect.add(t, Scalar(1));
                }
                chk.record(iterated_reduced_left(w, q) == expect,
                           "n=" + std::to_string(n) + ",q=" + std::to_string(q), n);
            }
        }
    });

    // --- Shuffle calculus on forms ------------------------------------------

    const Form kappa = Form::infinitesimal(t1);
    const Form kappa2 = Form::infinitesimal(t2);
    const Form phi = Form::character(mom);
    const Form psi = Form::character(mom2);
    const Form eps = Form::counit();

    auto check_forms_equal = [&](auto& chk, const Form& f, const Form& g, const std::vector<BarWord>& on) {
        Evaluator ev;
        for (const auto& u : on) chk.record(ev(f, u) == ev(g, u), debug_string(u), u.degree());
    };
    auto check_forms_equal_on_words = [&](auto& chk, const Form& f, const Form& g) {
        Evaluator ev;
        for (const auto& w : words) chk.record(ev(f, w) == ev(g, w), debug_string(w), w.degree());
    };

    {
        const Form a = kappa;
        const Form b = compose_p(phi);
        const Form c = kappa2 + compose_p(psi);
        run("shuffle-A1", [&](auto& chk) {
            check_forms_equal(chk, half_left(half_left(a, b), c), half_left(a, conv(b, c)), bars4);
        });
        run("shuffle-A2", [&](auto& chk) {
            check_forms_equal(chk, half_left(half_right(a, b), c), half_right(a, half_left(b, c)), bars4);
        });
        run("shuffle-A3", [&](auto& chk) {
            check_forms_equal(chk, half_right(a, half_right(b, c)), half_right(conv(a, b), c), bars4);
        });
        run("convolution-splitting", [&](auto& chk) {
            check_forms_equal(chk, conv(phi, kappa), half_left(phi, kappa) + half_right(phi, kappa), bars4);
            check_forms_equal(chk, conv(b, c), half_left(b, c) + half_right(b, c), bars4);
        });
        run("unit-conventions", [&](auto& chk) {
            check_forms_equal(chk, half_left(b, eps), b, bars4);
            check_forms_equal(chk, half_right(eps, b), b, bars4);
            check_forms_equal(chk, half_left(eps, b), Form(), bars4);
            check_forms_equal(chk, half_right(b, eps), Form(), bars4);
            check_forms_equal(chk, conv(eps, phi), phi, bars4);
        });
    }

    auto check_multiplicative = [&](auto& chk, const Form& f) {
        Evaluator ev;
        for (const auto& u : bars) {
            if (u.factor_count() < 2) continue;
            Scalar prod = 1;
            u.for_each_factor([&](const Word& w) { prod *= ev(f, w); });
            chk.record(ev(f, u) == prod, debug_string(u), u.degree());
        }
        chk.record(ev(f, BarWord{}) == 1, "1", 0);
    };
    auto check_infinitesimal = [&](auto& chk, const Form& f) {
        Evaluator ev;
        for (const auto& u : bars) {
            if (u.factor_count() == 1) continue;
            chk.record(ev(f, u) == 0, debug_string(u), u.degree());
        }
    };

    run("character-closure", [&](auto& chk) { check_multiplicative(chk, conv(phi, psi)); });

    run("antipode", [&](auto& chk) {
        check_forms_equal(chk, conv(phi, char_inverse(phi)), eps, bars);
        check_forms_equal(chk, conv(char_inverse(phi), phi), eps, bars);
    });

    run("exp-log-star", [&](auto& chk) {
        const Form e = exp_star(kappa);
        check_multiplicative(chk, e);
        check_infinitesimal(chk, log_star(phi));
        check_forms_equal_on_words(chk, log_star(e), kappa);
        check_forms_equal_on_words(chk, exp_star(log_star(phi)), phi);
    });

    run("exp-log-left", [&](auto& chk) {
        const Form e = exp_left(kappa);
        check_multiplicative(chk, e);
        check_infinitesimal(chk, log_left(phi));
        check_forms_equal_on_words(chk, log_left(e), kappa);
        check_forms_equal_on_words(chk, exp_left(log_left(phi)), phi);
    });

    run("exp-log-right", [&](auto& chk) {
        const Form e = exp_right(kappa);
        check_multiplicative(chk, e);
        check_infinitesimal(chk, log_right(phi));
        check_forms_equal_on_words(chk, log_right(e), kappa);
        check_forms_equal_on_words(chk, exp_right(log_right(phi)), phi);
    });

    run("fixed-point-residual", [&](auto& chk) {
        const Form x = exp_left(kappa);
        const Form z = exp_right(kappa);
        check_forms_equal(chk, x - eps - half_left(kappa, x), Form(), bars);
        check_forms_equal(chk, z - eps - half_right(z, kappa), Form(), bars);
    });

    run("half-exponential-inverse", [&](auto& chk) {
        const Form x = exp_left(kappa);
        const Form y = exp_right(-kappa);
        check_forms_equal(chk, conv(y, x), eps, bars);
        check_forms_equal(chk, conv(x, y), eps, bars);
    });

    // --- Pre-Lie layer ------------------------------------------------------

    run("prelie-identity", [&](auto& chk) {
        const TriangleFn tri = opt.triangle ? opt.triangle : TriangleFn(triangle);
        const WordTable lhs = tri(tri(t1, t2), t3) - tri(t1, tri(t2, t3));
        const WordTable rhs = tri(tri(t2, t1), t3) - tri(t2, tri(t1, t3));
        chk.compare(lhs, rhs);
    });

    run("prelie-closure", [&](auto& chk) {
        const Form a = Form::infinitesimal(t1), b = Form::infinitesimal(t2);
        const Form t = half_right(a, b) - half_left(b, a);
        Evaluator ev;
        for (const auto& u : bars) {
            if (u.factor_count() == 1) continue;
            chk.record(ev(t, u) == 0, debug_string(u), u.degree());
        }
    });

    run("magnus-w-inverse", [&](auto& chk) {
        chk.compare(w_map(magnus(t1)), t1);
        chk.compare(magnus(w_map(t1)), t1);
    });

    run("exponential-interchange", [&](auto& chk) {
        const Form lhs = exp_left(Form::infinitesimal(w_map(t1)));
        const Form mid = exp_star(kappa);
        const Form rhs = exp_right(Form::infinitesimal(w_map(t1.negated()).negated()));
        check_forms_equal_on_words(chk, lhs, mid);
        check_forms_equal_on_words(chk, rhs, mid);
    });

    run("magnus-fixed-point", [&](auto& chk) {
        check_forms_equal_on_words(chk, exp_star(Form::infinitesimal(magnus(t1))), exp_left(kappa));
        check_forms_equal_on_words(chk, exp_star(Form::infinitesimal(magnus(t1.negated()).negated())),
                                   exp_right(kappa));
    });

    // --- Route equivalence ----------------------------------------------------

    for (CumulantKind kind : {CumulantKind::free, CumulantKind::boolean, CumulantKind::monotone}) {
        run("moment-routes-" + std::string(to_string(kind)), [&](auto& chk) {
            const CumulantTable c{kind, t1};
            chk.compare(routes::moments_via_exponential(c), routes::moments_via_partitions(c));
            if (kind == CumulantKind::monotone) {
                const auto table = routes::lookup(t1);
                const WordTable labelled = WordTable::generate(K, N, [&](const Word& w) {
                    return partition_sum(table, w, PartitionFamily::monotone, PartitionWeight::one);
                });
                chk.compare(routes::moments_via_exponential(c), labelled);
            }
        });
    }

    run("cumulant-routes", [&](auto& chk) {
        using K2 = CumulantKind;
        const std::pair<K2, K2> pairs[] = {{K2::free, K2::boolean},     {K2::boolean, K2::free},
                                           {K2::monotone, K2::boolean}, {K2::monotone, K2::free},
                                           {K2::free, K2::monotone},    {K2::boolean, K2::monotone}};
        for (const auto& [from, to] : pairs)
            chk.compare(routes::convert_via_prelie(t1, from, to), routes::convert_via_partitions(t1, from, to));
    });

    run("logarithm-routes", [&](auto& chk) {
        chk.compare(routes::free_by_fixed_point(mom), routes::cumulants_via_logarithm(mom, CumulantKind::free));
        chk.compare(routes::boolean_by_fixed_point(mom),
                    routes::cumulants_via_logarithm(mom, CumulantKind::boolean));
    });

    run("round-trips", [&](auto& chk) {
        const CumulantTable m{CumulantKind::moment, mom};
        for (CumulantKind kind : {CumulantKind::free, CumulantKind::boolean, CumulantKind::monotone}) {
            chk.compare(cumulants_to_moments(moments_to_cumulants(m, kind)).values, mom);
            const CumulantTable c{kind, t1};
            chk.compare(moments_to_cumulants(cumulants_to_moments(c), kind).values, t1);
        }
    });

    run("conversion-triangle", [&](auto& chk) {
        const CumulantTable k{CumulantKind::free, t1};
        chk.compare(convert(convert(k, CumulantKind::monotone), CumulantKind::boolean).values,
                    convert(k, CumulantKind::boolean).values);
    });

    run("memoization-transparency", [&](auto& chk) {
        const Form forms[] = {exp_left(kappa), exp_right(kappa), exp_star(kappa), log_left(phi), log_star(phi)};
        Evaluator cached(true), plain(false);
        for (const auto& f : forms)
            for (const auto& u : bars4) chk.record(cached(f, u) == plain(f, u), debug_string(u), u.degree());
    });

    return report;
}

// Human-readable report.
inline std::string format_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "identity suite: degree <= " << r.max_degree << ", " << r.generators << " generator(s), seed " << r.seed
       << "\n";
    std::size_t failed = 0;
    for (const auto& res : r.results) {
        os << (res.passed ? "  PASS  " : "  FAIL  ") << res.name << "  (" << res.checked << " checks)";
        if (res.counterexample)
            os << "  first counterexample: " << *res.counterexample << " (degree " << *res.counterexample_degree
               << ")";
        if (!res.error.empty()) os << "  error: " << res.error;
        os << "\n";
        if (!res.passed) ++failed;
    }
    os << (failed == 0 ? "all " + std::to_string(r.results.size()) + " identities hold\n"
                       : std::to_string(failed) + " of " + std::to_string(r.results.size()) + " identities failed\n");
    return os.str();
}

// One line per identity: name<TAB>status<TAB>checks<TAB>counterexample.
inline std::string format_structured(const VerifyReport& r) {
    std::ostringstream os;
    for (const auto& res : r.results) {
        os << res.name << '\t' << (res.passed ? "pass" : "fail") << '\t' << res.checked << '\t'
           << (res.counterexample ? *res.counterexample : (res.error.empty() ? "-" : res.error)) << '\n';
    }
    return os.str();
}

}  // namespace nccum
