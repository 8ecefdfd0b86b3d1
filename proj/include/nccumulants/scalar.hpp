#pragma once

// Exact rational scalars. Backed by GMP's mpq_class, which keeps every
// result of +,-,*,/ in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace nccum {

using Scalar = mpq_class;

// Parses "p/q", "p", "-p/q". Whitespace is not accepted; q must be nonzero.
inline Scalar parse_scalar(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? std::string("1")
                                                      : std::string(text.substr(slash + 1));
    if (!valid_int(num, true) || !valid_int(den, false))
        throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

// mpq_class built from a raw numerator/denominator pair is not reduced,
// and gmp arithmetic on unreduced values is undefined. Values crossing the
// public boundary go through here.
inline Scalar canonical(Scalar q) {
    q.canonicalize();
    return q;
}

// Canonical text: "0", "1", "-3", "5/2".
inline std::string to_string(const Scalar& q) {
    return q.get_str(10);
}

inline Scalar factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(f);
}

inline Scalar binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(b);
}

}  // namespace nccum
