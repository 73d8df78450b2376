/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "transcrit/errors.hpp"

namespace transcrit {

// Exact integers and rationals. mpq values are kept canonical (lowest terms,
// positive denominator); every constructor below canonicalizes.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt parse_int(const std::string& s) {
    return BigInt(s, 10);
}

// Accepts "p" or "p/q".
inline BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRat& q) { return q.get_str(); }

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigRat pow_rat(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    BigInt num = base.get_num(), den = base.get_den();
    if (e < 0) {
        if (num == 0) throw DivisionByZero("0^negative");
        std::swap(num, den);
        e = -e;
    }
    return make_rat(pow_int(num, static_cast<unsigned long>(e)),
                    pow_int(den, static_cast<unsigned long>(e)));
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
inline BigRat abs(const BigRat& a) { return a < 0 ? BigRat(-a) : a; }

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline BigInt gcd_all(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

} // namespace transcrit
