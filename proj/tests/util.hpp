/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

// Test-side oracles, independent of the library's interval/embedding path:
// plain rational arithmetic only.

#include <random>
#include <vector>

#include "transcrit/approximants.hpp"
#include "transcrit/criteria.hpp"

namespace testutil {

using namespace transcrit;

struct Bracket {
    BigRat lo, hi;
    bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
};

// golden ratio bracket from consecutive Fibonacci ratios (alternating sides)
inline Bracket phi_bracket(unsigned long k = 300) {
    if (k % 2 == 1) ++k;
    BigRat r1 = make_rat(fib(k + 1), fib(k));      // below φ for even k
    BigRat r2 = make_rat(fib(k + 2), fib(k + 1));  // above φ
    return {r1, r2};
}

// √n bracket via integer square roots of n·10^{2digits}
inline Bracket sqrt_bracket(const BigInt& n, unsigned long digits = 100) {
    BigInt scale = pow_int(BigInt(10), digits);
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), BigInt(n * scale * scale).get_mpz_t());
    return {make_rat(s, scale), make_rat(s + 1, scale)};
}

// ln((1+y)/(1-y)) = 2·Σ y^{2k+1}/(2k+1), remainder bounded geometrically
inline Bracket atanh2_bracket(const BigRat& y, int terms = 80) {
    BigRat sum(0), yk = y, y2 = y * y;
    for (int k = 0; k < terms; ++k) {
        sum += yk / BigRat(2 * k + 1);
        yk *= y2;
    }
    // remainder ≤ y^{2t+1}/(2t+1) · 1/(1−y²)
    BigRat rem = yk / BigRat(2 * terms + 1) / (1 - y2);
    return {2 * sum, 2 * (sum + rem)};
}

inline Bracket ln2_bracket() { return atanh2_bracket(make_rat(1, 3), 120); }

// log2(m) for integer m = 2^e·(m/2^e): e + ln(m/2^e)/ln2
inline Bracket log2_bracket(unsigned long m) {
    int e = 0;
    unsigned long r = m;
    while (r % 2 == 0 && r > 1) {
        r /= 2;
        ++e;
    }
    unsigned long p2 = 1;
    int k = 0;
    while (p2 * 2 <= r) {
        p2 *= 2;
        ++k;
    }
    // m = 2^{e+k}·(r/p2) with r/p2 in [1,2): ln(r/p2) via atanh form
    BigRat x = make_rat(BigInt(r), BigInt(p2));
    BigRat y = (x - 1) / (x + 1);
    Bracket lnx = atanh2_bracket(y, 120);
    Bracket l2 = ln2_bracket();
    return {BigRat(e + k) + lnx.lo / l2.hi, BigRat(e + k) + lnx.hi / l2.lo};
}

inline bool interval_contains(const IntervalReal& iv, const Bracket& b) {
    return iv.lo_rat() <= b.lo && b.hi <= iv.hi_rat();
}

inline bool interval_contains(const IntervalReal& iv, const BigRat& x) {
    return iv.lo_rat() <= x && x <= iv.hi_rat();
}

// the enclosure sits inside a loose oracle window
inline bool interval_within(const IntervalReal& iv, const Bracket& b) {
    return b.lo <= iv.lo_rat() && iv.hi_rat() <= b.hi;
}

// test-local determinant (Laplace expansion), independent of the library path
inline BigRat det_laplace(const MatQ& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    BigRat det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        MatQ minor;
        for (std::size_t i = 1; i < n; ++i) {
            VecQ row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        BigRat term = m[0][j] * det_laplace(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// multiplication-by-a matrix over the declared basis (columns a·x_j)
inline MatQ mult_matrix(const FieldElement& a, const FieldPtr& f) {
    int d = f->degree();
    MatQ m = mat_zero(d, d);
    for (int j = 0; j < d; ++j) {
        FieldElement prod = a * f->basis_element(j);
        for (int i = 0; i < d; ++i) m[i][j] = prod.coords()[i];
    }
    return m;
}

// finite rational sequence spec over Q (basis {1})
inline SequenceSpec rational_spec(std::vector<BigRat> a, std::vector<BigRat> b,
                                  std::vector<BigInt> c = {}, GrowthProfile profile = {}) {
    SequenceSpec s;
    s.name = "test rational spec";
    s.field = NumberField::rationals();
    s.basis = {s.field->one()};
    s.profile = profile;
    s.term_fn = [f = s.field, a = std::move(a), b = std::move(b), c = std::move(c)](long n) {
        Term t;
        std::size_t i = static_cast<std::size_t>(n - 1);
        if (i >= a.size()) throw Error("test spec index out of range");
        t.a = f->from_rat(a[i]);
        t.b = f->from_rat(i < b.size() ? b[i] : BigRat(1));
        if (i < c.size()) t.c = c[i];
        return t;
    };
    return s;
}

inline std::mt19937_64 rng(20250810);

inline BigRat random_rat(std::mt19937_64& r, long max_num, long max_den = 1000) {
    long num = static_cast<long>(r() % (2 * static_cast<unsigned long>(max_num) + 1)) - max_num;
    long den = static_cast<long>(r() % static_cast<unsigned long>(max_den)) + 1;
    return make_rat(BigInt(num), BigInt(den));
}

inline FieldElement random_golden(std::mt19937_64& r, const FieldPtr& f, long max_num = 1000) {
    return f->element({random_rat(r, max_num), random_rat(r, max_num)});
}

} // namespace testutil
