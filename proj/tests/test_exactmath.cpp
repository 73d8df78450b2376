/* SPDX-License-Identifier: Apache-2.0 */
#include "doctest.h"
#include "util.hpp"

using namespace transcrit;
using namespace testutil;

TEST_CASE("iv_from_rat containment and width") {
    Precision p8(8, 1024);
    IntervalReal third = iv_from_rat(make_rat(1, 3), p8);
    CHECK(interval_contains(third, make_rat(1, 3)));
    CHECK(third.width_rat() <= make_rat(1, 128));  // 2^{1-8}

    IntervalReal two = iv_from_rat(BigRat(2), Precision());
    CHECK(two.lo_rat() == 2);
    CHECK(two.hi_rat() == 2);

    IntervalReal approx_phi = iv_from_rat(make_rat(809, 500), Precision());
    CHECK(interval_contains(approx_phi, make_rat(1618, 1000)));
}

TEST_CASE("iv_log2 on powers of two and a series oracle") {
    Precision p;
    IntervalReal l8 = iv_log2(iv_from_rat(BigRat(8), p));
    CHECK(interval_contains(l8, BigRat(3)));
    CHECK(l8.width_rat() <= pow_rat(BigRat(2), 1 - p.bits));

    IntervalReal l1 = iv_log2(iv_from_rat(BigRat(1), p));
    CHECK(interval_contains(l1, BigRat(0)));

    // log2(34) = 5.08746284…, oracle: argument-reduced atanh series in exact
    // rationals with a geometric remainder
    Bracket b = log2_bracket(34);
    CHECK(b.hi - b.lo < pow_rat(BigRat(10), -60));
    IntervalReal l34 = iv_log2(iv_from_rat(BigRat(34), p));
    CHECK(interval_contains(l34, b));

    CHECK_THROWS_AS(iv_log2(iv_from_rat(BigRat(0), p)), NonPositiveInput);
    CHECK_THROWS_AS(iv_log2(iv_from_rat(BigRat(-3), p)), NonPositiveInput);
}

TEST_CASE("iv_pow via 2^{e·log2 x}") {
    Precision p;
    IntervalReal r = iv_pow(iv_from_rat(BigRat(4), p), iv_from_rat(make_rat(1, 2), p));
    CHECK(interval_contains(r, BigRat(2)));

    IntervalReal ident = iv_pow(iv_from_rat(BigRat(34), p), iv_from_rat(BigRat(1), p));
    CHECK(interval_contains(ident, BigRat(34)));

    IntervalReal s = iv_pow(iv_from_rat(BigRat(34), p), iv_from_rat(make_rat(1, 2), p));
    CHECK(interval_contains(s, sqrt_bracket(BigInt(34))));  // 5.83095…

    CHECK_THROWS_AS(iv_pow(iv_from_rat(BigRat(-1), p), iv_from_rat(make_rat(1, 2), p)),
                    NonPositiveBase);
}

TEST_CASE("iv_compare basics and the φ example") {
    Precision p;
    CHECK(iv_compare(iv_from_endpoints(BigRat(1), BigRat(2), p),
                     iv_from_endpoints(BigRat(3), BigRat(4), p)) == Ordering::Less);
    CHECK(iv_compare(iv_from_endpoints(BigRat(1), BigRat(3), p),
                     iv_from_endpoints(BigRat(2), BigRat(4), p)) == Ordering::Undecided);

    Precision p128(128, 16384);
    IntervalReal phi = iv_div(iv_add(iv_from_rat(BigRat(1), p128), iv_sqrt(iv_from_rat(BigRat(5), p128))),
                              iv_from_rat(BigRat(2), p128));
    CHECK(iv_compare(phi, iv_from_rat(make_rat(1618, 1000), p128)) == Ordering::Greater);
}

namespace {

// random expression over exact rationals, mirrored in interval arithmetic
struct Mirror {
    BigRat exact;
    IntervalReal iv;
};

Mirror random_expression(std::mt19937_64& r, Precision prec, int ops) {
    Mirror m{random_rat(r, 50), IntervalReal()};
    m.iv = iv_from_rat(m.exact, prec);
    for (int i = 0; i < ops; ++i) {
        BigRat q = random_rat(r, 50);
        switch (r() % 4) {
            case 0:
                m.exact += q;
                m.iv = iv_add(m.iv, iv_from_rat(q, prec));
                break;
            case 1:
                m.exact -= q;
                m.iv = iv_sub(m.iv, iv_from_rat(q, prec));
                break;
            case 2:
                m.exact *= q;
                m.iv = iv_mul(m.iv, iv_from_rat(q, prec));
                break;
            default:
                if (q == 0) q = 1;
                m.exact /= q;
                m.iv = iv_div(m.iv, iv_from_rat(q, prec));
                break;
        }
    }
    return m;
}

} // namespace

TEST_CASE("containment: exact rational result lies in the interval (10^4 runs)") {
    auto r = rng;
    Precision prec(64, 1024);
    for (int i = 0; i < 10000; ++i) {
        Mirror m = random_expression(r, prec, 6);
        CHECK(interval_contains(m.iv, m.exact));
    }
}

TEST_CASE("monotone refinement: doubling precision never widens") {
    auto r = rng;
    for (int i = 0; i < 500; ++i) {
        unsigned long seed = r();
        std::mt19937_64 r1(seed), r2(seed);
        Mirror coarse = random_expression(r1, Precision(64, 1024), 5);
        Mirror fine = random_expression(r2, Precision(128, 1024), 5);
        CHECK(fine.iv.lo_rat() >= coarse.iv.lo_rat());
        CHECK(fine.iv.hi_rat() <= coarse.iv.hi_rat());
    }
    // same for the transcendental layer
    for (unsigned long m : {3ul, 5ul, 34ul, 1000ul}) {
        IntervalReal c = iv_log2(iv_from_rat(BigRat(BigInt(m)), Precision(64, 1024)));
        IntervalReal f = iv_log2(iv_from_rat(BigRat(BigInt(m)), Precision(128, 1024)));
        CHECK(f.lo_rat() >= c.lo_rat());
        CHECK(f.hi_rat() <= c.hi_rat());
    }
}

TEST_CASE("iv_compare is antisymmetric") {
    auto r = rng;
    Precision p(64, 1024);
    for (int i = 0; i < 2000; ++i) {
        BigRat a = random_rat(r, 20), b = a + abs(random_rat(r, 10));
        BigRat c = random_rat(r, 20), d = c + abs(random_rat(r, 10));
        IntervalReal x = iv_from_endpoints(a, b, p), y = iv_from_endpoints(c, d, p);
        Ordering xy = iv_compare(x, y), yx = iv_compare(y, x);
        if (xy == Ordering::Less) CHECK(yx == Ordering::Greater);
        if (xy == Ordering::Greater) CHECK(yx == Ordering::Less);
        if (xy == Ordering::Undecided) CHECK(yx == Ordering::Undecided);
    }
}

TEST_CASE("interval squares never dip negative") {
    Precision p;
    IntervalReal straddle = iv_from_endpoints(BigRat(-3), BigRat(2), p);
    IntervalReal sq = iv_sqr(straddle);
    CHECK(sq.lo_rat() == 0);
    CHECK(sq.hi_rat() >= 9);
    CHECK(interval_contains(sq, BigRat(4)));
}

TEST_CASE("complex interval arithmetic") {
    Precision p;
    IntervalComplex i(iv_zero(p), iv_from_rat(BigRat(1), p));
    IntervalComplex sq = ic_mul(i, i);
    CHECK(interval_contains(sq.re, BigRat(-1)));
    CHECK(interval_contains(sq.im, BigRat(0)));
    IntervalReal m = ic_abs(IntervalComplex(iv_from_rat(BigRat(3), p), iv_from_rat(BigRat(4), p)));
    CHECK(interval_contains(m, BigRat(5)));
}
