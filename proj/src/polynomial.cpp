/* SPDX-License-Identifier: Apache-2.0 */
#include "transcrit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>

#include "transcrit/errors.hpp"

namespace transcrit {

IntPolynomial IntPolynomial::normalized(std::vector<BigInt> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) throw Error("zero polynomial");
    BigInt content = 0;
    for (const auto& c : coeffs) content = gcd(content, c);
    if (coeffs.back() < 0) content = -content;
    for (auto& c : coeffs) c /= content;
    return IntPolynomial{std::move(coeffs)};
}

BigRat IntPolynomial::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

IntervalComplex IntPolynomial::eval(const IntervalComplex& x, Precision prec) const {
    IntervalComplex acc(iv_zero(prec), iv_zero(prec));
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = ic_mul(acc, x);
        acc.re = iv_add(acc.re, iv_from_int(*it, prec));
    }
    return acc;
}

std::string IntPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c[k] == 0 && degree() > 0) continue;
        BigInt a = c[k];
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        BigInt m = abs(a);
        if (m != 1 || k == 0) os << m.get_str();
        if (k >= 1) {
            if (m != 1) os << "*";
            os << "X";
            if (k >= 2) os << "^" << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exact rational polynomials, used only for the Sturm machinery.
namespace {

struct RatPoly {
    std::vector<BigRat> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    BigRat eval(const BigRat& x) const {
        BigRat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

RatPoly to_rat(const IntPolynomial& p) {
    RatPoly r;
    for (const auto& a : p.c) r.c.emplace_back(a);
    return r;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (int k = 1; k <= p.degree(); ++k) d.c.push_back(p.c[k] * BigRat(k));
    return d;
}

RatPoly rem(RatPoly a, const RatPoly& b) {
    while (!a.zero() && a.degree() >= b.degree()) {
        BigRat f = a.c.back() / b.c.back();
        int shift = a.degree() - b.degree();
        for (int k = 0; k <= b.degree(); ++k) a.c[k + shift] -= f * b.c[k];
        a.normalize();
    }
    return a;
}

std::vector<RatPoly> sturm_chain(const IntPolynomial& p) {
    std::vector<RatPoly> chain;
    chain.push_back(to_rat(p));
    RatPoly d = derivative(chain[0]);
    if (d.zero()) return chain;
    chain.push_back(d);
    while (true) {
        RatPoly r = rem(chain[chain.size() - 2], chain.back());
        if (r.zero()) break;
        for (auto& x : r.c) x = -x;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const BigRat& x) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// All roots lie strictly inside (-B, B).
BigRat cauchy_bound(const IntPolynomial& p) {
    BigRat m(0);
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs(BigRat(p.c[k], p.leading())));
    return m + 1;
}

struct RealRoot {
    BigRat lo, hi;   // lo < root <= hi, or lo == hi for an exact rational root
    bool exact = false;
};

// Pick a split point in (a, b) that is not a root.
BigRat split_point(const IntPolynomial& p, const BigRat& a, const BigRat& b, bool& is_root,
                   BigRat& root_at) {
    int n = p.degree() + 2;
    is_root = false;
    for (int num = 1; num <= n; ++num) {
        BigRat mid = a + (b - a) * BigRat(num, n + 1);
        BigRat v = p.eval(mid);
        if (v != 0) return mid;
        is_root = true;
        root_at = mid;
        // keep scanning for a non-root split, remembering the hit
    }
    throw Error("could not find a non-root split point");
}

std::vector<RealRoot> isolate_real(const IntPolynomial& p) {
    auto chain = sturm_chain(p);
    BigRat bound = cauchy_bound(p);
    std::vector<RealRoot> out;
    struct Seg {
        BigRat a, b;
        int count;
    };
    std::vector<Seg> work;
    int total = sign_variations(chain, -bound) - sign_variations(chain, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            out.push_back({s.a, s.b, false});
            continue;
        }
        bool hit = false;
        BigRat root_at(0);
        BigRat mid = split_point(p, s.a, s.b, hit, root_at);
        if (hit) {
            out.push_back({root_at, root_at, true});
            // split tightly around the exact root, shrinking until no other
            // root falls in the excluded gap and the probes are not roots
            BigRat eps = (s.b - s.a) / 1000;
            int left = 0, right = 0;
            for (;; eps /= 1000) {
                if (p.eval(root_at - eps) == 0 || p.eval(root_at + eps) == 0) continue;
                left = sign_variations(chain, s.a) - sign_variations(chain, root_at - eps);
                right = sign_variations(chain, root_at + eps) - sign_variations(chain, s.b);
                if (left + right + 1 == s.count) break;
            }
            if (left > 0) work.push_back({s.a, root_at - eps, left});
            if (right > 0) work.push_back({root_at + eps, s.b, right});
            continue;
        }
        int left = sign_variations(chain, s.a) - sign_variations(chain, mid);
        int right = s.count - left;
        if (left > 0) work.push_back({s.a, mid, left});
        if (right > 0) work.push_back({mid, s.b, right});
    }
    std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.hi < y.hi; });
    return out;
}

void refine_real(const IntPolynomial& p, RealRoot& r, const BigRat& eps) {
    if (r.exact) return;
    // sign change across the isolating interval: the root is simple
    int sa = sgn(p.eval(r.lo));
    while (r.hi - r.lo > eps) {
        BigRat mid = (r.lo + r.hi) / 2;
        BigRat v = p.eval(mid);
        if (v == 0) {
            r.lo = r.hi = mid;
            r.exact = true;
            return;
        }
        if (sgn(v) == sa)
            r.lo = mid;
        else
            r.hi = mid;
    }
}

// ---------------------------------------------------------------------------
// Complex roots: double-precision Aberth for initial points, then Newton at
// mpfr precision, certified afterwards via the d·|p(z)/p'(z)| inclusion disk.

std::vector<std::complex<double>> aberth(const std::vector<double>& c) {
    int d = static_cast<int>(c.size()) - 1;
    std::vector<std::complex<double>> z(d);
    double radius = 0;
    for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(c[k] / c[d]));
    radius = 1 + radius;
    for (int k = 0; k < d; ++k) {
        double ang = 2 * M_PI * (k + 0.25) / d + 0.3;
        z[k] = std::polar(radius * (0.5 + 0.5 * (k + 1.0) / d), ang);
    }
    auto horner = [&](std::complex<double> x, bool deriv) {
        std::complex<double> acc(0);
        if (!deriv) {
            for (int k = d; k >= 0; --k) acc = acc * x + c[k];
        } else {
            for (int k = d; k >= 1; --k) acc = acc * x + c[k] * static_cast<double>(k);
        }
        return acc;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> pv = horner(z[k], false);
            std::complex<double> dv = horner(z[k], true);
            if (std::abs(dv) == 0) continue;
            std::complex<double> w = pv / dv;
            std::complex<double> s(0);
            for (int j = 0; j < d; ++j)
                if (j != k) s += 1.0 / (z[k] - z[j]);
            std::complex<double> corr = w / (1.0 - w * s);
            z[k] -= corr;
            moved = std::max(moved, std::abs(corr) / (1 + std::abs(z[k])));
        }
        if (moved < 1e-15) break;
    }
    return z;
}

struct MpfrComplex {
    mpfr_t re, im;
    explicit MpfrComplex(int bits) {
        mpfr_init2(re, bits);
        mpfr_init2(im, bits);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    ~MpfrComplex() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
    MpfrComplex(const MpfrComplex&) = delete;
    MpfrComplex& operator=(const MpfrComplex&) = delete;
};

// One Newton polish pass at the given precision (plain point arithmetic; the
// certification afterwards does not rely on it).
void newton_polish(const IntPolynomial& p, MpfrComplex& z, int bits, int iters) {
    int d = p.degree();
    MpfrComplex acc(bits), dacc(bits), t1(bits), t2(bits);
    mpfr_t n2, tr, ti;
    mpfr_init2(n2, bits);
    mpfr_init2(tr, bits);
    mpfr_init2(ti, bits);
    for (int it = 0; it < iters; ++it) {
        // acc = p(z), dacc = p'(z), Horner together
        mpfr_set_zero(acc.re, 1);
        mpfr_set_zero(acc.im, 1);
        mpfr_set_zero(dacc.re, 1);
        mpfr_set_zero(dacc.im, 1);
        for (int k = d; k >= 0; --k) {
            if (k < d) {
                // dacc = dacc*z + acc
                mpfr_mul(tr, dacc.re, z.re, MPFR_RNDN);
                mpfr_mul(ti, dacc.im, z.im, MPFR_RNDN);
                mpfr_sub(tr, tr, ti, MPFR_RNDN);
                mpfr_mul(t1.re, dacc.re, z.im, MPFR_RNDN);
                mpfr_mul(t1.im, dacc.im, z.re, MPFR_RNDN);
                mpfr_add(ti, t1.re, t1.im, MPFR_RNDN);
                mpfr_add(dacc.re, tr, acc.re, MPFR_RNDN);
                mpfr_add(dacc.im, ti, acc.im, MPFR_RNDN);
            }
            // acc = acc*z + c[k]
            mpfr_mul(tr, acc.re, z.re, MPFR_RNDN);
            mpfr_mul(ti, acc.im, z.im, MPFR_RNDN);
            mpfr_sub(tr, tr, ti, MPFR_RNDN);
            mpfr_mul(t1.re, acc.re, z.im, MPFR_RNDN);
            mpfr_mul(t1.im, acc.im, z.re, MPFR_RNDN);
            mpfr_add(ti, t1.re, t1.im, MPFR_RNDN);
            mpfr_add_z(acc.re, tr, p.c[k].get_mpz_t(), MPFR_RNDN);
            mpfr_set(acc.im, ti, MPFR_RNDN);
        }
        // z -= acc / dacc
        mpfr_mul(n2, dacc.re, dacc.re, MPFR_RNDN);
        mpfr_mul(tr, dacc.im, dacc.im, MPFR_RNDN);
        mpfr_add(n2, n2, tr, MPFR_RNDN);
        if (mpfr_zero_p(n2)) return;
        mpfr_mul(tr, acc.re, dacc.re, MPFR_RNDN);
        mpfr_mul(ti, acc.im, dacc.im, MPFR_RNDN);
        mpfr_add(tr, tr, ti, MPFR_RNDN);
        mpfr_div(tr, tr, n2, MPFR_RNDN);
        mpfr_mul(t1.re, acc.im, dacc.re, MPFR_RNDN);
        mpfr_mul(t1.im, acc.re, dacc.im, MPFR_RNDN);
        mpfr_sub(ti, t1.re, t1.im, MPFR_RNDN);
        mpfr_div(ti, ti, n2, MPFR_RNDN);
        mpfr_sub(z.re, z.re, tr, MPFR_RNDN);
        mpfr_sub(z.im, z.im, ti, MPFR_RNDN);
    }
    mpfr_clear(n2);
    mpfr_clear(tr);
    mpfr_clear(ti);
}

IntPolynomial derivative_int(const IntPolynomial& p) {
    std::vector<BigInt> d;
    for (int k = 1; k <= p.degree(); ++k) d.push_back(p.c[k] * k);
    return IntPolynomial{std::move(d)};  // no normalization: scaling is irrelevant here
}

// Inclusion box around an approximation: every polynomial has a root within
// deg·|p(z)/p'(z)| of z.
IntervalComplex inclusion_box(const IntPolynomial& p, const IntPolynomial& dp,
                              const MpfrComplex& z, Precision prec) {
    IntervalReal zre(prec), zim(prec);
    mpfr_set(zre.lo(), z.re, MPFR_RNDD);
    mpfr_set(zre.hi(), z.re, MPFR_RNDU);
    mpfr_set(zim.lo(), z.im, MPFR_RNDD);
    mpfr_set(zim.hi(), z.im, MPFR_RNDU);
    IntervalComplex zz(zre, zim);
    IntervalReal pv = ic_abs(p.eval(zz, prec));
    IntervalReal dv = ic_abs(dp.eval(zz, prec));
    if (!dv.is_positive()) throw PrecisionExhausted("derivative enclosure touches 0 at root approximation");
    IntervalReal r = iv_mul(iv_from_int(BigInt(p.degree()), prec), iv_div(pv, dv));
    return IntervalComplex(iv_widen(zre, r), iv_widen(zim, r));
}

bool boxes_disjoint(const IntervalComplex& a, const IntervalComplex& b) {
    bool re_dis = iv_compare(a.re, b.re) != Ordering::Undecided;
    bool im_dis = iv_compare(a.im, b.im) != Ordering::Undecided;
    return re_dis || im_dis;
}

} // namespace

bool is_squarefree(const IntPolynomial& p) {
    if (p.degree() <= 1) return true;
    auto chain = sturm_chain(p);
    // gcd(p, p') is the last nonzero remainder in the Euclid run; the chain
    // terminates exactly when that remainder divides its predecessor, i.e. the
    // chain ends in a constant iff p is squarefree.
    return chain.back().degree() == 0;
}

int count_real_roots(const IntPolynomial& p) {
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    BigRat b = cauchy_bound(p);
    return sign_variations(chain, -b) - sign_variations(chain, b);
}

bool is_irreducible_deg_le3(const IntPolynomial& p) {
    int d = p.degree();
    if (d == 0) return false;
    if (d == 1) return true;
    if (d > 3) throw Error("irreducibility test limited to degree <= 3");
    if (p.c[0] == 0) return false;  // X divides
    if (d == 2) {
        BigInt disc = p.c[1] * p.c[1] - 4 * p.c[0] * p.c[2];
        if (disc < 0) return true;
        return mpz_perfect_square_p(disc.get_mpz_t()) == 0;
    }
    // degree 3: reducible over Q iff it has a rational root p/q, p|c0, q|c3
    auto divisors = [](BigInt n) {
        n = abs(n);
        std::map<BigInt, int> fac;
        for (BigInt f = 2; f * f <= n && f < 2000000; ++f) {
            while (n % f == 0) {
                ++fac[f];
                n /= f;
            }
        }
        if (n > 1) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
                throw FieldValidation("cannot factor constant/leading coefficient for the rational-root test; pass assume_irreducible");
            ++fac[n];
        }
        std::vector<BigInt> divs{1};
        for (const auto& [prime, exp] : fac) {
            std::size_t sz = divs.size();
            BigInt pk = 1;
            for (int e = 1; e <= exp; ++e) {
                pk *= prime;
                for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
            }
        }
        return divs;
    };
    for (const auto& num : divisors(p.c[0])) {
        for (const auto& den : divisors(p.c[3])) {
            if (gcd(num, den) != 1) continue;
            for (int s : {1, -1}) {
                if (p.eval(make_rat(s * num, den)) == 0) return false;
            }
        }
    }
    return true;
}

RootEnclosures isolate_roots(const IntPolynomial& p, Precision prec) {
    int d = p.degree();
    if (d == 0) return {};
    if (!is_squarefree(p)) throw Error("isolate_roots requires a squarefree polynomial");

    RootEnclosures out;
    if (d == 1) {
        BigRat root = make_rat(-p.c[0], p.c[1]);
        out.roots.push_back(ic_from_real(iv_from_rat(root, prec)));
        out.num_real = 1;
        return out;
    }
    if (d == 2) {
        BigInt disc = p.c[1] * p.c[1] - 4 * p.c[0] * p.c[2];
        IntervalReal den = iv_from_int(2 * p.c[2], prec);
        IntervalReal mb = iv_from_int(-p.c[1], prec);
        if (disc > 0) {
            IntervalReal sq = iv_sqrt(iv_from_int(disc, prec));
            out.roots.push_back(ic_from_real(iv_div(iv_sub(mb, sq), den)));
            out.roots.push_back(ic_from_real(iv_div(iv_add(mb, sq), den)));
            out.num_real = 2;
        } else {
            IntervalReal re = iv_div(mb, den);
            IntervalReal im = iv_div(iv_sqrt(iv_from_int(-disc, prec)), den);
            out.roots.emplace_back(re, im);
            out.roots.emplace_back(re, iv_neg(im));
            out.num_real = 0;
        }
        return out;
    }

    // degree >= 3: Sturm for the real roots, certified boxes for the rest
    auto reals = isolate_real(p);
    int bits = prec.bits;
    for (;;) {
        Precision work(bits, prec.max_bits);
        BigRat eps = make_rat(1, pow_int(2, static_cast<unsigned long>(bits + 4)));
        out = RootEnclosures{};
        std::vector<RealRoot> refined = reals;
        for (int round = 0;; ++round) {
            for (auto& r : refined) refine_real(p, r, eps);
            bool disjoint = true;
            for (std::size_t i = 0; i + 1 < refined.size(); ++i)
                if (!(refined[i].hi < refined[i + 1].lo)) disjoint = false;
            if (disjoint) break;
            if (round >= 4) throw PrecisionExhausted("real root enclosures do not separate");
            eps /= pow_int(2, 64);
        }
        for (const auto& r : refined)
            out.roots.push_back(ic_from_real(iv_from_endpoints(r.lo, r.hi, work)));
        out.num_real = static_cast<int>(reals.size());
        int pairs = (d - out.num_real) / 2;
        if (pairs == 0) return out;

        std::vector<double> cd(d + 1);
        std::size_t maxbits = 0;
        for (const auto& c : p.c) maxbits = std::max(maxbits, mpz_sizeinbase(c.get_mpz_t(), 2));
        long shift = maxbits > 900 ? static_cast<long>(maxbits - 900) : 0;
        for (int k = 0; k <= d; ++k) {
            mpfr_t t;
            mpfr_init2(t, 64);
            mpfr_set_z_2exp(t, p.c[k].get_mpz_t(), -shift, MPFR_RNDN);
            cd[k] = mpfr_get_d(t, MPFR_RNDN);
            mpfr_clear(t);
        }
        auto approx = aberth(cd);
        IntPolynomial dp = derivative_int(p);

        std::vector<IntervalComplex> upper;
        bool ok = true;
        for (const auto& z0 : approx) {
            if (z0.imag() <= 0) continue;  // conjugates are mirrored below
            MpfrComplex z(bits);
            mpfr_set_d(z.re, z0.real(), MPFR_RNDN);
            mpfr_set_d(z.im, z0.imag(), MPFR_RNDN);
            newton_polish(p, z, bits, 8 + bits / 16);
            try {
                upper.push_back(inclusion_box(p, dp, z, work));
            } catch (const PrecisionExhausted&) {
                ok = false;
                break;
            }
        }
        if (ok && static_cast<int>(upper.size()) == pairs) {
            std::sort(upper.begin(), upper.end(), [](const IntervalComplex& a, const IntervalComplex& b) {
                return mpfr_cmp(a.re.lo(), b.re.lo()) < 0;
            });
            for (const auto& b : upper) {
                if (!b.im.is_positive()) ok = false;  // must be certified off the real axis
            }
            std::vector<IntervalComplex> all = out.roots;
            for (const auto& b : upper) {
                all.push_back(b);
                all.emplace_back(b.re, iv_neg(b.im));
            }
            for (std::size_t i = 0; ok && i < all.size(); ++i)
                for (std::size_t j = i + 1; ok && j < all.size(); ++j)
                    if (!boxes_disjoint(all[i], all[j])) ok = false;
            if (ok) {
                out.roots = std::move(all);
                return out;
            }
        }
        if (bits * 2 > prec.max_bits)
            throw PrecisionExhausted("could not certify disjoint root enclosures at max precision");
        bits *= 2;
    }
}

} // namespace transcrit
