/* SPDX-License-Identifier: Apache-2.0 */
#include "transcrit/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

namespace transcrit {

IntervalReal::IntervalReal(Precision prec) : bits_(prec.bits) {
    mpfr_init2(lo_, bits_);
    mpfr_init2(hi_, bits_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

IntervalReal::IntervalReal(const IntervalReal& o) : bits_(o.bits_) {
    mpfr_init2(lo_, bits_);
    mpfr_init2(hi_, bits_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

IntervalReal::IntervalReal(IntervalReal&& o) noexcept : bits_(o.bits_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    mpfr_init2(o.lo_, 2);
    mpfr_init2(o.hi_, 2);
    mpfr_set_zero(o.lo_, 1);
    mpfr_set_zero(o.hi_, 1);
}

IntervalReal& IntervalReal::operator=(IntervalReal o) noexcept {
    swap(*this, o);
    return *this;
}

IntervalReal::~IntervalReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void swap(IntervalReal& a, IntervalReal& b) noexcept {
    mpfr_swap(a.lo_, b.lo_);
    mpfr_swap(a.hi_, b.hi_);
    std::swap(a.bits_, b.bits_);
}

bool IntervalReal::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool IntervalReal::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool IntervalReal::is_negative() const { return mpfr_sgn(hi_) < 0; }

static BigRat mpfr_to_rat(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return BigRat(0);
    if (!mpfr_number_p(x)) throw Error("non-finite interval endpoint");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    BigRat q(m);
    if (e >= 0) {
        mpz_class p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        q *= BigRat(p);
    } else {
        mpz_class p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
        q /= BigRat(p);
    }
    q.canonicalize();
    return q;
}

BigRat IntervalReal::lo_rat() const { return mpfr_to_rat(lo_); }
BigRat IntervalReal::hi_rat() const { return mpfr_to_rat(hi_); }

static std::string mpfr_hex(mpfr_srcptr x) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%Ra", x) < 0) throw Error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string IntervalReal::lo_str() const { return mpfr_hex(lo_); }
std::string IntervalReal::hi_str() const { return mpfr_hex(hi_); }

std::string IntervalReal::brief(int digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "[%.*Rg, %.*Rg]", digits, lo_, digits, hi_) < 0)
        throw Error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

IntervalReal iv_from_rat(const BigRat& q, Precision prec) {
    IntervalReal r(prec);
    mpfr_set_q(r.lo(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

IntervalReal iv_from_int(const BigInt& z, Precision prec) {
    IntervalReal r(prec);
    mpfr_set_z(r.lo(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi(), z.get_mpz_t(), MPFR_RNDU);
    return r;
}

IntervalReal iv_from_endpoints(const BigRat& lo, const BigRat& hi, Precision prec) {
    if (lo > hi) throw Error("interval endpoints out of order");
    IntervalReal r(prec);
    mpfr_set_q(r.lo(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi(), hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

IntervalReal iv_zero(Precision prec) { return IntervalReal(prec); }

static Precision join(const IntervalReal& a, const IntervalReal& b) {
    return Precision(std::max(a.bits(), b.bits()));
}

IntervalReal iv_add(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(join(a, b));
    mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

IntervalReal iv_sub(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(join(a, b));
    mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

IntervalReal iv_neg(const IntervalReal& a) {
    IntervalReal r(Precision(a.bits()));
    mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
    mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
    return r;
}

IntervalReal iv_mul(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(join(a, b));
    mpfr_t t;
    mpfr_init2(t, r.bits());
    // lo: min of the four products rounded down
    mpfr_mul(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    // hi: max of the four products rounded up
    mpfr_mul(r.hi(), a.lo(), b.lo(), MPFR_RNDU);
    mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

IntervalReal iv_div(const IntervalReal& a, const IntervalReal& b) {
    if (b.contains_zero()) throw DivisionByZero("interval division by enclosure of 0");
    IntervalReal r(join(a, b));
    mpfr_t t;
    mpfr_init2(t, r.bits());
    mpfr_div(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_div(t, a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_div(t, a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_div(t, a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_div(r.hi(), a.lo(), b.lo(), MPFR_RNDU);
    mpfr_div(t, a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_div(t, a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_div(t, a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

IntervalReal iv_abs(const IntervalReal& a) {
    IntervalReal r(Precision(a.bits()));
    if (mpfr_sgn(a.lo()) >= 0) {
        mpfr_set(r.lo(), a.lo(), MPFR_RNDD);
        mpfr_set(r.hi(), a.hi(), MPFR_RNDU);
    } else if (mpfr_sgn(a.hi()) <= 0) {
        mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
        mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo(), 1);
        mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
        mpfr_max(r.hi(), r.hi(), a.hi(), MPFR_RNDU);
    }
    return r;
}

IntervalReal iv_max(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(join(a, b));
    mpfr_max(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

IntervalReal iv_min(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(join(a, b));
    mpfr_min(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

IntervalReal iv_hull(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(join(a, b));
    mpfr_min(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

IntervalReal iv_widen(const IntervalReal& a, const IntervalReal& pad) {
    if (mpfr_sgn(pad.hi()) < 0) throw Error("negative widening pad");
    IntervalReal r(join(a, pad));
    mpfr_sub(r.lo(), a.lo(), pad.hi(), MPFR_RNDD);
    mpfr_add(r.hi(), a.hi(), pad.hi(), MPFR_RNDU);
    return r;
}

IntervalReal iv_log2(const IntervalReal& x) {
    if (mpfr_sgn(x.lo()) <= 0)
        throw NonPositiveInput("iv_log2 requires a certified-positive argument");
    IntervalReal r(Precision(x.bits()));
    mpfr_log2(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_log2(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

IntervalReal iv_exp2(const IntervalReal& x) {
    IntervalReal r(Precision(x.bits()));
    mpfr_exp2(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_exp2(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

IntervalReal iv_pow(const IntervalReal& x, const IntervalReal& e) {
    if (mpfr_sgn(x.lo()) <= 0)
        throw NonPositiveBase("iv_pow requires a certified-positive base");
    return iv_exp2(iv_mul(e, iv_log2(x)));
}

IntervalReal iv_pow_rat(const IntervalReal& x, const BigRat& e, Precision prec) {
    if (e == 0) return iv_from_rat(BigRat(1), prec);
    if (is_integer(e) && e > 0 && mpz_fits_ulong_p(e.get_num().get_mpz_t()))
        return iv_pow_ui(x, e.get_num().get_ui());
    return iv_pow(x, iv_from_rat(e, prec));
}

IntervalReal iv_sqrt(const IntervalReal& x) {
    if (mpfr_sgn(x.lo()) < 0) throw NonPositiveBase("iv_sqrt of negative enclosure");
    IntervalReal r(Precision(x.bits()));
    mpfr_sqrt(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_sqrt(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

IntervalReal iv_sqr(const IntervalReal& a) {
    IntervalReal r(Precision(a.bits()));
    if (mpfr_sgn(a.lo()) >= 0) {
        mpfr_mul(r.lo(), a.lo(), a.lo(), MPFR_RNDD);
        mpfr_mul(r.hi(), a.hi(), a.hi(), MPFR_RNDU);
    } else if (mpfr_sgn(a.hi()) <= 0) {
        mpfr_mul(r.lo(), a.hi(), a.hi(), MPFR_RNDD);
        mpfr_mul(r.hi(), a.lo(), a.lo(), MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo(), 1);
        mpfr_t t;
        mpfr_init2(t, r.bits());
        mpfr_mul(r.hi(), a.lo(), a.lo(), MPFR_RNDU);
        mpfr_mul(t, a.hi(), a.hi(), MPFR_RNDU);
        mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
        mpfr_clear(t);
    }
    return r;
}

IntervalReal iv_pow_ui(const IntervalReal& x, unsigned long k) {
    IntervalReal r = iv_from_rat(BigRat(1), Precision(x.bits()));
    IntervalReal base = x;
    while (k > 0) {
        if (k & 1) r = iv_mul(r, base);
        base = iv_mul(base, base);
        k >>= 1;
    }
    return r;
}

Ordering iv_compare(const IntervalReal& a, const IntervalReal& b) {
    if (mpfr_cmp(a.hi(), b.lo()) < 0) return Ordering::Less;
    if (mpfr_cmp(a.lo(), b.hi()) > 0) return Ordering::Greater;
    return Ordering::Undecided;
}

IntervalComplex ic_from_real(const IntervalReal& r) {
    return IntervalComplex(r, iv_zero(Precision(r.bits())));
}

IntervalComplex ic_add(const IntervalComplex& a, const IntervalComplex& b) {
    return IntervalComplex(iv_add(a.re, b.re), iv_add(a.im, b.im));
}

IntervalComplex ic_sub(const IntervalComplex& a, const IntervalComplex& b) {
    return IntervalComplex(iv_sub(a.re, b.re), iv_sub(a.im, b.im));
}

IntervalComplex ic_mul(const IntervalComplex& a, const IntervalComplex& b) {
    return IntervalComplex(iv_sub(iv_mul(a.re, b.re), iv_mul(a.im, b.im)),
                           iv_add(iv_mul(a.re, b.im), iv_mul(a.im, b.re)));
}

IntervalComplex ic_div(const IntervalComplex& a, const IntervalComplex& b) {
    IntervalReal n2 = iv_add(iv_sqr(b.re), iv_sqr(b.im));
    if (n2.contains_zero()) throw DivisionByZero("complex interval division by enclosure of 0");
    IntervalComplex conj(b.re, iv_neg(b.im));
    IntervalComplex num = ic_mul(a, conj);
    return IntervalComplex(iv_div(num.re, n2), iv_div(num.im, n2));
}

IntervalReal ic_abs(const IntervalComplex& a) {
    return iv_sqrt(iv_add(iv_sqr(a.re), iv_sqr(a.im)));
}

bool ic_contains_zero(const IntervalComplex& a) {
    return a.re.contains_zero() && a.im.contains_zero();
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::Fails: return "Fails";
        default: return "Undecided";
    }
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Greater: return "Greater";
        default: return "Undecided";
    }
}

} // namespace transcrit
