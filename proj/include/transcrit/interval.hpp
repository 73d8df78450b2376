/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "transcrit/bigint.hpp"
#include "transcrit/errors.hpp"

namespace transcrit {

// Working precision in bits, threaded explicitly through every interval
// operation. max_bits caps the Undecided refinement loops.
struct Precision {
    int bits = 256;
    int max_bits = 16384;

    Precision() = default;
    Precision(int b, int mb) : bits(b), max_bits(mb) {
        if (b < 2 || b > mb) throw Error("invalid precision");
    }
    explicit Precision(int b) : Precision(b, b > 16384 ? b : 16384) {}

    Precision doubled() const { return Precision(bits * 2, max_bits); }
    bool can_refine() const { return bits * 2 <= max_bits; }
};

enum class Ordering { Less, Greater, Undecided };

// Certified real enclosure [lo, hi]. Endpoints are dyadic rationals at the
// working precision (MPFR numbers); every operation rounds lo down and hi up,
// so the exact result of an expression is always contained in its enclosure.
class IntervalReal {
public:
    IntervalReal() : IntervalReal(Precision()) {}
    explicit IntervalReal(Precision prec);
    IntervalReal(const IntervalReal& o);
    IntervalReal(IntervalReal&& o) noexcept;
    IntervalReal& operator=(IntervalReal o) noexcept;
    ~IntervalReal();

    int bits() const { return bits_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

    bool contains_zero() const;
    bool is_positive() const;  // certified: lo > 0
    bool is_negative() const;  // certified: hi < 0
    BigRat lo_rat() const;     // exact (endpoints are dyadic)
    BigRat hi_rat() const;
    BigRat width_rat() const { return hi_rat() - lo_rat(); }
    std::string lo_str() const;  // hex-float, exact round trip
    std::string hi_str() const;
    std::string brief(int digits = 8) const;

    friend void swap(IntervalReal& a, IntervalReal& b) noexcept;

private:
    mpfr_t lo_, hi_;
    int bits_;
};

// Constructors
IntervalReal iv_from_rat(const BigRat& q, Precision prec);
IntervalReal iv_from_int(const BigInt& z, Precision prec);
IntervalReal iv_from_endpoints(const BigRat& lo, const BigRat& hi, Precision prec);
IntervalReal iv_zero(Precision prec);

// Arithmetic (result precision = max of operand precisions)
IntervalReal iv_add(const IntervalReal& a, const IntervalReal& b);
IntervalReal iv_sub(const IntervalReal& a, const IntervalReal& b);
IntervalReal iv_mul(const IntervalReal& a, const IntervalReal& b);
IntervalReal iv_div(const IntervalReal& a, const IntervalReal& b);  // 0 ∉ b
IntervalReal iv_neg(const IntervalReal& a);
IntervalReal iv_abs(const IntervalReal& a);
IntervalReal iv_max(const IntervalReal& a, const IntervalReal& b);
IntervalReal iv_min(const IntervalReal& a, const IntervalReal& b);
IntervalReal iv_hull(const IntervalReal& a, const IntervalReal& b);
IntervalReal iv_widen(const IntervalReal& a, const IntervalReal& pad);  // a + [-pad.hi, pad.hi]

inline IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) { return iv_add(a, b); }
inline IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) { return iv_sub(a, b); }
inline IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) { return iv_mul(a, b); }
inline IntervalReal operator/(const IntervalReal& a, const IntervalReal& b) { return iv_div(a, b); }
inline IntervalReal operator-(const IntervalReal& a) { return iv_neg(a); }

// Transcendental layer. iv_pow is 2^{e·log2 x}: one certified code path.
IntervalReal iv_log2(const IntervalReal& x);                          // x.lo > 0
IntervalReal iv_exp2(const IntervalReal& x);
IntervalReal iv_pow(const IntervalReal& x, const IntervalReal& e);    // x.lo > 0
IntervalReal iv_pow_rat(const IntervalReal& x, const BigRat& e, Precision prec);
IntervalReal iv_sqrt(const IntervalReal& x);                          // x.lo >= 0
IntervalReal iv_sqr(const IntervalReal& a);
IntervalReal iv_pow_ui(const IntervalReal& x, unsigned long k);       // any sign, integer power

// Less iff a.hi < b.lo, Greater iff a.lo > b.hi, else Undecided.
Ordering iv_compare(const IntervalReal& a, const IntervalReal& b);

// Certified box enclosure of a complex value.
struct IntervalComplex {
    IntervalReal re, im;

    IntervalComplex() = default;
    IntervalComplex(IntervalReal r, IntervalReal i) : re(std::move(r)), im(std::move(i)) {}
};

IntervalComplex ic_from_real(const IntervalReal& r);
IntervalComplex ic_add(const IntervalComplex& a, const IntervalComplex& b);
IntervalComplex ic_sub(const IntervalComplex& a, const IntervalComplex& b);
IntervalComplex ic_mul(const IntervalComplex& a, const IntervalComplex& b);
IntervalComplex ic_div(const IntervalComplex& a, const IntervalComplex& b);  // 0 ∉ |b|
IntervalReal ic_abs(const IntervalComplex& a);
bool ic_contains_zero(const IntervalComplex& a);

enum class Verdict { Holds, Fails, Undecided };

std::string to_string(Verdict v);
std::string to_string(Ordering o);

// Certified decision of lhs(bits) ≤/< rhs(bits), doubling bits until the
// enclosures separate or max_bits is reached (then Undecided, never a guess).
template <typename L, typename R>
Verdict certify_cmp(L&& lhs_at, R&& rhs_at, Precision prec, bool strict) {
    for (Precision p = prec;; p = p.doubled()) {
        IntervalReal lhs = lhs_at(p);
        IntervalReal rhs = rhs_at(p);
        Ordering o = iv_compare(lhs, rhs);
        if (o == Ordering::Less) return Verdict::Holds;
        if (o == Ordering::Greater) return Verdict::Fails;
        if (!strict) {
            // lhs ≤ rhs already certified when endpoints touch
            if (mpfr_cmp(lhs.hi(), rhs.lo()) <= 0) return Verdict::Holds;
        } else {
            if (mpfr_cmp(lhs.lo(), rhs.hi()) >= 0) return Verdict::Fails;
        }
        if (!p.can_refine()) return Verdict::Undecided;
    }
}

template <typename L, typename R>
Verdict certify_le(L&& lhs_at, R&& rhs_at, Precision prec) {
    return certify_cmp(std::forward<L>(lhs_at), std::forward<R>(rhs_at), prec, false);
}

template <typename L, typename R>
Verdict certify_lt(L&& lhs_at, R&& rhs_at, Precision prec) {
    return certify_cmp(std::forward<L>(lhs_at), std::forward<R>(rhs_at), prec, true);
}

} // namespace transcrit
