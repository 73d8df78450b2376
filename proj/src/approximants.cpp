/* SPDX-License-Identifier: Apache-2.0 */
#include "transcrit/approximants.hpp"

#include <algorithm>
#include <cmath>

#include "transcrit/errors.hpp"

namespace transcrit {

std::string to_string(TailKind k) {
    switch (k) {
        case TailKind::Gamma: return "gamma";
        case TailKind::CapitalGamma: return "Gamma";
        case TailKind::Window: return "window";
    }
    return "?";
}

FieldElement partial_sum(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, long N) {
    if (N < 1) throw Error("partial_sum needs N >= 1");
    FieldElement s = spec.field->zero();
    for (long n = 1; n < N; ++n) {
        Term t = spec.term(n);
        s = s + t.b / (t.a * spec.field->from_rat(BigRat(t.c * c_at(c_seq, n))));
    }
    return s;
}

namespace {

// |b_n|/(|a_n|·c_n) with each factor evaluated adaptively: going through the
// inverse element b/a would put the cancellation in the coordinates
IntervalReal term_abs(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, long n,
                      Precision prec) {
    Term t = spec.term(n);
    IntervalReal num = abs_value_adaptive(t.b, prec);
    IntervalReal den = iv_mul(abs_value_adaptive(t.a, prec),
                              iv_from_int(t.c * c_at(c_seq, n), prec));
    return iv_div(num, den);
}

// First index where the declared profile predicts |term| halving, then a
// certified ratio ≤ 1/2 check on the 4-point window starting there.
long certified_ratio_start(const SequenceSpec& spec, const std::vector<BigInt>& c_seq,
                           Precision prec) {
    const GrowthProfile& pf = spec.profile;
    double g = mpq_get_d(pf.g.get_mpq_t());
    long n0 = 1;
    for (; n0 <= 8; ++n0) {
        double gn = std::pow(g, static_cast<double>(n0));
        double predicted_gap = gn * (g - 1) * (pf.A + pf.A_L * std::log(static_cast<double>(n0 + 1)));
        if (predicted_gap + pf.B >= 2 * std::log(2.0)) break;  // ratio ≲ 1/4 predicted
    }
    if (n0 > 8) throw RatioNotCertified("profile never predicts term halving on a small prefix");
    IntervalReal prev = term_abs(spec, c_seq, n0, prec);
    IntervalReal half = iv_from_rat(make_rat(1, 2), prec);
    for (long n = n0; n < n0 + 4; ++n) {
        IntervalReal next = term_abs(spec, c_seq, n + 1, prec);
        if (!prev.is_positive()) throw RatioNotCertified("term enclosure touches 0 in the ratio window");
        Ordering o = iv_compare(iv_div(next, prev), half);
        if (o != Ordering::Less) {
            if (mpfr_cmp(iv_div(next, prev).hi(), half.lo()) > 0)
                throw RatioNotCertified("term ratio not certifiably <= 1/2 at n = " + std::to_string(n));
        }
        prev = next;
    }
    return n0;
}

bool terms_certified_positive(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, long lo,
                              long hi, Precision prec) {
    if (!spec.field->real_distinguished()) return false;
    for (long n = lo; n <= hi; ++n) {
        Term t = spec.term(n);
        // sign of b_n/(a_n·c_n) = sign of a_n·b_n under a real embedding
        IntervalComplex v = value_adaptive(t.a * t.b, prec);
        if (!v.re.is_positive()) return false;
    }
    return true;
}

} // namespace

IntervalReal tail_abs_enclosure(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, long N,
                                Precision prec) {
    long n0 = certified_ratio_start(spec, c_seq, prec);
    long start = std::max(N, n0);
    IntervalReal two = iv_from_rat(BigRat(2), prec);
    // tail = (s_start − s_N) + T with |T| ≤ 2·t_start by the ratio bound
    IntervalReal t_start = term_abs(spec, c_seq, start, prec);
    IntervalReal rest = iv_mul(two, t_start);
    IntervalReal head = iv_zero(prec);
    if (start > N) {
        FieldElement gap = partial_sum(spec, c_seq, start) - partial_sum(spec, c_seq, N);
        if (!gap.is_zero()) head = abs_value_adaptive(gap, prec);
    }
    IntervalReal upper = iv_add(head, rest);

    // lower bound: positive terms give t_N; otherwise split off t_N and apply
    // the reverse triangle inequality to the remainder
    IntervalReal lower(prec);
    if (terms_certified_positive(spec, c_seq, N, start + 1, prec)) {
        lower = start > N ? head : term_abs(spec, c_seq, N, prec);
    } else if (start > N) {
        lower = iv_sub(head, rest);
    } else {
        long start2 = std::max(N + 1, n0);
        IntervalReal tN = term_abs(spec, c_seq, N, prec);
        FieldElement mid = partial_sum(spec, c_seq, start2) - partial_sum(spec, c_seq, N + 1);
        IntervalReal mid_abs = mid.is_zero() ? iv_zero(prec) : abs_value_adaptive(mid, prec);
        IntervalReal rest2 = iv_mul(two, term_abs(spec, c_seq, start2, prec));
        lower = iv_sub(tN, iv_add(mid_abs, rest2));
    }
    IntervalReal out(Precision(prec.bits));
    mpfr_set(out.lo(), lower.lo(), MPFR_RNDD);
    if (mpfr_sgn(out.lo()) < 0) mpfr_set_zero(out.lo(), 1);
    mpfr_set(out.hi(), upper.hi(), MPFR_RNDU);
    return out;
}

IntervalReal sum_enclosure(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, Precision prec) {
    long n0 = certified_ratio_start(spec, c_seq, prec);
    // pick the smallest N₁ ≥ n0 whose tail majorant meets the width target
    mpfr_t target;
    mpfr_init2(target, 32);
    mpfr_set_ui_2exp(target, 1, -(prec.bits - 8), MPFR_RNDN);
    long N1 = n0;
    IntervalReal t = term_abs(spec, c_seq, N1, prec);
    for (; N1 < n0 + 64; ++N1) {
        t = term_abs(spec, c_seq, N1, prec);
        if (mpfr_cmp(t.hi(), target) <= 0) break;
    }
    mpfr_clear(target);

    FieldElement head = partial_sum(spec, c_seq, N1);
    IntervalComplex hv = head.is_zero() ? IntervalComplex(iv_zero(prec), iv_zero(prec))
                                        : value_adaptive(head, prec);
    if (!spec.field->real_distinguished() || hv.im.lo_rat() != 0 || hv.im.hi_rat() != 0)
        throw Error("sum_enclosure needs a real distinguished embedding");
    bool positive = terms_certified_positive(spec, c_seq, N1, N1 + 1, prec);
    IntervalReal pad = iv_mul(iv_from_rat(BigRat(2), prec), t);
    IntervalReal out(Precision(prec.bits));
    if (positive) {
        mpfr_set(out.lo(), hv.re.lo(), MPFR_RNDD);
        mpfr_add(out.hi(), hv.re.hi(), pad.hi(), MPFR_RNDU);
    } else {
        mpfr_sub(out.lo(), hv.re.lo(), pad.hi(), MPFR_RNDD);
        mpfr_add(out.hi(), hv.re.hi(), pad.hi(), MPFR_RNDU);
    }
    return out;
}

namespace {

// |p_i| as exact integers vs E·2^{log₂^{(1+2α)/3} q}·q^y, plus the smallest
// power-of-two E that would make the bound hold
struct P15 {
    Verdict verdict;
    std::optional<BigRat> suggested_E;
};

IntervalReal q_log_factor(const BigInt& q, const BigRat& alpha, Precision p) {
    IntervalReal lq = iv_log2(iv_from_int(q, p));
    BigRat expo = (1 + 2 * alpha) / 3;
    if (mpfr_zero_p(lq.lo()) && mpfr_zero_p(lq.hi())) return iv_from_rat(BigRat(1), p);
    return iv_exp2(iv_pow_rat(lq, expo, p));
}

P15 check_15(const std::vector<BigInt>& pvec, const BigInt& q, const BigRat& E, const BigRat& y,
             const BigRat& alpha, Precision prec) {
    P15 out{Verdict::Holds, std::nullopt};
    BigInt pmax = 0;
    for (const auto& pi : pvec) pmax = std::max(pmax, abs(pi));
    auto rhs = [&](const BigRat& e) {
        return [&, e](Precision p) -> std::optional<IntervalReal> {
            return iv_mul(iv_from_rat(e, p), iv_mul(q_log_factor(q, alpha, p),
                                                    iv_pow_rat(iv_from_int(q, p), y, p)));
        };
    };
    auto lhs = [&](Precision p) -> std::optional<IntervalReal> { return iv_from_int(pmax, p); };
    for (Precision p = prec;; p = p.doubled()) {
        auto l = lhs(p);
        auto r = rhs(E)(p);
        Ordering o = iv_compare(*l, *r);
        if (o == Ordering::Less || mpfr_cmp(l->hi(), r->lo()) <= 0) {
            out.verdict = Verdict::Holds;
            break;
        }
        if (o == Ordering::Greater) {
            out.verdict = Verdict::Fails;
            break;
        }
        if (!p.can_refine()) {
            out.verdict = Verdict::Undecided;
            break;
        }
    }
    // smallest certified power-of-two E: start from the log2 of the ratio
    {
        IntervalReal denom = iv_mul(q_log_factor(q, alpha, prec), iv_pow_rat(iv_from_int(q, prec), y, prec));
        IntervalReal ratio = iv_div(iv_from_int(std::max(pmax, BigInt(1)), prec), denom);
        long k = static_cast<long>(std::ceil(mpfr_get_d(iv_log2(ratio).hi(), MPFR_RNDU)));
        for (long tries = 0; tries < 64; ++tries, ++k) {
            BigRat e = pow_rat(BigRat(2), k);
            auto r = rhs(e)(prec);
            if (mpfr_cmp(iv_from_int(pmax, prec).hi(), r->lo()) <= 0) {
                out.suggested_E = e;
                break;
            }
        }
    }
    return out;
}

Verdict check_upper(const IntervalReal& lhs, const std::function<IntervalReal(Precision)>& rhs,
                    Precision prec, bool strict) {
    // lhs was computed once (it is expensive); rhs may refine
    for (Precision p = prec;; p = p.doubled()) {
        IntervalReal r = rhs(p);
        Ordering o = iv_compare(lhs, r);
        if (o == Ordering::Less) return Verdict::Holds;
        if (o == Ordering::Greater) return Verdict::Fails;
        if (!strict && mpfr_cmp(lhs.hi(), r.lo()) <= 0) return Verdict::Holds;
        if (!p.can_refine()) return Verdict::Undecided;
    }
}

} // namespace

ApproximantResult build_q_p_rational(const SequenceSpec& spec, const std::vector<BigInt>& c_seq,
                                     long N, const BigRat& M, const BigRat& E, const BigRat& y,
                                     const BigRat& alpha, Precision prec) {
    if (N < 1) throw Error("N >= 1 required");
    std::size_t D = spec.basis.size();
    // lcm of the §3 denominators of the basis elements
    BigInt L = 1;
    for (const auto& x : spec.basis) L = lcm(L, denominator(x));

    BigInt q = L;
    std::vector<Term> terms;
    for (long n = 1; n < N; ++n) {
        Term t = spec.term(n);
        if (!t.a.is_rational() || !is_integer(t.a.rational_value()) || t.a.rational_value() < 1)
            throw NotRationalA("build_q_p_rational needs positive integer a_n");
        terms.push_back(t);
        q *= t.a.rational_value().get_num() * t.c * c_at(c_seq, n);
    }
    // p_i = L·Σ_n b_{i,n}·∏_{m≠n} a_m c_m, assembled exactly
    std::vector<BigInt> p(D, BigInt(0));
    for (long n = 1; n < N; ++n) {
        const Term& t = terms[static_cast<std::size_t>(n - 1)];
        std::vector<BigInt> bc;
        if (t.b_coords)
            bc = *t.b_coords;
        else
            bc = integer_coords(t.b, spec.basis).coords;
        BigInt prod = L;
        for (long m = 1; m < N; ++m) {
            if (m == n) continue;
            const Term& tm = terms[static_cast<std::size_t>(m - 1)];
            prod *= tm.a.rational_value().get_num() * tm.c * c_at(c_seq, m);
        }
        for (std::size_t i = 0; i < D; ++i) p[i] += bc[i] * prod;
    }
    // exactness: q·s_N = Σ p_i x_i
    {
        FieldElement lhs = spec.field->from_rat(BigRat(q)) * partial_sum(spec, c_seq, N);
        FieldElement rhs = spec.field->zero();
        for (std::size_t i = 0; i < D; ++i)
            rhs = rhs + spec.field->from_rat(BigRat(p[i])) * spec.basis[i];
        if (!(lhs == rhs)) throw IntegralityViolated("q·s_N != Σ p_i x_i (construction bug)");
    }

    ApproximantResult out;
    out.approximant.N = N;
    out.approximant.q = q;
    out.approximant.p = p;
    out.approximant.err = tail_abs_enclosure(spec, c_seq, N, prec);

    // (14): err < 1/((log₂² q)·2^{D·log₂^{(1+2α)/3} q}·q^M)
    auto rhs14 = [&](Precision pr) {
        IntervalReal lq = iv_log2(iv_from_int(q, pr));
        IntervalReal denom = iv_mul(iv_mul(iv_mul(lq, lq), iv_pow_ui(q_log_factor(q, alpha, pr),
                                                                     static_cast<unsigned long>(D))),
                                    iv_pow_rat(iv_from_int(q, pr), M, pr));
        return iv_div(iv_from_rat(BigRat(1), pr), denom);
    };
    out.checks.emplace_back("(14)", q > 1 ? check_upper(out.approximant.err, rhs14, prec, true)
                                          : Verdict::Undecided);
    P15 p15 = check_15(p, q, E, y, alpha, prec);
    out.checks.emplace_back("(15)", p15.verdict);
    out.suggested_E = p15.suggested_E;
    return out;
}

ApproximantResult build_q_p_general(const SequenceSpec& spec, const std::vector<BigInt>& c_seq,
                                    long N, const BigRat& eta2, const BigRat& alpha, Precision prec) {
    if (N < 1) throw Error("N >= 1 required");
    const FieldPtr& f = spec.field;
    int d = f->degree();
    std::size_t D = spec.basis.size();
    if (static_cast<int>(D) != d) throw Error("Lemma 5.2 construction needs the x_i to be a basis of K");
    // exponents only steer the reported (20)/(21) verdicts; fall back gently
    BigRat y1 = spec.exponents.y1.value_or(spec.exponents.y.value_or(BigRat(1)));
    BigRat y2 = spec.exponents.y2.value_or(spec.exponents.beta.value_or(BigRat(0)));
    BigRat eta1 = spec.exponents.eta1.value_or(BigRat(0));

    // κ: clears every coordinate of products of Galois images of basis elements
    auto images = f->galois_theta_images();  // throws NotGalois beyond degree 2
    std::vector<FieldElement> gx;            // all g(x_j)
    for (const auto& im : images)
        for (const auto& x : spec.basis) gx.push_back(f->apply_galois(x, im));
    BigInt kappa = 1;
    std::vector<FieldElement> products{f->one()};
    for (int dp = 1; dp <= d; ++dp) {
        if (d % dp != 0) continue;
        std::vector<FieldElement> next;
        std::vector<FieldElement> layer{f->one()};
        for (int k = 0; k < dp; ++k) {
            next.clear();
            for (const auto& prod : layer)
                for (const auto& g : gx) next.push_back(prod * g);
            layer = next;
        }
        for (const auto& prod : layer)
            for (const auto& coord : prod.coords()) kappa = lcm(kappa, coord.get_den());
    }

    BigRat qrat(kappa);
    std::vector<std::pair<std::string, Verdict>> checks;
    Verdict v22_all = Verdict::Holds;
    for (long n = 1; n < N; ++n) {
        Term t = spec.term(n);
        std::vector<BigInt> ac = t.a_coords ? *t.a_coords : integer_coords(t.a, spec.basis).coords;
        BigInt r = gcd_all(ac);
        if (r == 0) throw Error("a_n = 0");
        BigInt R = r * t.c * c_at(c_seq, n);  // c_n folded into the modulus
        FieldElement reduced = t.a / f->from_rat(BigRat(r));
        BigRat conj = norms(reduced).conjprod;
        if (conj == 0) throw Error("zero norm");
        BigRat denomF = BigRat(R) * abs(conj);
        FieldElement an_scaled = t.a * f->from_rat(BigRat(t.c * c_at(c_seq, n)));

        // minimal |ã| with ã·R·𝒩 ≥ |a_n c_n|^{η₂}; ceil certified exactly for
        // rational targets and by interval refinement otherwise
        auto ceil_pos = [](const BigRat& x) {
            BigInt r;
            mpz_cdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
            return r < 1 ? BigInt(1) : r;
        };
        BigInt k;
        if (an_scaled.is_rational() && is_integer(eta2)) {
            BigRat target = pow_rat(abs(an_scaled.rational_value()),
                                    eta2.get_num().get_si());
            k = ceil_pos(target / denomF);
        } else {
            for (Precision p = prec;; p = p.doubled()) {
                IntervalReal target = iv_pow_rat(abs_value_adaptive(an_scaled, p), eta2, p);
                BigInt cl = ceil_pos(target.lo_rat() / denomF);
                BigInt ch = ceil_pos(target.hi_rat() / denomF);
                if (cl == ch) {
                    k = cl;
                    break;
                }
                if (!p.can_refine())
                    throw PrecisionExhausted("cannot certify the minimal ã_n at max precision");
            }
        }
        BigInt atilde = conj < 0 ? BigInt(-k) : k;  // sign matches 𝒩 so the factor is positive
        BigRat factor = BigRat(atilde) * BigRat(R) * conj;
        if (factor <= 0) throw IntegralityViolated("ã_n·r_n·𝒩(a_n/r_n) not positive");
        qrat *= factor;

        // (22): factor ≤ 2·|a_n c_n|^{η₂}·2^{log₂^α |a_n c_n|}
        auto rhs22 = [&](Precision p) -> std::optional<IntervalReal> {
            IntervalReal av = abs_value_adaptive(an_scaled, p);
            if (!av.is_positive()) return std::nullopt;
            IntervalReal lg = iv_log2(av);
            IntervalReal fac = (mpfr_zero_p(lg.lo()) && mpfr_zero_p(lg.hi()))
                                   ? iv_from_rat(BigRat(1), p)
                                   : (lg.is_positive() ? iv_exp2(iv_pow_rat(lg, alpha, p))
                                                       : IntervalReal(p));
            if (!lg.is_positive() && !(mpfr_zero_p(lg.lo()) && mpfr_zero_p(lg.hi())))
                return std::nullopt;
            return iv_mul(iv_from_rat(BigRat(2), p), iv_mul(iv_pow_rat(av, eta2, p), fac));
        };
        Verdict v22;
        {
            auto lhs = [&](Precision p) -> std::optional<IntervalReal> {
                return iv_from_rat(factor, p);
            };
            for (Precision p = prec;; p = p.doubled()) {
                auto l = lhs(p);
                auto r = rhs22(p);
                if (l && r) {
                    Ordering o = iv_compare(*l, *r);
                    if (o == Ordering::Less || mpfr_cmp(l->hi(), r->lo()) <= 0) {
                        v22 = Verdict::Holds;
                        break;
                    }
                    if (o == Ordering::Greater) {
                        v22 = Verdict::Fails;
                        break;
                    }
                }
                if (!p.can_refine()) {
                    v22 = Verdict::Undecided;
                    break;
                }
            }
        }
        if (v22 == Verdict::Fails)
            v22_all = Verdict::Fails;
        else if (v22 == Verdict::Undecided && v22_all == Verdict::Holds)
            v22_all = Verdict::Undecided;
    }
    if (!is_integer(qrat) || qrat < 1)
        throw IntegralityViolated("q_N = κ·∏ ã_n r_n 𝒩(a_n/r_n) is not a positive integer");
    BigInt q = qrat.get_num();

    FieldElement sN = partial_sum(spec, c_seq, N);
    FieldElement qsN = f->from_rat(BigRat(q)) * sN;
    std::vector<BigInt> p(D);
    {
        // coordinates of q·s_N over the x basis, hard integrality assertion
        auto lam = mat_solve(
            [&] {
                MatQ m = mat_zero(d, D);
                for (std::size_t j = 0; j < D; ++j) {
                    VecQ pc = spec.basis[j].power_coords();
                    for (int i = 0; i < d; ++i) m[i][j] = pc[i];
                }
                return m;
            }(),
            qsN.power_coords());
        if (!lam) throw IntegralityViolated("q_N·s_N not in the span of the basis");
        for (std::size_t i = 0; i < D; ++i) {
            if (!is_integer((*lam)[i]))
                throw IntegralityViolated("p_{i,N} not an integer (convention bug)");
            p[i] = (*lam)[i].get_num();
        }
        FieldElement rhs = f->zero();
        for (std::size_t i = 0; i < D; ++i) rhs = rhs + f->from_rat(BigRat(p[i])) * spec.basis[i];
        if (!(rhs == qsN)) throw IntegralityViolated("q·s_N != Σ p_i x_i (construction bug)");
    }

    ApproximantResult out;
    out.approximant.N = N;
    out.approximant.q = q;
    out.approximant.p = p;
    out.approximant.err = tail_abs_enclosure(spec, c_seq, N, prec);

    BigRat pow21 = 1 + ((d - 1) * y1 + y2 - eta1) / eta2;
    // (20): err < 1 / (2^{d·log₂^{(1+2α)/3} q}·q^{d+1+d·((d−1)y₁+y₂−η₁)/η₂})
    auto rhs20 = [&](Precision pr) {
        BigRat expo = BigRat(d) + 1 + BigRat(d) * ((d - 1) * y1 + y2 - eta1) / eta2;
        IntervalReal denom = iv_mul(iv_pow_ui(q_log_factor(q, alpha, pr), static_cast<unsigned long>(d)),
                                    iv_pow_rat(iv_from_int(q, pr), expo, pr));
        return iv_div(iv_from_rat(BigRat(1), pr), denom);
    };
    out.checks.emplace_back("(20)", q > 1 ? check_upper(out.approximant.err, rhs20, prec, true)
                                          : Verdict::Undecided);
    P15 p21 = check_15(p, q, BigRat(1), pow21, alpha, prec);
    out.checks.emplace_back("(21)", p21.verdict);
    out.checks.emplace_back("(22)", v22_all);
    return out;
}

IntervalReal z_value(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, const ZParams& zp,
                     long N, Precision prec) {
    if (zp.c <= 0 || zp.c >= 1) throw Error("ZParams needs 0 < c < 1");
    if (zp.M < 1) throw Error("ZParams needs M >= 1");
    if (N < 1) throw Error("N >= 1 required");
    IntervalReal tail = tail_abs_enclosure(spec, c_seq, N, prec);
    if (N == 1) return tail;  // bare tail: the 2-power references a_0 which does not exist

    IntervalReal power(prec);
    {
        IntervalReal aN1 = abs_value_adaptive(spec.term(N - 1).a, prec);
        if (!aN1.is_positive()) throw Error("z_value: |a_{N-1}| enclosure touches 0");
        IntervalReal lg = iv_log2(aN1);
        if (!lg.is_positive()) throw Error("z_value needs |a_{N-1}| > 1");
        IntervalReal expo = iv_mul(iv_from_int(BigInt(N) * BigInt(N), prec), iv_pow_rat(lg, zp.c, prec));
        power = iv_exp2(expo);
    }
    IntervalReal prod = iv_from_rat(BigRat(1), prec);
    for (long n = 1; n < N; ++n) {
        IntervalReal an = abs_value_adaptive(spec.term(n).a, prec);
        prod = iv_mul(prod, iv_pow_rat(an, zp.M, prec));
    }
    IntervalReal z = iv_mul(iv_mul(power, prod), tail);
    if (mpfr_sgn(z.lo()) < 0) mpfr_set_zero(z.lo(), 1);  // sums of positive terms
    return z;
}

TailReport tail_checks(const SequenceSpec& spec, TailKind kind, const BigRat& exponent, long N,
                       std::optional<long> Q, Precision prec) {
    TailReport rep;
    rep.N = N;
    rep.kind = kind;
    rep.exponent = exponent;
    BigRat beta = spec.exponents.beta.value_or(BigRat(0));

    auto a_abs = [&](long n, Precision p) { return abs_value_adaptive(spec.term(n).a, p); };

    if (kind == TailKind::CapitalGamma || kind == TailKind::Window) {
        if (kind == TailKind::Window && (!Q || *Q < N)) throw Error("window check needs Q >= N");
        long upto = kind == TailKind::Window ? *Q : N + 4;
        for (long n = N; n <= upto; ++n) {
            IntervalReal lhs = iv_pow_ui(iv_from_rat(BigRat(2), prec), static_cast<unsigned long>(n));
            Ordering o = iv_compare(lhs, a_abs(n, prec));
            bool ok = o == Ordering::Less || mpfr_cmp(lhs.hi(), a_abs(n, prec).lo()) <= 0;
            if (!ok)
                throw PrecondViolated("a_n ≥ 2^n fails at n = " + std::to_string(n));
        }
    }

    std::function<IntervalReal(Precision)> lhs;
    std::vector<BigInt> no_c;
    if (kind == TailKind::Window) {
        FieldElement window = partial_sum(spec, no_c, *Q + 1) - partial_sum(spec, no_c, N);
        lhs = [window](Precision p) {
            return window.is_zero() ? iv_zero(p) : abs_value_adaptive(window, p);
        };
    } else {
        IntervalReal t = tail_abs_enclosure(spec, no_c, N, prec);
        lhs = [t](Precision) { return t; };
    }

    std::function<IntervalReal(Precision)> rhs;
    if (kind == TailKind::Gamma) {
        rhs = [&, N](Precision p) { return iv_pow_rat(a_abs(N, p), -exponent, p); };
    } else {
        rhs = [&, N, beta](Precision p) {
            IntervalReal aN = a_abs(N, p);
            IntervalReal lg = iv_log2(aN);
            IntervalReal num = iv_exp2(iv_pow_rat(lg, exponent, p));
            return iv_div(num, iv_pow_rat(aN, 1 - beta, p));
        };
    }
    for (Precision p = prec;; p = p.doubled()) {
        IntervalReal l = lhs(p), r = rhs(p);
        Ordering o = iv_compare(l, r);
        if (o == Ordering::Less || mpfr_cmp(l.hi(), r.lo()) <= 0) {
            rep.verdict = Verdict::Holds;
            return rep;
        }
        if (o == Ordering::Greater) {
            rep.verdict = Verdict::Fails;
            return rep;
        }
        if (!p.can_refine()) {
            rep.verdict = Verdict::Undecided;
            return rep;
        }
    }
}

std::vector<long> record_indices(const std::vector<IntervalReal>& y, long N_max,
                                 std::vector<long>* undecided) {
    if (N_max > static_cast<long>(y.size())) throw Error("record_indices: N_max beyond the sequence");
    std::vector<long> records;
    if (N_max < 1) return records;
    Precision prec(y[0].bits());
    IntervalReal runmax = y[0];
    for (long N = 2; N <= N_max; ++N) {
        const IntervalReal& yn = y[static_cast<std::size_t>(N - 1)];
        BigRat factor = 1 + make_rat(1, BigInt(N) * BigInt(N));
        IntervalReal threshold = iv_mul(iv_from_rat(factor, prec), runmax);
        Ordering o = iv_compare(threshold, yn);
        if (o == Ordering::Less) {
            records.push_back(N);
        } else if (o != Ordering::Greater && undecided) {
            if (mpfr_cmp(yn.hi(), threshold.lo()) > 0) undecided->push_back(N);
        }
        runmax = iv_max(runmax, yn);
    }
    return records;
}

bool identity_checks(const BigRat& M, const BigRat& delta, long k, long N) {
    if (k >= N) throw Error("identity_checks needs k < N");
    BigRat base = M + 1 + delta;
    BigRat lhs = pow_rat(base, N);
    BigRat sum(0);
    for (long n = k; n <= N - 1; ++n) sum += pow_rat(base, n);
    BigRat rhs = pow_rat(base, k) + (M + delta) * sum;
    return lhs == rhs;
}

Verdict lemma65_check(const std::vector<BigRat>& a, const BigRat& M, const BigRat& beta, long k,
                      long N) {
    if (k < 1 || N <= k || N - 1 > static_cast<long>(a.size())) throw Error("lemma65_check: bad k/N");
    if (beta >= 1) throw Error("lemma65_check needs beta < 1");
    for (const auto& v : a)
        if (v <= 0) throw Error("lemma65_check needs positive terms");
    // (max_{k≤n<N} a_n^{T^{-n}})^{T^N} > ∏_{n=k}^{N-1} a_n^{M/(1-β)}, T = M/(1-β)+1
    BigRat T = M / (1 - beta) + 1;
    auto lhs = [&](Precision p) {
        IntervalReal best = iv_pow_rat(iv_from_rat(a[static_cast<std::size_t>(k - 1)], p),
                                       pow_rat(T, -k), p);
        for (long n = k + 1; n < N; ++n)
            best = iv_max(best, iv_pow_rat(iv_from_rat(a[static_cast<std::size_t>(n - 1)], p),
                                           pow_rat(T, -n), p));
        return iv_pow_rat(best, pow_rat(T, N), p);
    };
    auto rhs = [&](Precision p) {
        IntervalReal prod = iv_from_rat(BigRat(1), p);
        for (long n = k; n < N; ++n)
            prod = iv_mul(prod, iv_pow_rat(iv_from_rat(a[static_cast<std::size_t>(n - 1)], p),
                                           M / (1 - beta), p));
        return prod;
    };
    return certify_lt(rhs, lhs, Precision());
}

Verdict height_bound_sN(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, long N,
                        Precision prec) {
    BigInt L = 1;
    for (const auto& x : spec.basis) L = lcm(L, denominator(x));
    BigInt prod = 1;
    std::vector<BigRat> coeff(spec.basis.size(), BigRat(0));
    for (long n = 1; n < N; ++n) {
        Term t = spec.term(n);
        if (!t.a.is_rational() || !is_integer(t.a.rational_value()) || t.a.rational_value() < 1)
            throw NotRationalA("height_bound_sN needs positive integer a_n");
        BigInt an = t.a.rational_value().get_num();
        BigInt cn = t.c * c_at(c_seq, n);
        prod *= an * cn;
        std::vector<BigInt> bc = t.b_coords ? *t.b_coords : integer_coords(t.b, spec.basis).coords;
        for (std::size_t i = 0; i < bc.size(); ++i) coeff[i] += BigRat(bc[i]) / BigRat(an * cn);
    }
    BigRat cmax(0);
    for (const auto& c : coeff) cmax = std::max(cmax, abs(c));

    FieldElement sN = partial_sum(spec, c_seq, N);
    auto lhs = [&](Precision p) { return mahler_and_height(sN, p).height; };
    auto rhs = [&](Precision p) {
        IntervalReal c1 = house_linear_constant(spec.basis, p);
        IntervalReal inner = iv_max(iv_from_rat(BigRat(1), p), iv_mul(c1, iv_from_rat(cmax, p)));
        return iv_mul(iv_from_int(L * prod, p), inner);
    };
    Verdict v = certify_le(lhs, rhs, prec);
    if (v == Verdict::Fails) throw Error("height bound (18) certified violated (bug)");
    return v;
}

Separation partial_sum_separation(const SequenceSpec& spec, long N_max) {
    std::vector<BigInt> no_c;
    std::vector<FieldElement> sums;
    for (long N = 1; N <= N_max; ++N) sums.push_back(partial_sum(spec, no_c, N));
    for (std::size_t i = 0; i < sums.size(); ++i)
        for (std::size_t j = i + 1; j < sums.size(); ++j)
            if (sums[i] == sums[j]) return Separation::RepeatRisk;
    return Separation::Separated;
}

} // namespace transcrit
