/* SPDX-License-Identifier: Apache-2.0 */
#include "transcrit/criteria.hpp"

#include <algorithm>

#include "transcrit/errors.hpp"

namespace transcrit {

TheoremId theorem_from_string(const std::string& s) {
    if (s == "1.1") return TheoremId::T1_1;
    if (s == "1.2") return TheoremId::T1_2;
    if (s == "1.3") return TheoremId::T1_3;
    if (s == "1.4") return TheoremId::T1_4;
    if (s == "1.6") return TheoremId::T1_6;
    if (s == "1.7") return TheoremId::T1_7;
    if (s == "7.1") return TheoremId::C7_1;
    throw Error("unknown theorem id '" + s + "'");
}

std::string to_string(TheoremId t) {
    switch (t) {
        case TheoremId::T1_1: return "1.1";
        case TheoremId::T1_2: return "1.2";
        case TheoremId::T1_3: return "1.3";
        case TheoremId::T1_4: return "1.4";
        case TheoremId::T1_6: return "1.6";
        case TheoremId::T1_7: return "1.7";
        case TheoremId::C7_1: return "7.1";
    }
    return "?";
}

std::string to_string(GrowthVerdict v) {
    switch (v) {
        case GrowthVerdict::Diverges: return "Diverges";
        case GrowthVerdict::Bounded: return "Bounded";
        case GrowthVerdict::BoundaryDiverges: return "BoundaryDiverges";
        case GrowthVerdict::BoundaryBounded: return "BoundaryBounded";
    }
    return "?";
}

std::string to_string(Overall o) {
    switch (o) {
        case Overall::TranscendenceCriteriaMet: return "TranscendenceCriteriaMet";
        case Overall::IrrationalityCriteriaMet: return "IrrationalityCriteriaMet";
        case Overall::NotApplicable: return "NotApplicable";
        case Overall::Inconclusive: return "Inconclusive";
    }
    return "?";
}

bool HypothesisOutcome::all_holds() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::Holds; });
}
bool HypothesisOutcome::any_undecided() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::Undecided; });
}
bool HypothesisOutcome::any_fails() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::Fails; });
}

void CriterionParams::adopt_exponents(const DeclaredExponents& e) {
    if (e.beta) beta = *e.beta;
    if (e.y) y = *e.y;
    if (e.y1) y1 = *e.y1;
    if (e.y2) y2 = *e.y2;
    if (e.eta1) eta1 = *e.eta1;
    if (e.eta2) eta2 = *e.eta2;
}

void CriterionParams::validate(int d) const {
    auto req = [](bool ok, const std::string& which) {
        if (!ok) throw ConstraintViolated(which);
    };
    req(eps > 0, "ε > 0");
    switch (theorem) {
        case TheoremId::T1_1:
            break;
        case TheoremId::T1_2: {
            req(gamma > 2 * eps, "γ > 2ε");
            req(alpha > 0 && alpha < 1, "0 < α < 1");
            // α > log(3+2ε)/log(3+γ), certified
            auto lhs = [&](Precision p) {
                return iv_div(iv_log2(iv_from_rat(3 + 2 * eps, p)), iv_log2(iv_from_rat(3 + gamma, p)));
            };
            auto rhs = [&](Precision p) { return iv_from_rat(alpha, p); };
            Verdict v = certify_lt(lhs, rhs, Precision());
            if (v == Verdict::Fails) throw ConstraintViolated("α > log(3+2ε)/log(3+γ)");
            if (v == Verdict::Undecided)
                throw ConstraintViolated("α vs log(3+2ε)/log(3+γ) not certifiable (too close)");
            break;
        }
        case TheoremId::T1_3:
            req(eps > 0, "ε > 0");
            break;
        case TheoremId::T1_4:
            req(alpha > 0 && alpha < 1, "0 < α < 1");
            req(y >= 1, "y ≥ 1");
            req(beta >= 0 && beta * (1 + eps) < eps, "β ∈ [0, ε/(1+ε))");
            break;
        case TheoremId::T1_6:
            req(alpha > 0 && alpha < 1, "0 < α < 1");
            req(delta > 0, "δ > 0");
            req(y >= 1, "y ≥ 1");
            req(eta2 >= 1, "η₂ ≥ 1");
            req(eta1 >= 0, "η₁ ≥ 0");
            req(beta >= 0 && beta * (1 + eps) < eps, "β ∈ [0, ε/(1+ε))");
            req(eta1 <= (d - 1) * y + beta, "η₁ ≤ (d−1)y + β");
            break;
        case TheoremId::T1_7:
            req(alpha > 0 && alpha < 1, "0 < α < 1");
            req(delta > 0, "δ > 0");
            req(y1 >= 1, "y₁ ≥ 1");
            req(eta2 >= 1, "η₂ ≥ 1");
            req(eta1 >= 0, "η₁ ≥ 0");
            req(y2 >= beta, "y₂ ≥ β");
            req(beta >= 0 && beta * (1 + eps) < eps, "β ∈ [0, ε/(1+ε))");
            req(eta1 <= (d - 1) * y1 + y2, "η₁ ≤ (d−1)y₁ + y₂");
            break;
        case TheoremId::C7_1:
            req(alpha > 0 && alpha < 1, "0 < α < 1");
            req(delta > 0, "δ > 0");
            req(beta >= 0 && beta * (1 + eps) < eps, "β ∈ [0, ε/(1+ε))");
            break;
    }
}

namespace {

NamedBase make_base(std::string name, const BigRat& const_part, const BigRat& delta_coef,
                    const BigRat& delta, bool transc) {
    NamedBase b;
    b.name = std::move(name);
    b.value = const_part + delta_coef * delta;
    b.symbolic = to_string(const_part);
    if (delta_coef != 0) b.symbolic += " + " + to_string(delta_coef) + "·δ";
    b.transcendence = transc;
    return b;
}

} // namespace

std::vector<NamedBase> required_bases(TheoremId t, int d, const CriterionParams& p) {
    p.validate(d);
    BigRat one_minus_beta = 1 - p.beta;
    std::vector<NamedBase> out;
    BigRat dd(d);
    switch (t) {
        case TheoremId::T1_1:
            out.push_back(make_base("irrationality", BigRat(2), BigRat(0), p.delta, false));
            break;
        case TheoremId::T1_2:
            out.push_back(make_base("transcendence", 3 + p.gamma, BigRat(0), p.delta, true));
            break;
        case TheoremId::T1_3:
            break;  // per-n product exponent, see thm13_product_exponent
        case TheoremId::T1_4:
            out.push_back(make_base("irrationality", dd * p.y / one_minus_beta + 1, BigRat(0), p.delta, false));
            out.push_back(make_base("transcendence", dd * dd * p.y / one_minus_beta + 1, BigRat(0), p.delta, true));
            break;
        case TheoremId::T1_6: {
            out.push_back(make_base("irrationality", dd * (p.y + p.beta) / one_minus_beta + 1, BigRat(0), p.delta, false));
            BigRat c1 = (p.eta2 + dd * ((dd - 1) * p.y + p.beta + p.eta2 - p.eta1)) / one_minus_beta + 1;
            out.push_back(make_base("transcendence_1", c1, 1 / one_minus_beta, p.delta, true));
            out.push_back(make_base("transcendence_2", dd * dd * (p.y + p.beta) / one_minus_beta + 1, BigRat(0), p.delta, true));
            break;
        }
        case TheoremId::T1_7: {
            out.push_back(make_base("irrationality", dd * (p.y1 + p.y2) / one_minus_beta + 1, BigRat(0), p.delta, false));
            BigRat c1 = (p.eta2 + dd * ((dd - 1) * p.y1 + p.y2 + p.eta2 - p.eta1)) / one_minus_beta + 1;
            out.push_back(make_base("transcendence_1", c1, 1 / one_minus_beta, p.delta, true));
            out.push_back(make_base("transcendence_2", dd * dd * (p.y1 + p.y2) / one_minus_beta + 1, BigRat(0), p.delta, true));
            break;
        }
        case TheoremId::C7_1:
            out.push_back(make_base("transcendence", 2 / one_minus_beta + 1, 1 / one_minus_beta, p.delta, true));
            break;
    }
    return out;
}

BigRat thm13_product_exponent(int d, long n) {
    BigRat prod(1);
    BigInt di(1);
    for (long i = 1; i <= n - 1; ++i) {
        di *= d;
        prod /= BigRat(di + d);
    }
    return prod;
}

GrowthVerdict divergence_verdict(const GrowthProfile& profile, const BigRat& base) {
    if (base <= 1) throw ConstraintViolated("divergence base must exceed 1");
    if (profile.g <= 1) throw Error("growth profile needs g > 1");
    bool leading_positive = profile.A > 0 || profile.A_L > 0;
    if (base < profile.g) return leading_positive ? GrowthVerdict::Diverges : GrowthVerdict::Bounded;
    if (base > profile.g) return GrowthVerdict::Bounded;
    if (profile.A_L > 0) return GrowthVerdict::BoundaryDiverges;
    return profile.A > 0 ? GrowthVerdict::BoundaryBounded : GrowthVerdict::Bounded;
}

// ---------------------------------------------------------------------------

namespace {

using IvFn = std::function<std::optional<IntervalReal>(Precision)>;

// 2^{sign·log₂^α v}; nullopt while the enclosure of log₂ v cannot be signed
std::optional<IntervalReal> log_factor(const IntervalReal& v, const BigRat& alpha, int sign,
                                       Precision p) {
    if (!v.is_positive()) return std::nullopt;
    IntervalReal l = iv_log2(v);
    if (mpfr_zero_p(l.lo()) && mpfr_zero_p(l.hi())) return iv_from_rat(BigRat(1), p);
    if (!l.is_positive()) return std::nullopt;
    IntervalReal e = iv_pow_rat(l, alpha, p);
    if (sign < 0) e = iv_neg(e);
    return iv_exp2(e);
}

Verdict decide(const IvFn& lhs, const IvFn& rhs, bool strict, Precision prec) {
    for (Precision p = prec;; p = p.doubled()) {
        auto l = lhs(p);
        auto r = rhs(p);
        if (l && r) {
            Ordering o = iv_compare(*l, *r);
            if (o == Ordering::Less) return Verdict::Holds;
            if (o == Ordering::Greater) return Verdict::Fails;
            if (!strict && mpfr_cmp(l->hi(), r->lo()) <= 0) return Verdict::Holds;
            if (strict && mpfr_cmp(l->lo(), r->hi()) >= 0) return Verdict::Fails;
        }
        if (!p.can_refine()) return Verdict::Undecided;
    }
}

Verdict all_of_verdicts(std::initializer_list<Verdict> vs) {
    bool undecided = false;
    for (Verdict v : vs) {
        if (v == Verdict::Fails) return Verdict::Fails;
        if (v == Verdict::Undecided) undecided = true;
    }
    return undecided ? Verdict::Undecided : Verdict::Holds;
}

struct HypDef {
    std::string label;
    std::function<Verdict(long)> check;  // index into cached terms
};

struct TermCache {
    std::vector<Term> terms;  // term(n_lo) .. term(n_hi + 1)
    long n_lo;
    const Term& at(long n) const { return terms.at(static_cast<std::size_t>(n - n_lo)); }
};

IvFn abs_value_fn(const FieldElement& e) {
    return [e](Precision p) -> std::optional<IntervalReal> {
        return e.is_zero() ? iv_zero(p) : abs_value_adaptive(e, p);
    };
}

IvFn exact_fn(const BigRat& q) {
    return [q](Precision p) -> std::optional<IntervalReal> { return iv_from_rat(q, p); };
}

// |base|^{expo}·2^{sign·log₂^α |base|} where base is given by an |·| closure
IvFn power_with_factor(const IvFn& absbase, const BigRat& expo, const BigRat& alpha, int sign) {
    return [absbase, expo, alpha, sign](Precision p) -> std::optional<IntervalReal> {
        auto v = absbase(p);
        if (!v || !v->is_positive()) return std::nullopt;
        auto f = log_factor(*v, alpha, sign, p);
        if (!f) return std::nullopt;
        return iv_mul(iv_pow_rat(*v, expo, p), *f);
    };
}

IvFn n_power(long n, const BigRat& expo) {
    return [n, expo](Precision p) -> std::optional<IntervalReal> {
        return iv_pow_rat(iv_from_int(BigInt(n), p), expo, p);
    };
}

// certified strict positivity of Re(ζ·w(n))
Verdict positive_real_part(const Zeta& z, const std::function<IntervalComplex(Precision)>& w,
                           Precision prec) {
    auto lhs = [](Precision p) -> std::optional<IntervalReal> { return iv_zero(p); };
    auto rhs = [&](Precision p) -> std::optional<IntervalReal> {
        return ic_mul(z.eval(p), w(p)).re;
    };
    return decide(lhs, rhs, true, prec);
}

std::vector<BigInt> side_coords(const SequenceSpec& spec, const Term& t, bool b_side) {
    if (b_side && t.b_coords) return *t.b_coords;
    if (!b_side && t.a_coords) return *t.a_coords;
    return integer_coords(b_side ? t.b : t.a, spec.basis).coords;
}

// monotonicity |a_n| ≤ |a_{n+1}| with the exact shortcut for equal elements
Verdict modulus_monotone(const Term& tn, const Term& tn1, Precision prec) {
    if (tn.a == tn1.a || tn.a == -tn1.a) return Verdict::Holds;
    if (tn.a.is_rational() && tn1.a.is_rational())
        return abs(tn.a.rational_value()) <= abs(tn1.a.rational_value()) ? Verdict::Holds
                                                                         : Verdict::Fails;
    return decide(abs_value_fn(tn.a), abs_value_fn(tn1.a), false, prec);
}

std::vector<Zeta> zeta_candidates(const SequenceSpec& spec, const CriterionParams& params,
                                  Precision prec) {
    std::vector<Zeta> out;
    if (params.zeta) {
        out.push_back(*params.zeta);
        return out;
    }
    if (spec.zeta) {
        out.push_back(*spec.zeta);
        return out;
    }
    out.push_back(Zeta{"1", [](Precision p) { return ic_from_real(iv_from_rat(BigRat(1), p)); }});
    if (spec.basis.size() >= 2) {
        FieldElement x = spec.basis.back();
        // ζ = −i·Im(x) when Im(x) ≠ 0 can be certified
        IntervalComplex xv = value_adaptive(x, prec);
        if (xv.im.is_positive() || xv.im.is_negative()) {
            out.push_back(Zeta{"-i·Im(x)", [x](Precision p) {
                                   IntervalComplex v = value_adaptive(x, p);
                                   return IntervalComplex(iv_zero(p), iv_neg(v.im));
                               }});
        }
        // ζ = x − φ̄ where φ̄ is expressible
        try {
            auto s5 = spec.field->sqrt_of_rat(BigRat(5), prec);
            if (s5) {
                FieldElement phibar = spec.field->from_rat(make_rat(1, 2)) * (spec.field->one() - *s5);
                FieldElement diff = x - phibar;
                if (!diff.is_zero())
                    out.push_back(Zeta{"x − φ̄", [diff](Precision p) { return diff.value(p); }});
            }
        } catch (const Error&) {
            // no φ̄ in this field
        }
    }
    return out;
}

} // namespace

HypothesesRun check_hypotheses(const SequenceSpec& spec, const CriterionParams& params,
                               long n_lo, long n_hi, Precision prec) {
    if (n_lo < 1 || n_hi < n_lo) throw Error("bad n range");
    int d = spec.field->degree();
    params.validate(d);
    TheoremId t = params.theorem;
    if (t != TheoremId::T1_4 && t != TheoremId::T1_6 && t != TheoremId::T1_7)
        throw Error("check_hypotheses covers Theorems 1.4/1.6/1.7; use check_classical");

    TermCache cache{{}, n_lo};
    for (long n = n_lo; n <= n_hi + 1; ++n) cache.terms.push_back(spec.term(n));

    // theorem-specific integrality preconditions ((2)/(6) also read a_{n+1})
    for (long n = n_lo; n <= n_hi + (t == TheoremId::T1_4 ? 1 : 0); ++n) {
        const Term& tm = cache.at(n);
        if (t == TheoremId::T1_4) {
            if (!tm.a.is_rational()) throw NotRationalA("Theorem 1.4 needs rational a_n");
            BigRat q = tm.a.rational_value();
            if (!is_integer(q) || q < 1)
                throw NotRationalA("Theorem 1.4 needs positive integer a_n");
            if (n <= n_hi) side_coords(spec, tm, true);  // throws NotIntegerCoords if violated
        } else if (t == TheoremId::T1_6) {
            if (!tm.b.is_rational() || !is_integer(tm.b.rational_value()) || tm.b.rational_value() < 1)
                throw NotIntegerCoords("Theorem 1.6 needs positive integer b_n");
            side_coords(spec, tm, false);
        } else {
            side_coords(spec, tm, false);
            side_coords(spec, tm, true);
        }
    }

    std::vector<HypDef> hyps;
    const BigRat& alpha = params.alpha;

    auto abs_a = [&](long n) { return abs_value_fn(cache.at(n).a); };

    if (t == TheoremId::T1_4) {
        hyps.push_back({"(2)", [&, prec](long n) {
            const Term& tm = cache.at(n);
            BigRat a = tm.a.rational_value();
            BigRat a1 = cache.at(n + 1).a.rational_value();
            Verdict mono = a <= a1 ? Verdict::Holds : Verdict::Fails;
            Verdict low = decide(n_power(n, 1 + params.eps), exact_fn(a), false, prec);
            return all_of_verdicts({low, mono});
        }});
        hyps.push_back({"(3)", [&, prec](long n) {
            const Term& tm = cache.at(n);
            IvFn rhs_b = power_with_factor(abs_a(n), params.beta, alpha, +1);
            Verdict vb = decide(abs_value_fn(tm.b), rhs_b, false, prec);
            IvFn rhs_bi = power_with_factor(abs_a(n), params.y, alpha, +1);
            auto coords = side_coords(spec, tm, true);
            Verdict vc = Verdict::Holds;
            for (const auto& c : coords) {
                Verdict v = decide(exact_fn(BigRat(abs(c))), rhs_bi, false, prec);
                vc = all_of_verdicts({vc, v});
            }
            return all_of_verdicts({vb, vc});
        }});
    } else {
        hyps.push_back({"(6)", [&, prec](long n) {
            Verdict mono = modulus_monotone(cache.at(n), cache.at(n + 1), prec);
            Verdict low = decide(n_power(n, 1 + params.eps), abs_a(n), false, prec);
            return all_of_verdicts({low, mono});
        }});
        hyps.push_back({"(7)", [&, prec](long n) {
            BigRat nk = abs(norms(cache.at(n).a).field_norm);
            IvFn rhs = power_with_factor(abs_a(n), params.eta1, alpha, -1);
            return decide(rhs, exact_fn(nk), false, prec);  // |N_K| ≥ rhs
        }});
        hyps.push_back({"(8)", [&, prec](long n) {
            const Term& tm = cache.at(n);
            auto coords = side_coords(spec, tm, false);
            BigInt r = gcd_all(coords);
            if (r == 0) return Verdict::Fails;
            FieldElement reduced = tm.a / spec.field->from_rat(BigRat(r));
            BigRat lhs = BigRat(r) * abs(norms(reduced).conjprod);
            IvFn rhs = power_with_factor(abs_a(n), params.eta2, alpha, +1);
            return decide(exact_fn(lhs), rhs, false, prec);
        }});
        if (t == TheoremId::T1_6) {
            hyps.push_back({"(β,y)", [&, prec](long n) {
                const Term& tm = cache.at(n);
                Verdict vb = decide(exact_fn(tm.b.rational_value()),
                                    power_with_factor(abs_a(n), params.beta, alpha, +1), false, prec);
                IvFn rhs = power_with_factor(abs_a(n), params.y, alpha, +1);
                Verdict vc = Verdict::Holds;
                for (const auto& c : side_coords(spec, tm, false)) {
                    Verdict v = decide(exact_fn(BigRat(abs(c))), rhs, false, prec);
                    vc = all_of_verdicts({vc, v});
                }
                return all_of_verdicts({vb, vc});
            }});
        } else {  // T1_7
            hyps.push_back({"(9)", [&, prec](long n) {
                const Term& tm = cache.at(n);
                IvFn rhs1 = power_with_factor(abs_a(n), params.y1, alpha, +1);
                IvFn rhs2 = power_with_factor(abs_a(n), params.y2, alpha, +1);
                Verdict v = Verdict::Holds;
                for (const auto& c : side_coords(spec, tm, false))
                    v = all_of_verdicts({v, decide(exact_fn(BigRat(abs(c))), rhs1, false, prec)});
                for (const auto& c : side_coords(spec, tm, true))
                    v = all_of_verdicts({v, decide(exact_fn(BigRat(abs(c))), rhs2, false, prec)});
                return v;
            }});
            hyps.push_back({"(10)", [&, prec](long n) {
                return decide(abs_value_fn(cache.at(n).b),
                              power_with_factor(abs_a(n), params.beta, alpha, +1), false, prec);
            }});
        }
    }

    HypothesesRun run;

    // positivity condition: label (4) for 1.4, (Re ζ) for 1.6, (11) for 1.7
    std::string pos_label = t == TheoremId::T1_4 ? "(4)" : (t == TheoremId::T1_7 ? "(11)" : "(Re ζ)");
    auto pos_target = [&](long n) -> std::function<IntervalComplex(Precision)> {
        const Term& tm = cache.at(n);
        if (t == TheoremId::T1_4) {
            FieldElement b = tm.b;
            return [b](Precision p) { return value_adaptive(b, p); };
        }
        if (t == TheoremId::T1_6) {
            FieldElement a = tm.a;
            return [a](Precision p) { return value_adaptive(a, p); };
        }
        FieldElement q = tm.a / tm.b;
        return [q](Precision p) { return value_adaptive(q, p); };
    };

    auto candidates = zeta_candidates(spec, params, prec);
    std::vector<Verdict> best;
    std::string best_desc;
    for (const auto& z : candidates) {
        std::vector<Verdict> vs;
        for (long n = n_lo; n <= n_hi; ++n) vs.push_back(positive_real_part(z, pos_target(n), prec));
        bool all = std::all_of(vs.begin(), vs.end(), [](Verdict v) { return v == Verdict::Holds; });
        if (best.empty()) {
            best = vs;
            best_desc = z.description;
        }
        if (all) {
            best = vs;
            best_desc = z.description;
            break;
        }
    }
    run.zeta_used = best_desc;

    for (const auto& h : hyps) {
        HypothesisOutcome o;
        o.label = h.label;
        o.first_n = n_lo;
        for (long n = n_lo; n <= n_hi; ++n) {
            Verdict v = h.check(n);
            if (v == Verdict::Fails && !o.first_failing) o.first_failing = n;
            o.verdicts.push_back(v);
        }
        run.outcomes.push_back(std::move(o));
    }
    {
        HypothesisOutcome o;
        o.label = pos_label;
        o.first_n = n_lo;
        o.verdicts = best;
        for (std::size_t i = 0; i < best.size(); ++i) {
            if (best[i] == Verdict::Fails) {
                o.first_failing = n_lo + static_cast<long>(i);
                break;
            }
        }
        run.outcomes.push_back(std::move(o));
    }
    return run;
}

HypothesesRun check_classical(const SequenceSpec& spec, ClassicalVariant variant,
                              const CriterionParams& params, long n_lo, long n_hi, Precision prec) {
    if (n_lo < 1 || n_hi < n_lo) throw Error("bad n range");
    TermCache cache{{}, n_lo};
    for (long n = n_lo; n <= n_hi + 1; ++n) cache.terms.push_back(spec.term(n));
    HypothesesRun run;

    auto add_outcome = [&](const std::string& label, std::function<Verdict(long)> f) {
        HypothesisOutcome o;
        o.label = label;
        o.first_n = n_lo;
        for (long n = n_lo; n <= n_hi; ++n) {
            Verdict v = f(n);
            if (v == Verdict::Fails && !o.first_failing) o.first_failing = n;
            o.verdicts.push_back(v);
        }
        run.outcomes.push_back(std::move(o));
    };

    if (variant == ClassicalVariant::Erdos || variant == ClassicalVariant::Hancl) {
        bool strict = variant == ClassicalVariant::Hancl;
        add_outcome("(integral)", [&](long n) {
            const Term& tm = cache.at(n);
            bool a_ok = tm.a.is_rational() && is_integer(tm.a.rational_value()) && tm.a.rational_value() >= 1;
            bool b_ok = !strict || (tm.b.is_rational() && is_integer(tm.b.rational_value()) &&
                                    tm.b.rational_value() >= 1);
            return a_ok && b_ok ? Verdict::Holds : Verdict::Fails;
        });
        add_outcome(strict ? "(n^{1+ε} <)" : "(n^{1+ε} ≤)", [&, prec](long n) {
            return decide(n_power(n, 1 + params.eps),
                          [&, n](Precision p) -> std::optional<IntervalReal> {
                              return iv_from_rat(cache.at(n).a.rational_value(), p);
                          },
                          strict, prec);
        });
        add_outcome("(mono)", [&](long n) {
            return cache.at(n).a.rational_value() <= cache.at(n + 1).a.rational_value() ? Verdict::Holds
                                                                                        : Verdict::Fails;
        });
        if (strict) {
            add_outcome("(1)", [&, prec](long n) {
                const Term& tm = cache.at(n);
                BigRat expo = params.eps / (1 + params.eps);
                IvFn rhs = power_with_factor(abs_value_fn(tm.a), expo, params.alpha, -1);
                return decide(exact_fn(tm.b.rational_value()), rhs, true, prec);
            });
        }
        return run;
    }

    // Andersen–Kristensen
    add_outcome("(integral)", [&](long n) {
        return denominator(cache.at(n).a) == 1 ? Verdict::Holds : Verdict::Fails;
    });
    add_outcome("(n^{1+ε})", [&, prec](long n) {
        return decide(n_power(n, 1 + params.eps), abs_value_fn(cache.at(n).a), false, prec);
    });
    add_outcome("(house)", [&, prec](long n) {
        const FieldElement& a = cache.at(n).a;
        const FieldPtr& f = spec.field;
        if (f->degree() <= 2 && f->real_distinguished()) {
            auto images = f->galois_theta_images();
            Verdict v = Verdict::Holds;
            for (std::size_t k = 1; k < images.size(); ++k) {
                FieldElement sa = f->apply_galois(a, images[k]);
                if (sa == a || sa == -a) continue;  // equal modulus, exact
                FieldElement diff = sa * sa - a * a;  // |σa| ≤ |a| ⟺ diff ≤ 0
                if (diff.is_zero()) continue;
                Verdict cmp = decide([](Precision p) -> std::optional<IntervalReal> { return iv_zero(p); },
                                     [diff](Precision p) -> std::optional<IntervalReal> {
                                         return iv_neg(value_adaptive(diff, p).re);
                                     },
                                     false, prec);
                v = all_of_verdicts({v, cmp});
            }
            return v;
        }
        // general fallback: certified house(a) ≤ |a| (ties stay Undecided)
        return decide([a, prec](Precision p) -> std::optional<IntervalReal> { return house(a, p); },
                      abs_value_fn(a), false, prec);
    });
    add_outcome("(mono)", [&, prec](long n) { return modulus_monotone(cache.at(n), cache.at(n + 1), prec); });
    {
        // Re(a_n) > 0 for all n, or Im(a_n) > 0 for all n
        auto branch = [&](bool real_part) {
            std::vector<Verdict> vs;
            for (long n = n_lo; n <= n_hi; ++n) {
                const FieldElement& a = cache.at(n).a;
                auto rhs = [&a, real_part](Precision p) -> std::optional<IntervalReal> {
                    IntervalComplex v = value_adaptive(a, p);
                    return real_part ? v.re : v.im;
                };
                vs.push_back(decide([](Precision p) -> std::optional<IntervalReal> { return iv_zero(p); },
                                    rhs, true, prec));
            }
            return vs;
        };
        auto re = branch(true);
        bool re_all = std::all_of(re.begin(), re.end(), [](Verdict v) { return v == Verdict::Holds; });
        std::vector<Verdict> chosen = re_all ? re : branch(false);
        bool im_all = std::all_of(chosen.begin(), chosen.end(), [](Verdict v) { return v == Verdict::Holds; });
        if (!re_all && !im_all) chosen = re;  // report the real-part branch honestly
        HypothesisOutcome o;
        o.label = "(sign)";
        o.first_n = n_lo;
        o.verdicts = chosen;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (chosen[i] == Verdict::Fails) {
                o.first_failing = n_lo + static_cast<long>(i);
                break;
            }
        }
        run.outcomes.push_back(std::move(o));
    }
    return run;
}

MinBaseResult min_required_base(TheoremId t, int d, const ExponentBounds& bounds,
                                const std::vector<BigRat>& c_grid) {
    if (c_grid.empty()) throw EmptyGrid("empty scan grid");
    MinBaseResult out;
    bool first = true;
    BigRat dd(d);
    for (const auto& c : c_grid) {
        BigRat beta = bounds.beta ? bounds.beta(c) : BigRat(0);
        if (beta >= 1) throw ConstraintViolated("β bound ≥ 1 on the grid");
        BigRat base;
        switch (t) {
            case TheoremId::T1_4:
                base = dd * dd * bounds.y1(c) / (1 - beta) + 1;
                break;
            case TheoremId::T1_6:
                base = dd * dd * (bounds.y1(c) + beta) / (1 - beta) + 1;
                break;
            case TheoremId::T1_7:
                base = dd * dd * (bounds.y1(c) + bounds.y2(c)) / (1 - beta) + 1;
                break;
            default:
                throw ConstraintViolated("no scan formula for theorem " + to_string(t));
        }
        out.values.emplace_back(c, base);
        if (first || base < out.minimum) {
            out.minimum = base;
            out.argmin = c;
            first = false;
        }
    }
    return out;
}

VerificationReport assemble_report(const SequenceSpec& spec, TheoremId theorem,
                                   const HypothesesRun& run, const std::vector<NamedBase>& bases,
                                   long n_lo, long n_hi, Precision prec) {
    VerificationReport r;
    r.theorem = theorem;
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.outcomes = run.outcomes;
    r.bases = bases;
    r.zeta_used = run.zeta_used;
    r.index_convention = to_string(spec.convention);
    r.precision_bits = prec.bits;
    r.sequence_name = spec.name;

    for (const auto& b : bases) r.growth.emplace_back(b.name, divergence_verdict(spec.profile, b.value));
    if (theorem == TheoremId::T1_3)
        r.growth.emplace_back("product_exponent", GrowthVerdict::Bounded);

    bool fails = false, undecided = false;
    for (const auto& o : r.outcomes) {
        if (o.any_fails()) {
            fails = true;
            r.reasons.push_back("hypothesis " + o.label + " fails at n = " +
                                std::to_string(o.first_failing.value_or(n_lo)));
        }
        if (o.any_undecided()) undecided = true;
    }

    auto verdict_of = [&](const std::string& name) -> std::optional<GrowthVerdict> {
        for (const auto& [n, v] : r.growth)
            if (n == name) return v;
        return std::nullopt;
    };
    bool has_transc = false, transc_ok = true;
    for (const auto& b : bases) {
        if (!b.transcendence) continue;
        has_transc = true;
        GrowthVerdict v = *verdict_of(b.name);
        if (v != GrowthVerdict::Diverges && v != GrowthVerdict::BoundaryDiverges) {
            transc_ok = false;
            r.reasons.push_back("growth: base " + b.name + " = " + to_string(b.value) + " is " +
                                to_string(v) + " against g = " + to_string(spec.profile.g));
        }
    }
    std::optional<GrowthVerdict> irr;
    for (const auto& b : bases)
        if (!b.transcendence) irr = *verdict_of(b.name);

    if (fails) {
        r.overall = Overall::NotApplicable;
        return r;
    }
    if (undecided) {
        r.overall = Overall::Inconclusive;
        r.reasons.clear();
        return r;
    }
    if (has_transc && transc_ok) {
        r.overall = Overall::TranscendenceCriteriaMet;
        r.reasons.clear();
        return r;
    }
    if (irr && (*irr == GrowthVerdict::Diverges || *irr == GrowthVerdict::BoundaryDiverges)) {
        r.overall = Overall::IrrationalityCriteriaMet;
        return r;
    }
    r.overall = Overall::NotApplicable;
    if (r.reasons.empty()) r.reasons.push_back("growth: no displayed base diverges");
    return r;
}

} // namespace transcrit
