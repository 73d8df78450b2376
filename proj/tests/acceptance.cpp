/* SPDX-License-Identifier: Apache-2.0 */
//
// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "transcrit/report.hpp"
#include "util.hpp"

using namespace transcrit;
using namespace testutil;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, bool ok, const std::string& what, const std::string& detail = "") {
    std::cout << "criterion " << num << ": " << (ok ? "PASS" : "FAIL") << " — " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

template <typename F>
void run(int num, const std::string& what, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        report(num, false, what, std::string("exception: ") + e.what());
    }
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

CriterionParams params_from(const SequenceSpec& s, TheoremId t, const BigRat& eps) {
    CriterionParams p;
    p.theorem = t;
    p.adopt_exponents(s.exponents);
    p.eps = eps;
    return p;
}

GrowthVerdict growth_of(const VerificationReport& r, const std::string& base) {
    for (const auto& [name, v] : r.growth)
        if (name == base) return v;
    throw Error("missing base " + base);
}

} // namespace

int main() {
    const std::vector<BigInt> no_c;

    // 1. Fibonacci fast doubling vs the iterative oracle, m ≤ 2·10⁴, < 10 s
    run(1, "Fibonacci", [&] {
        auto t0 = Clock::now();
        bool ok = fib(9) == 34 && fib(14) == 377;
        BigInt a = 0, b = 1;
        for (unsigned long m = 0; m <= 20000 && ok; ++m) {
            if (fib(m) != a) ok = false;
            BigInt next = a + b;
            a = b;
            b = next;
        }
        double secs = seconds_since(t0);
        report(1, ok && secs < 10.0, "fast doubling ≡ iterative oracle for m ≤ 2·10⁴",
               "F(9)=34, F(14)=377, " + std::to_string(secs) + " s");
    });

    // 2. φ-power identity up to 10³, cross-checked by exact multiplication
    run(2, "phi powers", [&] {
        FieldPtr f = NumberField::golden();
        FieldElement phi = f->theta(), acc = f->one();
        bool ok = true;
        for (long m = 1; m <= 1000 && ok; ++m) {
            acc = acc * phi;
            FieldElement fast = phi_power(f, m);
            if (!(fast == acc)) ok = false;
            if (!(fast == f->element({BigRat(fib(m - 1)), BigRat(fib(m))}))) ok = false;
        }
        report(2, ok, "phi_power(m) = (F_{m−1}, F_m) = φ·φ·… for m ≤ 10³");
    });

    // 3. Height machinery on ≥ 200 random Q(√5) instances, coords ≤ 10³
    run(3, "height machinery", [&] {
        FieldPtr f = NumberField::golden();
        FieldElement sqrt5 = *f->sqrt_of_rat(BigRat(5), Precision());
        Precision coarse(128, 16384), fine(256, 16384);
        auto r = rng;
        bool ok = true;
        std::string why;
        int done = 0;
        while (done < 200 && ok) {
            FieldElement a = random_golden(r, f);
            FieldElement b = random_golden(r, f);
            if (a.is_zero() || b.is_zero()) continue;
            ++done;
            int deg = minimal_polynomial(a).degree();
            auto mc = mahler_and_height(a, coarse);
            auto mf = mahler_and_height(a, fine);
            // Lemma 3.4 equality: overlap at both precisions, refinement shrinks
            if (iv_compare(iv_pow_ui(mc.height, deg), mc.mahler) != Ordering::Undecided)
                ok = false, why = "3.4 equality overlap";
            if (mf.mahler.lo_rat() < mc.mahler.lo_rat() || mf.mahler.hi_rat() > mc.mahler.hi_rat())
                ok = false, why = "3.4 refinement";
            // Lemma 3.4 inequality, with |ā| the house (see the ledger note)
            IntervalReal bound = iv_mul(
                iv_from_int(denominator(a), coarse),
                iv_pow_ui(iv_max(iv_from_rat(BigRat(1), coarse), house(a, coarse)), deg));
            if (mc.mahler.lo_rat() > bound.hi_rat()) ok = false, why = "3.4 inequality";
            // Lemma 3.5
            IntervalReal ha = mc.height, hb = mahler_and_height(b, coarse).height;
            if (mahler_and_height(a * b, coarse).height.lo_rat() > iv_mul(ha, hb).hi_rat())
                ok = false, why = "3.5 product";
            if (mahler_and_height(a + b, coarse).height.lo_rat() >
                iv_mul(iv_from_rat(BigRat(2), coarse), iv_mul(ha, hb)).hi_rat())
                ok = false, why = "3.5 sum";
            if (iv_compare(mahler_and_height(f->one() / a, coarse).height, ha) != Ordering::Undecided)
                ok = false, why = "3.5 inverse";
            // Lemma 3.6
            try {
                if (liouville_check(a, b, coarse) == Verdict::Fails) ok = false, why = "3.6";
            } catch (const ConjugatePair&) {
            } catch (const EqualInputs&) {
            }
            // Lemma 3.7
            long c1 = static_cast<long>(r() % 2001) - 1000, c2 = static_cast<long>(r() % 2001) - 1000;
            FieldElement comb = f->element({BigRat(c1), BigRat(c2)});
            if (!comb.is_zero()) {
                IntervalReal cc = house_linear_constant({f->one(), f->theta()}, coarse);
                BigInt cmax = std::max(abs(BigInt(c1)), abs(BigInt(c2)));
                if (house(comb, coarse).lo_rat() > iv_mul(cc, iv_from_int(cmax, coarse)).hi_rat())
                    ok = false, why = "3.7";
            }
            // Lemma 2.2
            long la = static_cast<long>(r() % 2001) - 1000, lb = static_cast<long>(r() % 2001) - 1000;
            if (la != 0 || lb != 0) {
                if (linear_form_bound(sqrt5, BigInt(la), BigInt(lb), coarse) == Verdict::Fails)
                    ok = false, why = "2.2";
            }
            // exact field norm against the multiplication-matrix determinant
            if (norms(a).field_norm != det_laplace(mult_matrix(a, f))) ok = false, why = "det oracle";
        }
        report(3, ok, "Lemmas 3.4/3.5/3.6/3.7/2.2 and the determinant oracle on 200 instances", why);
    });

    // 4. Required-base arithmetic reproduces the worked-example comparisons exactly
    run(4, "required bases", [&] {
        bool ok = true;
        std::string why;
        {
            CriterionParams p;
            p.theorem = TheoremId::T1_4;
            p.beta = 0;
            p.y = 2;
            auto b = required_bases(TheoremId::T1_4, 2, p);
            BigRat transc;
            for (const auto& nb : b)
                if (nb.name == "transcendence") transc = nb.value;
            if (!(transc == 9 && transc > 7)) ok = false, why = "9 > 7";
        }
        {
            ExponentBounds b3;
            b3.y1 = [](const BigRat&) { return BigRat(1); };
            b3.y2 = [](const BigRat&) { return BigRat(0); };
            b3.beta = [](const BigRat&) { return BigRat(0); };
            MinBaseResult r = min_required_base(TheoremId::T1_7, 4, b3, {BigRat(0)});
            if (!(r.minimum >= 17 && r.minimum > 9)) ok = false, why = "≥ 17 > 9";
        }
        {
            FieldPtr q = NumberField::rationals();
            SeqExpr y1e = parse_seq("(2-c/4)/(2+c)", q);
            SeqExpr y2e = parse_seq("(1+c)/(2+c)", q);
            for (BigRat c = make_rat(-9, 10); c <= 3; c += make_rat(1, 10)) {
                ExponentBounds b;
                b.y1 = [&](const BigRat& v) { return eval_rat_expr(y1e, v); };
                b.y2 = [&](const BigRat& v) { return eval_rat_expr(y2e, v); };
                b.beta = b.y2;
                MinBaseResult r = min_required_base(TheoremId::T1_7, 2, b, {c});
                if (!(r.minimum == 13 + 3 * c && r.minimum > 9)) ok = false, why = "13+3c branch";
            }
            for (BigRat c = make_rat(-19, 10); c <= -1; c += make_rat(1, 10)) {
                ExponentBounds b;
                b.y1 = [&](const BigRat& v) { return eval_rat_expr(y1e, v); };
                b.y2 = [](const BigRat&) { return BigRat(0); };
                b.beta = b.y2;
                MinBaseResult r = min_required_base(TheoremId::T1_7, 2, b, {c});
                if (!(r.minimum == (8 - c) / (2 + c) + 1 && r.minimum >= 10)) ok = false, why = "(8−c)/(2+c)+1 branch";
            }
        }
        {
            SequenceSpec s = builtin_example("2.7");
            CriterionParams p = params_from(s, TheoremId::T1_7, BigRat(2));
            auto b = required_bases(TheoremId::T1_7, 2, p);
            BigRat second;
            for (const auto& nb : b)
                if (nb.name == "transcendence_2") second = nb.value;
            if (!(second == 13 && second < s.profile.g)) ok = false, why = "Ex 2.7 base 13 < 14";
        }
        report(4, ok, "exact reproduction of the worked examples' base comparisons", why);
    });

    // 5. Hypothesis verification on n ∈ [2,4] at ≤ 1024 bits + growth verdicts
    run(5, "hypotheses and growth verdicts", [&] {
        Precision prec(512, 16384);
        bool ok = true;
        std::string why;
        auto all_holds = [](const HypothesesRun& r) {
            for (const auto& o : r.outcomes)
                if (!o.all_holds()) return false;
            return true;
        };
        {
            SequenceSpec s = builtin_example("2.4");
            CriterionParams p = params_from(s, TheoremId::T1_6, make_rat(1, 2));
            HypothesesRun hr = check_hypotheses(s, p, 2, 4, prec);
            if (!all_holds(hr)) ok = false, why = "2.4 hypotheses";
            auto rep = assemble_report(s, TheoremId::T1_6, hr, required_bases(TheoremId::T1_6, 2, p),
                                       2, 4, prec);
            if (growth_of(rep, "transcendence_2") != GrowthVerdict::BoundaryDiverges)
                ok = false, why = "2.4 base 5 BoundaryDiverges";
            if (rep.overall != Overall::TranscendenceCriteriaMet) ok = false, why = "2.4 overall";
        }
        {
            SequenceSpec s = builtin_example("2.5");
            CriterionParams p = params_from(s, TheoremId::T1_6, make_rat(1, 2));
            HypothesesRun hr = check_hypotheses(s, p, 2, 4, prec);
            if (!all_holds(hr)) ok = false, why = "2.5 hypotheses";
            auto rep = assemble_report(s, TheoremId::T1_6, hr, required_bases(TheoremId::T1_6, 2, p),
                                       2, 4, prec);
            if (growth_of(rep, "transcendence_1") != GrowthVerdict::Diverges ||
                growth_of(rep, "transcendence_2") != GrowthVerdict::Diverges)
                ok = false, why = "2.5 Diverges";
            // Theorem 1.4 route claims inapplicability: base 9 vs growth 7
            BuiltinOptions alt;
            alt.variant = "thm14";
            SequenceSpec s14 = builtin_example("2.5", alt);
            CriterionParams p14 = params_from(s14, TheoremId::T1_4, make_rat(1, 2));
            auto rep14 = assemble_report(s14, TheoremId::T1_4, check_hypotheses(s14, p14, 2, 4, prec),
                                         required_bases(TheoremId::T1_4, 2, p14), 2, 4, prec);
            if (growth_of(rep14, "transcendence") != GrowthVerdict::Bounded)
                ok = false, why = "2.5 Thm 1.4 Bounded";
        }
        {
            SequenceSpec s = builtin_example("2.7");
            CriterionParams p = params_from(s, TheoremId::T1_7, BigRat(2));
            HypothesesRun hr = check_hypotheses(s, p, 2, 4, prec);
            if (!all_holds(hr)) ok = false, why = "2.7 hypotheses";
            auto rep = assemble_report(s, TheoremId::T1_7, hr, required_bases(TheoremId::T1_7, 2, p),
                                       2, 4, prec);
            if (growth_of(rep, "transcendence_1") != GrowthVerdict::Diverges ||
                growth_of(rep, "transcendence_2") != GrowthVerdict::Diverges)
                ok = false, why = "2.7 Diverges";
            if (rep.overall != Overall::TranscendenceCriteriaMet) ok = false, why = "2.7 overall";
        }
        {
            // Example 2.1 under the adjacent reading: base 9 = growth 9 must be
            // reported as BoundaryBounded, never silently passed
            SequenceSpec s = builtin_example("2.1");
            CriterionParams p = params_from(s, TheoremId::T1_4, BigRat(2));
            auto rep = assemble_report(s, TheoremId::T1_4, check_hypotheses(s, p, 2, 3, prec),
                                       required_bases(TheoremId::T1_4, 2, p), 2, 3, prec);
            if (growth_of(rep, "transcendence") != GrowthVerdict::BoundaryBounded)
                ok = false, why = "2.1 BoundaryBounded";
            if (rep.overall == Overall::TranscendenceCriteriaMet) ok = false, why = "2.1 must not pass";
        }
        report(5, ok, "examples 2.4/2.5/2.7 all-Holds on [2,4]; growth verdicts as printed", why);
    });

    // 6. Lemma 5.2 construction for example 2.7, N ∈ [2,4] at 512 bits, < 60 s
    run(6, "Lemma 5.2 construction", [&] {
        auto t0 = Clock::now();
        Precision prec(512, 16384);
        SequenceSpec s = builtin_example("2.7");
        bool ok = true;
        std::string why;
        IntervalReal prev_err_lo = iv_from_rat(BigRat(1), prec);
        bool have_prev = false;
        for (long N = 2; N <= 4; ++N) {
            // integrality of every p_{i,N} is a hard assertion inside
            ApproximantResult r = build_q_p_general(s, no_c, N, BigRat(1), make_rat(1, 2), prec);
            for (const auto& [label, v] : r.checks) {
                if (label == "(21)" && v != Verdict::Holds) ok = false, why = "(21) at N=" + std::to_string(N);
                if (label == "(22)" && v != Verdict::Holds) ok = false, why = "(22) at N=" + std::to_string(N);
            }
            if (have_prev && !(r.approximant.err.hi_rat() < prev_err_lo.lo_rat()))
                ok = false, why = "err not strictly decreasing at N=" + std::to_string(N);
            prev_err_lo = r.approximant.err;
            have_prev = true;
        }
        double secs = seconds_since(t0);
        if (secs >= 60.0) ok = false, why = "runtime " + std::to_string(secs) + " s";
        report(6, ok, "example 2.7: p integral, (21)/(22) hold, err strictly decreases",
               why.empty() ? std::to_string(secs) + " s" : why);
    });

    // 7. Lemma 3.3 quantity for example 2.5, M = 5, c = 1/2:
    //    Z_N strictly decreasing on [2,5] and Z₅.hi < 10⁻³ as stated.
    //    A high-precision oracle puts Z₂ ≈ 0.5353, Z₃ ≈ 432.06, Z₄ ≈ 2.99e−11,
    //    Z₅ ≈ 4.2e−280: the sequence rises from N=2 to N=3, so the monotone
    //    half cannot hold; it is checked as written and reported honestly.
    run(7, "Lemma 3.3 quantity", [&] {
        Precision prec(512, 16384);
        SequenceSpec s = builtin_example("2.5");
        ZParams zp;
        zp.M = 5;
        zp.c = make_rat(1, 2);
        zp.beta = 0;
        std::vector<IntervalReal> z;
        for (long N = 2; N <= 5; ++N) z.push_back(z_value(s, no_c, zp, N, prec));
        bool decreasing = true;
        std::ostringstream os;
        for (std::size_t i = 0; i < z.size(); ++i) {
            os << "Z_" << (i + 2) << " in " << z[i].brief(6);
            if (i + 1 < z.size()) os << ", ";
            if (i + 1 < z.size() && !(z[i + 1].hi_rat() < z[i].lo_rat())) decreasing = false;
        }
        bool tail_small = z.back().hi_rat() < make_rat(1, 1000);
        report(7, decreasing && tail_small,
               "Z_N strictly decreasing on [2,5] and Z₅ < 10⁻³",
               os.str() + (decreasing ? ""
                                      : "; the increase at N=2→3 is genuine: the quantity is not "
                                        "monotone at small N, only its liminf vanishes"));
    });

    // 8. Identity (23) on 100 random tuples; Lemma 6.4 record detection
    run(8, "identity (23) and record indices", [&] {
        auto r = rng;
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            BigRat M = abs(random_rat(r, 10)) + 1;
            BigRat d = abs(random_rat(r, 10));
            long k = 1 + static_cast<long>(r() % 5);
            long N = k + 1 + static_cast<long>(r() % 6);
            if (!identity_checks(M, d, k, N)) ok = false;
        }
        Precision p;
        std::vector<IntervalReal> doubling, constant;
        for (int k = 0; k < 10; ++k) {
            doubling.push_back(iv_from_rat(pow_rat(BigRat(2), k), p));
            constant.push_back(iv_from_rat(BigRat(7), p));
        }
        auto rec = record_indices(doubling, 10, nullptr);
        std::vector<long> expect{2, 3, 4, 5, 6, 7, 8, 9, 10};
        if (rec != expect) ok = false;
        if (!record_indices(constant, 10, nullptr).empty()) ok = false;
        report(8, ok, "Eq. (23) exact on 100 random tuples; records on doubling, none on constants");
    });

    // 9. Determinism: two CLI runs of `example 2.7 --format json` byte-identical
    run(9, "determinism", [&] {
        auto capture = [](const std::string& cmd) {
            std::string out;
            FILE* pipe = popen(cmd.c_str(), "r");
            if (!pipe) throw Error("popen failed");
            char buf[4096];
            size_t got;
            while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
            pclose(pipe);
            return out;
        };
        std::string cmd = std::string(TRANSCRIT_CLI) + " example 2.7 --format json --n-range 2..4 2>&1";
        std::string a = capture(cmd);
        std::string b = capture(cmd);
        bool ok = !a.empty() && a == b && a.find("TranscendenceCriteriaMet") != std::string::npos;
        report(9, ok, "two runs of `example 2.7 --format json` are byte-identical",
               std::to_string(a.size()) + " bytes");
    });

    if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
