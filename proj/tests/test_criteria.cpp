/* SPDX-License-Identifier: Apache-2.0 */
#include "doctest.h"
#include "util.hpp"

using namespace transcrit;
using namespace testutil;

namespace {

CriterionParams params(TheoremId t, const SequenceSpec& s) {
    CriterionParams p;
    p.theorem = t;
    p.adopt_exponents(s.exponents);
    p.eps = make_rat(1, 2);
    while (p.beta * (1 + p.eps) >= p.eps) p.eps *= 2;
    return p;
}

BigRat base_value(const std::vector<NamedBase>& bases, const std::string& name) {
    for (const auto& b : bases)
        if (b.name == name) return b.value;
    throw Error("missing base " + name);
}

} // namespace

TEST_CASE("required_bases reproduces the worked-example values") {
    SUBCASE("Theorem 1.4 with d=2, y=1, beta=1/2 gives 9") {
        CriterionParams p;
        p.theorem = TheoremId::T1_4;
        p.beta = make_rat(1, 2);
        p.y = 1;
        p.eps = 2;
        auto b = required_bases(TheoremId::T1_4, 2, p);
        CHECK(base_value(b, "transcendence") == 9);
        CHECK(base_value(b, "irrationality") == 5);
    }
    SUBCASE("Theorem 1.7 for example 2.7 gives (13+2δ, 13)") {
        CriterionParams p;
        p.theorem = TheoremId::T1_7;
        p.beta = make_rat(1, 2);
        p.y1 = 1;
        p.y2 = make_rat(1, 2);
        p.eta1 = 0;
        p.eta2 = 1;
        p.eps = 2;
        p.delta = make_rat(1, 100);
        auto b = required_bases(TheoremId::T1_7, 2, p);
        CHECK(base_value(b, "transcendence_1") == BigRat(13) + 2 * p.delta);
        CHECK(base_value(b, "transcendence_2") == 13);
        // the symbolic form is linear in δ with slope 1/(1−β) = 2
        for (const auto& nb : b)
            if (nb.name == "transcendence_1") CHECK(nb.symbolic == "13 + 2·δ");
    }
    SUBCASE("Theorem 1.4 with d=1, y=1, beta=0 gives the Erdős base 2") {
        CriterionParams p;
        p.theorem = TheoremId::T1_4;
        p.beta = 0;
        p.y = 1;
        auto b = required_bases(TheoremId::T1_4, 1, p);
        CHECK(base_value(b, "transcendence") == 2);
    }
    SUBCASE("Theorem 1.3 exposes no geometric base") {
        CriterionParams p;
        p.theorem = TheoremId::T1_3;
        CHECK(required_bases(TheoremId::T1_3, 2, p).empty());
    }
}

TEST_CASE("constraint validation") {
    CriterionParams p;
    p.theorem = TheoremId::T1_7;
    p.y1 = make_rat(1, 2);  // violates y₁ ≥ 1 (the Example 2.7 misprint)
    p.beta = make_rat(1, 2);
    p.eps = 2;
    CHECK_THROWS_AS(p.validate(2), ConstraintViolated);

    CriterionParams q;
    q.theorem = TheoremId::T1_4;
    q.beta = make_rat(1, 2);
    q.eps = make_rat(1, 2);  // β < ε/(1+ε) fails: 1/2 ≥ 1/3
    CHECK_THROWS_AS(q.validate(2), ConstraintViolated);

    CriterionParams h;
    h.theorem = TheoremId::T1_2;
    h.eps = make_rat(1, 4);
    h.gamma = BigRat(3);
    h.alpha = make_rat(9, 10);  // > log(3.5)/log(6) ≈ 0.699
    h.validate(1);
    h.alpha = make_rat(1, 2);
    CHECK_THROWS_AS(h.validate(1), ConstraintViolated);
}

TEST_CASE("base monotonicity in the parameters (10^3 random tuples)") {
    auto r = rng;
    int done = 0;
    while (done < 1000) {
        CriterionParams p;
        p.theorem = TheoremId::T1_7;
        p.beta = abs(random_rat(r, 1, 3));  // < 1 in practice
        if (p.beta >= make_rat(2, 3)) continue;
        p.eps = 4;
        p.y1 = 1 + abs(random_rat(r, 3));
        p.y2 = p.beta + abs(random_rat(r, 3));
        p.eta2 = 1 + abs(random_rat(r, 3));
        p.eta1 = abs(random_rat(r, 1));
        if (p.eta1 > (2 - 1) * p.y1 + p.y2) continue;
        p.delta = abs(random_rat(r, 1)) + make_rat(1, 100);
        auto before = required_bases(TheoremId::T1_7, 2, p);

        CriterionParams q = p;
        switch (r() % 6) {
            case 0: q.beta += make_rat(1, 10); break;
            case 1: q.y1 += 1; break;
            case 2: q.y2 += 1; break;
            case 3: q.eta2 += 1; break;
            case 4: q.delta += 1; break;
            default:
                if (q.eta1 < make_rat(1, 10)) continue;
                q.eta1 -= make_rat(1, 10);
                break;
        }
        try {
            q.validate(2);
        } catch (const ConstraintViolated&) {
            continue;  // the bump left the valid region (e.g. y₂ ≥ β)
        }
        auto after = required_bases(TheoremId::T1_7, 2, q);
        for (std::size_t i = 0; i < before.size(); ++i) CHECK(after[i].value >= before[i].value);
        ++done;
    }
}

TEST_CASE("d=1 limit identity: Theorem 4.1's M-form base equals Corollary 7.1's") {
    auto r = rng;
    for (int i = 0; i < 200; ++i) {
        BigRat beta = abs(random_rat(r, 1, 2));
        if (beta >= 1) continue;
        BigRat delta = abs(random_rat(r, 2));
        // d = 1, y = 1: (1 + y + δ)/(1−β) + 1 vs (2 + δ)/(1−β) + 1
        CHECK((1 + BigRat(1) + delta) / (1 - beta) + 1 == (2 + delta) / (1 - beta) + 1);
    }
}

TEST_CASE("thm13_product_exponent") {
    CHECK(thm13_product_exponent(2, 3) == make_rat(1, 24));  // (2+2)⁻¹·(4+2)⁻¹
    CHECK(thm13_product_exponent(2, 1) == 1);                // empty product
}

TEST_CASE("divergence_verdict") {
    GrowthProfile p27;
    p27.g = 14;
    p27.A = 0.96;
    CHECK(divergence_verdict(p27, BigRat(13)) == GrowthVerdict::Diverges);

    GrowthProfile p24;
    p24.g = 5;
    p24.A_L = 1;
    CHECK(divergence_verdict(p24, BigRat(5)) == GrowthVerdict::BoundaryDiverges);

    GrowthProfile p25;
    p25.g = 7;
    p25.A = 0.48;
    CHECK(divergence_verdict(p25, BigRat(9)) == GrowthVerdict::Bounded);
    CHECK(divergence_verdict(p25, BigRat(7)) == GrowthVerdict::BoundaryBounded);
    CHECK_THROWS_AS(divergence_verdict(p25, BigRat(1)), ConstraintViolated);
}

TEST_CASE("check_hypotheses: examples 2.5 and 2.4 hold on [2,4]") {
    Precision prec(512, 16384);
    SUBCASE("2.5 vs Theorem 1.6 with β=η₁=0, η₂=y=1") {
        SequenceSpec s = builtin_example("2.5");
        HypothesesRun run = check_hypotheses(s, params(TheoremId::T1_6, s), 2, 4, prec);
        for (const auto& o : run.outcomes) CHECK(o.all_holds());
    }
    SUBCASE("2.4 vs Theorem 1.6 with β=0, y=η₁=η₂=1") {
        SequenceSpec s = builtin_example("2.4");
        HypothesesRun run = check_hypotheses(s, params(TheoremId::T1_6, s), 2, 4, prec);
        for (const auto& o : run.outcomes) CHECK(o.all_holds());
    }
}

TEST_CASE("monotonicity violation is caught at the right index") {
    SequenceSpec s = rational_spec({BigRat(3), BigRat(2), BigRat(5), BigRat(7), BigRat(11)}, {});
    s.profile.g = 2;
    s.profile.A = 1;
    CriterionParams p = params(TheoremId::T1_4, s);
    HypothesesRun run = check_hypotheses(s, p, 1, 3, Precision());
    REQUIRE(run.outcomes[0].label == "(2)");
    CHECK(run.outcomes[0].verdicts[0] == Verdict::Fails);
    CHECK(run.outcomes[0].first_failing == 1);
}

TEST_CASE("interval verdicts never contradict exact rational comparison") {
    auto r = rng;
    Precision prec;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<BigRat> a;
        for (int n = 1; n <= 5; ++n) a.push_back(BigRat(BigInt(1 + static_cast<long>(r() % 50))));
        SequenceSpec s = rational_spec(a, {});
        s.profile.g = 2;
        s.profile.A = 1;
        CriterionParams p = params(TheoremId::T1_4, s);
        p.eps = 1;  // n^{1+ε} = n², exactly comparable
        HypothesesRun run = check_hypotheses(s, p, 1, 4, prec);
        for (long n = 1; n <= 4; ++n) {
            bool exact = BigRat(BigInt(n * n)) <= a[static_cast<std::size_t>(n - 1)] &&
                         a[static_cast<std::size_t>(n - 1)] <= a[static_cast<std::size_t>(n)];
            Verdict v = run.outcomes[0].verdicts[static_cast<std::size_t>(n - 1)];
            if (v == Verdict::Holds) CHECK(exact);
            if (v == Verdict::Fails) CHECK(!exact);
        }
    }
}

TEST_CASE("check_classical") {
    Precision prec;
    SUBCASE("Erdős: a_n = n² with ε = 1/2 holds") {
        std::vector<BigRat> a;
        for (long n = 1; n <= 7; ++n) a.push_back(BigRat(BigInt(n * n)));
        SequenceSpec s = rational_spec(a, {});
        CriterionParams p;
        p.theorem = TheoremId::T1_1;
        p.eps = make_rat(1, 2);
        HypothesesRun run = check_classical(s, ClassicalVariant::Erdos, p, 1, 5, prec);
        for (const auto& o : run.outcomes) CHECK(o.all_holds());
    }
    SUBCASE("Andersen–Kristensen house condition on √5·k") {
        FieldPtr f = NumberField::golden();
        FieldElement s5 = *f->sqrt_of_rat(BigRat(5), prec);
        SequenceSpec s;
        s.name = "sqrt5 multiples";
        s.field = f;
        s.basis = {f->one(), f->theta()};
        s.profile.g = 2;
        s.profile.A = 1;
        s.term_fn = [f, s5](long n) {
            Term t;
            t.a = f->from_rat(BigRat(BigInt(n) * BigInt(n) + 3)) * s5;
            t.b = f->one();
            return t;
        };
        CriterionParams p;
        p.theorem = TheoremId::T1_3;
        p.eps = make_rat(1, 2);
        HypothesesRun run = check_classical(s, ClassicalVariant::AndersenKristensen, p, 1, 4, prec);
        for (const auto& o : run.outcomes) {
            INFO(o.label);
            CHECK(o.all_holds());
        }
    }
    SUBCASE("Hančl variant checks (1) strictly") {
        // a_n = 2^{256n}: (log2 a_n)^{0.7} stays below (ε/(1+ε))·log2 a_n
        std::vector<BigRat> a, b;
        for (long n = 1; n <= 6; ++n) {
            a.push_back(pow_rat(BigRat(2), 256 * n));
            b.push_back(BigRat(1));
        }
        SequenceSpec s = rational_spec(a, b);
        CriterionParams p;
        p.theorem = TheoremId::T1_2;
        p.eps = make_rat(1, 4);
        p.gamma = 3;
        p.alpha = make_rat(7, 10);  // > log(3.5)/log(6) ≈ 0.699
        HypothesesRun run = check_classical(s, ClassicalVariant::Hancl, p, 2, 4, prec);
        for (const auto& o : run.outcomes) {
            INFO(o.label);
            CHECK(o.all_holds());
        }
        // and a failing b_n is caught
        std::vector<BigRat> bad_b(6, BigRat(BigInt(1) << 200));
        SequenceSpec s2 = rational_spec(a, bad_b);
        HypothesesRun run2 = check_classical(s2, ClassicalVariant::Hancl, p, 2, 4, prec);
        CHECK(run2.outcomes.back().any_fails());
    }
}

TEST_CASE("zeta recipes") {
    Precision prec;
    FieldPtr f = NumberField::golden();
    SUBCASE("x = -√5 needs the x − φ̄ recipe") {
        FieldElement x = -*f->sqrt_of_rat(BigRat(5), prec);
        BuiltinOptions o;
        o.x = x;
        SequenceSpec s = builtin_example("2.1", o);
        CriterionParams p = params(TheoremId::T1_4, s);
        p.eps = 2;
        HypothesesRun run = check_hypotheses(s, p, 1, 3, prec);
        CHECK(run.zeta_used == "x − φ̄");
        CHECK(run.outcomes.back().all_holds());
    }
    SUBCASE("complex x with negative real part uses -i·Im(x)") {
        NumberField::Desc d;
        d.minpoly = IntPolynomial{{BigInt(1), BigInt(0), BigInt(1)}};  // X² + 1
        d.distinguished = 1;
        FieldPtr gauss = NumberField::create(d);
        BuiltinOptions o;
        o.x = gauss->element({BigRat(-2), BigRat(1)});  // x = -2 + i: Re(b_n) < 0
        SequenceSpec s = builtin_example("2.1", o);
        CriterionParams p = params(TheoremId::T1_4, s);
        p.eps = 2;
        HypothesesRun run = check_hypotheses(s, p, 1, 2, prec);
        CHECK(run.zeta_used == "-i·Im(x)");
        CHECK(run.outcomes.back().all_holds());
    }
    SUBCASE("x = i keeps ζ = 1 (Re(b_n) = F_m > 0)") {
        NumberField::Desc d;
        d.minpoly = IntPolynomial{{BigInt(1), BigInt(0), BigInt(1)}};
        d.distinguished = 1;
        FieldPtr gauss = NumberField::create(d);
        BuiltinOptions o;
        o.x = gauss->theta();
        SequenceSpec s = builtin_example("2.1", o);
        CriterionParams p = params(TheoremId::T1_4, s);
        p.eps = 2;
        HypothesesRun run = check_hypotheses(s, p, 1, 2, prec);
        CHECK(run.zeta_used == "1");
        CHECK(run.outcomes.back().all_holds());
    }
}

TEST_CASE("min_required_base on the Example 2.3 branches") {
    FieldPtr q = NumberField::rationals();
    SeqExpr y1e = parse_seq("(2-c/4)/(2+c)", q);
    SeqExpr y2e = parse_seq("(1+c)/(2+c)", q);
    ExponentBounds b;
    b.y1 = [&](const BigRat& c) { return eval_rat_expr(y1e, c); };
    b.y2 = [&](const BigRat& c) { return eval_rat_expr(y2e, c); };
    b.beta = b.y2;
    std::vector<BigRat> grid;
    for (BigRat c = make_rat(-9, 10); c <= 3; c += make_rat(1, 10)) grid.push_back(c);
    MinBaseResult r = min_required_base(TheoremId::T1_7, 2, b, grid);
    for (const auto& [c, base] : r.values) CHECK(base == 13 + 3 * c);  // 12 + 3c + 1
    CHECK(r.minimum > 9);
    CHECK(r.minimum == make_rat(103, 10));
    CHECK(r.argmin == make_rat(-9, 10));

    ExponentBounds b2;
    b2.y1 = b.y1;
    b2.y2 = [](const BigRat&) { return BigRat(0); };
    b2.beta = b2.y2;
    std::vector<BigRat> grid2;
    for (BigRat c = make_rat(-19, 10); c <= -1; c += make_rat(1, 10)) grid2.push_back(c);
    MinBaseResult r2 = min_required_base(TheoremId::T1_7, 2, b2, grid2);
    for (const auto& [c, base] : r2.values) CHECK(base == (8 - c) / (2 + c) + 1);
    CHECK(r2.minimum >= 10);

    ExponentBounds b3;
    b3.y1 = [](const BigRat&) { return BigRat(1); };
    b3.y2 = [](const BigRat&) { return BigRat(0); };
    b3.beta = b3.y2;
    MinBaseResult r3 = min_required_base(TheoremId::T1_7, 4, b3, {BigRat(0)});
    CHECK(r3.minimum == 17);

    CHECK_THROWS_AS(min_required_base(TheoremId::T1_7, 2, b, {}), EmptyGrid);
}

TEST_CASE("assemble_report verdict logic") {
    SequenceSpec s = builtin_example("2.5");
    CriterionParams p = params(TheoremId::T1_6, s);
    auto bases = required_bases(TheoremId::T1_6, 2, p);

    HypothesesRun holds;
    holds.outcomes.push_back({"(6)", 2, {Verdict::Holds, Verdict::Holds}, std::nullopt});
    VerificationReport r1 = assemble_report(s, TheoremId::T1_6, holds, bases, 2, 3, Precision());
    CHECK(r1.overall == Overall::TranscendenceCriteriaMet);

    // all Holds + Bounded growth → NotApplicable("growth")
    SequenceSpec slow = s;
    slow.profile.g = 2;  // below every displayed base
    VerificationReport r2 = assemble_report(slow, TheoremId::T1_6, holds, bases, 2, 3, Precision());
    CHECK(r2.overall == Overall::NotApplicable);
    REQUIRE_FALSE(r2.reasons.empty());
    CHECK(r2.reasons.front().find("growth") == 0);

    HypothesesRun undecided = holds;
    undecided.outcomes[0].verdicts[1] = Verdict::Undecided;
    VerificationReport r3 = assemble_report(s, TheoremId::T1_6, undecided, bases, 2, 3, Precision());
    CHECK(r3.overall == Overall::Inconclusive);

    HypothesesRun fails = holds;
    fails.outcomes[0].verdicts[0] = Verdict::Fails;
    fails.outcomes[0].first_failing = 2;
    VerificationReport r4 = assemble_report(s, TheoremId::T1_6, fails, bases, 2, 3, Precision());
    CHECK(r4.overall == Overall::NotApplicable);
}

TEST_CASE("verdict soundness: criteria met implies all Holds and no Undecided") {
    Precision prec(512, 16384);
    SequenceSpec s = builtin_example("2.7");
    CriterionParams p = params(TheoremId::T1_7, s);
    p.eps = 2;
    HypothesesRun run = check_hypotheses(s, p, 2, 3, prec);
    VerificationReport r = assemble_report(s, TheoremId::T1_7, run,
                                           required_bases(TheoremId::T1_7, 2, p), 2, 3, prec);
    if (r.overall == Overall::TranscendenceCriteriaMet) {
        for (const auto& o : r.outcomes) {
            CHECK(o.all_holds());
            CHECK_FALSE(o.any_undecided());
        }
    }
    CHECK(r.overall == Overall::TranscendenceCriteriaMet);
}
