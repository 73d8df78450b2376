/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "transcrit/sequences.hpp"

namespace transcrit {

enum class TheoremId { T1_1, T1_2, T1_3, T1_4, T1_6, T1_7, C7_1 };

TheoremId theorem_from_string(const std::string& s);
std::string to_string(TheoremId t);

struct CriterionParams {
    TheoremId theorem = TheoremId::T1_4;
    BigRat eps = make_rat(1, 2);
    BigRat alpha = make_rat(1, 2);
    BigRat beta = BigRat(0);
    BigRat delta = make_rat(1, 100);
    BigRat y = BigRat(1);
    BigRat y1 = BigRat(1);
    BigRat y2 = BigRat(0);
    BigRat eta1 = BigRat(0);
    BigRat eta2 = BigRat(1);
    BigRat gamma = BigRat(3);  // Theorem 1.2 only
    std::optional<Zeta> zeta;  // overrides the sequence ζ when set

    // theorem-specific constraint validation; throws ConstraintViolated
    void validate(int d) const;

    // fill β, y, … from a spec's declared exponents where unset fields apply
    void adopt_exponents(const DeclaredExponents& e);
};

struct HypothesisOutcome {
    std::string label;
    long first_n = 1;
    std::vector<Verdict> verdicts;
    std::optional<long> first_failing;

    bool all_holds() const;
    bool any_undecided() const;
    bool any_fails() const;
};

struct NamedBase {
    std::string name;
    BigRat value;          // δ substituted
    std::string symbolic;  // linear in δ, e.g. "13 + 2·δ"
    bool transcendence = true;
};

// The displayed divergence bases of the theorem; empty for Theorem 1.3 (its
// exponent is the per-n product, see thm13_product_exponent).
std::vector<NamedBase> required_bases(TheoremId t, int d, const CriterionParams& p);

// ∏_{i=1}^{n-1} (d^i + d)^{-1}, exact
BigRat thm13_product_exponent(int d, long n);

enum class GrowthVerdict { Diverges, Bounded, BoundaryDiverges, BoundaryBounded };
std::string to_string(GrowthVerdict v);

GrowthVerdict divergence_verdict(const GrowthProfile& profile, const BigRat& base);

struct HypothesesRun {
    std::vector<HypothesisOutcome> outcomes;
    std::string zeta_used;  // which ζ recipe certified the positivity condition
};

HypothesesRun check_hypotheses(const SequenceSpec& spec, const CriterionParams& params,
                               long n_lo, long n_hi, Precision prec);

enum class ClassicalVariant { Erdos, Hancl, AndersenKristensen };

HypothesesRun check_classical(const SequenceSpec& spec, ClassicalVariant variant,
                              const CriterionParams& params, long n_lo, long n_hi, Precision prec);

struct ExponentBounds {
    // lower bounds for β, y/y₁, y₂ and η₂; upper bound for η₁ — all as
    // functions of the scan parameter c
    std::function<BigRat(const BigRat&)> beta, y1, y2, eta1, eta2;
};

struct MinBaseResult {
    BigRat minimum;
    BigRat argmin;
    std::vector<std::pair<BigRat, BigRat>> values;  // (c, base(c))
};

MinBaseResult min_required_base(TheoremId t, int d, const ExponentBounds& bounds,
                                const std::vector<BigRat>& c_grid);

enum class Overall { TranscendenceCriteriaMet, IrrationalityCriteriaMet, NotApplicable, Inconclusive };
std::string to_string(Overall o);

struct VerificationReport {
    TheoremId theorem;
    long n_lo = 1, n_hi = 1;
    std::vector<HypothesisOutcome> outcomes;
    std::vector<NamedBase> bases;
    std::vector<std::pair<std::string, GrowthVerdict>> growth;  // per base
    Overall overall = Overall::Inconclusive;
    std::vector<std::string> reasons;  // populated for NotApplicable
    std::string zeta_used;
    std::string index_convention = "adjacent";
    int precision_bits = 256;
    std::string sequence_name;
};

VerificationReport assemble_report(const SequenceSpec& spec, TheoremId theorem,
                                   const HypothesesRun& run, const std::vector<NamedBase>& bases,
                                   long n_lo, long n_hi, Precision prec);

} // namespace transcrit
