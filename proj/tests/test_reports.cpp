/* SPDX-License-Identifier: Apache-2.0 */
#include "doctest.h"
#include "transcrit/report.hpp"
#include "util.hpp"

using namespace transcrit;
using namespace testutil;

namespace {

VerificationReport sample_report() {
    SequenceSpec s = builtin_example("2.5");
    CriterionParams p;
    p.theorem = TheoremId::T1_6;
    p.adopt_exponents(s.exponents);
    p.eps = make_rat(1, 2);
    Precision prec;
    HypothesesRun run = check_hypotheses(s, p, 2, 3, prec);
    return assemble_report(s, TheoremId::T1_6, run, required_bases(TheoremId::T1_6, 2, p), 2, 3,
                           prec);
}

} // namespace

TEST_CASE("report JSON round-trips byte-identically") {
    VerificationReport r = sample_report();
    std::string once = report_to_json(r);
    CHECK(json_roundtrip(once) == once);
    CHECK(once.find("\"theorem\": \"1.6\"") != std::string::npos);
    CHECK(once.find("\"index_convention\": \"adjacent\"") != std::string::npos);
    CHECK(once.find("\"overall\": \"TranscendenceCriteriaMet\"") != std::string::npos);
}

TEST_CASE("identical runs render identical reports") {
    std::string a = report_to_json(sample_report());
    std::string b = report_to_json(sample_report());
    CHECK(a == b);
    std::string ta = report_to_text(sample_report());
    std::string tb = report_to_text(sample_report());
    CHECK(ta == tb);
}

TEST_CASE("approximant dump schema") {
    SequenceSpec s = builtin_example("2.5");
    auto r = build_q_p_general(s, {}, 2, BigRat(1), make_rat(1, 2), Precision());
    std::string j = approximant_to_json(r);
    CHECK(json_roundtrip(j) == j);
    CHECK(j.find("\"N\": 2") != std::string::npos);
    CHECK(j.find("\"q\": \"30\"") != std::string::npos);
    CHECK(j.find("\"(21)\": \"Holds\"") != std::string::npos);
    CHECK(j.find("\"(22)\": \"Holds\"") != std::string::npos);
    CHECK(j.find("\"lo\"") != std::string::npos);
}

TEST_CASE("interval endpoint strings are exact hex floats") {
    IntervalReal v = iv_from_rat(make_rat(1, 2), Precision());
    CHECK(v.lo_str() == v.hi_str());  // exactly representable
    CHECK(v.lo_str().substr(0, 2) == "0x");
}
