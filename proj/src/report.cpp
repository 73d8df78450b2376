/* SPDX-License-Identifier: Apache-2.0 */
#include "transcrit/report.hpp"

#include <sstream>

#include "json.hpp"

namespace transcrit {

using ordered_json = nlohmann::ordered_json;

static ordered_json report_json(const VerificationReport& r) {
    ordered_json j;
    j["theorem"] = to_string(r.theorem);
    j["sequence"] = r.sequence_name;
    j["n_range"] = {r.n_lo, r.n_hi};
    ordered_json hyps = ordered_json::array();
    for (const auto& o : r.outcomes) {
        ordered_json h;
        h["label"] = o.label;
        ordered_json vs = ordered_json::array();
        for (Verdict v : o.verdicts) vs.push_back(to_string(v));
        h["verdicts"] = vs;
        if (o.first_failing) h["first_failing_n"] = *o.first_failing;
        hyps.push_back(h);
    }
    j["hypotheses"] = hyps;
    ordered_json bases;
    ordered_json bases_numeric;
    for (const auto& b : r.bases) {
        bases[b.name] = b.symbolic;
        bases_numeric[b.name] = to_string(b.value);
    }
    j["bases"] = bases;
    j["bases_numeric"] = bases_numeric;
    ordered_json growth;
    for (const auto& [name, v] : r.growth) growth[name] = to_string(v);
    j["growth_per_base"] = growth;
    // the verdict the overall decision hinges on: transcendence conjunction if
    // present, otherwise the irrationality base
    std::string overall_growth;
    for (const auto& [name, v] : r.growth) {
        overall_growth = to_string(v);
        if (v != GrowthVerdict::Diverges && v != GrowthVerdict::BoundaryDiverges) break;
    }
    j["growth"] = overall_growth;
    j["overall"] = to_string(r.overall);
    if (!r.reasons.empty()) j["reasons"] = r.reasons;
    if (!r.zeta_used.empty()) j["zeta"] = r.zeta_used;
    j["index_convention"] = r.index_convention;
    j["precision_bits"] = r.precision_bits;
    return j;
}

std::string report_to_json(const VerificationReport& r) { return report_json(r).dump(2) + "\n"; }

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "theorem " << to_string(r.theorem) << " vs " << r.sequence_name << "  (n in [" << r.n_lo
       << ", " << r.n_hi << "], " << r.precision_bits << " bits, " << r.index_convention
       << " indices)\n";
    for (const auto& o : r.outcomes) {
        os << "  " << o.label << ": ";
        for (std::size_t i = 0; i < o.verdicts.size(); ++i) {
            if (i) os << " ";
            os << "n=" << (o.first_n + static_cast<long>(i)) << ":" << to_string(o.verdicts[i]);
        }
        os << "\n";
    }
    if (!r.zeta_used.empty()) os << "  ζ = " << r.zeta_used << "\n";
    for (const auto& b : r.bases) {
        std::string growth;
        for (const auto& [name, v] : r.growth)
            if (name == b.name) growth = to_string(v);
        os << "  base " << b.name << " = " << b.symbolic << " = " << to_string(b.value) << "  -> "
           << growth << "\n";
    }
    os << "  overall: " << to_string(r.overall) << "\n";
    for (const auto& reason : r.reasons) os << "    - " << reason << "\n";
    return os.str();
}

static ordered_json approximant_json(const ApproximantResult& r) {
    ordered_json j;
    j["N"] = r.approximant.N;
    j["q"] = to_string(r.approximant.q);
    ordered_json ps = ordered_json::array();
    for (const auto& pi : r.approximant.p) ps.push_back(to_string(pi));
    j["p"] = ps;
    ordered_json err;
    err["lo"] = r.approximant.err.lo_str();
    err["hi"] = r.approximant.err.hi_str();
    j["err"] = err;
    ordered_json checks;
    for (const auto& [label, v] : r.checks) checks[label] = to_string(v);
    j["checks"] = checks;
    if (r.suggested_E) j["suggested_E"] = to_string(*r.suggested_E);
    return j;
}

std::string approximant_to_json(const ApproximantResult& r) {
    return approximant_json(r).dump(2) + "\n";
}

std::string approximant_to_text(const ApproximantResult& r) {
    std::ostringstream os;
    os << "N = " << r.approximant.N << "  q = " << to_string(r.approximant.q) << "\n";
    os << "  p = (";
    for (std::size_t i = 0; i < r.approximant.p.size(); ++i) {
        if (i) os << ", ";
        os << to_string(r.approximant.p[i]);
    }
    os << ")\n";
    os << "  err in " << r.approximant.err.brief() << "\n";
    for (const auto& [label, v] : r.checks) os << "  " << label << ": " << to_string(v) << "\n";
    if (r.suggested_E) os << "  smallest power-of-two E for (15): " << to_string(*r.suggested_E) << "\n";
    return os.str();
}

std::string json_roundtrip(const std::string& text) {
    return ordered_json::parse(text).dump(2) + "\n";
}

} // namespace transcrit
