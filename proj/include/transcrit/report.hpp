/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <string>

#include "transcrit/approximants.hpp"
#include "transcrit/criteria.hpp"

namespace transcrit {

// Deterministic JSON: insertion-ordered keys, rationals as "p/q" strings,
// interval endpoints as hex-float strings. Parsing and re-serializing an
// emitted document is byte-identical.
std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

std::string approximant_to_json(const ApproximantResult& r);
std::string approximant_to_text(const ApproximantResult& r);

// parse + re-dump with the same settings (round-trip check helper)
std::string json_roundtrip(const std::string& text);

} // namespace transcrit
