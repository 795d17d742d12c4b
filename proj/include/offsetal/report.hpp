#ifndef OFFSETAL_REPORT_HPP
#define OFFSETAL_REPORT_HPP

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "offsetal/numcheck.hpp"
#include "offsetal/offset.hpp"

namespace offsetal {

// Wall-clock stage timings in milliseconds, reported in insertion order.
// When the environment variable OFFSETAL_ZERO_TIMINGS is set, every value is
// written as 0 so identical inputs serialize byte-identically across runs.
using ReportTimings = std::vector<std::pair<std::string, long long>>;

bool zero_timings_requested();

// Serializes one structure computation into the stable-key-order JSON report:
// input {x, y, d}, normalized {X, Y, W}, tracing_index, H, F, G,
// factors [{poly, multiplicity, kind}], exponent_pattern, has_special,
// special_equation, verdict_squarefree, is_offset (null while undetermined),
// constants, diagnostics, timings.  All polynomials use the canonical text
// form.
nlohmann::ordered_json report_document(const std::string& x_text, const std::string& y_text,
                                       const Rational& d, const OffsetProblem& op,
                                       const StructureReport& rep, const IsOffsetResult& io,
                                       const ReportTimings& timings);

// Human-readable rendering of the same content.
std::string report_text(const nlohmann::ordered_json& doc);

}  // namespace offsetal

#endif  // OFFSETAL_REPORT_HPP
