#include "offsetal/report.hpp"

#include <cstdlib>
#include <sstream>

#include "offsetal/textform.hpp"

namespace offsetal {

using nlohmann::ordered_json;

bool zero_timings_requested() {
  const char* v = std::getenv("OFFSETAL_ZERO_TIMINGS");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

ordered_json report_document(const std::string& x_text, const std::string& y_text,
                             const Rational& d, const OffsetProblem& op,
                             const StructureReport& rep, const IsOffsetResult& io,
                             const ReportTimings& timings) {
  ordered_json doc;
  doc["input"] = {{"x", x_text}, {"y", y_text}, {"d", rational_text(d)}};
  doc["normalized"] = {{"X", poly_text(op.np.X, "t")},
                       {"Y", poly_text(op.np.Y, "t")},
                       {"W", poly_text(op.np.W, "t")}};
  doc["tracing_index"] = rep.tracing_index;
  doc["H"] = poly_text(rep.H);
  doc["F"] = poly_text(rep.F);
  doc["G"] = poly_text(rep.G);
  ordered_json factors = ordered_json::array();
  for (const ClassifiedFactor& f : rep.factors)
    factors.push_back({{"poly", poly_text(f.poly)},
                       {"multiplicity", f.multiplicity_in_H},
                       {"kind", factor_kind_label(f.kind)}});
  doc["factors"] = std::move(factors);
  doc["exponent_pattern"] = rep.exponent_pattern;
  doc["has_special"] = rep.has_special;
  doc["special_equation"] = poly_text(io.special_equation);
  doc["verdict_squarefree"] = rep.verdict_squarefree;
  if (io.determined)
    doc["is_offset"] = io.is_offset;
  else
    doc["is_offset"] = nullptr;
  doc["constants"] = {{"resultant_constant", rational_text(rep.resultant_constant)},
                      {"removed_content_p", poly_text(rep.removed_content_p, "t")},
                      {"removed_content_q", poly_text(rep.removed_content_q, "t")}};
  doc["diagnostics"] = rep.diagnostics;
  ordered_json tm;
  const bool zero = zero_timings_requested();
  for (const auto& [name, ms] : timings) tm[name] = zero ? 0 : ms;
  doc["timings"] = std::move(tm);
  return doc;
}

std::string report_text(const ordered_json& doc) {
  std::ostringstream out;
  out << "input: x = " << doc["input"]["x"].get<std::string>()
      << ", y = " << doc["input"]["y"].get<std::string>()
      << ", d = " << doc["input"]["d"].get<std::string>() << "\n";
  out << "normalized: X = " << doc["normalized"]["X"].get<std::string>()
      << "; Y = " << doc["normalized"]["Y"].get<std::string>()
      << "; W = " << doc["normalized"]["W"].get<std::string>() << "\n";
  out << "tracing_index: " << doc["tracing_index"].dump() << "\n";
  out << "H = " << doc["H"].get<std::string>() << "\n";
  out << "F = " << doc["F"].get<std::string>() << "\n";
  out << "G = " << doc["G"].get<std::string>() << "\n";
  out << "factors:\n";
  for (const auto& f : doc["factors"])
    out << "  [" << f["kind"].get<std::string>() << ", multiplicity "
        << f["multiplicity"].dump() << "] " << f["poly"].get<std::string>() << "\n";
  out << "exponent_pattern: " << doc["exponent_pattern"].dump() << "\n";
  out << "has_special: " << doc["has_special"].dump() << "\n";
  out << "special_equation: " << doc["special_equation"].get<std::string>() << "\n";
  out << "verdict_squarefree: " << doc["verdict_squarefree"].dump() << "\n";
  out << "is_offset: "
      << (doc["is_offset"].is_null() ? std::string("undetermined") : doc["is_offset"].dump())
      << "\n";
  out << "constants: resultant_constant = "
      << doc["constants"]["resultant_constant"].get<std::string>()
      << ", removed_content_p = " << doc["constants"]["removed_content_p"].get<std::string>()
      << ", removed_content_q = " << doc["constants"]["removed_content_q"].get<std::string>()
      << "\n";
  for (const auto& diag : doc["diagnostics"])
    out << "diagnostic: " << diag.get<std::string>() << "\n";
  return out.str();
}

}  // namespace offsetal
