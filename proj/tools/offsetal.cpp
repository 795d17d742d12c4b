#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "offsetal/numcheck.hpp"
#include "offsetal/offset.hpp"
#include "offsetal/parse.hpp"
#include "offsetal/polyops.hpp"
#include "offsetal/report.hpp"
#include "offsetal/textform.hpp"

namespace {

using namespace offsetal;

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kUnclassified = 3;
constexpr int kInternal = 4;

// Input-side rejections (unreadable files, rejected curve classes) that map
// to the invalid-input exit code.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw InputError("failed writing output file: " + path);
}

struct LoadedCurve {
  std::string x_text, y_text;
  ValidatedCurve vc;
};

LoadedCurve load_curve(const std::string& path) {
  CurveInput ci = parse_curve_document(read_file(path));
  ValidationResult vr = validate_curve(ci.param);
  if (const CurveRejection* rej = std::get_if<CurveRejection>(&vr)) {
    std::string msg = std::string("curve rejected: ") + curve_rejection_label(rej->kind);
    if (!rej->witness.is_zero()) msg += " (" + poly_text(rej->witness) + " = 0)";
    throw InputError(msg);
  }
  return {ci.x_text, ci.y_text, std::get<ValidatedCurve>(std::move(vr))};
}

Rational load_distance(const std::string& text) {
  try {
    return parse_rational_strict(text);
  } catch (const std::invalid_argument&) {
    throw InputError("d must be an exact rational literal `a` or `a/b`, got '" + text + "'");
  }
}

class StageTimer {
 public:
  long long take_ms() {
    auto now = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct OffsetEqOptions {
  std::string input, d_text, out_path;
  bool json = false, text = false, corrupt = false;
};

int run_offset_eq(const OffsetEqOptions& o) {
  StageTimer timer;
  LoadedCurve lc = load_curve(o.input);
  OffsetProblem op = make_offset_problem(lc.vc, load_distance(o.d_text));
  op.corrupt_extraneous_for_testing = o.corrupt;
  long long validate_ms = timer.take_ms();

  StructureReport rep = structure_report(op);
  IsOffsetResult io = is_offset_from_report(rep);
  long long structure_ms = timer.take_ms();

  ReportTimings timings{{"validate_ms", validate_ms},
                       {"structure_ms", structure_ms},
                       {"total_ms", validate_ms + structure_ms}};
  nlohmann::ordered_json doc =
      report_document(lc.x_text, lc.y_text, op.d, op, rep, io, timings);
  write_output(o.out_path, o.json ? doc.dump(2) + "\n" : report_text(doc));
  if (!rep.complete) {
    for (const std::string& diag : rep.diagnostics) std::cerr << "diagnostic: " << diag << "\n";
    return kUnclassified;
  }
  return kOk;
}

int run_tracing_index(const std::string& input) {
  LoadedCurve lc = load_curve(input);
  std::cout << "tracing_index: " << lc.vc.implicit_curve.tracing_index << "\n";
  return kOk;
}

int run_implicitize(const std::string& input) {
  LoadedCurve lc = load_curve(input);
  std::cout << "f = " << poly_text(lc.vc.implicit_curve.f) << "\n";
  std::cout << "tracing_index: " << lc.vc.implicit_curve.tracing_index << "\n";
  std::cout << "constant: " << rational_text(lc.vc.implicit_curve.constant) << "\n";
  return kOk;
}

int run_is_offset(const std::string& input, const std::string& d_text) {
  LoadedCurve lc = load_curve(input);
  OffsetProblem op = make_offset_problem(lc.vc, load_distance(d_text));
  StructureReport rep = structure_report(op);
  IsOffsetResult io = is_offset_from_report(rep);
  if (!io.determined) {
    for (const std::string& diag : rep.diagnostics) std::cerr << "diagnostic: " << diag << "\n";
    std::cout << "is_offset: undetermined\n";
    return kUnclassified;
  }
  std::cout << "is_offset: " << (io.is_offset ? "true" : "false") << "\n";
  if (io.is_offset) std::cout << "special = " << poly_text(io.special_equation) << "\n";
  return kOk;
}

struct SampleOptions {
  std::string input, d_text, range_text = "-1:1", out_path;
  int count = 200;
  bool svg = false, csv = false;
};

std::pair<double, double> parse_range(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw InputError("--range expects `a:b`, got '" + text + "'");
  try {
    size_t ea = 0, eb = 0;
    double a = std::stod(text.substr(0, colon), &ea);
    double b = std::stod(text.substr(colon + 1), &eb);
    if (ea != colon || colon + 1 + eb != text.size())
      throw InputError("--range expects `a:b`, got '" + text + "'");
    return {a, b};
  } catch (const std::logic_error&) {
    throw InputError("--range expects `a:b`, got '" + text + "'");
  }
}

int run_sample(const SampleOptions& o) {
  LoadedCurve lc = load_curve(o.input);
  OffsetProblem op = make_offset_problem(lc.vc, load_distance(o.d_text));
  auto [a, b] = parse_range(o.range_text);
  PlotOptions popts;
  popts.t_min = a;
  popts.t_max = b;
  popts.count = o.count;
  popts.format = o.csv ? PlotFormat::Csv : PlotFormat::Svg;
  // the special-component overlay only exists in SVG mode, and only the
  // report can certify one
  StructureReport rep;
  if (popts.format == PlotFormat::Svg) rep = structure_report(op);
  try {
    emit_plot(op, rep, o.out_path, popts);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return kOk;
}

struct VerifyOptions {
  std::string input, d_text, range_text = "-10:10";
  int samples = 200;
  std::string y0_text;
};

int run_verify(const VerifyOptions& o) {
  LoadedCurve lc = load_curve(o.input);
  OffsetProblem op = make_offset_problem(lc.vc, load_distance(o.d_text));
  StructureReport rep = structure_report(op);

  bool all_ok = true;
  auto line = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << what << "\n";
    all_ok = all_ok && ok;
  };

  line(rep.complete, "classification complete");
  if (!rep.complete) {
    for (const std::string& diag : rep.diagnostics) std::cerr << "diagnostic: " << diag << "\n";
    return kUnclassified;
  }
  line(rep.H == rep.F * rep.G, "eliminant reconstructs as F * G");
  line(rep.theorem_pattern_ok, "exponent pattern within {n, 2n}");

  auto [a, b] = parse_range(o.range_text);
  if (!(a < b) || o.samples < 2) throw InputError("empty sample range");
  std::vector<double> ts(static_cast<size_t>(o.samples));
  for (int i = 0; i < o.samples; ++i)
    ts[static_cast<size_t>(i)] = a + (b - a) * i / (o.samples - 1);
  std::vector<std::string> notices;
  std::vector<OffsetSample> samples = sample_offset(op, ts, {}, &notices);
  line(!samples.empty(), "sampling produced points (" + std::to_string(samples.size()) +
                             " samples, " + std::to_string(notices.size()) + " skipped)");
  if (samples.empty()) return kInternal;

  NumTolerances tol;
  // The noise floor must sit well below the accept threshold for a residual to
  // count as evidence; near poles of the parametrization the sampled points
  // get large enough that doubles cannot resolve the evaluation.
  const double resolvable_floor = 0.01 * tol.residual_accept;

  // F's zero set is the union of the offset components, so each sample needs
  // to lie on (at least) one offset factor — not every factor on every sample.
  {
    size_t resolved = 0, on_component = 0;
    double worst = 0;
    for (const OffsetSample& s : samples) {
      double best = std::numeric_limits<double>::infinity();
      // every factor must be resolvable here: the component this point lies
      // on could otherwise be exactly the one the evaluation cannot decide
      bool resolvable = true;
      for (const ClassifiedFactor& f : rep.factors) {
        if (f.kind == FactorKind::Extraneous) continue;
        PointResidual pr = point_residual(f.poly, s.point);
        if (pr.noise_floor > resolvable_floor) {
          resolvable = false;
          break;
        }
        best = std::min(best, pr.residual);
      }
      if (!resolvable) continue;
      ++resolved;
      worst = std::max(worst, best);
      if (best < tol.residual_accept) ++on_component;
    }
    std::ostringstream what;
    what << "every well-conditioned sample lies on an offset component (" << on_component
         << "/" << resolved << " on-component, worst residual " << worst << ")";
    line(resolved >= std::min<size_t>(20, samples.size()) && on_component == resolved,
         what.str());
  }

  // Extraneous factors must stay off the sampled branches: only isolated
  // parameter values may come near their zero sets.
  for (const ClassifiedFactor& f : rep.factors) {
    if (f.kind != FactorKind::Extraneous) continue;
    size_t resolved = 0, vanishing = 0;
    for (const OffsetSample& s : samples) {
      PointResidual pr = point_residual(f.poly, s.point);
      if (pr.noise_floor > resolvable_floor) continue;
      ++resolved;
      if (pr.residual < tol.residual_reject) ++vanishing;
    }
    std::ostringstream what;
    what << "extraneous factor stays off the sampled branches (" << vanishing << "/"
         << resolved << " samples near its zero set)";
    line(resolved > 0 && vanishing <= resolved / 20, what.str());
  }

  // generator counting on a deterministic spread of sample points; points
  // whose component attribution is numerically unresolvable are skipped
  const int n = rep.tracing_index;
  const bool special_known = rep.has_special && !rep.f2_part.is_constant();
  int checked = 0, matched = 0;
  size_t stride = std::max<size_t>(1, samples.size() / 20);
  for (size_t i = 0; i < samples.size() && checked < 20; i += stride) {
    const OffsetSample& s = samples[i];
    int expected = n;
    if (special_known) {
      PointResidual pr = point_residual(rep.f2_part, s.point);
      if (pr.noise_floor > resolvable_floor) continue;
      if (pr.residual < tol.residual_accept) expected = 2 * n;
    }
    ++checked;
    if (count_generators(op, s.point) == expected) ++matched;
  }
  line(checked > 0 && matched == checked,
       "generator counts match tracing structure (" + std::to_string(matched) + "/" +
           std::to_string(checked) + ")");

  // exact specialization cross-check at a usable line height
  std::optional<Rational> y0;
  if (!o.y0_text.empty()) {
    y0 = load_distance(o.y0_text);
  } else {
    for (int k = 0; k <= 9 && !y0; ++k) {
      SpecializationCheck probe = verify_specialization(op, Rational(k), rep);
      if (probe.usable_y0) y0 = Rational(k);
    }
  }
  if (!y0) {
    line(false, "no usable specialization height found in 0..9");
  } else {
    SpecializationCheck check = verify_specialization(op, *y0, rep);
    std::string at = " at y0 = " + rational_text(*y0);
    line(check.usable_y0, "specialization height usable" + at);
    line(check.resultant_matches, "specialized resultant matches eliminant" + at);
    line(check.multiplicities_match, "specialized factor multiplicities match" + at);
    for (const std::string& note : check.notes) std::cout << "  note: " << note << "\n";
  }

  return all_ok ? kOk : kInternal;
}

template <typename F>
int with_error_mapping(F&& f) {
  try {
    return f();
  } catch (const InternalInconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact implicit equations and structure of offsets of rational plane curves"};
  app.require_subcommand(1);
  int rc = kOk;

  OffsetEqOptions eq;
  CLI::App* c_eq = app.add_subcommand(
      "offset-eq", "Compute the offset implicit equation and its factor structure");
  c_eq->add_option("-d", eq.d_text, "offset distance (exact rational)")->required();
  c_eq->add_option("-i", eq.input, "curve input file")->required();
  CLI::Option* eq_json = c_eq->add_flag("--json", eq.json, "JSON report on stdout/file");
  c_eq->add_flag("--text", eq.text, "plain-text report (default)")->excludes(eq_json);
  c_eq->add_option("-o", eq.out_path, "write the report to this file instead of stdout");
  c_eq->add_flag("--test-corrupt-extraneous", eq.corrupt,
                 "testing hook: disable extraneous-candidate generation")
      ->group("");  // hidden
  c_eq->callback([&] { rc = with_error_mapping([&] { return run_offset_eq(eq); }); });

  std::string ti_input;
  CLI::App* c_ti = app.add_subcommand("tracing-index",
                                      "Report how often the parametrization traces the curve");
  c_ti->add_option("-i", ti_input, "curve input file")->required();
  c_ti->callback([&] { rc = with_error_mapping([&] { return run_tracing_index(ti_input); }); });

  std::string im_input;
  CLI::App* c_im =
      app.add_subcommand("implicitize", "Compute the implicit equation of the input curve");
  c_im->add_option("-i", im_input, "curve input file")->required();
  c_im->callback([&] { rc = with_error_mapping([&] { return run_implicitize(im_input); }); });

  std::string io_input, io_d;
  CLI::App* c_io =
      app.add_subcommand("is-offset", "Decide whether the curve is itself an offset");
  c_io->add_option("-d", io_d, "offset distance (exact rational)")->required();
  c_io->add_option("-i", io_input, "curve input file")->required();
  c_io->callback([&] { rc = with_error_mapping([&] { return run_is_offset(io_input, io_d); }); });

  SampleOptions so;
  CLI::App* c_sa = app.add_subcommand("sample", "Sample the offset branches into SVG or CSV");
  c_sa->add_option("-d", so.d_text, "offset distance (exact rational)")->required();
  c_sa->add_option("-i", so.input, "curve input file")->required();
  c_sa->add_option("--range", so.range_text, "parameter range a:b")->required();
  c_sa->add_option("--count", so.count, "number of parameter values")->required();
  CLI::Option* sa_svg = c_sa->add_flag("--svg", so.svg, "SVG output (default)");
  c_sa->add_flag("--csv", so.csv, "CSV output")->excludes(sa_svg);
  c_sa->add_option("-o", so.out_path, "output file")->required();
  c_sa->callback([&] { rc = with_error_mapping([&] { return run_sample(so); }); });

  VerifyOptions vo;
  CLI::App* c_ve = app.add_subcommand(
      "verify", "Run the numeric cross-check suite against the exact results");
  c_ve->add_option("-d", vo.d_text, "offset distance (exact rational)")->required();
  c_ve->add_option("-i", vo.input, "curve input file")->required();
  c_ve->add_option("--samples", vo.samples, "number of samples (default 200)");
  c_ve->add_option("--y0", vo.y0_text, "specialization height (exact rational)");
  c_ve->add_option("--range", vo.range_text, "parameter range a:b (default -10:10)");
  c_ve->callback([&] { rc = with_error_mapping([&] { return run_verify(vo); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }
  return rc;
}
