#include "offsetal/numcheck.hpp"

#include "offsetal/polyops.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace offsetal {

namespace {

// Error-free transformations: s = a + b with exact rounding error e.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double z = s - a;
  e = (a - (s - z)) + (b - z);
}

// p = a * b with exact rounding error e (relies on fused multiply-add).
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

// Compensated Horner: evaluates sum c[k] x^k carrying the rounding errors of
// every product and sum in a parallel accumulator.
double comp_horner(const std::vector<double>& c, double x) {
  if (c.empty()) return 0.0;
  double s = c.back();
  double comp = 0.0;
  for (size_t i = c.size() - 1; i-- > 0;) {
    double p, pe, t, se;
    two_prod(s, x, p, pe);
    two_sum(p, c[i], t, se);
    s = t;
    comp = comp * x + (pe + se);
  }
  return s + comp;
}

std::vector<double> qp_to_double(const QPoly& f) {
  std::vector<double> c(static_cast<size_t>(std::max(f.degree(), 0)) + 1, 0.0);
  for (int k = 0; k <= f.degree(); ++k) c[static_cast<size_t>(k)] = f.coeff(k).to_double();
  if (f.degree() < 0) c.assign(1, 0.0);
  return c;
}

// In-place Parlett–Reinsch balancing (radix 2): similarity-scales rows and
// columns toward equal norms, which sharpens companion-matrix eigenvalues.
void balance_matrix(Eigen::MatrixXd& a) {
  const double radix = 2.0, sqrdx = radix * radix;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0, c = 0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0 || r == 0) continue;
      double g = r / radix, f = 1, s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        double ginv = 1.0 / f;
        a.row(i) *= ginv;
        a.col(i) *= f;
      }
    }
  }
}

double eval_scale(const MultiPoly& f) {
  double m = 0;
  for (const auto& [e, c] : f.terms()) m = std::max(m, std::abs(c.to_double()));
  return 1.0 + m;
}

double min_distance(double t, const std::vector<double>& pts) {
  double d = std::numeric_limits<double>::infinity();
  for (double p : pts) d = std::min(d, std::abs(t - p));
  return d;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

double eval_qp_double(const QPoly& f, double t) { return comp_horner(qp_to_double(f), t); }

double eval_mp_double(const MultiPoly& f, double x, double y) {
  std::vector<double> cx;
  for (const QPoly& cy : f.coeffs_in_x()) cx.push_back(comp_horner(qp_to_double(cy), y));
  return comp_horner(cx, x);
}

std::vector<std::complex<double>> poly_roots(std::vector<double> coeffs) {
  double m = 0;
  for (double c : coeffs) m = std::max(m, std::abs(c));
  if (m == 0) return {};
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-12 * m) coeffs.pop_back();
  const size_t n = coeffs.size() - 1;
  if (n == 0) return {};
  if (n == 1) return {std::complex<double>(-coeffs[0] / coeffs[1], 0.0)};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                    static_cast<Eigen::Index>(n));
  for (size_t i = 0; i + 1 < n; ++i)
    companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  for (size_t i = 0; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) =
        -coeffs[i] / coeffs[n];
  balance_matrix(companion);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("poly_roots: eigenvalue iteration failed");
  std::vector<std::complex<double>> roots(n);
  for (size_t i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

std::vector<double> real_roots_qp(const QPoly& f) {
  std::vector<double> out;
  for (const auto& z : poly_roots(qp_to_double(f)))
    if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z.real()))) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

const char* branch_label(Branch b) { return b == Branch::Exterior ? "ext" : "int"; }

std::vector<OffsetSample> sample_offset(const OffsetProblem& op, const std::vector<double>& ts,
                                        const NumTolerances& tol,
                                        std::vector<std::string>* notices) {
  // locate excluded parameters on the squarefree parts: repeated real roots
  // perturb into complex eigenvalue pairs and would slip past the realness
  // filter otherwise
  std::vector<double> excluded = real_roots_qp(squarefree_part_qp(op.np.W));
  for (double r : real_roots_qp(squarefree_part_qp(op.h.w))) excluded.push_back(r);

  const std::vector<double> xc = qp_to_double(op.np.X), yc = qp_to_double(op.np.Y),
                            wc = qp_to_double(op.np.W), uc = qp_to_double(op.h.U),
                            vc = qp_to_double(op.h.V), wnc = qp_to_double(op.h.w);
  const double d = op.d.to_double();

  std::vector<OffsetSample> out;
  for (double t : ts) {
    if (min_distance(t, excluded) <= tol.guard) {
      if (notices)
        notices->push_back("t = " + fmt12(t) +
                           " skipped: within guard distance of an excluded parameter");
      continue;
    }
    double w = comp_horner(wc, t);
    double norm2 = comp_horner(wnc, t);
    if (!(std::abs(w) > 0) || !(norm2 > 0)) {
      if (notices) notices->push_back("t = " + fmt12(t) + " skipped: degenerate evaluation");
      continue;
    }
    double bx = comp_horner(xc, t) / w, by = comp_horner(yc, t) / w;
    double speed = std::sqrt(norm2);
    double nx = comp_horner(vc, t) / speed, ny = -comp_horner(uc, t) / speed;
    if (!std::isfinite(bx) || !std::isfinite(by) || !std::isfinite(nx) || !std::isfinite(ny)) {
      if (notices) notices->push_back("t = " + fmt12(t) + " skipped: non-finite evaluation");
      continue;
    }
    out.push_back({t, Branch::Exterior, {bx + d * nx, by + d * ny}, {bx, by}, {nx, ny}});
    out.push_back({t, Branch::Interior, {bx - d * nx, by - d * ny}, {bx, by}, {-nx, -ny}});
  }
  return out;
}

double residual_check(const MultiPoly& f, const std::vector<OffsetSample>& samples) {
  if (samples.empty()) throw std::invalid_argument("residual_check: no samples");
  const double scale = eval_scale(f);
  double worst = 0;
  for (const OffsetSample& s : samples)
    worst = std::max(worst, std::abs(eval_mp_double(f, s.point.x, s.point.y)) / scale);
  return worst;
}

PointResidual point_residual(const MultiPoly& f, const Vec2& point) {
  double max_coeff = 0;
  double term_sum = 0;
  for (const auto& [e, c] : f.terms()) {
    const double a = std::abs(c.to_double());
    max_coeff = std::max(max_coeff, a);
    term_sum += a * std::pow(std::abs(point.x), e.dx) * std::pow(std::abs(point.y), e.dy);
  }
  const double scale = 1.0 + max_coeff;
  const double degree = static_cast<double>(std::max(1, f.total_degree() + 1));
  PointResidual pr;
  pr.residual = std::abs(eval_mp_double(f, point.x, point.y)) / scale;
  pr.noise_floor = degree * term_sum * std::numeric_limits<double>::epsilon() / scale;
  return pr;
}

int count_generators(const OffsetProblem& op, Vec2 point, const NumTolerances& tol,
                     std::vector<std::string>* notices) {
  if (!std::isfinite(point.x) || !std::isfinite(point.y))
    throw std::invalid_argument("count_generators: point must be finite");
  PQSystem pq = build_pq(op);

  auto specialize = [&](const TPoly& a) {
    std::vector<double> c(static_cast<size_t>(std::max(a.degree(), 0)) + 1, 0.0);
    for (int k = 0; k <= a.degree(); ++k)
      c[static_cast<size_t>(k)] = eval_mp_double(a.coeff(k), point.x, point.y);
    return c;
  };
  std::vector<std::complex<double>> roots_p = poly_roots(specialize(pq.P));
  std::vector<std::complex<double>> roots_q = poly_roots(specialize(pq.Q));

  std::vector<std::complex<double>> common;
  for (const auto& rp : roots_p) {
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& rq : roots_q) dmin = std::min(dmin, std::abs(rp - rq));
    const double thr = tol.root_match * (1.0 + std::abs(rp));
    if (dmin < thr) {
      common.push_back(rp);
    } else if (dmin < 10.0 * thr && notices) {
      notices->push_back("root pairing near t = " + fmt12(rp.real()) +
                         " is borderline; widened tolerance would accept it");
    }
  }

  std::vector<std::complex<double>> reps;
  for (const auto& z : common) {
    bool seen = false;
    for (const auto& r : reps)
      if (std::abs(z - r) <= tol.root_cluster * (1.0 + std::abs(z))) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(z);
  }
  return static_cast<int>(reps.size());
}

namespace {

struct Chain {
  std::vector<Vec2> pts;
};

// Splits an ordered run of samples into polyline chains, breaking at parameter
// gaps (skipped samples) and at jumps across the picture.
std::vector<Chain> to_chains(const std::vector<std::pair<double, Vec2>>& run, double dt,
                             double diag) {
  std::vector<Chain> chains;
  Chain cur;
  double prev_t = 0;
  bool have_prev = false;
  for (const auto& [t, p] : run) {
    bool gap = false;
    if (have_prev) {
      if (t - prev_t > 1.5 * dt) gap = true;
      if (!cur.pts.empty()) {
        double dx = p.x - cur.pts.back().x, dy = p.y - cur.pts.back().y;
        if (std::hypot(dx, dy) > 0.25 * diag) gap = true;
      }
    }
    if (gap && !cur.pts.empty()) {
      if (cur.pts.size() >= 2) chains.push_back(cur);
      cur.pts.clear();
    }
    cur.pts.push_back(p);
    prev_t = t;
    have_prev = true;
  }
  if (cur.pts.size() >= 2) chains.push_back(cur);
  return chains;
}

void append_polylines(std::ostringstream& svg, const std::vector<Chain>& chains,
                      const std::string& style, double minx, double miny, double scale,
                      double pad, double height) {
  for (const Chain& c : chains) {
    svg << "  <polyline fill=\"none\" " << style << " points=\"";
    for (size_t i = 0; i < c.pts.size(); ++i) {
      double sx = pad + (c.pts[i].x - minx) * scale;
      double sy = height - pad - (c.pts[i].y - miny) * scale;
      if (i) svg << ' ';
      svg << fmt12(sx) << ',' << fmt12(sy);
    }
    svg << "\"/>\n";
  }
}

}  // namespace

void emit_plot(const OffsetProblem& op, const StructureReport& report, const std::string& path,
               const PlotOptions& opts, const NumTolerances& tol) {
  if (!(opts.t_min < opts.t_max) || opts.count < 2)
    throw std::invalid_argument("emit_plot: empty sample range");

  std::vector<double> ts(static_cast<size_t>(opts.count));
  const double dt = (opts.t_max - opts.t_min) / (opts.count - 1);
  for (int i = 0; i < opts.count; ++i) ts[static_cast<size_t>(i)] = opts.t_min + dt * i;

  std::vector<std::string> notices;
  std::vector<OffsetSample> samples = sample_offset(op, ts, tol, &notices);

  std::ostringstream body;
  if (opts.format == PlotFormat::Csv) {
    body << "t,branch,x,y\n";
    for (const OffsetSample& s : samples)
      body << fmt12(s.t) << ',' << branch_label(s.branch) << ',' << fmt12(s.point.x) << ','
           << fmt12(s.point.y) << "\n";
  } else {
    std::vector<std::pair<double, Vec2>> input_run, ext_run, int_run, special_run;
    const bool have_special = report.complete && report.has_special &&
                              !report.f2_part.is_constant();
    const double special_scale = have_special ? eval_scale(report.f2_part) : 1.0;
    for (const OffsetSample& s : samples) {
      if (s.branch == Branch::Exterior) {
        input_run.emplace_back(s.t, s.base_point);
        ext_run.emplace_back(s.t, s.point);
      } else {
        int_run.emplace_back(s.t, s.point);
      }
      if (have_special) {
        double r = std::abs(eval_mp_double(report.f2_part, s.point.x, s.point.y)) / special_scale;
        if (r < tol.residual_accept) special_run.emplace_back(s.t, s.point);
      }
    }

    double minx = std::numeric_limits<double>::infinity(), maxx = -minx;
    double miny = minx, maxy = -minx;
    for (const auto* run : {&input_run, &ext_run, &int_run})
      for (const auto& [t, p] : *run) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
      }
    if (!(minx <= maxx)) {
      minx = miny = -1;
      maxx = maxy = 1;
    }
    const double span = std::max({maxx - minx, maxy - miny, 1e-9});
    const double diag = std::hypot(maxx - minx, maxy - miny);
    const double pad = 30, content = 760;
    const double scale = content / span;
    const double width = 2 * pad + (maxx - minx) * scale;
    const double height = 2 * pad + (maxy - miny) * scale;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt12(width) << "\" height=\"" << fmt12(height) << "\" viewBox=\"0 0 "
        << fmt12(width) << ' ' << fmt12(height) << "\">\n";
    for (const std::string& n : notices) svg << "  <!-- " << n << " -->\n";
    append_polylines(svg, to_chains(ext_run, dt, diag), "stroke=\"black\" stroke-width=\"1\"",
                     minx, miny, scale, pad, height);
    append_polylines(svg, to_chains(int_run, dt, diag), "stroke=\"black\" stroke-width=\"1\"",
                     minx, miny, scale, pad, height);
    append_polylines(svg, to_chains(input_run, dt, diag), "stroke=\"red\" stroke-width=\"2\"",
                     minx, miny, scale, pad, height);
    if (have_special)
      append_polylines(svg, to_chains(special_run, dt, diag),
                       "stroke=\"black\" stroke-width=\"2.5\" stroke-dasharray=\"10 4 2 4\"",
                       minx, miny, scale, pad, height);
    svg << "</svg>\n";
    body.str(svg.str());
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("emit_plot: cannot open " + path + " for writing");
  out << body.str();
  out.flush();
  if (!out) throw std::runtime_error("emit_plot: failed writing " + path);
}

}  // namespace offsetal
