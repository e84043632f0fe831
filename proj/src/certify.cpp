#include "trieig/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "trieig/bounds.hpp"
#include "trieig/errors.hpp"

namespace trieig {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
constexpr double kZeroTol = 1e-9;      // |p| below this (sup-norm 1) counts as zero
constexpr double kThinMargin = 1e-7;
constexpr double kEndpointTol = 1e-9;

void require_polygon_case(RegionCase c) {
  if (c == RegionCase::C6) throw WrongCase("C6 is certified by the sector estimate, not a polynomial");
}

Point native_to_mn(RegionCase c, Point p) {
  return region_info(c).coordinates == RegionCoordinates::UV ? from_uv({p.x, p.y}) : p;
}

// Bilinear map of the unit square onto the region polygon; triangles repeat
// their first vertex, collapsing one edge.
struct RegionMap {
  std::array<Point, 4> corner;

  explicit RegionMap(RegionCase c) {
    const std::vector<Point> poly = region_info(c).polygon;
    for (std::size_t k = 0; k < 4; ++k) corner[k] = poly[k % poly.size()];
  }

  Point operator()(double s, double t) const {
    const double w0 = (1 - s) * (1 - t), w1 = s * (1 - t), w2 = s * t, w3 = (1 - s) * t;
    return {w0 * corner[0].x + w1 * corner[1].x + w2 * corner[2].x + w3 * corner[3].x,
            w0 * corner[0].y + w1 * corner[1].y + w2 * corner[2].y + w3 * corner[3].y};
  }
};

void bounding_box(const std::vector<Point>& poly, Point& lo, Point& hi) {
  lo = hi = poly.front();
  for (const Point& p : poly) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
}

// Signed distance to the nearest edge, positive inside a counter-clockwise
// convex polygon.
double inset_distance(const std::vector<Point>& poly, Point p) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point a = poly[k];
    const Point b = poly[(k + 1) % poly.size()];
    const double ex = b.x - a.x, ey = b.y - a.y;
    const double cross = ex * (p.y - a.y) - ey * (p.x - a.x);
    d = std::min(d, cross / std::hypot(ex, ey));
  }
  return d;
}

double region_sup_norm(RegionCase c) {
  const RegionMap map(c);
  double sup = 0.0;
  constexpr int n = 40;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      sup = std::max(sup, std::abs(region_target(c, map(double(i) / n, double(j) / n))));
    }
  }
  return sup;
}

std::string describe(Point p, RegionCoordinates vars) {
  std::ostringstream os;
  os.precision(6);
  if (vars == RegionCoordinates::MN) {
    os << "(M, N) = (" << p.x << ", " << p.y << ")";
  } else {
    os << "(U, V) = (" << p.x << ", " << p.y << ")";
  }
  return os.str();
}

SegmentReport analyze_segment(const BivariatePoly& p, const BoundarySegment& s) {
  SegmentReport r;
  r.segment = s;
  r.roots = boundary_roots(p, s);
  const UniPoly restricted = p.restrict_to_line(s.origin, s.direction);

  std::vector<double> cuts{s.t_lo};
  for (const RealRoot& root : r.roots.real) {
    if (root.value > s.t_lo + kEndpointTol && root.value < s.t_hi - kEndpointTol) {
      r.roots_in_segment = true;
      cuts.push_back(root.value);
    }
  }
  cuts.push_back(s.t_hi);

  r.value_lo = restricted(s.t_lo);
  r.value_hi = restricted(s.t_hi);
  r.max_value = r.value_lo;
  r.argmax = s.t_lo;
  if (r.value_hi > r.max_value) {
    r.max_value = r.value_hi;
    r.argmax = s.t_hi;
  }
  // the sign is constant between consecutive roots
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
    const double v = restricted(mid);
    if (v > r.max_value) {
      r.max_value = v;
      r.argmax = mid;
    }
  }
  r.nonpositive = r.max_value <= kZeroTol;
  return r;
}

}  // namespace

double deficiency(const Triangle& t, const CoefficientVector& c) {
  const FormPair f = assemble_forms(t);
  const Eigen::Vector4d v = c.as_vector();
  return kPi2 * t.L * t.L * v.dot(f.mass * v) - 9.0 * t.A * t.A * v.dot(f.stiffness * v);
}

double reduced_deficiency(double M, double N, const CoefficientVector& c) {
  const ReferenceMoments& m = reference_moments();
  const Eigen::Vector4d v = c.as_vector();
  const double a = (M * M - N * N + 1.0) / 2.0;
  const double L = 1.0 + M + N;
  const double q = v.dot(m.mass * v);
  const double kxx = v.dot(m.grad_xx * v);
  const double kyy = v.dot(m.grad_yy * v);
  const double kmix = v.dot(m.grad_mixed * v);
  return kPi2 * L * L * q - 2.25 * (M * M * kxx + kyy - a * kmix);
}

double region_target(RegionCase c, Point p) {
  require_polygon_case(c);
  const Point mn = native_to_mn(c, p);
  return -reduced_deficiency(mn.x, mn.y, fixed_coefficients(c, mn.x, mn.y));
}

std::vector<Monomial> region_support(RegionCase c) {
  switch (c) {
    case RegionCase::C3: return {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    case RegionCase::C4: return {{2, 0}, {3, 0}, {4, 0}, {0, 2}, {1, 2}, {2, 2}};
    case RegionCase::C5:
      return {{2, 0}, {3, 0}, {4, 0}, {1, 1}, {2, 1}, {3, 1}, {0, 2}, {1, 2}, {2, 2}};
    case RegionCase::C6: break;
  }
  throw WrongCase("C6 has no region polynomial");
}

RegionPolynomial fit_region_polynomial(RegionCase c, const std::vector<Monomial>& support,
                                       const FitOptions& opts) {
  require_polygon_case(c);
  const RegionInfo info = region_info(c);
  Point lo, hi;
  bounding_box(info.polygon, lo, hi);

  std::vector<double> nodes(opts.grid);
  for (int k = 0; k < opts.grid; ++k) {
    nodes[k] = 0.5 * (1.0 - std::cos(std::numbers::pi * (k + 0.5 + opts.grid_shift) / opts.grid));
  }

  const int rows = opts.grid * opts.grid;
  const int cols = static_cast<int>(support.size());
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd rhs(rows);
  int row = 0;
  for (double sx : nodes) {
    for (double sy : nodes) {
      const Point p{lo.x + sx * (hi.x - lo.x), lo.y + sy * (hi.y - lo.y)};
      for (int k = 0; k < cols; ++k) {
        design(row, k) = std::pow(p.x, support[k].i) * std::pow(p.y, support[k].j);
      }
      rhs[row] = region_target(c, p);
      ++row;
    }
  }
  const Eigen::VectorXd solution = design.colPivHouseholderQr().solve(rhs);

  RegionPolynomial out;
  out.tag = c;
  out.sup_norm = region_sup_norm(c);
  const BivariatePoly raw(info.coordinates, support,
                          std::vector<double>(solution.data(), solution.data() + cols));

  // held-out points, uniform in the region
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const RegionMap map(c);
  double worst = 0.0;
  int accepted = 0;
  while (accepted < opts.heldout) {
    const Point p = map(unit(rng), unit(rng));
    if (inset_distance(info.polygon, p) < 0.0) continue;
    worst = std::max(worst, std::abs(raw(p.x, p.y) - region_target(c, p)));
    ++accepted;
  }
  out.heldout_residual = worst / out.sup_norm;
  if (!(out.heldout_residual < opts.residual_tol)) {
    std::ostringstream os;
    os << "region " << to_string(c) << " fit residual " << out.heldout_residual << " exceeds "
       << opts.residual_tol;
    throw InterpolationResidualTooLarge(os.str());
  }
  out.poly = raw.scaled(1.0 / out.sup_norm);
  return out;
}

RegionPolynomial build_region_polynomial(RegionCase c, const FitOptions& opts) {
  return fit_region_polynomial(c, region_support(c), opts);
}

std::vector<BoundarySegment> boundary_segments(RegionCase c) {
  switch (c) {
    case RegionCase::C3:
      return {
          {"M=N", "M", {0, 0}, {1, 1}, 2.0, 15.0},
          {"M=15", "N", {15, 0}, {0, 1}, 15.0, 16.0},
          {"N=2", "M", {0, 2}, {1, 0}, 1.0, 2.0},
          {"M=N-1", "N", {-1, 0}, {1, 1}, 2.0, 16.0},
      };
    case RegionCase::C4:
      return {
          {"V=0", "U", {0, 0}, {1, 0}, 0.0, 1.0},
          {"U=3V", "V", {0, 0}, {3, 1}, 0.0, 0.25},
          {"U=1-V", "V", {1, 0}, {-1, 1}, 0.0, 0.25},
      };
    case RegionCase::C5:
      return {
          {"U=V", "V", {0, 0}, {1, 1}, 0.0, 0.5},
          {"U=3V", "V", {0, 0}, {3, 1}, 0.0, 0.25},
          {"V=1-U", "U", {0, 1}, {1, -1}, 0.5, 0.75},
      };
    case RegionCase::C6: break;
  }
  throw WrongCase("C6 has no polygonal boundary");
}

PolyRoots boundary_roots(const BivariatePoly& p, const BoundarySegment& s) {
  return polynomial_roots(p.restrict_to_line(s.origin, s.direction));
}

CriticalPointSearch interior_critical_points(const BivariatePoly& p, RegionCase c) {
  require_polygon_case(c);
  CriticalPointSearch out;
  if (c == RegionCase::C3) {
    out.box_lo = {-100.0, -100.0};
    out.box_hi = {100.0, 100.0};
  } else {
    out.box_lo = {-3.0, -3.0};
    out.box_hi = {3.0, 3.0};
  }
  const double extent = std::max(out.box_hi.x - out.box_lo.x, out.box_hi.y - out.box_lo.y);
  const std::vector<Point> polygon = region_info(c).polygon;

  constexpr int kStarts = 21;
  for (int i = 0; i < kStarts; ++i) {
    for (int j = 0; j < kStarts; ++j) {
      ++out.starts;
      Point x{out.box_lo.x + (out.box_hi.x - out.box_lo.x) * i / (kStarts - 1),
              out.box_lo.y + (out.box_hi.y - out.box_lo.y) * j / (kStarts - 1)};
      bool converged = false;
      for (int iter = 0; iter < 100; ++iter) {
        const Point g = p.gradient(x.x, x.y);
        const auto [hxx, hxy, hyy] = p.hessian(x.x, x.y);
        const double det = hxx * hyy - hxy * hxy;
        if (det == 0.0 || !std::isfinite(det)) break;
        const double dx = (hyy * g.x - hxy * g.y) / det;
        const double dy = (hxx * g.y - hxy * g.x) / det;
        x.x -= dx;
        x.y -= dy;
        if (!std::isfinite(x.x) || !std::isfinite(x.y)) break;
        if (std::hypot(dx, dy) < 1e-13 * (1.0 + std::hypot(x.x, x.y))) {
          converged = true;
          break;
        }
      }
      const bool in_box = x.x >= out.box_lo.x && x.x <= out.box_hi.x && x.y >= out.box_lo.y &&
                          x.y <= out.box_hi.y;
      if (!converged || !in_box) {
        if (!converged) ++out.failed_starts;
        continue;
      }
      const bool seen = std::any_of(out.points.begin(), out.points.end(), [&](const CriticalPoint& q) {
        return std::hypot(q.location.x - x.x, q.location.y - x.y) < 1e-7 * extent;
      });
      if (!seen) {
        out.points.push_back({x, p(x.x, x.y), inset_distance(polygon, x) > kEndpointTol});
      }
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return a.location.x < b.location.x || (a.location.x == b.location.x && a.location.y < b.location.y);
  });
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::CertifiedThinMargin: return "certified (thin margin)";
    case Verdict::Failed: return "failed";
  }
  return "?";
}

CertificateReport certify_region(RegionCase c) {
  require_polygon_case(c);
  CertificateReport r;
  r.tag = c;
  r.polynomial = build_region_polynomial(c);
  const BivariatePoly& p = r.polynomial.poly;
  const RegionInfo info = region_info(c);

  r.critical = interior_critical_points(p, c);
  for (const CriticalPoint& cp : r.critical.points) {
    if (cp.inside_region && cp.value > kZeroTol && !r.failure_location) {
      r.failure_location = cp.location;
      r.failure_reason = "positive interior critical point at " + describe(cp.location, info.coordinates);
    }
  }

  for (const BoundarySegment& s : boundary_segments(c)) {
    SegmentReport seg = analyze_segment(p, s);
    if (!seg.nonpositive && !r.failure_location) {
      r.failure_location = s.at(seg.argmax);
      r.failure_reason = "boundary " + s.label + " is positive at " +
                         describe(*r.failure_location, info.coordinates);
    }
    r.segments.push_back(std::move(seg));
  }

  const bool v_even = std::all_of(p.support().begin(), p.support().end(),
                                  [](const Monomial& m) { return m.j == 0 || m.j == 2; });
  if (v_even && p.degree_in_second() == 2) {
    VFactor f{p.coeff(0, 2), p.coeff(1, 2), p.coeff(2, 2), 0.0};
    f.discriminant = f.q1 * f.q1 - 4.0 * f.q0 * f.q2;
    r.v_factor = f;
  }

  r.margin = std::numeric_limits<double>::infinity();
  for (const Point& v : info.polygon) {
    const double value = p(v.x, v.y);
    if (std::abs(value) <= kZeroTol) {
      r.equality_points.push_back(v);
    } else {
      r.margin = std::min(r.margin, -value);
    }
  }

  if (r.failure_location) {
    r.verdict = Verdict::Failed;
  } else if (r.margin < kThinMargin) {
    r.verdict = Verdict::CertifiedThinMargin;
  } else {
    r.verdict = Verdict::Certified;
  }
  return r;
}

void require_certified(const CertificateReport& r) {
  if (r.verdict == Verdict::Failed) {
    throw CertificationFailed("region " + std::string(to_string(r.tag)) + ": " + r.failure_reason);
  }
}

GridCertificate grid_fallback_certify(RegionCase c, int resolution, double tolerance) {
  require_polygon_case(c);
  if (resolution < 100) throw InputError("grid fallback needs at least 100 cells per axis");
  const RegionMap map(c);
  auto value = [c](Point p) {
    const Point mn = native_to_mn(c, p);
    return reduced_deficiency(mn.x, mn.y, fixed_coefficients(c, mn.x, mn.y));
  };

  const int n = resolution + 1;
  auto at = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
  std::vector<Point> node(static_cast<std::size_t>(n) * n);
  std::vector<double> f(node.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      node[at(i, j)] = map(double(i) / resolution, double(j) / resolution);
      f[at(i, j)] = value(node[at(i, j)]);
    }
  }

  // second differences along each map direction; edge nodes reuse the
  // nearest interior stencil
  std::vector<double> curv(node.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ic = std::clamp(i, 1, n - 2);
      const int jc = std::clamp(j, 1, n - 2);
      const double dss = f[at(ic + 1, j)] - 2 * f[at(ic, j)] + f[at(ic - 1, j)];
      const double dtt = f[at(i, jc + 1)] - 2 * f[at(i, jc)] + f[at(i, jc - 1)];
      curv[at(i, j)] = std::abs(dss) + std::abs(dtt);
    }
  }

  GridCertificate g;
  g.tag = c;
  g.resolution = resolution;
  g.tolerance = tolerance;
  g.sup_norm = 0.0;
  for (double v : f) g.sup_norm = std::max(g.sup_norm, std::abs(v));

  const auto min_it = std::min_element(f.begin(), f.end());
  g.min_value = *min_it / g.sup_norm;
  g.min_location = node[static_cast<std::size_t>(min_it - f.begin())];

  // bilinear interpolation error on a cell is at most (h_s^2 |f_ss| + h_t^2 |f_tt|) / 8
  g.min_cell_bound = std::numeric_limits<double>::infinity();
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const std::array<std::size_t, 4> k = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      double fmin = std::numeric_limits<double>::infinity();
      double cmax = 0.0;
      for (std::size_t q : k) {
        fmin = std::min(fmin, f[q]);
        cmax = std::max(cmax, curv[q]);
      }
      const double bound = (fmin - cmax / 8.0) / g.sup_norm;
      if (bound < g.min_cell_bound) {
        g.min_cell_bound = bound;
        g.min_cell_location = map((i + 0.5) / resolution, (j + 0.5) / resolution);
      }
    }
  }
  g.holds = g.min_value >= -tolerance && g.min_cell_bound >= -tolerance;
  return g;
}

}  // namespace trieig
