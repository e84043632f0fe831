#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trieig/geometry.hpp"
#include "trieig/polynomial.hpp"
#include "trieig/test_basis.hpp"

namespace trieig {

/// pi^2 L^2 (c^T Q c) - 9 A^2 (c^T S c). Non-negative exactly when the
/// Rayleigh quotient of c does not exceed pi^2 L^2 / (9 A^2).
double deficiency(const Triangle& t, const CoefficientVector& c);

/// deficiency / b written in the side lengths: with a = (M^2 - N^2 + 1)/2,
///   pi^2 L^2 q - (9/4) (M^2 k_xx + k_yy - a k_mixed)
/// where q, k_* are the quadratic forms of c in the reference moments. This is
/// a polynomial in (M, N) and is defined even where 1, M, N do not form a
/// triangle.
double reduced_deficiency(double M, double N, const CoefficientVector& c);

/// The quantity whose nonpositivity certifies a region: minus the reduced
/// deficiency with the region's fixed coefficients, at a point in the region's
/// native coordinates ((M,N) for C3, (U,V) for C4/C5).
double region_target(RegionCase c, Point p);

/// Monomial support of the region polynomial:
///   C3: total degree 2 in (M, N)
///   C4: U^2, U^3, U^4, V^2, U V^2, U^2 V^2
///   C5: U^2, U^3, U^4, U V, U^2 V, U^3 V, V^2, U V^2, U^2 V^2
std::vector<Monomial> region_support(RegionCase c);

struct FitOptions {
  int grid = 12;             // Chebyshev points per axis over the bounding box
  double grid_shift = 0.0;   // shift of the Chebyshev angles, in cells
  int heldout = 50;
  double residual_tol = 1e-8;  // relative to the sup-norm over the region
};

struct RegionPolynomial {
  RegionCase tag = RegionCase::C3;
  BivariatePoly poly;          // normalized to sup-norm 1 over the region
  double sup_norm = 0.0;       // sup of |region_target| over the region
  double heldout_residual = 0.0;  // relative to sup_norm
};

/// Least-squares fit of region_target on a Chebyshev grid, validated at
/// held-out region points. Throws InterpolationResidualTooLarge, WrongCase
/// for C6.
RegionPolynomial fit_region_polynomial(RegionCase c, const std::vector<Monomial>& support,
                                       const FitOptions& opts = {});
RegionPolynomial build_region_polynomial(RegionCase c, const FitOptions& opts = {});

/// Boundary edge origin + t * direction for t in [t_lo, t_hi]; t is the
/// coordinate named by `parameter` (e.g. M on the edge M = N).
struct BoundarySegment {
  std::string label;
  std::string parameter;
  Point origin;
  Point direction;
  double t_lo = 0.0;
  double t_hi = 0.0;

  Point at(double t) const { return {origin.x + t * direction.x, origin.y + t * direction.y}; }
};

std::vector<BoundarySegment> boundary_segments(RegionCase c);

/// Roots of the restriction of p to the segment's line (all of them, not just
/// those inside the segment).
PolyRoots boundary_roots(const BivariatePoly& p, const BoundarySegment& s);

struct CriticalPoint {
  Point location;
  double value = 0.0;
  bool inside_region = false;  // strictly inside the open region
};

struct CriticalPointSearch {
  std::vector<CriticalPoint> points;
  Point box_lo;
  Point box_hi;
  int starts = 0;
  int failed_starts = 0;  // Newton runs that did not converge
};

/// Real solutions of grad p = 0 in a case-specific enclosing box, by
/// multistart Newton (21 x 21 starts) with deduplication.
CriticalPointSearch interior_critical_points(const BivariatePoly& p, RegionCase c);

struct SegmentReport {
  BoundarySegment segment;
  PolyRoots roots;
  bool roots_in_segment = false;  // a real root strictly inside (t_lo, t_hi)
  double value_lo = 0.0;
  double value_hi = 0.0;
  double max_value = 0.0;  // max of p over the segment, sampled between roots
  double argmax = 0.0;
  bool nonpositive = false;
};

enum class Verdict { Certified, CertifiedThinMargin, Failed };

std::string_view to_string(Verdict v);

/// For polynomials depending on V only through V^2: d/dV p = 2 V q(U) with
/// q(U) = q0 + q1 U + q2 U^2. A negative discriminant means d/dV p vanishes
/// only on V = 0.
struct VFactor {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double discriminant = 0.0;
};

struct CertificateReport {
  RegionCase tag = RegionCase::C3;
  RegionPolynomial polynomial;
  CriticalPointSearch critical;
  std::vector<SegmentReport> segments;
  std::vector<Point> equality_points;  // region vertices where p = 0
  std::optional<VFactor> v_factor;
  double margin = 0.0;  // -max p over region vertices other than equality points
  Verdict verdict = Verdict::Failed;
  std::optional<Point> failure_location;
  std::string failure_reason;
};

/// Critical-point and boundary analysis of the region polynomial. The verdict
/// is Certified iff no interior critical point has p > 0 and every boundary
/// segment is nonpositive; margins below 1e-7 are flagged as thin.
CertificateReport certify_region(RegionCase c);

/// Throws CertificationFailed unless the report is certified.
void require_certified(const CertificateReport& r);

struct GridCertificate {
  RegionCase tag = RegionCase::C3;
  int resolution = 0;
  bool holds = false;
  double sup_norm = 0.0;       // max |reduced deficiency| over the nodes
  double min_value = 0.0;      // relative to sup_norm
  Point min_location;
  double min_cell_bound = 0.0;  // min over cells of node min - interpolation error, relative
  Point min_cell_location;
  double tolerance = 0.0;      // relative
};

/// Direct check of reduced_deficiency >= 0 on a mapped grid of the region,
/// with a bilinear-interpolation error margin between nodes. Independent of the
/// polynomial fit. Requires resolution >= 100.
GridCertificate grid_fallback_certify(RegionCase c, int resolution, double tolerance = 1e-4);

}  // namespace trieig
