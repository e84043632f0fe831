#pragma once

#include <array>
#include <vector>

#include "trieig/bounds.hpp"
#include "trieig/geometry.hpp"

namespace trieig {

/// Uniform red refinement of a triangle: 4^level congruent cells.
struct TriMesh {
  int level = 0;
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> cells;
  std::vector<bool> boundary;

  int interior_count() const;
};

inline constexpr int kMaxLevel = 9;

/// Mesh of the canonical triangle after k midpoint subdivisions, 1 <= k <= 9.
/// Throws LevelTooLarge outside that range.
TriMesh refine(const Triangle& t, int k);

/// Smallest eigenvalue of the P1 stiffness/consistent-mass pencil on the
/// interior vertices, by inverse iteration with a sparse Cholesky
/// factorization. Being a conforming Galerkin value it bounds the true
/// eigenvalue from above.
double smallest_eigenvalue(const TriMesh& mesh);

struct FemLevel {
  int level = 0;
  double h = 0.0;       // longest cell edge
  double lambda = 0.0;
};

struct FemEstimate {
  std::vector<FemLevel> levels;
  double lambda_extrap = 0.0;  // lambda + C h^2 fitted on the two finest levels
  double error_est = 0.0;      // distance from the finest level to the limit, see estimate_lambda
  double order_obs = 0.0;      // from the three finest levels
};

/// Oracle refuses tall triangles (M > 50), where uniform meshes are too
/// anisotropic to trust.
inline constexpr double kOracleMaxM = 50.0;

/// Solves levels k_min..k_max (k_max >= k_min + 2) and extrapolates.
/// error_est is |lambda_extrap - finest| or, if larger, the Richardson tail
/// d / (2^p - 1) at the observed order p, d being the last level difference.
/// Throws OracleRefused for M > 50.
FemEstimate estimate_lambda(const Triangle& t, int k_min, int k_max);

struct ValidationReport {
  double lower = 0.0;
  double upper = 0.0;
  BoundMethod method = BoundMethod::Optimal4x4;
  double lambda_finest = 0.0;
  double lambda_extrap = 0.0;
  double error_est = 0.0;
  double lower_margin = 0.0;  // lambda_finest - lower
  double upper_margin = 0.0;  // upper - (lambda_extrap - error_est)
  bool ok = false;
};

/// Compares the bounds of `t` with the oracle. The report is returned even
/// when a bound is violated; validate_bounds_or_throw raises BoundViolation.
ValidationReport validate_bounds(const Triangle& t, int k_min = 3, int k_max = 6);
ValidationReport validate_bounds_or_throw(const Triangle& t, int k_min = 3, int k_max = 6);

}  // namespace trieig
