#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "trieig/geometry.hpp"
#include "trieig/test_basis.hpp"

namespace trieig {

enum class BoundMethod { C3Fixed, C4Fixed, C5Fixed, Optimal4x4, Sector };

std::string_view to_string(BoundMethod m);

/// Inscribed circular sector used by the tall-triangle bound.
struct SectorData {
  double apex_angle = 0.0;  // gamma, between the sides of length M and N
  double radius = 0.0;      // h
  double order = 0.0;       // nu = pi / gamma
  double zero_bound = 0.0;  // upper bound for j_nu
};

struct MethodBound {
  BoundMethod method;
  double upper;
};

/// Eigenvalue bounds in the normalized frame (divide by scale^2 for input
/// units).
struct BoundResult {
  double lower = 0.0;
  double upper = 0.0;
  BoundMethod method = BoundMethod::Optimal4x4;
  std::optional<CoefficientVector> witness;
  std::optional<SectorData> sector;
  std::vector<MethodBound> candidates;  // every method that applied
};

/// pi^2 L^2 / (16 A^2).
double lower_bound(const Triangle& t);

/// The coefficient choice that certifies a proof region:
///   C3: (1, 0, -1/6, 0)
///   C4: (U, U, 0, 1) with U = (N+M-2)/2
///   C5: (sqrt2 U, 0, sqrt2 U, 1)
/// Throws WrongCase for C6.
CoefficientVector fixed_coefficients(RegionCase c, double M, double N);

enum class SectorRadius {
  Exact,          // h = M cos(gamma/2), altitude of the inscribed isosceles triangle
  AltitudeBound,  // h = sqrt(M^2 - 1/4), the weaker radius used in the tall-case estimate
};

/// Domain-monotonicity bound j_{pi/gamma}^2 / h^2 from the sector of angle
/// gamma and radius h centred at the apex. The Bessel zero is replaced by its
/// three-term upper bound. Throws WrongCase for M < 2.
BoundResult sector_upper_bound(const Triangle& t, SectorRadius radius = SectorRadius::Exact);

/// First Dirichlet eigenvalue of the sector S(angle, radius), using the
/// numerically computed Bessel zero.
double sector_eigenvalue(double angle, double radius);

/// gamma-dependent factor of the tall-case estimate,
/// (1 + 2 (gamma/pi)^{2/3} + 2 (gamma/pi)^{4/3})^2 * 9 M^2 / (16 (M^2 - 1/4)).
double tall_case_estimate(double gamma, double M);

/// tall_case_estimate at the largest apex angle possible for a given M,
/// gamma = 2 asin(1/(2M)). Values <= 1 certify every triangle with this M.
double tall_case_majorant(double M);

/// Minimum over every applicable method: the fixed-coefficient Rayleigh
/// quotient for each case in classify(t), the optimal 4x4 combination, and
/// the sector bound when M >= 2.
BoundResult upper_bound(const Triangle& t);

/// E3(L, A, theta) = 4 pi^2 / (sqrt3 A) + theta (L^2 - 12 sqrt3 A) / A^2.
double e3_form(double L, double A, double theta);

struct ConjectureBounds {
  double conj_lower = 0.0;  // pi^2 L^2/(16 A^2) + 7 sqrt3 pi^2 / (12 A)
  double conj_upper = 0.0;  // pi^2 L^2/(12 A^2) + sqrt3 pi^2 / (3 A)
  double lower_theta = 0.0;  // pi^2 / 16
  double upper_theta = 0.0;  // pi^2 / 12
  double e3_lower = 0.0;     // e3_form with lower_theta
  double e3_upper = 0.0;     // e3_form with upper_theta
};

ConjectureBounds conjecture_bounds(const Triangle& t);

}  // namespace trieig
