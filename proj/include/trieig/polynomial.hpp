#pragma once

#include <complex>
#include <string>
#include <vector>

#include "trieig/geometry.hpp"

namespace trieig {

/// Dense univariate polynomial, coefficients in ascending powers.
struct UniPoly {
  std::vector<double> coeffs;

  double operator()(double t) const;
  int degree() const;
};

struct RealRoot {
  double value;
  int multiplicity;
};

struct PolyRoots {
  std::vector<RealRoot> real;                  // ascending
  std::vector<std::complex<double>> complex;   // non-real, positive imaginary part first
};

/// Roots of p from the eigenvalues of its companion matrix. Leading
/// coefficients below 1e-13 of the largest are dropped; exact zero low-order
/// coefficients are factored out as a root at 0. Eigenvalues with
/// |imag| < imag_tol are treated as real, and real roots closer than
/// cluster_tol are merged with summed multiplicity.
PolyRoots polynomial_roots(const UniPoly& p, double imag_tol = 1e-8, double cluster_tol = 1e-6);

struct Monomial {
  int i;  // power of the first variable
  int j;  // power of the second variable
};

/// Bivariate polynomial sum c_k x^{i_k} y^{j_k} in (M,N) or (U,V).
class BivariatePoly {
 public:
  BivariatePoly() = default;
  BivariatePoly(RegionCoordinates vars, std::vector<Monomial> support, std::vector<double> coeffs);

  RegionCoordinates vars() const { return vars_; }
  const std::vector<Monomial>& support() const { return support_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i y^j (0 when outside the support).
  double coeff(int i, int j) const;
  int total_degree() const;
  int degree_in_first() const;
  int degree_in_second() const;

  double operator()(double x, double y) const;
  Point gradient(double x, double y) const;
  /// (d2/dx2, d2/dxdy, d2/dy2)
  std::array<double, 3> hessian(double x, double y) const;

  /// Restriction t -> p(x0 + t dx, y0 + t dy), expanded exactly.
  UniPoly restrict_to_line(Point origin, Point direction) const;

  BivariatePoly scaled(double factor) const;

  std::string variable_names() const { return vars_ == RegionCoordinates::MN ? "MN" : "UV"; }

 private:
  RegionCoordinates vars_ = RegionCoordinates::MN;
  std::vector<Monomial> support_;
  std::vector<double> coeffs_;
};

}  // namespace trieig
