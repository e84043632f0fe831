#pragma once

#include <vector>

namespace trieig {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [0,1].
QuadratureRule gauss_legendre(int n);

struct TrianglePoint {
  double x;
  double y;
  double w;
};

/// Tensor Gauss-Legendre rule on the reference triangle {x,y >= 0, x+y <= 1},
/// obtained by collapsing the unit square (x = s, y = t(1-s)). Exact for
/// polynomials of degree 2n-2; spectrally convergent for entire integrands.
std::vector<TrianglePoint> collapsed_triangle_rule(int n);

}  // namespace trieig
