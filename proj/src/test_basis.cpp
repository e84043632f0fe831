#include "trieig/test_basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trieig/errors.hpp"
#include "trieig/quadrature.hpp"

namespace trieig {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kDomainTol = 1e-12;

// (v-frequency, u-frequency) of the three terms of the 30-60-90 ground state
// g(u, v) = sum_k sin(p_k v) sin(q_k u) on the triangle (0,0), (1,0), (0, sqrt3).
// Every term has eigenvalue p^2 + q^2 = 28 pi^2 / 9.
constexpr std::array<std::array<double, 2>, 3> kRightModes = {{
    {kSqrt3 * kPi, kPi / 3.0},
    {kSqrt3 * kPi / 3.0, 5.0 * kPi / 3.0},
    {2.0 * kSqrt3 * kPi / 3.0, 4.0 * kPi / 3.0},
}};

struct Jet {
  double value;
  double du;
  double dv;
};

Jet right_ground_state(double u, double v) {
  Jet j{0.0, 0.0, 0.0};
  for (const auto& [p, q] : kRightModes) {
    const double sv = std::sin(p * v);
    const double cv = std::cos(p * v);
    const double su = std::sin(q * u);
    const double cu = std::cos(q * u);
    j.value += sv * su;
    j.du += q * sv * cu;
    j.dv += p * cv * su;
  }
  return j;
}

// Value and (d/dX, d/dY) on the reference triangle.
Jet reference_basis(BasisId id, double X, double Y) {
  switch (id) {
    case BasisId::Phi1: {
      const Jet g = right_ground_state(X, kSqrt3 * Y);
      return {g.value, g.du, kSqrt3 * g.dv};
    }
    case BasisId::Phi2: {
      const Jet g = right_ground_state(1.0 - X - Y, kSqrt3 * Y);
      return {g.value, -g.du, -g.du + kSqrt3 * g.dv};
    }
    case BasisId::Phi3: {
      const Jet g = right_ground_state(Y, kSqrt3 * X);
      return {g.value, kSqrt3 * g.dv, g.du};
    }
    case BasisId::PhiEq: {
      const double w = 2.0 * kPi;
      return {std::sin(w * Y) - std::sin(w * (X + Y)) + std::sin(w * X),
              w * (std::cos(w * X) - std::cos(w * (X + Y))),
              w * (std::cos(w * Y) - std::cos(w * (X + Y)))};
    }
  }
  return {0.0, 0.0, 0.0};
}

Point to_reference(const Triangle& t, double x, double y) {
  const double Y = y / t.b;
  const double X = x - t.a * Y;
  if (X < -kDomainTol || Y < -kDomainTol || X + Y > 1.0 + kDomainTol) {
    throw OutsideDomain("point (" + std::to_string(x) + ", " + std::to_string(y) +
                        ") lies outside the triangle");
  }
  return {X, Y};
}

double max_abs_diff(const ReferenceMoments& p, const ReferenceMoments& q) {
  const double scale = std::max({p.mass.cwiseAbs().maxCoeff(), p.grad_xx.cwiseAbs().maxCoeff(),
                                 p.grad_yy.cwiseAbs().maxCoeff(),
                                 p.grad_mixed.cwiseAbs().maxCoeff()});
  const double d = std::max({(p.mass - q.mass).cwiseAbs().maxCoeff(),
                             (p.grad_xx - q.grad_xx).cwiseAbs().maxCoeff(),
                             (p.grad_yy - q.grad_yy).cwiseAbs().maxCoeff(),
                             (p.grad_mixed - q.grad_mixed).cwiseAbs().maxCoeff()});
  return d / scale;
}

ReferenceMoments converge_moments() {
  constexpr double tol = 1e-12;
  ReferenceMoments prev = reference_moments_at_order(8);
  for (int order = 16; order <= 256; order *= 2) {
    ReferenceMoments next = reference_moments_at_order(order);
    if (max_abs_diff(prev, next) < tol) return next;
    prev = std::move(next);
  }
  throw QuadratureNotConverged("reference moments did not converge up to order 256");
}

}  // namespace

std::string_view to_string(BasisId id) {
  switch (id) {
    case BasisId::Phi1: return "PHI1";
    case BasisId::Phi2: return "PHI2";
    case BasisId::Phi3: return "PHI3";
    case BasisId::PhiEq: return "PHI_EQ";
  }
  return "?";
}

double eval_basis(BasisId id, const Triangle& t, double x, double y) {
  const Point r = to_reference(t, x, y);
  return reference_basis(id, r.x, r.y).value;
}

Point eval_basis_gradient(BasisId id, const Triangle& t, double x, double y) {
  const Point r = to_reference(t, x, y);
  const Jet j = reference_basis(id, r.x, r.y);
  return {j.du, (j.dv - t.a * j.du) / t.b};
}

ReferenceMoments reference_moments_at_order(int order) {
  ReferenceMoments m;
  m.order = order;
  m.mass.setZero();
  m.grad_xx.setZero();
  m.grad_yy.setZero();
  m.grad_mixed.setZero();
  for (const TrianglePoint& p : collapsed_triangle_rule(order)) {
    Eigen::Vector4d v, dx, dy;
    for (BasisId id : kAllBasis) {
      const Jet j = reference_basis(id, p.x, p.y);
      const int i = static_cast<int>(id);
      v[i] = j.value;
      dx[i] = j.du;
      dy[i] = j.dv;
    }
    m.mass.noalias() += p.w * v * v.transpose();
    m.grad_xx.noalias() += p.w * dx * dx.transpose();
    m.grad_yy.noalias() += p.w * dy * dy.transpose();
    m.grad_mixed.noalias() += p.w * (dx * dy.transpose() + dy * dx.transpose());
  }
  return m;
}

const ReferenceMoments& reference_moments() {
  static const ReferenceMoments moments = converge_moments();
  return moments;
}

FormPair assemble_forms(double a, double b) {
  if (!(b > 0.0)) throw DegenerateTriangle("apex must lie strictly above the base");
  const ReferenceMoments& m = reference_moments();
  FormPair f;
  f.mass = b * m.mass;
  f.stiffness = b * m.grad_xx + (m.grad_yy - a * m.grad_mixed + a * a * m.grad_xx) / b;
  return f;
}

FormPair assemble_forms(const Triangle& t) { return assemble_forms(t.a, t.b); }

double rayleigh(const FormPair& f, const CoefficientVector& c) {
  const Eigen::Vector4d v = c.as_vector();
  if (v.isZero(0.0)) throw ZeroVector("Rayleigh quotient of the zero combination");
  return v.dot(f.stiffness * v) / v.dot(f.mass * v);
}

OptimalUpper optimal_upper(const FormPair& f) {
  constexpr double kMaxCondition = 1e12;
  Eigen::Matrix4d mass = f.mass;
  OptimalUpper out;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> mass_eig(mass, Eigen::EigenvaluesOnly);
  if (mass_eig.info() != Eigen::Success) throw EigenSolveFailure("mass matrix eigensolve failed");
  const double lo = mass_eig.eigenvalues().minCoeff();
  const double hi = mass_eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxCondition) {
    mass += 1e-14 * mass.trace() * Eigen::Matrix4d::Identity();
    out.regularized = true;
  }

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix4d> ges(f.stiffness, mass);
  if (ges.info() != Eigen::Success) throw EigenSolveFailure("generalized 4x4 eigensolve failed");
  out.eigenvalue = ges.eigenvalues()[0];
  Eigen::Vector4d w = ges.eigenvectors().col(0);
  Eigen::Index k = 0;
  w.cwiseAbs().maxCoeff(&k);
  w /= w[k];
  out.witness = CoefficientVector::from_vector(w);
  return out;
}

}  // namespace trieig
