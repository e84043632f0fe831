#include "trieig/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trieig/bessel.hpp"
#include "trieig/errors.hpp"

namespace trieig {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kSqrt3 = std::numbers::sqrt3;

BoundMethod fixed_method(RegionCase c) {
  switch (c) {
    case RegionCase::C3: return BoundMethod::C3Fixed;
    case RegionCase::C4: return BoundMethod::C4Fixed;
    case RegionCase::C5: return BoundMethod::C5Fixed;
    case RegionCase::C6: break;
  }
  throw WrongCase("no fixed coefficients for C6");
}

// Angle at the apex (a, b) between the sides towards (0,0) and (1,0).
double apex_angle(const Triangle& t) {
  const double ux = -t.a, uy = -t.b;
  const double vx = 1.0 - t.a, vy = -t.b;
  return std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy);
}

}  // namespace

std::string_view to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::C3Fixed: return "C3_FIXED";
    case BoundMethod::C4Fixed: return "C4_FIXED";
    case BoundMethod::C5Fixed: return "C5_FIXED";
    case BoundMethod::Optimal4x4: return "OPTIMAL_4x4";
    case BoundMethod::Sector: return "SECTOR";
  }
  return "?";
}

double lower_bound(const Triangle& t) { return isoperimetric_bounds(t).lower; }

CoefficientVector fixed_coefficients(RegionCase c, double M, double N) {
  const double u = (N + M - 2.0) / 2.0;
  switch (c) {
    case RegionCase::C3: return {1.0, 0.0, -1.0 / 6.0, 0.0};
    case RegionCase::C4: return {u, u, 0.0, 1.0};
    case RegionCase::C5: {
      const double w = (N + M - 2.0) / std::numbers::sqrt2;
      return {w, 0.0, w, 1.0};
    }
    case RegionCase::C6: break;
  }
  throw WrongCase("C6 is handled by the sector bound, not by fixed coefficients");
}

BoundResult sector_upper_bound(const Triangle& t, SectorRadius radius) {
  if (t.M < 2.0) throw WrongCase("sector bound requires M >= 2");
  SectorData s;
  s.apex_angle = apex_angle(t);
  s.radius = radius == SectorRadius::Exact ? t.M * std::cos(s.apex_angle / 2.0)
                                           : std::sqrt(t.M * t.M - 0.25);
  s.order = kPi / s.apex_angle;
  s.zero_bound = bessel_zero_upper(s.order);

  BoundResult r;
  r.lower = lower_bound(t);
  r.upper = s.zero_bound * s.zero_bound / (s.radius * s.radius);
  r.method = BoundMethod::Sector;
  r.sector = s;
  r.candidates.push_back({BoundMethod::Sector, r.upper});
  return r;
}

double sector_eigenvalue(double angle, double radius) {
  const double j = bessel_zero(kPi / angle);
  return j * j / (radius * radius);
}

double tall_case_estimate(double gamma, double M) {
  const double x = std::cbrt(gamma / kPi);
  const double x2 = x * x;
  const double f = 1.0 + 2.0 * x2 + 2.0 * x2 * x2;
  return f * f * 9.0 * M * M / (16.0 * (M * M - 0.25));
}

double tall_case_majorant(double M) {
  return tall_case_estimate(2.0 * std::asin(1.0 / (2.0 * M)), M);
}

BoundResult upper_bound(const Triangle& t) {
  const FormPair forms = assemble_forms(t);
  BoundResult best;
  best.lower = lower_bound(t);

  const OptimalUpper opt = optimal_upper(forms);
  best.upper = opt.eigenvalue;
  best.method = BoundMethod::Optimal4x4;
  best.witness = opt.witness;
  best.candidates.push_back({BoundMethod::Optimal4x4, opt.eigenvalue});

  for (RegionCase c : classify(t)) {
    if (c == RegionCase::C6) continue;
    const CoefficientVector coeffs = fixed_coefficients(c, t.M, t.N);
    const double value = rayleigh(forms, coeffs);
    const BoundMethod m = fixed_method(c);
    best.candidates.push_back({m, value});
    if (value < best.upper) {
      best.upper = value;
      best.method = m;
      best.witness = coeffs;
    }
  }

  if (t.M >= 2.0) {
    const BoundResult sector = sector_upper_bound(t);
    best.candidates.push_back({BoundMethod::Sector, sector.upper});
    if (sector.upper < best.upper) {
      best.upper = sector.upper;
      best.method = BoundMethod::Sector;
      best.witness.reset();
    }
    best.sector = sector.sector;
  }
  return best;
}

double e3_form(double L, double A, double theta) {
  return 4.0 * kPi2 / (kSqrt3 * A) + theta * (L * L - 12.0 * kSqrt3 * A) / (A * A);
}

ConjectureBounds conjecture_bounds(const Triangle& t) {
  ConjectureBounds c;
  const double L2 = t.L * t.L;
  const double A2 = t.A * t.A;
  c.conj_lower = kPi2 * L2 / (16.0 * A2) + 7.0 * kSqrt3 * kPi2 / (12.0 * t.A);
  c.conj_upper = kPi2 * L2 / (12.0 * A2) + kSqrt3 * kPi2 / (3.0 * t.A);
  c.lower_theta = kPi2 / 16.0;
  c.upper_theta = kPi2 / 12.0;
  c.e3_lower = e3_form(t.L, t.A, c.lower_theta);
  c.e3_upper = e3_form(t.L, t.A, c.upper_theta);
  return c;
}

}  // namespace trieig
