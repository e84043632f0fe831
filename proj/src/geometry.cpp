#include "trieig/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "trieig/errors.hpp"

namespace trieig {

namespace {

constexpr double kClassifyTol = 1e-9;

bool lex_less(Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); }

double dist(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

}  // namespace

Triangle normalize(Point v1, Point v2, Point v3) {
  std::array<Point, 3> v = {v1, v2, v3};
  for (const Point& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DegenerateTriangle("vertex coordinates must be finite");
    }
  }
  // Lexicographic vertex order makes tie-breaking between equal sides
  // independent of the order the caller listed the vertices in.
  std::sort(v.begin(), v.end(), lex_less);

  // side[i] is opposite vertex i
  std::array<double, 3> side = {dist(v[1], v[2]), dist(v[0], v[2]), dist(v[0], v[1])};
  const double longest = *std::max_element(side.begin(), side.end());
  const double twice_area =
      std::abs((v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[1].y - v[0].y) * (v[2].x - v[0].x));
  if (!(longest > 0.0) || twice_area < kDegeneracyRatio * longest * longest) {
    throw DegenerateTriangle("triangle is degenerate (vertices are collinear or coincide)");
  }

  // apex = vertex opposite the shortest side; first minimum wins ties
  const int apex = static_cast<int>(std::min_element(side.begin(), side.end()) - side.begin());
  int p = (apex + 1) % 3;
  int q = (apex + 2) % 3;
  if (p > q) std::swap(p, q);
  // origin is the base endpoint nearer the apex (M <= N); ties keep the
  // lexicographically smaller vertex. Note |v[p] - apex| == side[q].
  if (side[q] > side[p]) std::swap(p, q);
  const Point origin = v[p];
  const Point end = v[q];
  const Point top = v[apex];

  const std::complex<double> base(end.x - origin.x, end.y - origin.y);
  const std::complex<double> rel(top.x - origin.x, top.y - origin.y);
  std::complex<double> z = rel / base;
  if (z.imag() < 0.0) z = std::conj(z);

  Triangle t;
  t.scale = std::abs(base);
  t.a = z.real();
  t.b = z.imag();
  t.M = side[q] / t.scale;
  t.N = side[p] / t.scale;
  t.L = 1.0 + t.M + t.N;
  t.A = 0.5 * t.b;
  return t;
}

Triangle triangle_from_ab(double a, double b) {
  return normalize(Point{0.0, 0.0}, Point{1.0, 0.0}, Point{a, b});
}

Triangle triangle_from_mn(double M, double N) {
  if (!(M > 0.0) || !(N > 0.0)) {
    throw DegenerateTriangle("side lengths must be positive");
  }
  const double a = (M * M - N * N + 1.0) / 2.0;
  const double b2 = M * M - a * a;
  if (!(b2 > 0.0)) {
    throw DegenerateTriangle("side lengths 1, M, N violate the strict triangle inequality");
  }
  return triangle_from_ab(a, std::sqrt(b2));
}

std::string_view to_string(RegionCase c) {
  switch (c) {
    case RegionCase::C3: return "C3";
    case RegionCase::C4: return "C4";
    case RegionCase::C5: return "C5";
    case RegionCase::C6: return "C6";
  }
  return "?";
}

RegionCase parse_region_case(std::string_view name) {
  for (RegionCase c : kAllCases) {
    if (to_string(c) == name) return c;
  }
  throw InputError("unknown region case '" + std::string(name) + "'");
}

RegionInfo region_info(RegionCase c) {
  switch (c) {
    case RegionCase::C3:
      return {c, RegionCoordinates::MN, {{1, 2}, {2, 2}, {15, 15}, {15, 16}}, "N >= 2 and M <= 15"};
    case RegionCase::C4:
      return {c, RegionCoordinates::UV, {{0, 0}, {1, 0}, {0.75, 0.25}},
              "1 <= N <= 2 and (N+1)/2 <= M <= 2"};
    case RegionCase::C5:
      return {c, RegionCoordinates::UV, {{0, 0}, {0.75, 0.25}, {0.5, 0.5}},
              "1 <= N <= 2 and 1 <= M <= (N+1)/2"};
    case RegionCase::C6:
      return {c, RegionCoordinates::MN, {}, "M >= 15"};
  }
  throw InputError("unknown region case");
}

std::vector<RegionCase> classify(double M, double N) {
  const double tol = kClassifyTol * std::max(1.0, N);
  std::vector<RegionCase> out;
  if (N >= 2.0 - tol && M <= 15.0 + tol) out.push_back(RegionCase::C3);
  if (N >= 1.0 - tol && N <= 2.0 + tol && M >= (N + 1.0) / 2.0 - tol && M <= 2.0 + tol) {
    out.push_back(RegionCase::C4);
  }
  if (N >= 1.0 - tol && N <= 2.0 + tol && M >= 1.0 - tol && M <= (N + 1.0) / 2.0 + tol) {
    out.push_back(RegionCase::C5);
  }
  if (M >= 15.0 - tol) out.push_back(RegionCase::C6);
  return out;
}

std::vector<RegionCase> classify(const Triangle& t) { return classify(t.M, t.N); }

UVPoint to_uv(double M, double N) { return {(M + N) / 2.0 - 1.0, (N - M) / 2.0}; }

Point from_uv(UVPoint uv) { return {uv.U + 1.0 - uv.V, uv.U + 1.0 + uv.V}; }

IsoperimetricBounds isoperimetric_bounds(const Triangle& t) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double ratio = pi2 * t.L * t.L / (t.A * t.A);
  return {ratio / 16.0, ratio / 9.0};
}

}  // namespace trieig
