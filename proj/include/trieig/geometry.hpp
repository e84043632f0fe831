#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace trieig {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// A triangle in canonical position: vertices (0,0), (1,0), (a,b) with the
/// unit base being the shortest side. M = |(a,b)| is the middle side and
/// N = |(a,b) - (1,0)| the longest, so 1 <= M <= N and a <= 1/2.
///
/// `scale` is the length of the shortest side of the original input; every
/// length of the input equals `scale` times the corresponding normalized
/// length, and eigenvalues of the input equal the normalized ones divided by
/// scale^2.
struct Triangle {
  double a = 0.0;
  double b = 0.0;
  double M = 0.0;
  double N = 0.0;
  double L = 0.0;
  double A = 0.0;
  double scale = 1.0;

  std::array<Point, 3> vertices() const { return {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{a, b}}; }

  /// Converts an eigenvalue of the normalized triangle to the input's units.
  double to_input_units(double eigenvalue) const { return eigenvalue / (scale * scale); }
};

// Inputs whose twice-area falls below this fraction of the squared longest
// side are rejected as degenerate.
inline constexpr double kDegeneracyRatio = 1e-12;

/// Rotates, reflects and rescales an arbitrary triangle into canonical
/// position. Throws DegenerateTriangle for (nearly) collinear input.
Triangle normalize(Point v1, Point v2, Point v3);

/// Canonical triangle for an apex (a,b) over the base (0,0)-(1,0). The apex
/// need not already satisfy the canonical constraints; the result is
/// renormalized.
Triangle triangle_from_ab(double a, double b);

/// Canonical triangle with sides 1, M, N.
Triangle triangle_from_mn(double M, double N);

enum class RegionCase { C3, C4, C5, C6 };

std::string_view to_string(RegionCase c);
RegionCase parse_region_case(std::string_view name);

inline constexpr std::array<RegionCase, 4> kAllCases = {RegionCase::C3, RegionCase::C4,
                                                        RegionCase::C5, RegionCase::C6};

enum class RegionCoordinates { MN, UV };

/// Closed region of the (M,N) half-plane handled by one proof case. C3 is
/// described in (M,N), C4 and C5 in the rotated (U,V) frame. C6 (M >= 15) is
/// unbounded and has no polygon.
struct RegionInfo {
  RegionCase tag;
  RegionCoordinates coordinates;
  std::vector<Point> polygon;
  std::string description;
};

RegionInfo region_info(RegionCase c);

/// All cases whose closed region contains (M,N). Boundaries are shared, so
/// the equilateral point belongs to both C4 and C5.
std::vector<RegionCase> classify(double M, double N);
std::vector<RegionCase> classify(const Triangle& t);

struct UVPoint {
  double U = 0.0;
  double V = 0.0;
};

UVPoint to_uv(double M, double N);
/// Inverse of to_uv, returned as (M, N).
Point from_uv(UVPoint uv);

struct IsoperimetricBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// pi^2 L^2 / (16 A^2) and pi^2 L^2 / (9 A^2) in the normalized frame.
IsoperimetricBounds isoperimetric_bounds(const Triangle& t);

}  // namespace trieig
