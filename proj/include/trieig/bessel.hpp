#pragma once

namespace trieig {

// First negative zero of the Airy function Ai.
inline constexpr double kAiryFirstZero = -2.33810741045976704;

/// Three-term upper bound for the first positive zero j_nu of J_nu
/// (Qu and Wong):
///   j_nu <= nu - a1 2^{-1/3} nu^{1/3} + (3 a1^2 2^{1/3} / 20) nu^{-1/3}.
/// Requires nu >= 1.
double bessel_zero_upper(double nu);

/// Simplified ratio bound j_nu / nu <= 1 + 2 nu^{-2/3} + 2 nu^{-4/3}, which
/// dominates the three-term bound for nu >= 1.
double bessel_zero_ratio_bound(double nu);

/// First positive zero of J_nu for nu >= 0, to 1e-10 or better. J_nu is
/// positive on (0, j_nu); the zero is bracketed by marching up from nu and
/// polished with TOMS 748. Throws RootNotBracketed.
double bessel_zero(double nu);

}  // namespace trieig
