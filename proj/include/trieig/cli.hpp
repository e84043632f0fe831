#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trieig/geometry.hpp"

namespace trieig::cli {

enum class OutputFormat { Json, Csv };

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitFailure = 3;

struct RunConfig {
  std::string command;  // bound | certify | sweep | solve | conjecture-sweep
  std::optional<std::array<Point, 3>> vertices;
  std::optional<Point> ab;
  std::optional<Point> mn;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 0;
  int samples = 200;
  double m_min = 1.0;
  double m_max = 50.0;
  int k_min = 3;
  int k_max = 6;
  bool force_equilateral = false;
  std::string region = "all";
  int fallback_grid = 0;  // 0 = no grid cross-check
  std::string family = "random";
  int threads = 0;        // 0 = TRIEIG_THREADS or hardware concurrency
};

/// Builds the canonical triangle from whichever input form the config holds.
Triangle triangle_from_config(const RunConfig& cfg);

/// Deterministic (M, N) samples with 1 <= m_min <= M <= m_max and
/// M <= N < M + 1, drawn from a 64-bit Mersenne Twister seeded with `seed`.
std::vector<Point> sample_mn(std::uint64_t seed, int count, double m_min, double m_max);

/// Entry point behind the trieig executable. `args` excludes the program
/// name. Documents go to `out`, progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trieig::cli
