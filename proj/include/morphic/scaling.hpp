#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "morphic/spectral.hpp"

namespace morphic {

/// Default log-space tolerance for calling two estimated eigenvalues equal.
inline constexpr double kDefaultScalingTolerance = 0.05;
inline constexpr unsigned kPowerMethodIterations = 8;

struct ScalingResult {
  unsigned p = 1;
  unsigned q = 1;
  Decimal achieved_gap;  // |p log est_f - q log est_g|
};

/// Exponent pairs built from squarings and cubings, smallest first: by
/// max(p, q), then p + q, then p.
inline std::vector<std::pair<unsigned, unsigned>> scaling_candidates() {
  constexpr std::array<unsigned, 7> exps{1, 2, 3, 4, 6, 8, 9};
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p : exps)
    for (unsigned q : exps) out.emplace_back(p, q);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(std::max(a.first, a.second), a.first + a.second, a.first) <
           std::make_tuple(std::max(b.first, b.second), b.first + b.second, b.first);
  });
  return out;
}

/// Find (p, q) so that f^p and g^q have (approximately) equal dominant
/// eigenvalues, both estimated at 0 with the power method.
inline std::optional<ScalingResult> equalize(const Morphism& f, const Morphism& g,
                                             double tol = kDefaultScalingTolerance) {
  const Decimal log_f = estimate_eigenvalue(f, 0, kPowerMethodIterations).log();
  const Decimal log_g = estimate_eigenvalue(g, 0, kPowerMethodIterations).log();
  const Decimal limit(tol);
  for (auto [p, q] : scaling_candidates()) {
    Decimal gap = abs(Decimal(p) * log_f - Decimal(q) * log_g);
    if (gap < limit) return ScalingResult{p, q, gap};
  }
  return std::nullopt;
}

}  // namespace morphic
