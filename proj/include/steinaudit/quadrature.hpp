#pragma once

#include <functional>
#include <vector>

#include "steinaudit/interval.hpp"

namespace steinaudit {

using RealFn = std::function<double(double)>;

struct Tolerances {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_panels = 4096;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int panels_used = 0;
  bool converged = false;
};

/// Side information about an integrand that the adaptive kernel can exploit.
struct IntegrandHints {
  // Integrable power singularity at a finite endpoint (handled by a sin^2
  // substitution that removes x^(g-1)-type blowups for g > 0).
  bool lower_singularity = false;
  bool upper_singularity = false;
  // Interior points where the integrand has a kink or jump; panels never
  // straddle them.
  std::vector<double> breakpoints;
  // Where to split a doubly infinite domain into two tail-transformed halves.
  double center = 0.0;
};

/// Adaptive integration over finite, half-infinite or doubly infinite
/// intervals. Infinite tails are mapped through u = c +- t/(1-t), t in (0,1).
/// Never evaluates f outside the open interior of the domain. Returns
/// converged=false (no throw) when the panel budget runs out; throws
/// NonFiniteEvaluation if f returns NaN/inf at a node.
QuadratureResult integrate(const RealFn& f, const Interval& domain,
                           const Tolerances& tol = {},
                           const IntegrandHints& hints = {});

struct SupremumResult {
  double argsup = 0.0;
  double sup = 0.0;
};

/// Grid scan plus golden-section refinement around the best few candidates.
/// Infinite domains are truncated at +-100 unless the caller passes a finite
/// window; callers with density information should pass one.
SupremumResult supremum(const RealFn& f, const Interval& domain,
                        int grid_size = 1001,
                        const std::vector<double>& extra_probes = {});

}  // namespace steinaudit
