#pragma once

#include <string>
#include <vector>

#include "steinaudit/density.hpp"

namespace steinaudit {

enum class Metric { tv, kolmogorov, wasserstein, l1, sup };

Metric metric_from_id(const std::string& id);  // "tv","kol","wass","l1","sup"
const char* metric_id(Metric m);

/// tv = l1/2 (shared integral), kolmogorov via sign changes of p-q,
/// wasserstein = int |P-Q| (finite means required), sup by grid search with
/// refinement. Throws NonFiniteDistance where the metric does not exist.
double classical_distance(Metric m, const DensityModel& p, const DensityModel& q);

/// E_q[log(q/p)]; +inf (no throw) when S_q is not contained in S_p.
double kl_divergence(const DensityModel& p, const DensityModel& q);

/// I(X) = E_q[(q'/q)^2]; +inf when the quadrature diverges.
double fisher_information(const DensityModel& q);

/// J(p,q) = E_q[r(p,q)^2]; +inf when the quadrature diverges. Throws
/// SupportMismatch unless S_q is contained in S_p.
double generalized_fisher_distance(const DensityModel& p, const DensityModel& q);

struct FisherFunctionals {
  double J = 0.0;      // generalized Fisher distance to the Gaussian target
  double I = 0.0;      // Fisher information of q
  double Psi = 0.0;    // moment-mismatch penalty
  double Gamma = 0.0;  // Cramer-Rao functional I - 1/sigma0^2
};

/// All four functionals for a Gaussian(mu0, sigma0^2) target. J is computed
/// by independent quadrature and checked against Gamma + Psi to 1e-8.
FisherFunctionals gaussian_decomposition(double mu0, double sigma0_sq,
                                         const DensityModel& q);

struct DiscreteMixing {
  std::vector<double> values;  // positive scales
  std::vector<double> probs;   // sum to 1
};

struct ScaleMixtureFisher {
  double surrogate = 0.0;  // E[1/Y^2], the conditional-variance shortcut
  double mixture_I = 0.0;  // Fisher information of the explicit mixture density
};

ScaleMixtureFisher scale_mixture_fisher(const DiscreteMixing& mixing);

}  // namespace steinaudit
