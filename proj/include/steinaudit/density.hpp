#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "steinaudit/interval.hpp"
#include "steinaudit/quadrature.hpp"

namespace steinaudit {

enum class Family { gaussian, exponential, beta, power_exponential, custom };
enum class SupportKind { full_line, positive_half, negative_half };

const char* family_id(Family f);
const char* support_kind_id(SupportKind k);

struct GaussianParams {
  double mu0 = 0.0;
  double sigma0_sq = 1.0;
};

struct ExponentialParams {
  double rate = 1.0;
};

struct BetaParams {
  double alpha = 2.0;
  double beta = 3.0;
};

/// c * exp(-d |x|^alpha) on a scale-invariant support. The normalizing
/// constant c is derived, not user-supplied.
struct PowerExponentialParams {
  double alpha = 2.0;
  double d = 0.5;
  SupportKind support_kind = SupportKind::full_line;
  double c = 0.0;
};

using FamilyParams =
    std::variant<GaussianParams, ExponentialParams, BetaParams, PowerExponentialParams>;

/// An immutable class-G density model: interval support, positive pdf on the
/// interior, score p'/p (0 off-support, right-limit value at declared kinks),
/// cdf clamped to [0,1]. Values are cheap to copy and safe to share across
/// threads; lazily computed moments are cached behind a lock.
class DensityModel {
 public:
  struct Spec {
    std::string name;
    Family family = Family::custom;
    Interval support;
    RealFn pdf;
    RealFn log_pdf;  // optional, defaults to log(pdf)
    RealFn score;
    RealFn cdf;      // optional, defaults to quadrature-backed
    RealFn sf;       // optional survival function 1-cdf, defaults accordingly
    std::optional<double> mean;
    std::optional<double> variance;
    std::vector<double> kink_points;   // interior non-differentiability points
    std::optional<double> mode;        // location of the pdf maximum
    bool piecewise_class_g = false;    // true when kink_points is nonempty
    bool lower_singularity = false;    // pdf blows up (integrably) at the endpoint
    bool upper_singularity = false;
    std::optional<PowerExponentialParams> power_exponential;
    std::optional<GaussianParams> gaussian;
  };

  explicit DensityModel(Spec spec);

  const std::string& name() const;
  Family family() const;
  const Interval& support() const;
  const std::vector<double>& kink_points() const;
  bool piecewise_class_g() const;
  bool lower_singularity() const;
  bool upper_singularity() const;

  double pdf(double x) const;        // 0 outside the support interior
  double log_pdf(double x) const;    // -inf outside
  double score(double x) const;      // 0 outside
  double cdf(double z) const;        // clamped, monotone
  double sf(double z) const;         // survival, accurate in the upper tail

  std::optional<double> mean_if_known() const;
  std::optional<double> variance_if_known() const;
  double mean() const;       // computes by quadrature and caches when unknown
  double variance() const;

  double mode() const;
  double quantile(double u) const;  // u in (0,1), bisection on the cdf

  /// Window outside of which pdf < rel_eps * pdf(mode). Used to truncate
  /// searches and to switch Stein solutions to their tail asymptotics.
  Interval window(double rel_eps = 1e-16) const;

  std::optional<PowerExponentialParams> as_power_exponential() const;
  std::optional<GaussianParams> as_gaussian() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

DensityModel make_gaussian(double mu0, double sigma0_sq);
DensityModel make_exponential(double rate = 1.0);
DensityModel make_beta(double alpha, double beta);
DensityModel make_power_exponential(double alpha, double d,
                                    SupportKind support = SupportKind::full_line);
/// Density of Y*Z with Z standard normal and Y a finite positive mixing law.
DensityModel make_gaussian_scale_mixture(const std::vector<double>& scales,
                                         const std::vector<double>& probs);
DensityModel make_density(Family family, const FamilyParams& params);

/// E_p[g(X)] restricted to S_p; g is never evaluated off the support.
QuadratureResult expectation(const DensityModel& p, const RealFn& g,
                             const Tolerances& tol = {},
                             const IntegrandHints& extra_hints = {});

struct ClassGDiagnostics {
  double normalization_defect = 0.0;
  int positivity_violations = 0;
  // max over the probe grid of |score(x) pdf(x) - central-difference pdf'(x)|,
  // scaled by max(1, |pdf'|); kink points are excluded from the probes.
  double max_score_consistency_error = 0.0;
  std::vector<double> declared_kinks;
  bool piecewise = false;
  bool passed = false;
};

ClassGDiagnostics validate_class_G(const DensityModel& p);

}  // namespace steinaudit
