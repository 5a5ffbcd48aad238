#pragma once

namespace steinaudit {

double normal_pdf(double x);
double normal_cdf(double x);
double normal_sf(double x);  // 1 - Phi(x), accurate in the right tail

double log_beta_fn(double a, double b);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace steinaudit
