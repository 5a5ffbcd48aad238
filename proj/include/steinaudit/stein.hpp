#pragma once

#include <memory>
#include <optional>
#include <utility>

#include "steinaudit/density.hpp"

namespace steinaudit {

/// A test function for the "derivative of a product" operator. When deriv is
/// absent the operator falls back to differentiating f*p numerically.
struct TestFunction {
  RealFn eval;
  RealFn deriv;  // may be empty
  std::optional<std::pair<double, double>> boundary_claims;  // asserted limits of f*p
};

enum class SteinRhsKind { centered_function, halfline_indicator, zero_mean_h };

/// Evaluable solution f of (f p)'/p = rhs with numerically stable tail
/// behaviour: below the split point the left-integral form is used, above it
/// the negated right-tail form, both combined with log pdf to avoid
/// overflow; beyond the 1e-16 density window the solution switches to its
/// rhs/score asymptote. eval(x) = 0 outside the support closure.
class SteinSolution {
 public:
  const DensityModel& target() const;
  SteinRhsKind rhs_kind() const;
  double split_point() const;
  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  /// The centered right-hand side (l - E_p[l] or the centered h).
  double rhs(double x) const;
  /// The subtracted mean (E_p[l]; 0 when the caller supplied a centered h).
  double removed_mean() const;
  /// |left form - right form| evaluated at the split point.
  double branch_mismatch_at_split() const;

 private:
  friend SteinSolution solve_stein_equation(const DensityModel&, const RealFn&, const Tolerances&);
  friend SteinSolution solve_halfline_indicator(const DensityModel& p, double z);
  friend SteinSolution bounded_solution_zero_mean(const DensityModel&, const RealFn&, const Tolerances&);
  struct Impl;
  explicit SteinSolution(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

Tolerances solver_tolerances();

/// (f'(x) + score(x) f(x)) 1_{S_p}(x) when f.deriv is available, otherwise
/// the central difference of f*p divided by p(x). Returns 0 off-support.
double apply_operator(const DensityModel& p, const TestFunction& f, double x);

/// r(p,q)(x): the score difference on the interior of S_q, 0 elsewhere.
/// Throws SupportMismatch unless S_q is contained in S_p.
double score_difference(const DensityModel& p, const DensityModel& q, double x);

SteinSolution solve_stein_equation(const DensityModel& p, const RealFn& l,
                                   const Tolerances& tol = solver_tolerances());

/// Closed-form solution for rhs l_z = (1_{(a,z]} - P(z)) 1_{S_p}:
/// P(x)(1-P(z))/p(x) left of z and P(z)(1-P(x))/p(x) right of it.
SteinSolution solve_halfline_indicator(const DensityModel& p, double z);

/// The unique bounded solution of (f p)'/p = h for a power-exponential target
/// and E_p[h] = 0, split at 0 (or at the finite support endpoint). A mean
/// drift in (1e-9, 1e-6] is subtracted; a larger one throws NotCentered.
SteinSolution bounded_solution_zero_mean(const DensityModel& p, const RealFn& h,
                                         const Tolerances& tol = solver_tolerances());

struct MembershipDiagnostics {
  bool member = false;
  double limit_lower = 0.0;  // estimated limit of f*p at a+
  double limit_upper = 0.0;  // estimated limit of f*p at b-
  double threshold = 1e-8;
  // max Richardson inconsistency of d/dx (f*p) over an interior probe grid
  double max_derivative_inconsistency = 0.0;
};

/// Numerically probes the limits of f*p toward both support endpoints
/// (geometric sequences; truncation window edge stands in for +-inf).
MembershipDiagnostics check_membership_F(const DensityModel& p, const TestFunction& f,
                                         double threshold = 1e-8);

/// |E_q[T_p f] - E_q[f r(p,q)]|. Pure quadrature noise when f is in
/// F(p) & F(q); a membership failure is reported through membership_ok (when
/// non-null) and the computation still runs.
double stein_identity_residual(const DensityModel& p, const DensityModel& q,
                               const TestFunction& f, bool* membership_ok = nullptr);

/// |(E_q[l] - E_p[l]) - E_q[f_l^p r(p,q)]|.
double fundamental_identity_residual(const DensityModel& p, const DensityModel& q,
                                     const RealFn& l, bool* membership_ok = nullptr);

struct CharacterizationResidual {
  double measured = 0.0;   // E_q[T_p f_z^p] by quadrature (product-rule path)
  double predicted = 0.0;  // Q(z) - P(z) Q(b)
};

CharacterizationResidual characterization_residual(const DensityModel& p,
                                                   const DensityModel& q, double z);

}  // namespace steinaudit
