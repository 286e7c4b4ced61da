#pragma once

#include "ripalm/aug_lagrangian.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace ripalm {

/// One proximal subproblem
///   min_x  Psi(x) = L_sigma(x, lambda, mu) + (tau/2sigma)‖x − x_anchor‖²,
/// which is (tau/sigma)-strongly convex. The smooth part is everything
/// except the program's prox term.
struct SubproblemSpec {
  const ConvexProgram *program = nullptr;
  Multipliers multipliers;
  double sigma = 1.0;
  double tau = 1.0;
  Vector x_anchor;
  Vector warm_start;

  /// Smooth part of Psi (finite everywhere).
  double smooth_value(const Vector &x) const;
  Vector smooth_gradient(const Vector &x) const;
  /// Full Psi, including the prox term (may be +inf).
  double objective(const Vector &x) const;
  /// Step-size seed: 1 / (L_f + sigma‖A‖_F² + tau/sigma).
  double initial_step() const;
};

/// An accepted inner solution together with its inexactness certificate:
/// delta lies in the subdifferential of Psi at x_new by construction.
struct Certificate {
  Vector x_new;
  Vector delta;
  int inner_iters = 0;
  double step_size = 0.0;
  /// Accepted because ‖delta‖ hit the floating-point-exactness floor rather
  /// than through the criterion callback (degenerate zero-RHS case).
  bool exact_accept = false;
};

/// Thrown when the inner loop cannot satisfy the acceptance callback within
/// its budget, or when backtracking collapses. Carries the best iterate seen.
class InnerSolveError : public std::runtime_error {
 public:
  InnerSolveError(std::string msg, Vector best_x, double best_value, int iters)
      : std::runtime_error(std::move(msg)),
        best_x(std::move(best_x)),
        best_value(best_value),
        iters(iters) {}

  Vector best_x;
  double best_value;
  int iters;
};

using AcceptFn = std::function<bool(const Vector &x_new, const Vector &delta)>;

/// prox_{t·phi}(z − t ∇h(z)) for the subproblem's smooth part h and prox
/// part phi. Pure in (z, t); step-size selection lives in solve_subproblem.
Vector prox_grad_step(const SubproblemSpec &s, const Vector &z, double t);

/// delta = (z − x_plus)/t + ∇h(x_plus) − ∇h(z).
///
/// Prox optimality gives (z − x_plus)/t − ∇h(z) ∈ ∂phi(x_plus); adding
/// ∇h(x_plus) puts delta in ∂Psi(x_plus) exactly, with no extra tolerance.
Vector certificate_from_step(const SubproblemSpec &s, const Vector &z,
                             const Vector &x_plus, double t);

/// Accelerated proximal gradient with Armijo backtracking on the smooth part
/// and function-value restart. After every step the certificate is built and
/// `accept` (the outer error criterion) is consulted; the first accepted
/// certificate is returned. A step whose certificate satisfies
/// ‖delta‖ <= 1e-14(1 + ‖x‖) is accepted as floating-point exact even if the
/// callback declines (the criterion's RHS is 0 at exact fixed points).
Certificate solve_subproblem(const SubproblemSpec &s, const AcceptFn &accept,
                             int budget);

}  // namespace ripalm
