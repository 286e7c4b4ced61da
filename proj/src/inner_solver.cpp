#include "ripalm/inner_solver.hpp"

#include <cmath>
#include <tuple>
#include <utility>

namespace ripalm {

namespace {

constexpr int kMaxHalvings = 200;
constexpr double kStepGrowth = 1.15;
constexpr double kExactDeltaScale = 1e-14;

}  // namespace

double SubproblemSpec::smooth_value(const Vector &x) const {
  const ConvexProgram &p = *program;
  double val = p.smooth.value(x);
  if (p.num_eq() > 0) {
    const Vector r = p.equality.A * x - p.equality.b;
    val += multipliers.lambda.dot(r) + 0.5 * sigma * r.squaredNorm();
  }
  if (p.num_ineq() > 0) {
    const Vector shifted = multipliers.mu + sigma * p.inequality.values(x);
    val += (shifted.cwiseMax(0.0).squaredNorm() -
            multipliers.mu.squaredNorm()) /
           (2.0 * sigma);
  }
  val += (0.5 * tau / sigma) * (x - x_anchor).squaredNorm();
  return val;
}

Vector SubproblemSpec::smooth_gradient(const Vector &x) const {
  return grad_smooth_subproblem(*program, x, multipliers, sigma, tau, x_anchor);
}

double SubproblemSpec::objective(const Vector &x) const {
  return smooth_value(x) + program->prox.value(x);
}

double SubproblemSpec::initial_step() const {
  double hint = program->smooth.lipschitz_bound + tau / sigma;
  if (program->num_eq() > 0) hint += sigma * program->equality.A.squaredNorm();
  return 1.0 / hint;
}

Vector prox_grad_step(const SubproblemSpec &s, const Vector &z, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("prox_grad_step: t must be > 0");
  return s.program->prox.prox(z - t * s.smooth_gradient(z), t);
}

Vector certificate_from_step(const SubproblemSpec &s, const Vector &z,
                             const Vector &x_plus, double t) {
  return (z - x_plus) / t + s.smooth_gradient(x_plus) - s.smooth_gradient(z);
}

namespace {

struct StepOut {
  Vector x_plus;
  Vector grad_z;  // reused by the certificate
};

// Halve t until h(x⁺) <= h(z) + <∇h(z), x⁺−z> + ‖x⁺−z‖²/(2t), with a small
// slack so rounding at stationary points cannot loop forever.
StepOut backtracked_step(const SubproblemSpec &s, const Vector &z, double &t,
                         const Vector &best_x, double best_value, int iters) {
  const double h_z = s.smooth_value(z);
  Vector grad_z = s.smooth_gradient(z);
  const double slack = 1e-12 * (1.0 + std::abs(h_z));
  for (int halvings = 0; halvings < kMaxHalvings; ++halvings) {
    Vector x_plus = s.program->prox.prox(z - t * grad_z, t);
    const Vector diff = x_plus - z;
    const double quad = h_z + grad_z.dot(diff) + diff.squaredNorm() / (2.0 * t);
    if (s.smooth_value(x_plus) <= quad + slack)
      return {std::move(x_plus), std::move(grad_z)};
    t *= 0.5;
  }
  throw InnerSolveError(
      "inner solver: backtracking failed after " +
          std::to_string(kMaxHalvings) +
          " halvings (bad lipschitz_bound or non-convex oracle?)",
      best_x, best_value, iters);
}

}  // namespace

Certificate solve_subproblem(const SubproblemSpec &s, const AcceptFn &accept,
                             int budget) {
  if (budget < 1) throw std::invalid_argument("solve_subproblem: budget >= 1");
  if (s.warm_start.size() != s.program->n || s.x_anchor.size() != s.program->n)
    throw std::invalid_argument("solve_subproblem: dimension mismatch");

  Vector x = s.warm_start;
  Vector y = x;
  double psi_x = s.objective(x);
  Vector best_x = x;
  double best_psi = psi_x;
  double theta = 1.0;
  double t = s.initial_step();
  int steps = 0;

  auto take_step = [&](const Vector &z) {
    StepOut out = backtracked_step(s, z, t, best_x, best_psi, steps);
    ++steps;
    Vector delta =
        (z - out.x_plus) / t + s.smooth_gradient(out.x_plus) - out.grad_z;
    return std::pair<Vector, Vector>(std::move(out.x_plus), std::move(delta));
  };

  while (steps < budget) {
    auto [x_next, delta] = take_step(y);
    double psi_next = s.objective(x_next);

    // Function-value restart: momentum overshoot, redo a plain step from x.
    if (psi_next > psi_x && theta > 1.0 && steps < budget) {
      y = x;
      theta = 1.0;
      std::tie(x_next, delta) = take_step(y);
      psi_next = s.objective(x_next);
    }
    if (psi_next < best_psi) {
      best_psi = psi_next;
      best_x = x_next;
    }

    if (accept(x_next, delta))
      return {std::move(x_next), std::move(delta), steps, t, false};
    if (delta.norm() <= kExactDeltaScale * (1.0 + x_next.norm()))
      return {std::move(x_next), std::move(delta), steps, t, true};

    const double theta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
    y = x_next + ((theta - 1.0) / theta_next) * (x_next - x);
    x = std::move(x_next);
    psi_x = psi_next;
    theta = theta_next;
    t *= kStepGrowth;
  }
  throw InnerSolveError("inner solver: acceptance budget of " +
                            std::to_string(budget) + " steps exhausted",
                        best_x, best_psi, steps);
}

}  // namespace ripalm
