#include "ripalm/aug_lagrangian.hpp"

#include <stdexcept>

namespace ripalm {

namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
}

void require_multiplier_dims(const ConvexProgram &p, const Multipliers &m) {
  if (m.lambda.size() != p.num_eq() || m.mu.size() != p.num_ineq())
    throw std::invalid_argument("multiplier dimensions do not match program");
}

}  // namespace

Multipliers Multipliers::zero(const ConvexProgram &p) {
  return {Vector::Zero(p.num_eq()), Vector::Zero(p.num_ineq())};
}

double eval_lagrangian(const ConvexProgram &p, const Vector &x,
                       const Multipliers &m) {
  require_dim(p, x);
  require_multiplier_dims(p, m);
  if (p.num_ineq() > 0 && (m.mu.array() < 0.0).any()) return -kInf;
  double val = eval_objective(p, x);
  if (p.num_eq() > 0) val += m.lambda.dot(p.equality.A * x - p.equality.b);
  if (p.num_ineq() > 0) val += m.mu.dot(p.inequality.values(x));
  return val;
}

double eval_aug_lagrangian(const ConvexProgram &p, const Vector &x,
                           const Multipliers &m, double sigma) {
  require_sigma(sigma);
  require_dim(p, x);
  require_multiplier_dims(p, m);
  double val = eval_objective(p, x);
  if (p.num_eq() > 0) {
    const Vector r = p.equality.A * x - p.equality.b;
    val += m.lambda.dot(r) + 0.5 * sigma * r.squaredNorm();
  }
  if (p.num_ineq() > 0) {
    const Vector shifted = m.mu + sigma * p.inequality.values(x);
    val += (shifted.cwiseMax(0.0).squaredNorm() - m.mu.squaredNorm()) /
           (2.0 * sigma);
  }
  return val;
}

Vector grad_smooth_subproblem(const ConvexProgram &p, const Vector &x,
                              const Multipliers &m, double sigma, double tau,
                              const Vector &x_anchor) {
  require_sigma(sigma);
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  require_dim(p, x);
  require_dim(p, x_anchor);
  require_multiplier_dims(p, m);
  Vector g = p.smooth.gradient(x);
  if (g.size() != p.n)
    throw std::invalid_argument("smooth gradient has wrong dimension");
  if (p.num_eq() > 0)
    g += p.equality.A.transpose() *
         (m.lambda + sigma * (p.equality.A * x - p.equality.b));
  if (p.num_ineq() > 0) {
    const Vector active = (m.mu + sigma * p.inequality.values(x)).cwiseMax(0.0);
    g += p.inequality.jacobian(x).transpose() * active;
  }
  g += (tau / sigma) * (x - x_anchor);
  return g;
}

Multipliers multiplier_update(const ConvexProgram &p, const Multipliers &m,
                              const Vector &x_new, double sigma) {
  require_sigma(sigma);
  require_dim(p, x_new);
  require_multiplier_dims(p, m);
  Multipliers out;
  out.lambda = p.num_eq() > 0
                   ? (m.lambda + sigma * (p.equality.A * x_new - p.equality.b)).eval()
                   : Vector::Zero(0).eval();
  out.mu = p.num_ineq() > 0
               ? (m.mu + sigma * p.inequality.values(x_new)).cwiseMax(0.0).eval()
               : Vector::Zero(0).eval();
  return out;
}

Vector complementarity_residual(const Multipliers &m, const Vector &g_vals,
                                double sigma) {
  require_sigma(sigma);
  if (m.mu.size() != g_vals.size())
    throw std::invalid_argument("complementarity_residual: size mismatch");
  return m.mu.cwiseMin(-sigma * g_vals);
}

}  // namespace ripalm
