#pragma once

#include "ripalm/problem.hpp"

namespace ripalm {

/// Dual variables for the two constraint blocks; mu stays componentwise >= 0
/// by construction of multiplier_update.
struct Multipliers {
  Vector lambda;  // m1
  Vector mu;      // m2

  static Multipliers zero(const ConvexProgram &p);
};

/// Ordinary Lagrangian f(x) + <lambda, Ax-b> + <mu, g(x)>; requires mu >= 0
/// (returns -inf otherwise, mirroring the extended-valued definition).
double eval_lagrangian(const ConvexProgram &p, const Vector &x,
                       const Multipliers &m);

/// Augmented Lagrangian
///   f(x) + <lambda, Ax-b> + (sigma/2)‖Ax-b‖²
///        + (1/2sigma)‖max{0, mu + sigma g(x)}‖² − (1/2sigma)‖mu‖².
/// May be +inf through the prox part of f.
double eval_aug_lagrangian(const ConvexProgram &p, const Vector &x,
                           const Multipliers &m, double sigma);

/// Gradient of the smooth part of the proximal subproblem objective:
///   ∇f_smooth(x) + Aᵀ(lambda + sigma(Ax-b))
///   + ∇g(x)ᵀ max{0, mu + sigma g(x)} + (tau/sigma)(x − x_anchor).
Vector grad_smooth_subproblem(const ConvexProgram &p, const Vector &x,
                              const Multipliers &m, double sigma, double tau,
                              const Vector &x_anchor);

/// lambda⁺ = lambda + sigma(Ax-b);  mu⁺ = max{0, mu + sigma g(x)}.
Multipliers multiplier_update(const ConvexProgram &p, const Multipliers &m,
                              const Vector &x_new, double sigma);

/// Componentwise min{mu, −sigma g}. Zero exactly when mu >= 0, g <= 0 and
/// muᵢgᵢ = 0 at scale sigma; feeds both the acceptance criterion and the
/// KKT complementarity measure. Identity used throughout:
///   max{0, mu + sigma g} − mu = −min{mu, −sigma g}.
Vector complementarity_residual(const Multipliers &m, const Vector &g_vals,
                                double sigma);

}  // namespace ripalm
