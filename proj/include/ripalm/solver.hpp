#pragma once

#include "ripalm/inner_solver.hpp"

#include <vector>

namespace ripalm {

enum class SigmaKind { Constant, Linear, Geometric };

/// Penalty schedule. The three kinds realize the three ergodic-rate regimes:
/// constant gives O(1/k), linear sigma0*(k+1) gives O(1/k²), geometric
/// sigma0*c^k (capped to dodge ill-conditioning) gives O(c^-k).
struct SigmaSchedule {
  SigmaKind kind = SigmaKind::Constant;
  double sigma0 = 10.0;
  double growth = 1.0;
  double cap = 1e8;

  double value(int k) const;

  static SigmaSchedule constant(double sigma);
  static SigmaSchedule linear(double sigma0);
  static SigmaSchedule geometric(double sigma0, double c, double cap = 1e8);
};

/// Proximal-weight schedule tau_k = tau0 * prod_{i<k}(1 + nu_i), with nu >= 0
/// summable (entries beyond the list are zero). Constant tau is nu = {}.
struct TauSchedule {
  double tau0 = 1.0;
  std::vector<double> nu;

  double value(int k) const;
  double nu_at(int k) const;
  double nu_sum() const;
  /// tau0 * prod over the whole nu list — the schedule's supremum.
  double tau_max() const;

  static TauSchedule constant(double tau);
};

enum class CriterionKind { Standard, Strengthened };
enum class Status { Solved, MaxIterations, InnerFailure };

struct SolverParams {
  double rho = 0.5;
  SigmaSchedule sigma = SigmaSchedule::constant(10.0);
  TauSchedule tau = TauSchedule::constant(1.0);
  CriterionKind criterion = CriterionKind::Standard;
  double tol_kkt = 1e-8;
  int max_outer = 500;
  int inner_budget = 10000;

  /// Throws std::invalid_argument on any violated hypothesis
  /// (rho in [0,1), positive schedules, nu >= 0, positive tolerance/budgets).
  void validate() const;
};

/// Live outer-loop state after k completed steps. x_prev caches x^{k-1} so
/// the dual-stationarity residual ‖delta − (tau/sigma)(x^k − x^{k-1})‖ can be
/// rebuilt from the state alone.
struct IterateState {
  Vector x;
  Vector lambda;
  Vector mu;
  Vector w;
  int k = 0;
  Vector x_prev;
  Vector last_delta;
  double last_sigma = 0.0;
  double last_tau = 0.0;

  Multipliers multipliers() const { return {lambda, mu}; }
  /// Stacked dual vector y = (lambda; mu).
  Vector y() const;

  /// lambda = 0, mu = 0, w = x0.
  static IterateState init(const ConvexProgram &p, const Vector &x0);
};

/// The four optimality measures; all zero (up to certificate validity) iff
/// (x, y) is a saddle point.
struct KktResidual {
  double primal_eq = 0.0;     // ‖Ax − b‖
  double primal_ineq = 0.0;   // ‖max{0, g(x)}‖
  double dual_stat = 0.0;     // ‖delta − (tau/sigma)(x⁺ − x)‖
  double complementarity = 0.0;  // ‖min{mu, −g(x)}‖

  double max_component() const;
};

struct CriterionEval {
  bool accepted = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Relative error criterion:
///   2|<w − x_new, sigma delta>| + ‖sigma delta‖²
///     <= rho(‖sigma eq_resid‖² + ‖compl_resid‖² + tau‖x_new − x_old‖²)
/// with eq_resid = Ax_new − b and compl_resid = min{mu, −sigma g(x_new)}.
CriterionEval check_criterion_standard(const Vector &w, const Vector &x_new,
                                       const Vector &x_old,
                                       const Vector &delta, double sigma,
                                       double tau, double rho,
                                       const Vector &eq_resid,
                                       const Vector &compl_resid);

/// Strengthened variant: lhs additionally dominates ‖sigma delta‖, making
/// the sequence {‖sigma_k delta^{k+1}‖} summable on convergent runs.
CriterionEval check_criterion_strengthened(const Vector &w,
                                           const Vector &x_new,
                                           const Vector &x_old,
                                           const Vector &delta, double sigma,
                                           double tau, double rho,
                                           const Vector &eq_resid,
                                           const Vector &compl_resid);

/// KKT residual at the state produced by the step that returned cert.
KktResidual kkt_residual(const ConvexProgram &p, const IterateState &st,
                         const Certificate &cert);

/// Scaled termination measure: primal parts relative to 1+‖b‖,
/// complementarity relative to 1+‖mu‖, dual stationarity as-is.
double kkt_measure(const KktResidual &r, const ConvexProgram &p,
                   const IterateState &st);

struct StepResult {
  IterateState state;
  Certificate cert;
  KktResidual kkt;
  double crit_lhs = 0.0;
  double crit_rhs = 0.0;
};

/// One outer iteration: solve the proximal subproblem anchored at st.x until
/// the configured criterion accepts, then apply the multiplier and w updates.
/// Propagates InnerSolveError on budget exhaustion.
StepResult outer_step(const ConvexProgram &p, const IterateState &st,
                      const SolverParams &params);

}  // namespace ripalm
