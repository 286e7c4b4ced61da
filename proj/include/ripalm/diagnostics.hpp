#pragma once

#include "ripalm/solver.hpp"

#include <iosfwd>
#include <limits>
#include <vector>

namespace ripalm {

/// Running state for the ergodic primal average
///   x_hat^k = (sum_i sigma_i x^{i+1}) / (sum_i sigma_i)
/// plus the observed suprema B_x, B_y. The suprema over the first k iterates
/// are exactly what the per-iteration bounds need; the final report may
/// recompute with the full-run values.
struct ErgodicState {
  Vector weighted_sum_x;
  double weight_total = 0.0;
  Vector y0;
  double sup_norm_y = 0.0;
  double sup_norm_x = 0.0;

  Vector average() const;

  static ErgodicState init(const Vector &x0, const Vector &y0);
};

ErgodicState ergodic_update(ErgodicState es, const Vector &x_new,
                            const Vector &y_new, double sigma_k);

/// Xi_k = 2 B_y / sum sigma_i.
double xi_bound(const ErgodicState &es);

struct FeasBoundCheck {
  double feas = 0.0;
  double exact_bound = 0.0;  // ‖y^k − y^0‖ / sum sigma_i
  bool ok = false;
};

/// feas(x_hat^k) <= ‖y^k − y^0‖ / sum sigma_i — an exact consequence of the
/// multiplier updates, so it must hold at every iteration of every run.
FeasBoundCheck feas_bound_check(const ConvexProgram &p, const ErgodicState &es,
                                const Vector &y_now);

/// Inputs for the C0 constant of the objective-gap upper bound:
///   C0 = (tau0/2)‖x* − x0‖² + ½‖y0‖² + (‖x*‖² + B_x²) tau_max sum nu_i.
struct GapTerms {
  double tau0 = 1.0;
  Vector x0;
  Vector y0;
  double nu_sum = 0.0;
  double tau_max = 1.0;
};

struct GapBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Both sides of the ergodic objective-gap sandwich:
///   −‖y*‖ Xi_k − (sigma_k/2) Xi_k²
///     <= f(x_hat^k) − f(x*)
///     <= (C0 + sqrt(2(‖x*‖² + B_x²)) sum_i ‖sigma_i delta^{i+1}‖) / sum sigma_i.
/// sigma_delta_sum is the running sum of ‖sigma_i delta^{i+1}‖ from the trace.
GapBounds objective_gap_bounds(const ConvexProgram &p, const ErgodicState &es,
                               const Vector &x_star, const Vector &y_star,
                               const GapTerms &terms, double sigma_k,
                               double sigma_delta_sum);

/// User-supplied error-bound modulus kappa (never estimated here) and the
/// slack constant c > 1 of the penalty-size condition.
struct RateConfig {
  double kappa = 1.0;
  double c = 2.0;
};

struct RateFactors {
  double gamma = 0.0;
  double mu = 0.0;
  bool condition_met = false;  // gamma > 0
};

/// Per-iteration contraction factors: with tau_bar = max{1, tau_k},
///   gamma = (1 − (2 kappa sqrt(tau)(rho + sqrt(rho tau_bar)) + 2 sigma sqrt(rho))
///               / (sigma sqrt(tau))) * sigma² / (kappa² (sqrt(rho)+sqrt(tau_bar))² tau_bar)
///   mu    = sqrt((1 + nu_k) / (1 + gamma)).
/// gamma <= 0 is reported, not an error.
RateFactors gamma_mu(const RateConfig &rc, double sigma_k, double tau_k,
                     double nu_k, double rho);

struct RecursionCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

/// The per-step primal-dual descent inequality against a known saddle point:
///   ‖y⁺−y*‖² + ‖w⁺−x*‖² + tau‖x⁺−x*‖²
///     <= ‖y−y*‖² + ‖w−x*‖² + tau‖x−x*‖²
///        − (1−rho)(‖y⁺−y‖² + tau‖x⁺−x‖²).
RecursionCheck recursion_check(const IterateState &st_prev,
                               const IterateState &st_new,
                               const Vector &x_star, const Vector &y_star,
                               double rho, double tau_k);

/// One row per outer iteration. `k` is the 0-based step index; the ergodic
/// columns describe x_hat^{k+1}. gamma/mu stay NaN until
/// annotate_rate_columns fills them from a RateConfig.
struct TraceRecord {
  int k = 0;
  double sigma = 0.0;
  double tau = 0.0;
  double nu = 0.0;
  int inner_iters = 0;
  double crit_lhs = 0.0;
  double crit_rhs = 0.0;
  bool exact_accept = false;
  double kkt_primal_eq = 0.0;
  double kkt_primal_ineq = 0.0;
  double kkt_dual_stat = 0.0;
  double kkt_compl = 0.0;
  double objective = 0.0;      // f(x^{k+1})
  double feas_ergodic = 0.0;   // feas(x_hat^{k+1})
  double obj_ergodic = 0.0;    // f(x_hat^{k+1})
  double xi = 0.0;
  double dual_travel_bound = 0.0;  // ‖y^{k+1} − y^0‖ / sum sigma_i
  double sigma_delta_norm = 0.0;
  double sigma_delta_sum = 0.0;
  bool tau_rho_ok = false;  // sqrt(tau_k) − 2 sqrt(rho) > 0
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double mu = std::numeric_limits<double>::quiet_NaN();
  bool gamma_positive = false;
};

struct SummabilityReport {
  std::vector<double> partial_sums;
  bool cauchy_flag = false;
};

/// Partial sums of ‖sigma_k delta^{k+1}‖; cauchy_flag is true when the
/// last-quarter increment is <= 1e-6 (1 + head sum).
SummabilityReport summability_monitor(const std::vector<TraceRecord> &trace);

/// Least-squares slope of log(vals) against log(ks). Requires >= 10 strictly
/// positive values.
double slope_fit(const std::vector<double> &ks, const std::vector<double> &vals);

/// Fills gamma/mu/gamma_positive on every record from the trace's own
/// sigma/tau/nu columns.
void annotate_rate_columns(std::vector<TraceRecord> &trace,
                           const RateConfig &rc, double rho);

/// Fixed header, 17-significant-digit floats, LF line endings.
void write_trace_csv(std::ostream &os, const std::vector<TraceRecord> &trace);

}  // namespace ripalm
