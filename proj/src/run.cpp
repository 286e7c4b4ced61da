#include "ripalm/run.hpp"

#include <cmath>

namespace ripalm {

RunResult run(const ConvexProgram &p, const Vector &x0,
              const SolverParams &params) {
  params.validate();
  require_dim(p, x0);

  RunResult out;
  out.state = IterateState::init(p, x0);
  out.ergodic = ErgodicState::init(x0, out.state.y());
  out.trace.reserve(static_cast<std::size_t>(params.max_outer));
  out.status = Status::MaxIterations;

  double sigma_delta_sum = 0.0;
  for (int k = 0; k < params.max_outer; ++k) {
    StepResult step;
    try {
      step = outer_step(p, out.state, params);
    } catch (const InnerSolveError &) {
      out.status = Status::InnerFailure;
      break;
    }
    out.state = std::move(step.state);
    out.ergodic = ergodic_update(out.ergodic, out.state.x, out.state.y(),
                                 out.state.last_sigma);
    sigma_delta_sum += (out.state.last_sigma * step.cert.delta).norm();

    TraceRecord rec;
    rec.k = k;
    rec.sigma = out.state.last_sigma;
    rec.tau = out.state.last_tau;
    rec.nu = params.tau.nu_at(k);
    rec.inner_iters = step.cert.inner_iters;
    rec.crit_lhs = step.crit_lhs;
    rec.crit_rhs = step.crit_rhs;
    rec.exact_accept = step.cert.exact_accept;
    rec.kkt_primal_eq = step.kkt.primal_eq;
    rec.kkt_primal_ineq = step.kkt.primal_ineq;
    rec.kkt_dual_stat = step.kkt.dual_stat;
    rec.kkt_compl = step.kkt.complementarity;
    rec.objective = eval_objective(p, out.state.x);
    const Vector x_hat = out.ergodic.average();
    rec.feas_ergodic = feasibility_violation(p, x_hat);
    rec.obj_ergodic = eval_objective(p, x_hat);
    rec.xi = xi_bound(out.ergodic);
    rec.dual_travel_bound =
        (out.state.y() - out.ergodic.y0).norm() / out.ergodic.weight_total;
    rec.sigma_delta_norm = (out.state.last_sigma * step.cert.delta).norm();
    rec.sigma_delta_sum = sigma_delta_sum;
    rec.tau_rho_ok =
        std::sqrt(out.state.last_tau) - 2.0 * std::sqrt(params.rho) > 0.0;
    out.trace.push_back(std::move(rec));

    if (kkt_measure(step.kkt, p, out.state) <= params.tol_kkt) {
      out.status = Status::Solved;
      break;
    }
  }
  return out;
}

}  // namespace ripalm
