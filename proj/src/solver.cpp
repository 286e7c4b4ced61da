#include "ripalm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ripalm {

double SigmaSchedule::value(int k) const {
  switch (kind) {
    case SigmaKind::Constant:
      return sigma0;
    case SigmaKind::Linear:
      return sigma0 * (k + 1);
    case SigmaKind::Geometric:
      return std::min(sigma0 * std::pow(growth, k), cap);
  }
  return sigma0;
}

SigmaSchedule SigmaSchedule::constant(double sigma) {
  return {SigmaKind::Constant, sigma, 1.0, 1e8};
}

SigmaSchedule SigmaSchedule::linear(double sigma0) {
  return {SigmaKind::Linear, sigma0, 1.0, 1e8};
}

SigmaSchedule SigmaSchedule::geometric(double sigma0, double c, double cap) {
  return {SigmaKind::Geometric, sigma0, c, cap};
}

double TauSchedule::value(int k) const {
  double tau = tau0;
  const int upto = std::min<int>(k, static_cast<int>(nu.size()));
  for (int i = 0; i < upto; ++i) tau *= 1.0 + nu[i];
  return tau;
}

double TauSchedule::nu_at(int k) const {
  return k >= 0 && k < static_cast<int>(nu.size()) ? nu[k] : 0.0;
}

double TauSchedule::nu_sum() const {
  double s = 0.0;
  for (double v : nu) s += v;
  return s;
}

double TauSchedule::tau_max() const {
  return value(static_cast<int>(nu.size()));
}

TauSchedule TauSchedule::constant(double tau) { return {tau, {}}; }

void SolverParams::validate() const {
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::invalid_argument("rho must lie in [0, 1)");
  if (!(sigma.sigma0 > 0.0))
    throw std::invalid_argument("sigma schedule must be positive");
  if (sigma.kind == SigmaKind::Geometric && !(sigma.growth > 1.0))
    throw std::invalid_argument("geometric sigma requires growth factor > 1");
  if (sigma.kind == SigmaKind::Geometric && !(sigma.cap >= sigma.sigma0))
    throw std::invalid_argument("geometric sigma cap must be >= sigma0");
  if (!(tau.tau0 > 0.0)) throw std::invalid_argument("tau0 must be > 0");
  for (double v : tau.nu)
    if (!(v >= 0.0)) throw std::invalid_argument("nu sequence must be >= 0");
  if (!(tol_kkt > 0.0)) throw std::invalid_argument("tol_kkt must be > 0");
  if (max_outer < 1) throw std::invalid_argument("max_outer must be >= 1");
  if (inner_budget < 1) throw std::invalid_argument("inner_budget must be >= 1");
}

Vector IterateState::y() const {
  Vector out(lambda.size() + mu.size());
  out << lambda, mu;
  return out;
}

IterateState IterateState::init(const ConvexProgram &p, const Vector &x0) {
  require_dim(p, x0);
  IterateState st;
  st.x = x0;
  st.lambda = Vector::Zero(p.num_eq());
  st.mu = Vector::Zero(p.num_ineq());
  st.w = x0;
  st.k = 0;
  st.x_prev = x0;
  st.last_delta = Vector::Zero(p.n);
  return st;
}

double KktResidual::max_component() const {
  return std::max({primal_eq, primal_ineq, dual_stat, complementarity});
}

namespace {

double criterion_rhs(const Vector &x_new, const Vector &x_old, double sigma,
                     double tau, double rho, const Vector &eq_resid,
                     const Vector &compl_resid) {
  return rho * ((sigma * eq_resid).squaredNorm() + compl_resid.squaredNorm() +
                tau * (x_new - x_old).squaredNorm());
}

}  // namespace

CriterionEval check_criterion_standard(const Vector &w, const Vector &x_new,
                                       const Vector &x_old,
                                       const Vector &delta, double sigma,
                                       double tau, double rho,
                                       const Vector &eq_resid,
                                       const Vector &compl_resid) {
  const Vector sdelta = sigma * delta;
  const double lhs =
      2.0 * std::abs((w - x_new).dot(sdelta)) + sdelta.squaredNorm();
  const double rhs =
      criterion_rhs(x_new, x_old, sigma, tau, rho, eq_resid, compl_resid);
  return {lhs <= rhs, lhs, rhs};
}

CriterionEval check_criterion_strengthened(const Vector &w,
                                           const Vector &x_new,
                                           const Vector &x_old,
                                           const Vector &delta, double sigma,
                                           double tau, double rho,
                                           const Vector &eq_resid,
                                           const Vector &compl_resid) {
  const Vector sdelta = sigma * delta;
  const double lhs =
      std::max(2.0 * std::abs((w - x_new).dot(sdelta)) + sdelta.squaredNorm(),
               sdelta.norm());
  const double rhs =
      criterion_rhs(x_new, x_old, sigma, tau, rho, eq_resid, compl_resid);
  return {lhs <= rhs, lhs, rhs};
}

KktResidual kkt_residual(const ConvexProgram &p, const IterateState &st,
                         const Certificate &cert) {
  KktResidual r;
  if (p.num_eq() > 0) r.primal_eq = (p.equality.A * st.x - p.equality.b).norm();
  if (p.num_ineq() > 0) {
    const Vector g = p.inequality.values(st.x);
    r.primal_ineq = g.cwiseMax(0.0).norm();
    r.complementarity = st.mu.cwiseMin(-g).norm();
  }
  r.dual_stat =
      (cert.delta - (st.last_tau / st.last_sigma) * (st.x - st.x_prev)).norm();
  return r;
}

double kkt_measure(const KktResidual &r, const ConvexProgram &p,
                   const IterateState &st) {
  const double b_scale = 1.0 + (p.num_eq() > 0 ? p.equality.b.norm() : 0.0);
  const double mu_scale = 1.0 + (st.mu.size() > 0 ? st.mu.norm() : 0.0);
  return std::max({r.primal_eq / b_scale, r.primal_ineq / b_scale, r.dual_stat,
                   r.complementarity / mu_scale});
}

StepResult outer_step(const ConvexProgram &p, const IterateState &st,
                      const SolverParams &params) {
  const double sigma = params.sigma.value(st.k);
  const double tau = params.tau.value(st.k);

  SubproblemSpec spec;
  spec.program = &p;
  spec.multipliers = st.multipliers();
  spec.sigma = sigma;
  spec.tau = tau;
  spec.x_anchor = st.x;
  spec.warm_start = st.x;

  double lhs = 0.0, rhs = 0.0;
  const auto check = params.criterion == CriterionKind::Standard
                         ? check_criterion_standard
                         : check_criterion_strengthened;
  AcceptFn accept = [&](const Vector &x_new, const Vector &delta) {
    const Vector eq_resid = p.num_eq() > 0
                                ? (p.equality.A * x_new - p.equality.b).eval()
                                : Vector::Zero(0).eval();
    const Vector g_vals = p.num_ineq() > 0 ? p.inequality.values(x_new)
                                           : Vector::Zero(0).eval();
    const Vector compl_resid =
        complementarity_residual(st.multipliers(), g_vals, sigma);
    const CriterionEval ev = check(st.w, x_new, st.x, delta, sigma, tau,
                                   params.rho, eq_resid, compl_resid);
    lhs = ev.lhs;
    rhs = ev.rhs;
    return ev.accepted;
  };

  Certificate cert = solve_subproblem(spec, accept, params.inner_budget);

  StepResult out;
  out.state.x = cert.x_new;
  const Multipliers next =
      multiplier_update(p, st.multipliers(), cert.x_new, sigma);
  out.state.lambda = next.lambda;
  out.state.mu = next.mu;
  out.state.w = st.w - sigma * cert.delta;
  out.state.k = st.k + 1;
  out.state.x_prev = st.x;
  out.state.last_delta = cert.delta;
  out.state.last_sigma = sigma;
  out.state.last_tau = tau;
  out.kkt = kkt_residual(p, out.state, cert);
  out.cert = std::move(cert);
  out.crit_lhs = lhs;
  out.crit_rhs = rhs;
  return out;
}

}  // namespace ripalm
