#include "ripalm/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ripalm {

Vector ErgodicState::average() const {
  if (!(weight_total > 0.0))
    throw std::logic_error("ergodic average requested before any update");
  return weighted_sum_x / weight_total;
}

ErgodicState ErgodicState::init(const Vector &x0, const Vector &y0) {
  ErgodicState es;
  es.weighted_sum_x = Vector::Zero(x0.size());
  es.weight_total = 0.0;
  es.y0 = y0;
  es.sup_norm_y = y0.norm();
  es.sup_norm_x = x0.norm();
  return es;
}

ErgodicState ergodic_update(ErgodicState es, const Vector &x_new,
                            const Vector &y_new, double sigma_k) {
  if (!(sigma_k > 0.0))
    throw std::invalid_argument("ergodic_update: sigma_k must be > 0");
  es.weighted_sum_x += sigma_k * x_new;
  es.weight_total += sigma_k;
  es.sup_norm_y = std::max(es.sup_norm_y, y_new.norm());
  es.sup_norm_x = std::max(es.sup_norm_x, x_new.norm());
  return es;
}

double xi_bound(const ErgodicState &es) {
  if (!(es.weight_total > 0.0))
    throw std::logic_error("xi_bound requested before any update");
  return 2.0 * es.sup_norm_y / es.weight_total;
}

FeasBoundCheck feas_bound_check(const ConvexProgram &p, const ErgodicState &es,
                                const Vector &y_now) {
  FeasBoundCheck out;
  out.feas = feasibility_violation(p, es.average());
  out.exact_bound = (y_now - es.y0).norm() / es.weight_total;
  out.ok = out.feas <= out.exact_bound * (1.0 + 1e-10) + 1e-12;
  return out;
}

GapBounds objective_gap_bounds(const ConvexProgram &p, const ErgodicState &es,
                               const Vector &x_star, const Vector &y_star,
                               const GapTerms &terms, double sigma_k,
                               double sigma_delta_sum) {
  require_dim(p, x_star);
  const double xi = xi_bound(es);
  const double bx2 = x_star.squaredNorm() + es.sup_norm_x * es.sup_norm_x;
  const double c0 = 0.5 * terms.tau0 * (x_star - terms.x0).squaredNorm() +
                    0.5 * terms.y0.squaredNorm() +
                    bx2 * terms.tau_max * terms.nu_sum;
  GapBounds out;
  out.lower = -y_star.norm() * xi - 0.5 * sigma_k * xi * xi;
  out.upper = (c0 + std::sqrt(2.0 * bx2) * sigma_delta_sum) / es.weight_total;
  return out;
}

RateFactors gamma_mu(const RateConfig &rc, double sigma_k, double tau_k,
                     double nu_k, double rho) {
  if (!(rc.kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
  if (!(sigma_k > 0.0 && tau_k > 0.0 && nu_k >= 0.0))
    throw std::invalid_argument("gamma_mu: schedule inputs must be positive");
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::invalid_argument("gamma_mu: rho must lie in [0, 1)");
  const double tau_bar = std::max(1.0, tau_k);
  const double sr = std::sqrt(rho);
  const double st = std::sqrt(tau_k);
  const double stb = std::sqrt(tau_bar);
  const double margin =
      1.0 - (2.0 * rc.kappa * st * (rho + std::sqrt(rho * tau_bar)) +
             2.0 * sigma_k * sr) /
                (sigma_k * st);
  const double scale = sigma_k * sigma_k /
                       (rc.kappa * rc.kappa * (sr + stb) * (sr + stb) * tau_bar);
  RateFactors out;
  out.gamma = margin * scale;
  out.mu = std::sqrt((1.0 + nu_k) / (1.0 + out.gamma));
  out.condition_met = out.gamma > 0.0;
  return out;
}

RecursionCheck recursion_check(const IterateState &st_prev,
                               const IterateState &st_new,
                               const Vector &x_star, const Vector &y_star,
                               double rho, double tau_k) {
  const Vector y_prev = st_prev.y();
  const Vector y_new = st_new.y();
  RecursionCheck out;
  out.lhs = (y_new - y_star).squaredNorm() +
            (st_new.w - x_star).squaredNorm() +
            tau_k * (st_new.x - x_star).squaredNorm();
  out.rhs = (y_prev - y_star).squaredNorm() +
            (st_prev.w - x_star).squaredNorm() +
            tau_k * (st_prev.x - x_star).squaredNorm() -
            (1.0 - rho) * ((y_new - y_prev).squaredNorm() +
                           tau_k * (st_new.x - st_prev.x).squaredNorm());
  out.ok = out.lhs <= out.rhs * (1.0 + 1e-9) + 1e-12;
  return out;
}

SummabilityReport summability_monitor(const std::vector<TraceRecord> &trace) {
  if (trace.empty())
    throw std::invalid_argument("summability_monitor: empty trace");
  SummabilityReport out;
  out.partial_sums.reserve(trace.size());
  double sum = 0.0;
  for (const auto &rec : trace) {
    sum += rec.sigma_delta_norm;
    out.partial_sums.push_back(sum);
  }
  const std::size_t n = out.partial_sums.size();
  const std::size_t head_idx = n - n / 4 - 1;  // start of the last quarter
  const double head = out.partial_sums[head_idx];
  const double tail_increment = out.partial_sums[n - 1] - head;
  out.cauchy_flag = tail_increment <= 1e-6 * (1.0 + head);
  return out;
}

double slope_fit(const std::vector<double> &ks, const std::vector<double> &vals) {
  if (ks.size() != vals.size())
    throw std::invalid_argument("slope_fit: mismatched lengths");
  if (ks.size() < 10)
    throw std::invalid_argument("slope_fit: need at least 10 points");
  const std::size_t n = ks.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(vals[i] > 0.0) || !(ks[i] > 0.0))
      throw std::invalid_argument("slope_fit: values must be positive");
    const double lx = std::log(ks[i]);
    const double ly = std::log(vals[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("slope_fit: degenerate ks");
  return (n * sxy - sx * sy) / denom;
}

void annotate_rate_columns(std::vector<TraceRecord> &trace,
                           const RateConfig &rc, double rho) {
  for (auto &rec : trace) {
    const RateFactors rf = gamma_mu(rc, rec.sigma, rec.tau, rec.nu, rho);
    rec.gamma = rf.gamma;
    rec.mu = rf.mu;
    rec.gamma_positive = rf.condition_met;
  }
}

namespace {

void put(std::ostream &os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace

void write_trace_csv(std::ostream &os, const std::vector<TraceRecord> &trace) {
  os << "k,sigma,tau,nu,inner_iters,crit_lhs,crit_rhs,exact_accept,"
        "kkt_primal_eq,kkt_primal_ineq,kkt_dual_stat,kkt_compl,objective,"
        "feas_ergodic,obj_ergodic,xi,dual_travel_bound,sigma_delta_norm,"
        "sigma_delta_sum,tau_rho_ok,gamma,mu,gamma_positive\n";
  for (const auto &r : trace) {
    os << r.k << ',';
    put(os, r.sigma); os << ',';
    put(os, r.tau); os << ',';
    put(os, r.nu); os << ',';
    os << r.inner_iters << ',';
    put(os, r.crit_lhs); os << ',';
    put(os, r.crit_rhs); os << ',';
    os << (r.exact_accept ? 1 : 0) << ',';
    put(os, r.kkt_primal_eq); os << ',';
    put(os, r.kkt_primal_ineq); os << ',';
    put(os, r.kkt_dual_stat); os << ',';
    put(os, r.kkt_compl); os << ',';
    put(os, r.objective); os << ',';
    put(os, r.feas_ergodic); os << ',';
    put(os, r.obj_ergodic); os << ',';
    put(os, r.xi); os << ',';
    put(os, r.dual_travel_bound); os << ',';
    put(os, r.sigma_delta_norm); os << ',';
    put(os, r.sigma_delta_sum); os << ',';
    os << (r.tau_rho_ok ? 1 : 0) << ',';
    put(os, r.gamma); os << ',';
    put(os, r.mu); os << ',';
    os << (r.gamma_positive ? 1 : 0) << '\n';
  }
}

}  // namespace ripalm
