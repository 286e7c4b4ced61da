#include "ripalm/problem.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace ripalm {

void require_dim(const ConvexProgram &p, const Vector &x) {
  if (x.size() != p.n)
    throw std::invalid_argument("dimension mismatch: x has size " +
                                std::to_string(x.size()) + ", program has n = " +
                                std::to_string(p.n));
}

SmoothTerm SmoothTerm::zero() {
  SmoothTerm t;
  t.value = [](const Vector &) { return 0.0; };
  t.gradient = [](const Vector &x) { return Vector::Zero(x.size()).eval(); };
  t.lipschitz_bound = 0.0;
  return t;
}

SmoothTerm SmoothTerm::quadratic(Matrix Q, Vector c) {
  if (Q.rows() != Q.cols() || Q.rows() != c.size())
    throw std::invalid_argument("quadratic term: Q must be square and match c");
  SmoothTerm t;
  // Frobenius norm overestimates the spectral norm; fine for a step-size hint.
  t.lipschitz_bound = Q.norm();
  auto Qs = std::make_shared<Matrix>(std::move(Q));
  auto cs = std::make_shared<Vector>(std::move(c));
  t.value = [Qs, cs](const Vector &x) {
    return 0.5 * x.dot(*Qs * x) + cs->dot(x);
  };
  t.gradient = [Qs, cs](const Vector &x) { return (*Qs * x + *cs).eval(); };
  return t;
}

SmoothTerm SmoothTerm::least_squares(Matrix M, Vector d) {
  if (M.rows() != d.size())
    throw std::invalid_argument("least_squares term: rows(M) != size(d)");
  SmoothTerm t;
  t.lipschitz_bound = M.squaredNorm();
  auto Ms = std::make_shared<Matrix>(std::move(M));
  auto ds = std::make_shared<Vector>(std::move(d));
  t.value = [Ms, ds](const Vector &x) {
    return 0.5 * (*Ms * x - *ds).squaredNorm();
  };
  t.gradient = [Ms, ds](const Vector &x) {
    return (Ms->transpose() * (*Ms * x - *ds)).eval();
  };
  return t;
}

ProxTerm ProxTerm::none() {
  ProxTerm t;
  t.value = [](const Vector &) { return 0.0; };
  t.prox = [](const Vector &x, double) { return x; };
  return t;
}

ProxTerm ProxTerm::l1(double weight) {
  if (weight < 0.0) throw std::invalid_argument("l1 weight must be >= 0");
  ProxTerm t;
  t.value = [weight](const Vector &x) {
    return weight * x.template lpNorm<1>();
  };
  t.prox = [weight](const Vector &x, double step) {
    const double thr = weight * step;
    Vector out(x.size());
    for (Index i = 0; i < x.size(); ++i) {
      const double v = x[i];
      out[i] = v > thr ? v - thr : (v < -thr ? v + thr : 0.0);
    }
    return out;
  };
  return t;
}

ProxTerm ProxTerm::nonneg() {
  ProxTerm t;
  t.value = [](const Vector &x) {
    return (x.array() >= 0.0).all() ? 0.0 : kInf;
  };
  t.prox = [](const Vector &x, double) {
    return x.cwiseMax(0.0).eval();
  };
  return t;
}

ProxTerm ProxTerm::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size() || (lo.array() > hi.array()).any())
    throw std::invalid_argument("box: need lo <= hi of equal size");
  auto los = std::make_shared<Vector>(std::move(lo));
  auto his = std::make_shared<Vector>(std::move(hi));
  ProxTerm t;
  t.value = [los, his](const Vector &x) {
    const bool inside =
        (x.array() >= los->array()).all() && (x.array() <= his->array()).all();
    return inside ? 0.0 : kInf;
  };
  t.prox = [los, his](const Vector &x, double) {
    return x.cwiseMax(*los).cwiseMin(*his).eval();
  };
  return t;
}

LinearEquality LinearEquality::empty(Index n) {
  LinearEquality e;
  e.A = Matrix::Zero(0, n);
  e.b = Vector::Zero(0);
  return e;
}

InequalityBlock InequalityBlock::empty(Index n) {
  InequalityBlock b;
  b.count = 0;
  b.values = [](const Vector &) { return Vector::Zero(0).eval(); };
  b.jacobian = [n](const Vector &) { return Matrix::Zero(0, n).eval(); };
  return b;
}

InequalityBlock InequalityBlock::affine(Matrix G, Vector h) {
  if (G.rows() != h.size())
    throw std::invalid_argument("affine inequalities: rows(G) != size(h)");
  InequalityBlock b;
  b.count = G.rows();
  auto Gs = std::make_shared<Matrix>(std::move(G));
  auto hs = std::make_shared<Vector>(std::move(h));
  b.values = [Gs, hs](const Vector &x) { return (*Gs * x - *hs).eval(); };
  b.jacobian = [Gs](const Vector &) { return *Gs; };
  return b;
}

InequalityBlock InequalityBlock::quadratic_rows(std::vector<Matrix> Qs,
                                                std::vector<Vector> qs,
                                                std::vector<double> cs,
                                                Index n) {
  if (Qs.size() != qs.size() || Qs.size() != cs.size())
    throw std::invalid_argument("quadratic_rows: mismatched row counts");
  for (std::size_t i = 0; i < Qs.size(); ++i)
    if (Qs[i].rows() != n || Qs[i].cols() != n || qs[i].size() != n)
      throw std::invalid_argument("quadratic_rows: row " + std::to_string(i) +
                                  " has inconsistent dimensions");
  InequalityBlock b;
  b.count = static_cast<Index>(Qs.size());
  auto data = std::make_shared<
      std::tuple<std::vector<Matrix>, std::vector<Vector>, std::vector<double>>>(
      std::move(Qs), std::move(qs), std::move(cs));
  b.values = [data](const Vector &x) {
    const auto &[Q, q, c] = *data;
    Vector out(static_cast<Index>(Q.size()));
    for (std::size_t i = 0; i < Q.size(); ++i)
      out[static_cast<Index>(i)] = 0.5 * x.dot(Q[i] * x) + q[i].dot(x) + c[i];
    return out;
  };
  b.jacobian = [data](const Vector &x) {
    const auto &[Q, q, c] = *data;
    (void)c;
    Matrix J(static_cast<Index>(Q.size()), x.size());
    for (std::size_t i = 0; i < Q.size(); ++i)
      J.row(static_cast<Index>(i)) = (Q[i] * x + q[i]).transpose();
    return J;
  };
  return b;
}

InequalityBlock InequalityBlock::stack(std::vector<InequalityBlock> blocks,
                                       Index n) {
  if (blocks.empty()) return InequalityBlock::empty(n);
  if (blocks.size() == 1) return std::move(blocks.front());
  Index total = 0;
  for (const auto &b : blocks) total += b.count;
  auto parts = std::make_shared<std::vector<InequalityBlock>>(std::move(blocks));
  InequalityBlock out;
  out.count = total;
  out.values = [parts, total](const Vector &x) {
    Vector v(total);
    Index at = 0;
    for (const auto &b : *parts) {
      v.segment(at, b.count) = b.values(x);
      at += b.count;
    }
    return v;
  };
  out.jacobian = [parts, total](const Vector &x) {
    Matrix J(total, x.size());
    Index at = 0;
    for (const auto &b : *parts) {
      J.middleRows(at, b.count) = b.jacobian(x);
      at += b.count;
    }
    return J;
  };
  return out;
}

double eval_objective(const ConvexProgram &p, const Vector &x) {
  require_dim(p, x);
  return p.smooth.value(x) + p.prox.value(x);
}

double feasibility_violation(const ConvexProgram &p, const Vector &x) {
  require_dim(p, x);
  double sq = 0.0;
  if (p.num_eq() > 0) sq += (p.equality.A * x - p.equality.b).squaredNorm();
  if (p.num_ineq() > 0)
    sq += p.inequality.values(x).cwiseMax(0.0).squaredNorm();
  return std::sqrt(sq);
}

}  // namespace ripalm
