#pragma once

#include <Eigen/Dense>

#include <functional>
#include <limits>
#include <vector>

namespace ripalm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Smooth convex piece of the objective, exposed as value/gradient oracles.
/// `lipschitz_bound` is a gradient-Lipschitz estimate used only to seed the
/// inner step size; the inner solver backtracks, so correctness never
/// depends on it.
struct SmoothTerm {
  std::function<double(const Vector &)> value;
  std::function<Vector(const Vector &)> gradient;
  double lipschitz_bound = 0.0;

  static SmoothTerm zero();
  /// ½xᵀQx + cᵀx, Q symmetric PSD
  static SmoothTerm quadratic(Matrix Q, Vector c);
  /// ½‖Mx − d‖²
  static SmoothTerm least_squares(Matrix M, Vector d);
};

/// Proximable convex piece. `value` may be +inf outside its domain;
/// `prox(x, t)` solves min_z value(z) + ‖z − x‖²/(2t).
struct ProxTerm {
  std::function<double(const Vector &)> value;
  std::function<Vector(const Vector &, double)> prox;

  static ProxTerm none();
  static ProxTerm l1(double weight);
  static ProxTerm nonneg();
  static ProxTerm box(Vector lo, Vector hi);
};

/// Ax = b block. Rows may be linearly dependent; no rank assumption.
struct LinearEquality {
  Matrix A;  // m1 x N
  Vector b;  // m1

  Index rows() const { return A.rows(); }
  static LinearEquality empty(Index n);
};

/// Stacked smooth convex inequalities g(x) <= 0, as value/Jacobian oracles.
struct InequalityBlock {
  std::function<Vector(const Vector &)> values;    // m2
  std::function<Matrix(const Vector &)> jacobian;  // m2 x N
  Index count = 0;

  static InequalityBlock empty(Index n);
  /// Affine rows Gx − h <= 0.
  static InequalityBlock affine(Matrix G, Vector h);
  /// One row ½xᵀQᵢx + qᵢᵀx + cᵢ <= 0 per entry; each Qᵢ must be PSD.
  static InequalityBlock quadratic_rows(std::vector<Matrix> Qs,
                                        std::vector<Vector> qs,
                                        std::vector<double> cs, Index n);
  /// Concatenate blocks (all over the same x dimension).
  static InequalityBlock stack(std::vector<InequalityBlock> blocks, Index n);
};

/// min f_smooth(x) + f_prox(x)  s.t.  Ax = b, g(x) <= 0.
///
/// Either constraint block may be empty. The prox part's domain is assumed
/// to intersect the feasible set; this is not (and cannot generally be)
/// checked.
struct ConvexProgram {
  Index n = 0;
  SmoothTerm smooth;
  ProxTerm prox;
  LinearEquality equality;
  InequalityBlock inequality;

  Index num_eq() const { return equality.rows(); }
  Index num_ineq() const { return inequality.count; }
};

/// f_smooth(x) + f_prox(x); may be +inf.
double eval_objective(const ConvexProgram &p, const Vector &x);

/// ‖(Ax − b ; max{0, g(x)})‖ — zero exactly on the feasible set.
double feasibility_violation(const ConvexProgram &p, const Vector &x);

/// Throws std::invalid_argument unless dim(x) == p.n.
void require_dim(const ConvexProgram &p, const Vector &x);

}  // namespace ripalm
