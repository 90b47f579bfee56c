#pragma once

#include "somorse/lie_core.hpp"
#include "somorse/morse_analytic.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace somorse {

/// Thrown when a Hessian eigenvalue is too close to zero to assign a sign.
class DegenerateHessianError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDegeneracyTolerance = 1e-9;

inline void require_matching(const RotationMatrix& a, const CostVector& costs) {
  if (a.dim() != costs.dim())
    throw std::invalid_argument("matrix and cost vector dimensions differ");
}

/// f_C(A) = sum_i c_i * A(i,i).
inline double objective(const RotationMatrix& a, const CostVector& costs) {
  require_matching(a, costs);
  double v = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    v += costs[i] * a(i, i);
  return v;
}

/**
 * Gradient in the right-curve basis {A E_ij}: component (i,j) is
 * d/dtheta f_C(A B_ij(theta)) at 0 = c_i x_ij - c_j x_ji.
 *
 * Components are relative to the raw generators (no 1/2 scaling), so norms
 * are convention-dependent; zeros and signs are not.
 */
inline Eigen::VectorXd riemannian_gradient(const RotationMatrix& a, const CostVector& costs) {
  require_matching(a, costs);
  const int n = a.dim();
  Eigen::VectorXd g(pair_count(n));
  int pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos)
      g[pos] = right_curve_derivative(a.matrix(), costs, {i, j});
  return g;
}

namespace detail {

// E_p written as a sum of signed unit matrices s * e_row e_col^T.
struct UnitTerm {
  double sign;
  int row;
  int col;
};

inline std::array<UnitTerm, 2> generator_terms(PairIndex p) {
  return {UnitTerm{1.0, p.j, p.i}, UnitTerm{-1.0, p.i, p.j}};
}

}  // namespace detail

/**
 * d^2/dtheta dphi f_C(A B_p(theta) B_q(phi)) at 0.
 *
 * f_C is linear and the curve is linear in each generator, so this equals
 * f_C(A E_p E_q). Using f_C(A e_a e_b^T) = c_b A(b,a) keeps it O(1).
 */
inline double ordered_second_derivative(const RotationMatrix& a, const CostVector& costs,
                                        PairIndex p, PairIndex q) {
  double v = 0.0;
  for (const auto& s : detail::generator_terms(p))
    for (const auto& t : detail::generator_terms(q))
      if (s.col == t.row)
        v += s.sign * t.sign * costs[t.col] * a(t.col, s.row);
  return v;
}

/**
 * Hessian of f_C in the right-curve pair basis.
 *
 * The symmetric part of the ordered mixed derivative, which is the Hessian in
 * exponential coordinates A exp(sum theta_p E_p). At a critical point the
 * ordered form is already symmetric and diagonal with entries
 * -c_a e_a - c_b e_b.
 */
inline Eigen::MatrixXd tangent_hessian(const RotationMatrix& a, const CostVector& costs) {
  require_matching(a, costs);
  const auto pairs = all_pairs(a.dim());
  const auto m = static_cast<Eigen::Index>(pairs.size());
  Eigen::MatrixXd h(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = r; c < m; ++c) {
      const auto& p = pairs[static_cast<std::size_t>(r)];
      const auto& q = pairs[static_cast<std::size_t>(c)];
      const double v =
          0.5 * (ordered_second_derivative(a, costs, p, q) + ordered_second_derivative(a, costs, q, p));
      h(r, c) = v;
      h(c, r) = v;
    }
  return h;
}

/// Number of negative eigenvalues of a symmetric matrix.
inline int numeric_index(const Eigen::MatrixXd& h, double degeneracy_tol = kDegeneracyTolerance) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("Hessian must be square");
  if (h.size() == 0)
    return 0;
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("Hessian must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver did not converge");
  int negatives = 0;
  for (double lambda : solver.eigenvalues()) {
    if (std::abs(lambda) <= degeneracy_tol)
      throw DegenerateHessianError("Hessian eigenvalue within tolerance of zero");
    if (lambda < 0.0)
      ++negatives;
  }
  return negatives;
}

/// Rounds A to a sign pattern if it is within tol of diag(+-1) with det +1.
inline std::optional<SignPattern> classify(const RotationMatrix& a, double tol) {
  const int n = a.dim();
  std::vector<int> signs(static_cast<std::size_t>(n));
  int product = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const double x = a(r, c);
      if (r == c) {
        const int s = x >= 0.0 ? 1 : -1;
        if (std::abs(x - s) > tol)
          return std::nullopt;
        signs[static_cast<std::size_t>(r)] = s;
        product *= s;
      } else if (std::abs(x) > tol) {
        return std::nullopt;
      }
    }
  if (product != 1)
    return std::nullopt;
  return SignPattern(std::move(signs));
}

struct FlowConfig {
  int max_iterations = 100000;
  double gradient_tolerance = 1e-8;
  double classification_tolerance = 1e-6;
  double armijo = 1e-4;
  double shrink = 0.5;
  double initial_step = 0.0;  // 0 selects 1 / (2 c_n)
  double monotone_slack = 1e-12;
  int max_backtracks = 60;
  bool record_trajectory = false;
};

struct FlowResult {
  RotationMatrix final_point;
  int iterations = 0;
  double final_gradient_norm = 0.0;
  bool converged = false;
  std::optional<SignPattern> classified_pattern;
  std::vector<double> trajectory_values;
};

/**
 * Discrete Riemannian gradient descent A <- A exp(-t K(grad)) with Armijo
 * backtracking.
 *
 * The step is capped so that |t K|_F <= 2, the range where the matrix
 * exponential is accurate to well below the flow tolerance. A step is accepted
 * when f decreases by the Armijo amount up to `monotone_slack`, which absorbs
 * rounding once the decrease falls below the resolution of f.
 */
inline FlowResult gradient_flow(const RotationMatrix& start, const CostVector& costs,
                                const FlowConfig& config = {}) {
  require_matching(start, costs);
  if (!is_rotation(start.matrix()))
    throw std::invalid_argument("flow start point is not in SO(n)");
  if (config.max_iterations < 0 || !(config.shrink > 0.0 && config.shrink < 1.0))
    throw std::invalid_argument("invalid flow configuration");

  const double base_step =
      config.initial_step > 0.0 ? config.initial_step
                                : (costs.largest() > 0.0 ? 1.0 / (2.0 * costs.largest()) : 1.0);

  RotationMatrix a = start;
  double value = objective(a, costs);
  Eigen::VectorXd grad = riemannian_gradient(a, costs);
  double grad_norm = grad.norm();

  FlowResult result{a, 0, grad_norm, false, std::nullopt, {}};
  if (config.record_trajectory)
    result.trajectory_values.push_back(value);

  int iter = 0;
  while (grad_norm > config.gradient_tolerance && iter < config.max_iterations) {
    const double skew_norm = std::sqrt(2.0) * grad_norm;
    double step = std::min(base_step, 2.0 / skew_norm);
    const double sq = grad_norm * grad_norm;

    bool accepted = false;
    for (int bt = 0; bt <= config.max_backtracks; ++bt, step *= config.shrink) {
      RotationMatrix trial = retract(a, -grad, step);
      const double trial_value = objective(trial, costs);
      if (trial_value <= value - config.armijo * step * sq + config.monotone_slack) {
        a = std::move(trial);
        value = trial_value;
        accepted = true;
        break;
      }
    }
    if (!accepted)
      break;
    ++iter;
    grad = riemannian_gradient(a, costs);
    grad_norm = grad.norm();
    if (config.record_trajectory)
      result.trajectory_values.push_back(value);
  }

  result.final_point = a;
  result.iterations = iter;
  result.final_gradient_norm = grad_norm;
  result.converged = grad_norm <= config.gradient_tolerance;
  result.classified_pattern = classify(a, config.classification_tolerance);
  return result;
}

}  // namespace somorse
