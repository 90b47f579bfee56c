#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace somorse {

/// Default tolerance for SO(n) membership checks.
inline constexpr double kMembershipTolerance = 1e-10;

/**
 * @brief Strictly increasing, nonnegative weights c_1 < c_2 < ... < c_n.
 *
 * The height-like function on SO(n) is f(A) = sum_i c_i * A(i,i). Strict
 * monotonicity together with c_1 >= 0 rules out c_a*e_a + c_b*e_b = 0 for any
 * signs e_a, e_b, which is exactly what keeps every Hessian entry nonzero at
 * the critical points (c_1 = 0 is allowed).
 */
class CostVector {
public:
  explicit CostVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty())
      throw std::invalid_argument("cost vector must be non-empty");
    for (double w : weights_)
      if (!std::isfinite(w))
        throw std::invalid_argument("cost vector entries must be finite");
    if (weights_.front() < 0.0)
      throw std::invalid_argument("cost vector must be nonnegative");
    for (std::size_t i = 1; i < weights_.size(); ++i)
      if (!(weights_[i - 1] < weights_[i]))
        throw std::invalid_argument("cost vector must be strictly increasing");
  }

  /// c_i = i (1-based).
  static CostVector linear(int n) {
    if (n < 1)
      throw std::invalid_argument("dimension must be at least 1");
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      w[static_cast<std::size_t>(i)] = static_cast<double>(i + 1);
    return CostVector(std::move(w));
  }

  int dim() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[static_cast<std::size_t>(i)]; }
  std::span<const double> weights() const { return weights_; }
  double largest() const { return weights_.back(); }

  bool operator==(const CostVector&) const = default;

private:
  std::vector<double> weights_;
};

/**
 * @brief Coordinate plane (i, j), i < j, of a Givens rotation.
 *
 * Indices are 0-based. Pairs are ordered lexicographically, (0,1), (0,2), ...,
 * (1,2), ..., and every pair-indexed vector in this library uses that order.
 */
struct PairIndex {
  int i = 0;
  int j = 1;

  bool valid_for(int n) const { return 0 <= i && i < j && j < n; }

  /// 1-based label "(i,j)" used in serialized output.
  std::string label() const {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  }

  auto operator<=>(const PairIndex&) const = default;
};

/// n(n-1)/2, the dimension of SO(n).
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

inline std::vector<PairIndex> all_pairs(int n) {
  std::vector<PairIndex> pairs;
  pairs.reserve(static_cast<std::size_t>(pair_count(n > 0 ? n : 0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pairs.push_back({i, j});
  return pairs;
}

/// Position of a pair in the lexicographic order.
constexpr int pair_position(PairIndex p, int n) {
  return p.i * n - p.i * (p.i + 1) / 2 + (p.j - p.i - 1);
}

inline void require_pair(PairIndex p, int n) {
  if (!p.valid_for(n))
    throw std::invalid_argument("invalid pair index " + p.label() + " for n = " +
                                std::to_string(n));
}

/// Skew generator E_ij: -1 at (i,j), +1 at (j,i).
inline Eigen::MatrixXd skew_generator(PairIndex p, int n) {
  require_pair(p, n);
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
  e(p.i, p.j) = -1.0;
  e(p.j, p.i) = 1.0;
  return e;
}

/// Skew-symmetric matrix sum_p coeffs[p] * E_p.
inline Eigen::MatrixXd skew_from_pairs(const Eigen::VectorXd& coeffs, int n) {
  if (coeffs.size() != pair_count(n))
    throw std::invalid_argument("pair-indexed vector has wrong length");
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  int pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos) {
      k(j, i) = coeffs[pos];
      k(i, j) = -coeffs[pos];
    }
  return k;
}

/// Residual max(|AA^t - I|_inf, |det A - 1|); infinite for non-square input.
inline double rotation_residual(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    return std::numeric_limits<double>::infinity();
  const auto n = a.rows();
  const double ortho =
      (a * a.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  return std::max(ortho, std::abs(a.determinant() - 1.0));
}

inline bool is_rotation(const Eigen::MatrixXd& a, double tol = kMembershipTolerance) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw std::invalid_argument("is_rotation expects a non-empty square matrix");
  return rotation_residual(a) <= tol;
}

/**
 * @brief An element of SO(n).
 *
 * Construction checks membership; operations that provably stay on the
 * manifold (Givens curves, Haar samples, retraction) use the unchecked path.
 */
class RotationMatrix {
public:
  explicit RotationMatrix(Eigen::MatrixXd m, double tol = kMembershipTolerance)
      : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0)
      throw std::invalid_argument("rotation matrix must be square and non-empty");
    if (rotation_residual(m_) > tol)
      throw std::invalid_argument("matrix is not in SO(n) within tolerance");
  }

  static RotationMatrix identity(int n) {
    return unchecked(Eigen::MatrixXd::Identity(n, n));
  }

  static RotationMatrix unchecked(Eigen::MatrixXd m) {
    RotationMatrix r;
    r.m_ = std::move(m);
    return r;
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(int r, int c) const { return m_(r, c); }

  RotationMatrix operator*(const RotationMatrix& rhs) const { return unchecked(m_ * rhs.m_); }

private:
  RotationMatrix() = default;
  Eigen::MatrixXd m_;
};

/// B_ij(theta): identity except (i,i)=cos, (i,j)=-sin, (j,i)=sin, (j,j)=cos.
inline RotationMatrix givens_curve(PairIndex p, double theta, int n) {
  require_pair(p, n);
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  b(p.i, p.i) = c;
  b(p.i, p.j) = -s;
  b(p.j, p.i) = s;
  b(p.j, p.j) = c;
  return RotationMatrix::unchecked(std::move(b));
}

enum class CurveSide { left, right };

/// d/dtheta of A*B_ij(theta) (right) or B_ij(theta)*A (left) at theta = 0.
inline Eigen::MatrixXd curve_velocity(const RotationMatrix& a, PairIndex p, CurveSide side) {
  const Eigen::MatrixXd e = skew_generator(p, a.dim());
  return side == CurveSide::right ? Eigen::MatrixXd(a.matrix() * e)
                                  : Eigen::MatrixXd(e * a.matrix());
}

/**
 * @brief Haar-uniform sample from SO(n).
 *
 * QR of a Gaussian matrix with R's diagonal normalized positive gives a
 * Haar-distributed element of O(n); flipping the first column when det = -1
 * maps that onto Haar measure on SO(n).
 */
template <class Rng>
RotationMatrix haar_sample(int n, Rng& rng) {
  if (n < 1)
    throw std::invalid_argument("dimension must be at least 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      g(r, c) = normal(rng);

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& packed = qr.matrixQR();
  for (int k = 0; k < n; ++k)
    if (packed(k, k) < 0.0)
      q.col(k) *= -1.0;
  if (q.determinant() < 0.0)
    q.col(0) *= -1.0;
  return RotationMatrix::unchecked(std::move(q));
}

inline RotationMatrix haar_sample(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_sample(n, rng);
}

/// A * exp(step * K) with K = sum_p coeffs[p] * E_p.
inline RotationMatrix retract(const RotationMatrix& a, const Eigen::VectorXd& coeffs,
                              double step) {
  const int n = a.dim();
  if (n == 1)
    return a;
  const Eigen::MatrixXd k = step * skew_from_pairs(coeffs, n);
  if (k.cwiseAbs().maxCoeff() == 0.0)
    return a;
  return RotationMatrix::unchecked(a.matrix() * k.exp());
}

}  // namespace somorse
