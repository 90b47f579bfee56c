#pragma once

#include "somorse/lie_core.hpp"
#include "somorse/polynomial.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace somorse {

/**
 * @brief Diagonal signs (e_1, ..., e_n) of a critical point, product +1.
 *
 * The critical points of f_C on SO(n) are exactly the diagonal matrices
 * diag(e_1, ..., e_n) with e_i = +-1 and det = +1.
 */
class SignPattern {
public:
  explicit SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
    if (signs_.empty())
      throw std::invalid_argument("sign pattern must be non-empty");
    int product = 1;
    for (int s : signs_) {
      if (s != 1 && s != -1)
        throw std::invalid_argument("sign pattern entries must be +1 or -1");
      product *= s;
    }
    if (product != 1)
      throw std::invalid_argument("sign pattern must have product +1");
  }

  /// Bit k of mask set means e_{k+1} = -1. The mask must have even popcount.
  static SignPattern from_mask(std::uint32_t mask, int n) {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      s[static_cast<std::size_t>(k)] = ((mask >> k) & 1u) ? -1 : 1;
    return SignPattern(std::move(s));
  }

  static SignPattern all_positive(int n) { return SignPattern(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int dim() const { return static_cast<int>(signs_.size()); }
  int operator[](int i) const { return signs_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& signs() const { return signs_; }

  /// diag(e_1, ..., e_n) as a rotation.
  RotationMatrix embedded() const {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      d(i, i) = static_cast<double>(signs_[static_cast<std::size_t>(i)]);
    return RotationMatrix::unchecked(std::move(d));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < signs_.size(); ++k) {
      if (k)
        s += ",";
      s += signs_[k] > 0 ? "+" : "-";
    }
    return s + ")";
  }

  auto operator<=>(const SignPattern&) const = default;

private:
  std::vector<int> signs_;
};

struct CriticalPointRecord {
  SignPattern pattern;
  int index = 0;
  double value = 0.0;
  Eigen::VectorXd hessian_diagonal;  // pair-indexed
};

/// Largest n for which enumeration is supported (2^(n-1) records).
inline constexpr int kMaxEnumerationDim = 24;

inline void require_matching(const SignPattern& pattern, const CostVector& costs) {
  if (pattern.dim() != costs.dim())
    throw std::invalid_argument("sign pattern and cost vector dimensions differ");
}

/// Sum of (i - 1) over the 1-based positions i with e_i = +1.
inline int index_by_formula(const SignPattern& pattern) {
  int index = 0;
  for (int i = 0; i < pattern.dim(); ++i)
    if (pattern[i] > 0)
      index += i;  // 0-based position equals (i_k - 1)
  return index;
}

/// Hessian entry at pair (a,b) is -c_a e_a - c_b e_b; off-diagonal entries vanish.
inline Eigen::VectorXd hessian_diagonal(const SignPattern& pattern, const CostVector& costs) {
  require_matching(pattern, costs);
  const int n = pattern.dim();
  Eigen::VectorXd h(pair_count(n));
  int pos = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++pos)
      h[pos] = -costs[a] * pattern[a] - costs[b] * pattern[b];
  return h;
}

// c_a < c_b rules out c_a e_a + c_b e_b = 0, so every entry is nonzero even when c_1 = 0.
inline int index_by_hessian(const SignPattern& pattern, const CostVector& costs) {
  const Eigen::VectorXd h = hessian_diagonal(pattern, costs);
  int negatives = 0;
  for (Eigen::Index k = 0; k < h.size(); ++k) {
    if (h[k] == 0.0)
      throw std::logic_error("zero Hessian entry; cost vector is not strictly increasing");
    if (h[k] < 0.0)
      ++negatives;
  }
  return negatives;
}

/// f_C at the critical point: sum_i c_i e_i.
inline double critical_value(const SignPattern& pattern, const CostVector& costs) {
  require_matching(pattern, costs);
  double v = 0.0;
  for (int i = 0; i < pattern.dim(); ++i)
    v += costs[i] * static_cast<double>(pattern[i]);
  return v;
}

/// Same value as 2 * (sum of c over +1 positions) - (sum of all c).
inline double critical_value_by_subset(const SignPattern& pattern, const CostVector& costs) {
  require_matching(pattern, costs);
  double positive = 0.0;
  double total = 0.0;
  for (int i = 0; i < pattern.dim(); ++i) {
    total += costs[i];
    if (pattern[i] > 0)
      positive += costs[i];
  }
  return 2.0 * positive - total;
}

/**
 * All 2^(n-1) critical points, in binary order of the sign mask (bit k set
 * means e_{k+1} = -1), keeping the masks with even popcount.
 */
inline std::vector<CriticalPointRecord> enumerate_critical_points(const CostVector& costs) {
  const int n = costs.dim();
  if (n > kMaxEnumerationDim)
    throw std::invalid_argument("dimension too large to enumerate");
  std::vector<CriticalPointRecord> out;
  out.reserve(std::size_t{1} << (n - 1));
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (std::popcount(mask) % 2 != 0)
      continue;
    SignPattern p = SignPattern::from_mask(mask, n);
    CriticalPointRecord r{p, index_by_formula(p), critical_value(p, costs),
                          hessian_diagonal(p, costs)};
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<CriticalPointRecord> enumerate_critical_points(int n, const CostVector& costs) {
  if (n != costs.dim())
    throw std::invalid_argument("cost vector length does not match n");
  return enumerate_critical_points(costs);
}

/// mu_k = number of critical points of index k.
inline IntPolynomial morse_polynomial(const CostVector& costs) {
  IntPolynomial p;
  for (const auto& r : enumerate_critical_points(costs))
    p.add_term(static_cast<std::size_t>(r.index));
  return p;
}

// The two curve-derivative displays at A, for the pair (i,j).

/// d/dtheta f_C(A B_ij(theta)) at 0: c_i x_ij - c_j x_ji.
inline double right_curve_derivative(const Eigen::MatrixXd& a, const CostVector& costs, PairIndex p) {
  return costs[p.i] * a(p.i, p.j) - costs[p.j] * a(p.j, p.i);
}

/// d/dtheta f_C(B_ij(theta) A) at 0: -c_i x_ji + c_j x_ij.
inline double left_curve_derivative(const Eigen::MatrixXd& a, const CostVector& costs, PairIndex p) {
  return -costs[p.i] * a(p.j, p.i) + costs[p.j] * a(p.i, p.j);
}

}  // namespace somorse
