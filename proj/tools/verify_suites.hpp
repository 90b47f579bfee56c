#pragma once

// Oracle suites bundled by `somorse verify`. The finite-difference oracles
// here only use explicit plane rotations and the diagonal of A, never the
// library's closed-form derivatives.

#include "somorse/somorse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace somorse::tools {

struct SuiteResult {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  double threshold = 0.0;
  std::string detail;
};

namespace oracle {

inline Eigen::MatrixXd plane_rotation(int n, PairIndex p, double t) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
  b(p.i, p.i) = std::cos(t);
  b(p.i, p.j) = -std::sin(t);
  b(p.j, p.i) = std::sin(t);
  b(p.j, p.j) = std::cos(t);
  return b;
}

inline double height(const Eigen::MatrixXd& a, const CostVector& c) {
  double v = 0.0;
  for (int i = 0; i < c.dim(); ++i)
    v += c[i] * a(i, i);
  return v;
}

inline double first_difference(const Eigen::MatrixXd& a, const CostVector& c, PairIndex p, double h) {
  const int n = c.dim();
  return (height(a * plane_rotation(n, p, h), c) - height(a * plane_rotation(n, p, -h), c)) / (2 * h);
}

inline double mixed_difference(const Eigen::MatrixXd& a, const CostVector& c, PairIndex p, PairIndex q,
                               double h) {
  const int n = c.dim();
  auto g = [&](double s, double t) {
    return height(a * plane_rotation(n, p, s) * plane_rotation(n, q, t), c);
  };
  return (g(h, h) - g(h, -h) - g(-h, h) + g(-h, -h)) / (4 * h * h);
}

}  // namespace oracle

inline SuiteResult gradient_suite(const CostVector& c, int samples, std::mt19937_64& rng) {
  SuiteResult r{"gradient_fd", true, 0.0, 1e-7, ""};
  const int n = c.dim();
  for (int s = 0; s < samples; ++s) {
    const auto a = haar_sample(n, rng);
    const auto g = riemannian_gradient(a, c);
    const auto pairs = all_pairs(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      r.max_residual = std::max(
          r.max_residual,
          std::abs(g[static_cast<Eigen::Index>(k)] - oracle::first_difference(a.matrix(), c, pairs[k], 1e-5)));
  }
  r.passed = r.max_residual <= r.threshold;
  r.detail = std::to_string(samples) + " points";
  return r;
}

inline SuiteResult hessian_suite(const CostVector& c, int samples, std::mt19937_64& rng) {
  SuiteResult r{"hessian_fd", true, 0.0, 1e-4, ""};
  const int n = c.dim();
  const auto pairs = all_pairs(n);
  for (int s = 0; s < samples; ++s) {
    const auto a = haar_sample(n, rng);
    const auto h = tangent_hessian(a, c);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t q = 0; q < pairs.size(); ++q) {
        const double fd = 0.5 * (oracle::mixed_difference(a.matrix(), c, pairs[p], pairs[q], 1e-4) +
                                 oracle::mixed_difference(a.matrix(), c, pairs[q], pairs[p], 1e-4));
        r.max_residual = std::max(
            r.max_residual, std::abs(h(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) - fd));
      }
  }
  r.passed = r.max_residual <= r.threshold;
  r.detail = std::to_string(samples) + " points";
  return r;
}

/// index_by_formula == index_by_hessian == numeric_index at every pattern.
inline SuiteResult index_suite(const CostVector& c) {
  SuiteResult r{"index_equivalence", true, 0.0, 0.0, ""};
  int mismatches = 0, checked = 0;
  for (const auto& rec : enumerate_critical_points(c)) {
    ++checked;
    try {
      const int f = index_by_formula(rec.pattern);
      if (f != index_by_hessian(rec.pattern, c) ||
          f != numeric_index(tangent_hessian(rec.pattern.embedded(), c)))
        ++mismatches;
    } catch (const std::exception&) {
      ++mismatches;
    }
  }
  r.max_residual = mismatches;
  r.passed = mismatches == 0;
  r.detail = std::to_string(checked) + " patterns, " + std::to_string(mismatches) + " mismatches";
  return r;
}

/// Both curve-derivative families vanish exactly at every pattern.
inline SuiteResult criticality_suite(const CostVector& c) {
  SuiteResult r{"criticality_certificate", true, 0.0, 0.0, ""};
  for (const auto& rec : enumerate_critical_points(c)) {
    const Eigen::MatrixXd a = rec.pattern.embedded().matrix();
    for (const auto& p : all_pairs(c.dim()))
      r.max_residual = std::max({r.max_residual, std::abs(right_curve_derivative(a, c, p)),
                                 std::abs(left_curve_derivative(a, c, p))});
  }
  r.passed = r.max_residual == 0.0;
  return r;
}

inline SuiteResult flow_suite(const CostVector& c, int samples, const FlowConfig& cfg, std::mt19937_64& rng) {
  SuiteResult r{"flow_classification", true, 0.0, cfg.gradient_tolerance, ""};
  const auto recs = enumerate_critical_points(c);
  int converged = 0, classified = 0, at_minimum = 0;
  for (int s = 0; s < samples; ++s) {
    const auto res = gradient_flow(haar_sample(c.dim(), rng), c, cfg);
    r.max_residual = std::max(r.max_residual, res.final_gradient_norm);
    converged += res.converged;
    if (!res.converged || !res.classified_pattern)
      continue;
    const auto it = std::find_if(recs.begin(), recs.end(),
                                 [&](const auto& rec) { return rec.pattern == *res.classified_pattern; });
    if (it != recs.end()) {
      ++classified;
      at_minimum += it->index == 0;
    }
  }
  r.passed = converged == samples && classified == samples;
  r.detail = std::to_string(converged) + "/" + std::to_string(samples) + " converged, " +
             std::to_string(classified) + " classified, " + std::to_string(at_minimum) + " at index 0";
  if (converged < samples)
    r.detail += " (non-convergence)";
  return r;
}

}  // namespace somorse::tools
