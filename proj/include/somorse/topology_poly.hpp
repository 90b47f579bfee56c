#pragma once

#include "somorse/lie_core.hpp"
#include "somorse/morse_analytic.hpp"
#include "somorse/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace somorse {

// Z/2 homology of SO(n) is the exterior algebra on e_1, ..., e_{n-1} with
// deg e_i = i. Its basis is indexed by subsets of {1, ..., n-1}.

/// Largest n handled by the polynomial layer; coefficients stay below 2^(n-1).
inline constexpr int kMaxTopologyDim = 24;

inline void require_topology_dim(int n) {
  if (n < 1)
    throw std::invalid_argument("dimension must be at least 1");
  if (n > kMaxTopologyDim)
    throw std::invalid_argument("dimension too large");
}

struct ExteriorBasisElement {
  std::vector<int> generators;  // strictly increasing labels in {1, ..., n-1}
  int degree = 0;

  bool operator==(const ExteriorBasisElement&) const = default;
};

/// (1 + t)(1 + t^2)...(1 + t^(n-1)); the constant 1 when n = 1.
inline IntPolynomial poincare_product(int n) {
  require_topology_dim(n);
  IntPolynomial p{1};
  for (int i = 1; i < n; ++i)
    p = p * (IntPolynomial{1} + IntPolynomial::monomial(static_cast<std::size_t>(i)));
  return p;
}

/**
 * Basis of the exterior algebra on e_1..e_{n-1}, built by the recursion
 * B(k+1) = B(k) followed by (B(k) ^ e_k), starting from B(1) = {1}.
 */
inline std::vector<ExteriorBasisElement> enumerate_basis(int n) {
  require_topology_dim(n);
  std::vector<ExteriorBasisElement> basis{ExteriorBasisElement{}};
  for (int k = 1; k < n; ++k) {
    const std::size_t old_size = basis.size();
    basis.reserve(2 * old_size);
    for (std::size_t b = 0; b < old_size; ++b) {
      ExteriorBasisElement wedge = basis[b];
      wedge.generators.push_back(k);
      wedge.degree += k;
      basis.push_back(std::move(wedge));
    }
  }
  return basis;
}

/// Same basis from subset bitmasks; bit k stands for e_{k+1}.
inline std::vector<ExteriorBasisElement> enumerate_basis_direct(int n) {
  require_topology_dim(n);
  std::vector<ExteriorBasisElement> basis;
  const std::uint32_t end = std::uint32_t{1} << (n - 1);
  basis.reserve(end);
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    ExteriorBasisElement e;
    for (int k = 0; k < n - 1; ++k)
      if ((mask >> k) & 1u) {
        e.generators.push_back(k + 1);
        e.degree += k + 1;
      }
    basis.push_back(std::move(e));
  }
  return basis;
}

/// Coefficient of t^k = number of basis elements of degree k (Z/2 Betti numbers).
inline IntPolynomial poincare_from_basis(int n) {
  IntPolynomial p;
  for (const auto& e : enumerate_basis(n))
    p.add_term(static_cast<std::size_t>(e.degree));
  return p;
}

struct PerfectnessReport {
  IntPolynomial morse;
  IntPolynomial poincare_basis;
  IntPolynomial poincare_product;
  std::optional<IntPolynomial> remainder;
  bool perfect = false;
};

inline PerfectnessReport is_perfect(const CostVector& costs) {
  const int n = costs.dim();
  require_topology_dim(n);
  PerfectnessReport r;
  r.morse = morse_polynomial(costs);
  r.poincare_basis = poincare_from_basis(n);
  r.poincare_product = poincare_product(n);
  r.remainder = morse_remainder(r.morse, r.poincare_basis);
  r.perfect = r.morse == r.poincare_basis && r.poincare_basis == r.poincare_product &&
              r.remainder && r.remainder->is_zero();
  return r;
}

/**
 * Splits the critical points in dimension n+1 on the last sign.
 *
 * With e_{n+1} = -1 the index is that of the truncated length-n pattern (which
 * lies in the det = -1 component of O(n)); with e_{n+1} = +1 the truncated
 * pattern is in SO(n) and the index grows by n.
 */
struct InductionStep {
  IntPolynomial lower;         // morse polynomial in dimension n
  IntPolynomial minus_part;    // patterns with e_{n+1} = -1
  IntPolynomial plus_part;     // patterns with e_{n+1} = +1
  IntPolynomial upper;         // morse polynomial in dimension n+1
  bool minus_matches = false;  // minus_part == lower
  bool plus_matches = false;   // plus_part == t^n * lower
  bool holds = false;          // upper == lower * (1 + t^n)
};

/// `upper_costs` has length n+1; its first n weights define dimension n.
inline InductionStep induction_step(const CostVector& upper_costs) {
  const int n1 = upper_costs.dim();
  if (n1 < 2)
    throw std::invalid_argument("induction step needs n + 1 >= 2");
  const int n = n1 - 1;
  const auto w = upper_costs.weights();
  const CostVector lower_costs(std::vector<double>(w.begin(), w.end() - 1));

  InductionStep s;
  s.lower = morse_polynomial(lower_costs);
  s.upper = morse_polynomial(upper_costs);
  for (const auto& r : enumerate_critical_points(upper_costs)) {
    // Truncated index, computed on the first n signs only.
    int truncated = 0;
    for (int i = 0; i < n; ++i)
      if (r.pattern[i] > 0)
        truncated += i;
    if (r.pattern[n] < 0) {
      if (r.index != truncated)
        throw std::logic_error("index changed under a -1 extension");
      s.minus_part.add_term(static_cast<std::size_t>(truncated));
    } else {
      if (r.index != truncated + n)
        throw std::logic_error("index did not grow by n under a +1 extension");
      s.plus_part.add_term(static_cast<std::size_t>(truncated + n));
    }
  }
  const IntPolynomial tn = IntPolynomial::monomial(static_cast<std::size_t>(n));
  s.minus_matches = s.minus_part == s.lower;
  s.plus_matches = s.plus_part == tn * s.lower;
  s.holds = s.minus_matches && s.plus_matches &&
            s.upper == s.minus_part + s.plus_part &&
            s.upper == s.lower * (IntPolynomial{1} + tn);
  return s;
}

}  // namespace somorse
