#pragma once

// JSON forms of the library's records. Requires nlohmann/json.

#include "somorse/lie_core.hpp"
#include "somorse/morse_analytic.hpp"
#include "somorse/numeric_verify.hpp"
#include "somorse/polynomial.hpp"
#include "somorse/topology_poly.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <vector>

namespace somorse {

using Json = nlohmann::ordered_json;

/// Row-major array of arrays.
inline Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Eigen::MatrixXd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("matrix rows must be arrays of equal length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& x = row[static_cast<std::size_t>(c)];
      if (!x.is_number())
        throw std::invalid_argument("matrix entries must be numbers");
      m(r, c) = x.get<double>();
    }
  }
  return m;
}

/// {"(1,2)": v, "(1,3)": v, ...} in pair order.
inline Json pair_vector_to_json(const Eigen::VectorXd& v, int n) {
  Json out = Json::object();
  const auto pairs = all_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    out[pairs[k].label()] = v[static_cast<Eigen::Index>(k)];
  return out;
}

inline Json to_json(const SignPattern& p) { return Json(p.signs()); }

inline Json to_json(const CriticalPointRecord& r) {
  Json j;
  j["eps"] = to_json(r.pattern);
  j["index"] = r.index;
  j["value"] = r.value;
  j["hessian_diagonal"] = pair_vector_to_json(r.hessian_diagonal, r.pattern.dim());
  return j;
}

/// Ascending-degree coefficient array.
inline Json to_json(const IntPolynomial& p) { return Json(p.coeffs()); }

inline IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("polynomial must be an integer array");
  std::vector<std::int64_t> c;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument("polynomial coefficients must be integers");
    c.push_back(x.get<std::int64_t>());
  }
  return IntPolynomial::from_signed(c);
}

inline Json to_json(const PerfectnessReport& r) {
  Json j;
  j["morse"] = to_json(r.morse);
  j["poincare_basis"] = to_json(r.poincare_basis);
  j["poincare_product"] = to_json(r.poincare_product);
  j["remainder"] = r.remainder ? to_json(*r.remainder) : Json(nullptr);
  j["betti_coefficients"] = "Z2";
  j["perfect"] = r.perfect;
  return j;
}

inline Json to_json(const FlowResult& r) {
  Json j;
  j["final_point"] = matrix_to_json(r.final_point.matrix());
  j["iterations"] = r.iterations;
  j["final_gradient_norm"] = r.final_gradient_norm;
  j["converged"] = r.converged;
  j["classified_pattern"] = r.classified_pattern ? to_json(*r.classified_pattern) : Json(nullptr);
  if (!r.trajectory_values.empty())
    j["trajectory_values"] = r.trajectory_values;
  return j;
}

}  // namespace somorse
