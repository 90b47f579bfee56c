#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace somorse {

/**
 * @brief Polynomial in t with nonnegative integer coefficients.
 *
 * Dense storage, coeffs()[k] is the coefficient of t^k, trailing zeros are
 * trimmed (the zero polynomial has no coefficients). All arithmetic is exact;
 * overflow throws std::overflow_error.
 */
class IntPolynomial {
public:
  using Coefficient = std::uint64_t;

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Coefficient> coeffs) : coeffs_(coeffs) { trim(); }
  explicit IntPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// Validating constructor for signed input, e.g. parsed JSON.
  static IntPolynomial from_signed(std::span<const std::int64_t> coeffs) {
    std::vector<Coefficient> out;
    out.reserve(coeffs.size());
    for (auto c : coeffs) {
      if (c < 0)
        throw std::invalid_argument("polynomial coefficients must be nonnegative");
      out.push_back(static_cast<Coefficient>(c));
    }
    return IntPolynomial(std::move(out));
  }

  static IntPolynomial monomial(std::size_t degree, Coefficient coeff = 1) {
    std::vector<Coefficient> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Coefficient coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  const std::vector<Coefficient>& coeffs() const { return coeffs_; }

  /// Adds c to the coefficient of t^k.
  void add_term(std::size_t k, Coefficient c = 1) {
    if (c == 0)
      return;
    if (coeffs_.size() <= k)
      coeffs_.resize(k + 1, 0);
    coeffs_[k] = checked_add(coeffs_[k], c);
  }

  Coefficient value_at_one() const {
    Coefficient s = 0;
    for (auto c : coeffs_)
      s = checked_add(s, c);
    return s;
  }

  bool is_palindromic() const {
    for (std::size_t k = 0, d = coeffs_.size(); k < d / 2; ++k)
      if (coeffs_[k] != coeffs_[d - 1 - k])
        return false;
    return true;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
      r.add_term(k, b.coeffs_[k]);
    return r;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Coefficient> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    return IntPolynomial(std::move(out));
  }

  bool operator==(const IntPolynomial&) const = default;

  /// "1 + t + 2t^3"; the zero polynomial prints as "0".
  std::string to_string() const {
    if (is_zero())
      return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const auto c = coeffs_[k];
      if (c == 0)
        continue;
      if (!s.empty())
        s += " + ";
      if (k == 0 || c != 1)
        s += std::to_string(c);
      if (k >= 1)
        s += "t";
      if (k >= 2)
        s += "^" + std::to_string(k);
    }
    return s;
  }

  static Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("polynomial coefficient overflow");
    return r;
  }

  static Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r))
      throw std::overflow_error("polynomial coefficient overflow");
    return r;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::vector<Coefficient> coeffs_;
};

/**
 * @brief Solves P_f = P_M + (1 + t) R(t) for R with nonnegative coefficients.
 *
 * D = P_f - P_M is formed over the signed integers and divided by (t + 1)
 * with synthetic division at the root t = -1. Returns std::nullopt when the
 * division leaves a remainder or the quotient has a negative coefficient,
 * i.e. when no Morse function could have Morse polynomial P_f on a manifold
 * with Poincare polynomial P_M.
 */
inline std::optional<IntPolynomial> morse_remainder(const IntPolynomial& morse,
                                                    const IntPolynomial& poincare) {
  using Signed = std::int64_t;
  constexpr auto kMax = static_cast<IntPolynomial::Coefficient>(std::numeric_limits<Signed>::max());

  const std::size_t len = std::max(morse.coeffs().size(), poincare.coeffs().size());
  std::vector<Signed> diff(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    const auto a = morse.coeff(k);
    const auto b = poincare.coeff(k);
    if (a > kMax || b > kMax)
      throw std::overflow_error("polynomial coefficient too large for remainder");
    diff[k] = static_cast<Signed>(a) - static_cast<Signed>(b);
  }
  while (!diff.empty() && diff.back() == 0)
    diff.pop_back();
  if (diff.empty())
    return IntPolynomial{};

  // q_{m-1} = d_m, q_{k-1} = d_k - q_k, remainder d_0 - q_0.
  const std::size_t m = diff.size() - 1;
  std::vector<Signed> quotient(m, 0);
  Signed carry = 0;
  for (std::size_t k = m; k >= 1; --k) {
    Signed q;
    if (__builtin_sub_overflow(diff[k], carry, &q))
      throw std::overflow_error("remainder overflow");
    quotient[k - 1] = q;
    carry = q;
  }
  if (diff[0] - carry != 0)
    return std::nullopt;

  std::vector<IntPolynomial::Coefficient> out;
  out.reserve(quotient.size());
  for (auto q : quotient) {
    if (q < 0)
      return std::nullopt;
    out.push_back(static_cast<IntPolynomial::Coefficient>(q));
  }
  return IntPolynomial(std::move(out));
}

}  // namespace somorse
