#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace su2b {

using Coeff = std::int64_t;

// Overflow-checked integer helpers; throw std::overflow_error.
Coeff checked_add(Coeff x, Coeff y);
Coeff checked_sub(Coeff x, Coeff y);
Coeff checked_mul(Coeff x, Coeff y);

/// Dense integer polynomial in t, coefficients indexed by exponent.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coeffs);
  IntPolynomial(std::initializer_list<Coeff> coeffs);

  static IntPolynomial monomial(int exponent, Coeff coeff = 1);
  /// Build from (exponent, coefficient) pairs; repeated exponents accumulate.
  static IntPolynomial from_terms(std::span<const std::pair<int, Coeff>> terms);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Coeff operator[](int exponent) const;
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<int, Coeff>> terms() const;

  /// "t + t^11 + 2t^15"
  std::string to_string() const;
  /// "1:1 11:1 15:2"
  std::string to_sparse_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  void trim();
  std::vector<Coeff> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
Coeff eval_at_one(const IntPolynomial& p);

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) { return poly_add(p, q); }
inline IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return poly_sub(p, q); }
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return poly_mul(p, q); }

/// Power series known through t^order. Immutable after construction.
class TruncatedSeries {
public:
  TruncatedSeries(int order, std::vector<Coeff> coeffs);

  int order() const { return order_; }
  Coeff operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /// Product with a polynomial, truncated at the same order.
  TruncatedSeries times(const IntPolynomial& p) const;
  /// Truncation of this series as a polynomial.
  IntPolynomial as_polynomial() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  int order_;
  std::vector<Coeff> coeffs_;
};

/// Expand z(t) / ((1 - t^a)(1 - t^b)) through t^order using
/// c_n = z_n + c_{n-a} + c_{n-b} - c_{n-a-b}.
TruncatedSeries series_div_geom(const IntPolynomial& z, int a, int b, int order);

/// Truncation of z to exponents <= order, as a series.
TruncatedSeries truncate(const IntPolynomial& z, int order);

}  // namespace su2b
