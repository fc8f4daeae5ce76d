#include "su2branch/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace su2b {

Coeff checked_add(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Coeff checked_sub(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Coeff checked_mul(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

IntPolynomial IntPolynomial::monomial(int exponent, Coeff coeff) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  std::vector<Coeff> c(static_cast<std::size_t>(exponent) + 1, 0);
  c.back() = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_terms(std::span<const std::pair<int, Coeff>> terms) {
  int top = -1;
  for (const auto& [e, c] : terms) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    top = std::max(top, e);
  }
  std::vector<Coeff> c(static_cast<std::size_t>(top + 1), 0);
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e)] = checked_add(c[static_cast<std::size_t>(e)], v);
  return IntPolynomial(std::move(c));
}

Coeff IntPolynomial::operator[](int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

std::vector<std::pair<int, Coeff>> IntPolynomial::terms() const {
  std::vector<std::pair<int, Coeff>> out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) out.emplace_back(static_cast<int>(e), coeffs_[e]);
  return out;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string IntPolynomial::to_sparse_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << ' ';
    first = false;
    os << e << ':' << c;
  }
  return os.str();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Coeff> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_add(p[static_cast<int>(i)], q[static_cast<int>(i)]);
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Coeff> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_sub(p[static_cast<int>(i)], q[static_cast<int>(i)]);
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Coeff> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
  }
  return IntPolynomial(std::move(c));
}

Coeff eval_at_one(const IntPolynomial& p) {
  Coeff s = 0;
  for (Coeff c : p.coeffs()) s = checked_add(s, c);
  return s;
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Coeff> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries TruncatedSeries::times(const IntPolynomial& p) const {
  std::vector<Coeff> out(coeffs_.size(), 0);
  const auto& pc = p.coeffs();
  for (std::size_t n = 0; n < out.size(); ++n) {
    Coeff acc = 0;
    for (std::size_t e = 0; e < pc.size() && e <= n; ++e)
      if (pc[e] != 0) acc = checked_add(acc, checked_mul(pc[e], coeffs_[n - e]));
    out[n] = acc;
  }
  return TruncatedSeries(order_, std::move(out));
}

IntPolynomial TruncatedSeries::as_polynomial() const { return IntPolynomial(coeffs_); }

TruncatedSeries series_div_geom(const IntPolynomial& z, int a, int b, int order) {
  if (a < 1 || b < 1) throw std::invalid_argument("series_div_geom: a and b must be positive");
  if (order < 0) throw std::invalid_argument("series_div_geom: negative order");
  std::vector<Coeff> c(static_cast<std::size_t>(order) + 1, 0);
  for (int n = 0; n <= order; ++n) {
    Coeff v = z[n];
    if (n >= a) v = checked_add(v, c[static_cast<std::size_t>(n - a)]);
    if (n >= b) v = checked_add(v, c[static_cast<std::size_t>(n - b)]);
    if (n >= a + b) v = checked_sub(v, c[static_cast<std::size_t>(n - a - b)]);
    c[static_cast<std::size_t>(n)] = v;
  }
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries truncate(const IntPolynomial& z, int order) {
  std::vector<Coeff> c(static_cast<std::size_t>(order) + 1, 0);
  for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = z[n];
  return TruncatedSeries(order, std::move(c));
}

}  // namespace su2b
