#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracgen/error.hpp"
#include "fracgen/polynomial.hpp"
#include "fracgen/rational.hpp"

namespace fracgen {

/// Power series c_0 + c_1 z + ... + c_K z^K + O(z^{K+1}). The truncation
/// order K is part of the value; binary operations require equal K.
template <class T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(ErrorCode::InvalidArgument, "truncated series needs at least one coefficient");
  }

  static TruncatedSeries constant(const T& value, std::size_t order) {
    std::vector<T> c(order + 1, T(0));
    c[0] = value;
    return TruncatedSeries(std::move(c));
  }

  static TruncatedSeries from_polynomial(const Polynomial<T>& poly, std::size_t order) {
    std::vector<T> c(order + 1, T(0));
    for (std::size_t k = 0; k <= order; ++k) c[k] = poly.coeff(k);
    return TruncatedSeries(std::move(c));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const T& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const T> coeffs() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<T> coeffs_;
};

namespace detail {

template <class T>
void require_same_order(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (a.order() != b.order())
    fail(ErrorCode::InvalidArgument, "truncation order mismatch: " + std::to_string(a.order()) + " vs " +
                                         std::to_string(b.order()));
}

}  // namespace detail

/// Cauchy product truncated at the common order.
template <class T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::require_same_order(a, b);
  const std::size_t K = a.order();
  std::vector<T> out(K + 1, T(0));
  for (std::size_t i = 0; i <= K; ++i) {
    if (is_exact_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= K; ++j) out[i + j] += a[i] * b[j];
  }
  return TruncatedSeries<T>(std::move(out));
}

template <class T>
TruncatedSeries<T> series_add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::require_same_order(a, b);
  std::vector<T> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return TruncatedSeries<T>(std::move(out));
}

template <class T>
TruncatedSeries<T> series_scale(const TruncatedSeries<T>& a, const T& factor) {
  std::vector<T> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c *= factor;
  return TruncatedSeries<T>(std::move(out));
}

/// log(s) for s with constant term exactly 1, via L' = s'/s.
template <class T>
TruncatedSeries<T> series_log(const TruncatedSeries<T>& s) {
  if (!(s[0] == T(1))) fail(ErrorCode::InvalidArgument, "series_log needs constant term 1");
  const std::size_t K = s.order();
  // q = s'/s, degree K-1
  std::vector<T> q(K, T(0));
  for (std::size_t k = 0; k < K; ++k) {
    T acc = T(static_cast<long long>(k + 1)) * s[k + 1];
    for (std::size_t j = 1; j <= k; ++j) acc -= s[j] * q[k - j];
    q[k] = acc;
  }
  std::vector<T> out(K + 1, T(0));
  for (std::size_t k = 1; k <= K; ++k) out[k] = q[k - 1] / T(static_cast<long long>(k));
  return TruncatedSeries<T>(std::move(out));
}

/// exp(s) for s with zero constant term, via E' = s' E.
template <class T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T>& s) {
  if (!is_exact_zero(s[0])) fail(ErrorCode::InvalidArgument, "series_exp needs zero constant term");
  const std::size_t K = s.order();
  std::vector<T> out(K + 1, T(0));
  out[0] = T(1);
  for (std::size_t k = 1; k <= K; ++k) {
    T acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      if (is_exact_zero(s[j])) continue;
      acc += T(static_cast<long long>(j)) * s[j] * out[k - j];
    }
    out[k] = acc / T(static_cast<long long>(k));
  }
  return TruncatedSeries<T>(std::move(out));
}

/// s^alpha = exp(alpha log s) for s with constant term exactly 1. Rational
/// input with rational alpha stays exact.
template <class T>
TruncatedSeries<T> series_pow_alpha(const TruncatedSeries<T>& s, const T& alpha) {
  if (!(s[0] == T(1)))
    fail(ErrorCode::InvalidArgument, "series_pow_alpha needs constant term exactly 1");
  return series_exp(series_scale(series_log(s), alpha));
}

}  // namespace fracgen
