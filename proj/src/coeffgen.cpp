#include "fracgen/coeffgen.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fracgen/error.hpp"

namespace fracgen {

namespace {

template <class T>
T ipow(const T& base, int n) {
  T out(1);
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

void require_order(int p) {
  if (p < 1) fail(ErrorCode::InvalidArgument, "approximation order p must be >= 1, got " + std::to_string(p));
}

template <class T>
bool is_positive(const T& x) {
  return x > T(0);
}

}  // namespace

template <class T>
void GeneratorSpec<T>::validate() const {
  require_order(p);
  if constexpr (std::is_same_v<T, double>) {
    if (!std::isfinite(alpha) || !std::isfinite(r))
      fail(ErrorCode::InvalidArgument, "alpha and r must be finite");
  }
  if (!is_positive(alpha)) fail(ErrorCode::InvalidArgument, "alpha must be > 0");
}

template <class T>
T lambda_of(const GeneratorSpec<T>& spec) {
  if (is_exact_zero(spec.alpha)) fail(ErrorCode::InvalidArgument, "alpha must be nonzero");
  return spec.r / spec.alpha;
}

template <class T>
BetaVector<T> beta_explicit(int p, const T& lambda) {
  require_order(p);
  BetaVector<T> out{std::vector<T>(p + 1, T(0)), lambda};
  for (int j = 0; j <= p; ++j) {
    T denom(1);
    for (int m = 0; m <= p; ++m)
      if (m != j) denom *= T(j - m);
    T sum(0);
    for (int m = 0; m <= p; ++m) {
      if (m == j) continue;
      T prod(1);
      for (int l = 0; l <= p; ++l)
        if (l != m && l != j) prod *= lambda - T(l);
      sum += prod;
    }
    out.betas[j] = -sum / denom;
  }
  return out;
}

template <class T>
BetaVector<T> beta_vandermonde(int p, const T& lambda) {
  require_order(p);
  const int size = p + 1;
  // Augmented matrix rows n = 0..p: (lambda - j)^n | [n == 1]
  std::vector<std::vector<T>> a(size, std::vector<T>(size + 1, T(0)));
  for (int n = 0; n < size; ++n) {
    for (int j = 0; j < size; ++j) a[n][j] = ipow(lambda - T(j), n);
    a[n][size] = T(n == 1 ? 1 : 0);
  }
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    for (int row = col + 1; row < size; ++row)
      if (abs_value(a[row][col]) > abs_value(a[pivot][col])) pivot = row;
    if (is_exact_zero(a[pivot][col])) fail(ErrorCode::Domain, "singular Vandermonde system");
    std::swap(a[col], a[pivot]);
    for (int row = col + 1; row < size; ++row) {
      if (is_exact_zero(a[row][col])) continue;
      const T factor = a[row][col] / a[col][col];
      for (int k = col; k <= size; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  BetaVector<T> out{std::vector<T>(size, T(0)), lambda};
  for (int row = size - 1; row >= 0; --row) {
    T acc = a[row][size];
    for (int k = row + 1; k < size; ++k) acc -= a[row][k] * out.betas[k];
    out.betas[row] = acc / a[row][row];
  }
  return out;
}

template <class T>
BetaVector<T> beta_reciprocal_form(int p, const T& lambda) {
  require_order(p);
  for (int m = 0; m <= p; ++m)
    if (is_exact_zero(lambda - T(m)))
      fail(ErrorCode::Domain, "reciprocal form is singular at lambda = " + std::to_string(m));
  BetaVector<T> out{std::vector<T>(p + 1, T(0)), lambda};
  for (int j = 0; j <= p; ++j) {
    T prod(1);
    T sum(0);
    for (int m = 0; m <= p; ++m) {
      if (m == j) continue;
      prod *= (lambda - T(m)) / T(j - m);
      sum += T(1) / (lambda - T(m));
    }
    out.betas[j] = -prod * sum;
  }
  return out;
}

template <class T>
T moment_residual(const BetaVector<T>& b, const T& lambda, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "moment index must be >= 0");
  T acc(0);
  for (int j = 0; j <= b.p(); ++j) acc += ipow(lambda - T(j), n) * b.betas[j];
  if (n == 1) acc -= T(1);
  return acc;
}

double moment_scale(const BetaVector<double>& b, double lambda, int n) {
  double sum = 0.0;
  for (std::size_t j = 0; j < b.betas.size(); ++j)
    sum += std::fabs(b.betas[j]) * std::pow(1.0 + std::fabs(lambda - static_cast<double>(j)), n);
  return sum;
}

template <class T>
bool satisfies_moment_conditions(const BetaVector<T>& b) {
  for (int n = 0; n <= b.p(); ++n) {
    const T res = moment_residual(b, b.lambda, n);
    if constexpr (is_exact_field_v<T>) {
      if (!res.is_zero()) return false;
    } else {
      if (!(std::fabs(res) <= kMomentTolerance * moment_scale(b, b.lambda, n))) return false;
    }
  }
  return true;
}

template <class T>
Generator<T> make_generator(const GeneratorSpec<T>& spec) {
  spec.validate();
  return Generator<T>{spec, beta_explicit(spec.p, lambda_of(spec))};
}

template <class T>
T det_vandermonde(std::span<const T> xs) {
  T out(1);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) out *= xs[j] - xs[i];
  return out;
}

template <class T>
T det_u2(std::span<const T> xs) {
  T sum(0);
  for (std::size_t m = 0; m < xs.size(); ++m) {
    T prod(1);
    for (std::size_t l = 0; l < xs.size(); ++l)
      if (l != m) prod *= xs[l];
    sum += prod;
  }
  return det_vandermonde(xs) * sum;
}

#define FRACGEN_INSTANTIATE(T)                                                 \
  template struct GeneratorSpec<T>;                                            \
  template T lambda_of(const GeneratorSpec<T>&);                               \
  template BetaVector<T> beta_explicit(int, const T&);                         \
  template BetaVector<T> beta_vandermonde(int, const T&);                      \
  template BetaVector<T> beta_reciprocal_form(int, const T&);                  \
  template T moment_residual(const BetaVector<T>&, const T&, int);             \
  template bool satisfies_moment_conditions(const BetaVector<T>&);             \
  template Generator<T> make_generator(const GeneratorSpec<T>&);               \
  template T det_vandermonde(std::span<const T>);                              \
  template T det_u2(std::span<const T>);

FRACGEN_INSTANTIATE(Rational)
FRACGEN_INSTANTIATE(double)

#undef FRACGEN_INSTANTIATE

}  // namespace fracgen
