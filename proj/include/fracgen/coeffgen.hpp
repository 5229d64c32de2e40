#pragma once

#include <span>
#include <vector>

#include "fracgen/polynomial.hpp"
#include "fracgen/rational.hpp"

namespace fracgen {

/// (alpha, p, r): fractional order, approximation order and shift of one
/// generating function W_{p,r}(z) = (beta_0 + ... + beta_p z^p)^alpha.
template <class T>
struct GeneratorSpec {
  T alpha;
  int p = 1;
  T r;

  /// Throws InvalidArgument unless alpha > 0 and p >= 1.
  void validate() const;
};

/// Normalized shift r / alpha.
template <class T>
T lambda_of(const GeneratorSpec<T>& spec);

/// Coefficients beta_0..beta_p of the polynomial P(z) with W = P(z)^alpha.
template <class T>
struct BetaVector {
  std::vector<T> betas;
  T lambda;

  int p() const { return static_cast<int>(betas.size()) - 1; }
  /// beta_0 == 0: the coefficients are fine but no real weight sequence
  /// can be expanded from them.
  bool has_zero_constant_term() const { return is_exact_zero(betas.front()); }
  Polynomial<T> polynomial() const { return Polynomial<T>(betas); }
};

/// A spec together with its coefficients. Generators read back from files
/// may carry betas that were not produced by make_generator.
template <class T>
struct Generator {
  GeneratorSpec<T> spec;
  BetaVector<T> beta;
};

/// beta_j = -(prod_{m != j} 1/(j-m)) * sum_{m != j} prod_{l != m,j} (lambda - l).
/// The product-of-sums form has no singularity at integer lambda.
template <class T>
BetaVector<T> beta_explicit(int p, const T& lambda);

/// Solves sum_j (lambda - j)^n beta_j = [n == 1], n = 0..p, by Gaussian
/// elimination on the Vandermonde matrix. Independent of beta_explicit.
template <class T>
BetaVector<T> beta_vandermonde(int p, const T& lambda);

/// The reciprocal form -(prod_{m != j} (lambda-m)/(j-m)) * sum_{m != j} 1/(lambda-m).
/// Singular for lambda in {0..p}; throws Domain there.
template <class T>
BetaVector<T> beta_reciprocal_form(int p, const T& lambda);

/// sum_j (lambda - j)^n beta_j - [n == 1].
template <class T>
T moment_residual(const BetaVector<T>& b, const T& lambda, int n);

/// Scale used to judge floating-point moment residuals, the size of the
/// summed terms: sum_j |beta_j| (1 + |lambda - j|)^n.
double moment_scale(const BetaVector<double>& b, double lambda, int n);

inline constexpr double kMomentTolerance = 1e-12;

/// True when every residual n = 0..p vanishes: exactly for Rational,
/// within kMomentTolerance * moment_scale for double.
template <class T>
bool satisfies_moment_conditions(const BetaVector<T>& b);

template <class T>
Generator<T> make_generator(const GeneratorSpec<T>& spec);

/// Vandermonde determinant prod_{i<j} (x_j - x_i).
template <class T>
T det_vandermonde(std::span<const T> xs);

/// Determinant of the Vandermonde variant with rows 1, x^2, x^3, ..., x^{q+1}:
/// prod_{i<j} (x_j - x_i) * sum_m prod_{l != m} x_l.
template <class T>
T det_u2(std::span<const T> xs);

}  // namespace fracgen
