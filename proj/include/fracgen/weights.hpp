#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fracgen/coeffgen.hpp"
#include "fracgen/polynomial.hpp"

namespace fracgen {

/// Grunwald weights w_0..w_M, the leading coefficients of (P(z))^alpha.
struct WeightSeq {
  std::vector<double> weights;
  GeneratorSpec<double> spec;

  std::size_t length() const { return weights.size() - 1; }  // M
  double operator[](std::size_t k) const { return weights[k]; }
};

/// J.C.P. Miller recurrence:
///   w_0 = beta_0^alpha,
///   w_m = 1/(m beta_0) sum_{j=1}^{min(m,p)} (j(alpha+1) - m) w_{m-j} beta_j.
/// Throws DegenerateGenerator when beta_0 == 0 and Domain when beta_0 < 0
/// with non-integer alpha or when the weights overflow.
WeightSeq miller_weights(const BetaVector<double>& b, double alpha, std::size_t M);

/// Same contract as miller_weights, computed as
/// beta_0^alpha * exp(alpha log(P(z)/beta_0)) on truncated series.
WeightSeq weights_series_oracle(const BetaVector<double>& b, double alpha, std::size_t M);

/// Converts an exact generator to floating point and runs miller_weights.
template <class T>
WeightSeq miller_weights(const Generator<T>& g, std::size_t M);

/// Exact weights for integer alpha = n: the coefficients of P(z)^n.
Polynomial<Rational> integer_power_weights(const BetaVector<Rational>& b, unsigned n);

/// Number of weights needed to reach the boundary N grid steps away with
/// shift r: N + ceil(r).
std::size_t weight_count_for(std::size_t steps_to_boundary, double r);

BetaVector<double> to_double(const BetaVector<Rational>& b);
GeneratorSpec<double> to_double(const GeneratorSpec<Rational>& spec);

/// "k,w_k" header, then one row per weight with 17 significant digits.
std::string weights_to_csv(const WeightSeq& w);

}  // namespace fracgen
