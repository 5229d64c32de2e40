#pragma once

#include <cstddef>
#include <vector>

#include "fracgen/coeffgen.hpp"
#include "fracgen/series.hpp"

namespace fracgen {

/// Outcome of expanding G_r(z) = z^{-alpha} W(e^{-z}) e^{rz} = sum a_k z^k.
template <class T>
struct OrderReport {
  GeneratorSpec<T> spec;
  std::size_t K = 0;
  /// Largest q with a_0 = 1 and a_1..a_{q-1} = 0; K + 1 when every computed
  /// coefficient past a_0 vanishes, 0 when a_0 != 1.
  int confirmed_order = 0;
  T leading_coeff{};  // a_p
  T b0_residual{};    // sum_j beta_j, zero for a consistent generator
  std::vector<T> a_tail;  // a_p..a_K
  std::vector<T> coeffs;  // a_0..a_K
};

/// Default expansion depth: a_p plus three tail terms.
inline std::size_t default_expansion_order(int p) { return static_cast<std::size_t>(p) + 4; }

/// Expands G_r(z) through the moments b_n = (1/n!) sum_j (lambda - j)^n beta_j,
/// G = (b_1 + b_2 z + b_3 z^2 + ...)^alpha, lambda = r / alpha.
/// Throws InconsistentGenerator if b_0 != 0 (pole at z = 0) or if b_1 is not
/// positive (no real branch); for exact input b_1 must be exactly 1.
template <class T>
TruncatedSeries<T> g_series(const BetaVector<T>& b, const T& alpha, const T& r, std::size_t K);

/// Builds the generator for spec and checks its order. K >= p + 2.
template <class T>
OrderReport<T> verify_order(const GeneratorSpec<T>& spec, std::size_t K);

/// Checks the order of an arbitrary (possibly hand-edited) generator.
template <class T>
OrderReport<T> verify_generator(const Generator<T>& g, std::size_t K);

/// Zero threshold for floating-point coefficients:
/// 1e-10 * max(1, sum_j |beta_j| e^{|lambda - j|}).
double series_zero_tolerance(const BetaVector<double>& b, double lambda);

}  // namespace fracgen
