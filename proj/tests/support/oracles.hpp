#pragma once

// Test-only oracles and fixtures. Nothing here calls into the code paths
// it is used to check.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fracgen/rational.hpp"

namespace fracgen::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

inline std::vector<Rational> qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(q(s));
  return out;
}

/// Determinant by Laplace expansion along the first row.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational out(0);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t row = 1; row < n; ++row) {
      std::vector<Rational> r;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) r.push_back(m[row][c]);
      minor.push_back(std::move(r));
    }
    const Rational term = m[0][col] * cofactor_det(minor);
    out += (col % 2 == 0) ? term : -term;
  }
  return out;
}

/// Matrix with rows 1, x^2, x^3, ..., x^{q+1}.
inline std::vector<std::vector<Rational>> u2_matrix(const std::vector<Rational>& xs) {
  const std::size_t n = xs.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t col = 0; col < n; ++col) {
    m[0][col] = Rational(1);
    for (std::size_t row = 1; row < n; ++row) m[row][col] = xs[col].pow(static_cast<int>(row) + 1);
  }
  return m;
}

/// (-1)^k binom(alpha, k) = (-1)^k Gamma(alpha+1) / (Gamma(alpha+1-k) k!),
/// evaluated through log-Gamma in extended precision.
inline double gamma_binomial_weight(double alpha, int k) {
  const long double a = alpha;
  if (a == std::floor(a) && k > static_cast<int>(a)) return 0.0;
  int s1 = 1, s2 = 1;
  const long double l1 = lgammal_r(a + 1.0L, &s1);
  const long double l2 = lgammal_r(a + 1.0L - k, &s2);
  const long double l3 = lgammal(static_cast<long double>(k) + 1.0L);
  const long double magnitude = expl(l1 - l2 - l3);
  const int sign = s1 * s2 * ((k % 2 == 0) ? 1 : -1);
  return static_cast<double>(sign * magnitude);
}

/// Random rational with numerator in [-num_max, num_max] and denominator
/// in [1, den_max].
class RationalSampler {
 public:
  explicit RationalSampler(unsigned seed, long num_max = 60, long den_max = 17)
      : rng_(seed), num_(-num_max, num_max), den_(1, den_max) {}
  Rational operator()() { return Rational(num_(rng_), den_(rng_)); }

 private:
  std::mt19937 rng_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};

/// Lubich generators, ascending powers of z.
inline std::vector<std::vector<Rational>> lubich_table() {
  return {
      qs({"1", "-1"}),
      qs({"3/2", "-2", "1/2"}),
      qs({"11/6", "-3", "3/2", "-1/3"}),
      qs({"25/12", "-4", "3", "-4/3", "1/4"}),
      qs({"137/60", "-5", "5", "-10/3", "5/4", "-1/5"}),
      qs({"49/20", "-6", "15/2", "-20/3", "15/4", "-6/5", "1/6"}),
  };
}

/// Coefficient table of beta_j as polynomials in lambda (ascending powers),
/// indexed [p-1][j].
inline std::vector<std::vector<std::vector<Rational>>> beta_polynomial_table() {
  return {
      {qs({"1"}), qs({"-1"})},
      {qs({"3/2", "-1"}), qs({"-2", "2"}), qs({"1/2", "-1"})},
      {qs({"11/6", "-2", "1/2"}), qs({"-3", "5", "-3/2"}), qs({"3/2", "-4", "3/2"}), qs({"-1/3", "1", "-1/2"})},
      {qs({"25/12", "-35/12", "5/4", "-1/6"}), qs({"-4", "26/3", "-9/2", "2/3"}), qs({"3", "-19/2", "6", "-1"}),
       qs({"-4/3", "14/3", "-7/2", "2/3"}), qs({"1/4", "-11/12", "3/4", "-1/6"})},
      {qs({"137/60", "-15/4", "17/8", "-1/2", "1/24"}), qs({"-5", "77/6", "-71/8", "7/3", "-5/24"}),
       qs({"5", "-107/6", "59/4", "-13/3", "5/12"}), qs({"-10/3", "13", "-49/4", "4", "-5/12"}),
       qs({"5/4", "-61/12", "41/8", "-11/6", "5/24"}), qs({"-1/5", "5/6", "-7/8", "1/3", "-1/24"})},
      {qs({"49/20", "-203/45", "49/16", "-35/36", "7/48", "-1/120"}),
       qs({"-6", "87/5", "-29/2", "31/6", "-5/6", "1/20"}),
       qs({"15/2", "-117/4", "461/16", "-137/12", "95/48", "-1/8"}),
       qs({"-20/3", "254/9", "-31", "121/9", "-5/2", "1/6"}),
       qs({"15/4", "-33/2", "307/16", "-107/12", "85/48", "-1/8"}),
       qs({"-6/5", "27/5", "-13/2", "19/6", "-2/3", "1/20"}),
       qs({"1/6", "-137/180", "15/16", "-17/36", "5/48", "-1/120"})},
  };
}

inline Rational eval_ascending(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Worked finite-difference examples: (n, p, r) and the expanded W(z)
/// coefficients w_0..w_{np}. The printed formulas attach w_k to f at
/// offset k - r.
struct WorkedStencil {
  int n;
  int p;
  const char* r;
  std::vector<Rational> w;
};

inline std::vector<WorkedStencil> worked_stencils() {
  return {
      {1, 2, "1", qs({"1/2", "0", "-1/2"})},
      {1, 3, "2", qs({"-1/6", "1", "-1/2", "-1/3"})},
      {1, 3, "3/2", qs({"-1/24", "9/8", "-9/8", "1/24"})},
      {2, 4, "2", qs({"1/16", "5/12", "-1/18", "-9/4", "73/24", "-59/36", "1/2", "-1/12", "1/144"})},
  };
}

/// max_k |a_k - b_k| / max_k |b_k|
inline double sup_relative_error(const std::vector<double>& a, const std::vector<double>& b) {
  double diff = 0, scale = 0;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    diff = std::max(diff, std::fabs(a[k] - b[k]));
    scale = std::max(scale, std::fabs(b[k]));
  }
  return scale == 0 ? diff : diff / scale;
}

}  // namespace fracgen::testing
