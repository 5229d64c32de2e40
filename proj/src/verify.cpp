#include "fracgen/verify.hpp"

#include <cmath>
#include <string>

#include "fracgen/error.hpp"

namespace fracgen {

namespace {

// Moments b_0..b_{count-1}.
template <class T>
std::vector<T> moments(const BetaVector<T>& b, const T& lambda, std::size_t count) {
  std::vector<T> out(count, T(0));
  std::vector<T> powers(b.betas.size(), T(1));  // (lambda - j)^n * beta_j
  for (std::size_t j = 0; j < b.betas.size(); ++j) powers[j] = b.betas[j];
  T factorial(1);
  for (std::size_t n = 0; n < count; ++n) {
    if (n > 0) {
      factorial *= T(static_cast<long long>(n));
      for (std::size_t j = 0; j < powers.size(); ++j) powers[j] *= lambda - T(static_cast<long long>(j));
    }
    T acc(0);
    for (const auto& v : powers) acc += v;
    out[n] = acc / factorial;
  }
  return out;
}

template <class T>
bool vanishes(const T& value, double tolerance) {
  if constexpr (is_exact_field_v<T>) {
    (void)tolerance;
    return value.is_zero();
  } else {
    return std::fabs(value) <= tolerance;
  }
}

template <class T>
double zero_tolerance_for(const BetaVector<T>& b, const T& lambda) {
  if constexpr (is_exact_field_v<T>) {
    (void)b;
    (void)lambda;
    return 0.0;
  } else {
    return series_zero_tolerance(b, lambda);
  }
}

}  // namespace

double series_zero_tolerance(const BetaVector<double>& b, double lambda) {
  double scale = 0.0;
  for (std::size_t j = 0; j < b.betas.size(); ++j)
    scale += std::fabs(b.betas[j]) * std::exp(std::fabs(lambda - static_cast<double>(j)));
  return 1e-10 * std::max(1.0, scale);
}

template <class T>
TruncatedSeries<T> g_series(const BetaVector<T>& b, const T& alpha, const T& r, std::size_t K) {
  if (b.betas.size() < 2) fail(ErrorCode::InvalidArgument, "generator needs at least two coefficients");
  if (!(alpha > T(0))) fail(ErrorCode::InvalidArgument, "alpha must be > 0");
  const T lambda = r / alpha;
  const double tol = zero_tolerance_for(b, lambda);
  const auto bn = moments(b, lambda, K + 2);

  if (!vanishes(bn[0], tol)) {
    std::string shown;
    if constexpr (is_exact_field_v<T>) shown = bn[0].to_string();
    else shown = std::to_string(bn[0]);
    fail(ErrorCode::InconsistentGenerator,
         "G_r(z) has a pole at z = 0: sum of beta_j = " + shown + " != 0");
  }
  const T& b1 = bn[1];
  if (!(b1 > T(0)))
    fail(ErrorCode::InconsistentGenerator, "G_r(0) = b_1^alpha has no real value: b_1 <= 0");

  std::vector<T> inner(K + 1, T(0));
  inner[0] = T(1);
  for (std::size_t k = 1; k <= K; ++k) inner[k] = bn[k + 1] / b1;

  if constexpr (is_exact_field_v<T>) {
    if (!(b1 == T(1)))
      fail(ErrorCode::InconsistentGenerator,
           "G_r(0) = b_1^alpha != 1 with b_1 = " + b1.to_string() + " (generator not normalized)");
    return series_pow_alpha(TruncatedSeries<T>(std::move(inner)), alpha);
  } else {
    return series_scale(series_pow_alpha(TruncatedSeries<T>(std::move(inner)), alpha), std::pow(b1, alpha));
  }
}

template <class T>
OrderReport<T> verify_generator(const Generator<T>& g, std::size_t K) {
  const int p = g.beta.p();
  if (K < static_cast<std::size_t>(p) + 2)
    fail(ErrorCode::InvalidArgument, "expansion order K must be >= p + 2");
  const auto series = g_series(g.beta, g.spec.alpha, g.spec.r, K);
  const T lambda = g.spec.r / g.spec.alpha;
  const double tol = zero_tolerance_for(g.beta, lambda);

  OrderReport<T> report;
  report.spec = g.spec;
  report.spec.p = p;
  report.K = K;
  report.coeffs.assign(series.coeffs().begin(), series.coeffs().end());
  T b0(0);
  for (const auto& beta : g.beta.betas) b0 += beta;
  report.b0_residual = b0;

  if (!vanishes(series[0] - T(1), tol)) {
    report.confirmed_order = 0;
  } else {
    std::size_t q = 1;
    while (q <= K && vanishes(series[q], tol)) ++q;
    report.confirmed_order = static_cast<int>(q);
  }
  report.leading_coeff = series[static_cast<std::size_t>(p)];
  report.a_tail.assign(report.coeffs.begin() + p, report.coeffs.end());
  return report;
}

template <class T>
OrderReport<T> verify_order(const GeneratorSpec<T>& spec, std::size_t K) {
  return verify_generator(make_generator(spec), K);
}

template TruncatedSeries<Rational> g_series(const BetaVector<Rational>&, const Rational&, const Rational&,
                                            std::size_t);
template TruncatedSeries<double> g_series(const BetaVector<double>&, const double&, const double&,
                                          std::size_t);
template OrderReport<Rational> verify_generator(const Generator<Rational>&, std::size_t);
template OrderReport<double> verify_generator(const Generator<double>&, std::size_t);
template OrderReport<Rational> verify_order(const GeneratorSpec<Rational>&, std::size_t);
template OrderReport<double> verify_order(const GeneratorSpec<double>&, std::size_t);

}  // namespace fracgen
