#include "fracgen/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fracgen/error.hpp"
#include "fracgen/series.hpp"

namespace fracgen {

namespace {

bool is_integral(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

double leading_weight(double beta0, double alpha) {
  if (beta0 == 0.0)
    fail(ErrorCode::DegenerateGenerator,
         "zero constant term: beta_0 = 0, choose a different shift");
  if (beta0 < 0.0 && !is_integral(alpha))
    fail(ErrorCode::Domain, "beta_0 < 0 with non-integer alpha gives complex weights");
  return std::pow(beta0, alpha);
}

void check_inputs(const BetaVector<double>& b, double alpha) {
  if (b.betas.size() < 2) fail(ErrorCode::InvalidArgument, "generator needs at least two coefficients");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) fail(ErrorCode::InvalidArgument, "alpha must be finite and > 0");
}

void check_finite(const std::vector<double>& w) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!std::isfinite(w[k]))
      fail(ErrorCode::Domain, "weight w_" + std::to_string(k) + " is not finite (the expansion diverges)");
}

GeneratorSpec<double> spec_for(const BetaVector<double>& b, double alpha) {
  return GeneratorSpec<double>{alpha, b.p(), b.lambda * alpha};
}

}  // namespace

WeightSeq miller_weights(const BetaVector<double>& b, double alpha, std::size_t M) {
  check_inputs(b, alpha);
  const auto& beta = b.betas;
  const std::size_t p = beta.size() - 1;
  std::vector<double> w(M + 1, 0.0);
  w[0] = leading_weight(beta[0], alpha);
  // integer alpha: the expansion is a polynomial of degree alpha * p
  const std::size_t last = is_integral(alpha) ? std::min(M, static_cast<std::size_t>(alpha) * p) : M;
  std::vector<long double> acc_w(last + 1, 0.0L);
  acc_w[0] = w[0];
  const long double a = alpha;
  for (std::size_t m = 1; m <= last; ++m) {
    const long double dm = static_cast<long double>(m);
    long double acc = 0.0L;
    for (std::size_t j = 1; j <= std::min(m, p); ++j)
      acc += (static_cast<long double>(j) * (a + 1.0L) - dm) * acc_w[m - j] * beta[j];
    acc_w[m] = acc / (dm * beta[0]);
    w[m] = static_cast<double>(acc_w[m]);
  }
  check_finite(w);
  return WeightSeq{std::move(w), spec_for(b, alpha)};
}

WeightSeq weights_series_oracle(const BetaVector<double>& b, double alpha, std::size_t M) {
  check_inputs(b, alpha);
  using Series = TruncatedSeries<long double>;
  const double lead = leading_weight(b.betas[0], alpha);
  std::vector<long double> normalized(M + 1, 0.0L);
  for (std::size_t j = 0; j < b.betas.size() && j <= M; ++j)
    normalized[j] = static_cast<long double>(b.betas[j]) / b.betas[0];
  normalized[0] = 1.0L;
  const Series base(std::move(normalized));
  Series powered = Series::constant(1.0L, M);
  if (is_integral(alpha)) {
    for (int i = 0; i < static_cast<int>(alpha); ++i) powered = series_mul(powered, base);
  } else {
    powered = series_pow_alpha(base, static_cast<long double>(alpha));
  }
  std::vector<double> w(M + 1, 0.0);
  for (std::size_t k = 0; k <= M; ++k) w[k] = static_cast<double>(lead * powered[k]);
  check_finite(w);
  return WeightSeq{std::move(w), spec_for(b, alpha)};
}

template <class T>
WeightSeq miller_weights(const Generator<T>& g, std::size_t M) {
  if constexpr (is_exact_field_v<T>) {
    return miller_weights(to_double(g.beta), g.spec.alpha.to_double(), M);
  } else {
    return miller_weights(g.beta, g.spec.alpha, M);
  }
}

template WeightSeq miller_weights(const Generator<Rational>&, std::size_t);
template WeightSeq miller_weights(const Generator<double>&, std::size_t);

Polynomial<Rational> integer_power_weights(const BetaVector<Rational>& b, unsigned n) {
  return b.polynomial().pow(n);
}

std::size_t weight_count_for(std::size_t steps_to_boundary, double r) {
  const double extra = std::ceil(r);
  return steps_to_boundary + (extra > 0 ? static_cast<std::size_t>(extra) : 0);
}

BetaVector<double> to_double(const BetaVector<Rational>& b) {
  BetaVector<double> out{{}, b.lambda.to_double()};
  out.betas.reserve(b.betas.size());
  for (const auto& q : b.betas) out.betas.push_back(q.to_double());
  return out;
}

GeneratorSpec<double> to_double(const GeneratorSpec<Rational>& spec) {
  return GeneratorSpec<double>{spec.alpha.to_double(), spec.p, spec.r.to_double()};
}

std::string weights_to_csv(const WeightSeq& w) {
  std::ostringstream os;
  os << "k,w_k\n";
  char buf[64];
  for (std::size_t k = 0; k < w.weights.size(); ++k) {
    const double x = w.weights[k] == 0.0 ? 0.0 : w.weights[k];  // no "-0"
    std::snprintf(buf, sizeof buf, "%.17g", x);
    os << k << ',' << buf << '\n';
  }
  return os.str();
}

}  // namespace fracgen
