#include "fracgen/grunwald.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "fracgen/error.hpp"

namespace fracgen {

namespace {

constexpr double kGridTol = 1e-9;

long long floor_steps(double distance, double h) {
  return static_cast<long long>(std::floor(distance / h + kGridTol));
}

std::optional<long long> integer_shift(double r) {
  const double rounded = std::nearbyint(r);
  if (std::fabs(r - rounded) <= kGridTol) return static_cast<long long>(rounded);
  return std::nullopt;
}

long long steps_to_boundary(const GridFn& f, double x, Side side) {
  return side == Side::Left ? floor_steps(x - f.a(), f.h()) : floor_steps(f.b() - x, f.h());
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

GridFn::GridFn(double a, double b, double h) : a_(a), b_(b), h_(h) {
  if (!(h > 0.0) || !std::isfinite(h)) fail(ErrorCode::InvalidArgument, "grid spacing h must be > 0");
  if (!(b > a)) fail(ErrorCode::InvalidArgument, "grid interval needs b > a");
  count_ = static_cast<std::size_t>(floor_steps(b - a, h)) + 1;
}

GridFn GridFn::from_samples(double a, double b, double h, std::vector<double> samples) {
  GridFn out(a, b, h);
  if (samples.size() != out.count_)
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(out.count_) + " samples, got " +
                                         std::to_string(samples.size()));
  out.samples_ = std::move(samples);
  return out;
}

GridFn GridFn::from_function(double a, double b, double h, std::function<double(double)> fn) {
  if (!fn) fail(ErrorCode::InvalidArgument, "empty function handle");
  GridFn out(a, b, h);
  out.fn_ = std::move(fn);
  return out;
}

double GridFn::at_index(long long i) const {
  if (i < 0 || i >= static_cast<long long>(count_)) return 0.0;
  if (!samples_.empty()) return samples_[static_cast<std::size_t>(i)];
  return fn_(std::min(a_ + static_cast<double>(i) * h_, b_));
}

std::optional<long long> GridFn::grid_index(double x) const {
  const double t = (x - a_) / h_;
  const double i = std::nearbyint(t);
  if (std::fabs(t - i) <= kGridTol * std::max(1.0, std::fabs(t))) return static_cast<long long>(i);
  return std::nullopt;
}

double GridFn::at(double x) const {
  if (!fn_) {
    const auto i = grid_index(x);
    if (!i) fail(ErrorCode::OffGrid, "x = " + fmt17(x) + " is not a grid point and no function handle was given");
    return at_index(*i);
  }
  const double tol = kGridTol * h_;
  if (x < a_ - tol || x > b_ + tol) return 0.0;
  return fn_(std::clamp(x, a_, b_));
}

std::size_t required_weight_count(const GridFn& f, double x, double r, Side side) {
  const long long upper = steps_to_boundary(f, x, side) + static_cast<long long>(std::ceil(r - kGridTol));
  return upper < 0 ? 0 : static_cast<std::size_t>(upper) + 1;
}

double apply_shifted_grunwald(const GridFn& f, double x, const GeneratorSpec<double>& spec,
                              const WeightSeq& w, Side side) {
  const double tol = kGridTol * f.h();
  if (x < f.a() - tol || x > f.b() + tol) fail(ErrorCode::InvalidArgument, "x lies outside [a, b]");
  const std::size_t terms = required_weight_count(f, x, spec.r, side);
  if (w.weights.size() < terms)
    fail(ErrorCode::InvalidArgument, "need " + std::to_string(terms) + " weights, got " +
                                         std::to_string(w.weights.size()));

  const double dir = side == Side::Left ? 1.0 : -1.0;
  const auto shift = integer_shift(spec.r);
  const auto index = f.grid_index(x);
  double sum = 0.0;
  if (shift && index) {
    // node x -+ (k - r) h is grid index i -+ (k - r)
    for (std::size_t k = 0; k < terms; ++k) {
      const long long offset = *shift - static_cast<long long>(k);
      const long long node = side == Side::Left ? *index + offset : *index - offset;
      sum += w.weights[k] * f.at_index(node);
    }
  } else {
    if (!f.evaluable())
      fail(ErrorCode::OffGrid, "non-integer shift or off-grid x needs an evaluable function, not samples");
    for (std::size_t k = 0; k < terms; ++k) {
      const double offset = (spec.r - static_cast<double>(k)) * f.h();
      sum += w.weights[k] * f.at(x + dir * offset);
    }
  }
  return sum / std::pow(f.h(), spec.alpha);
}

double rl_derivative_power(double mu, double alpha, double x) {
  if (!(mu > -1.0)) fail(ErrorCode::Domain, "power mu must be > -1");
  if (!(x > 0.0)) fail(ErrorCode::Domain, "x must be > 0 (base point is 0)");
  const double g_arg = mu + 1.0 - alpha;
  if (g_arg <= 0.0 && g_arg == std::nearbyint(g_arg))
    fail(ErrorCode::Domain, "Gamma(mu + 1 - alpha) has a pole");
  return std::tgamma(mu + 1.0) / std::tgamma(g_arg) * std::pow(x, mu - alpha);
}

std::size_t ConvergenceTable::fitted_rows() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.excluded; }));
}

bool ConvergenceTable::reached_roundoff_floor() const {
  return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.excluded; });
}

namespace {

void validate_steps(std::span<const double> h_list) {
  if (h_list.size() < 4) fail(ErrorCode::InvalidArgument, "convergence study needs at least 4 step sizes");
  for (std::size_t i = 0; i < h_list.size(); ++i) {
    if (!(h_list[i] > 0.0)) fail(ErrorCode::InvalidArgument, "step sizes must be > 0");
    if (i > 0 && !(h_list[i] < h_list[i - 1]))
      fail(ErrorCode::InvalidArgument, "step sizes must be strictly decreasing");
  }
  const double ratio = h_list[1] / h_list[0];
  for (std::size_t i = 2; i < h_list.size(); ++i)
    if (std::fabs(h_list[i] / h_list[i - 1] - ratio) > 1e-9 * ratio)
      fail(ErrorCode::InvalidArgument, "step sizes must form a geometric sequence");
}

ConvergenceTable run_study(const GeneratorSpec<double>& spec, const BetaVector<double>& beta, double mu,
                           double x0, std::span<const double> h_list, const ConvergenceOptions& options) {
  validate_steps(h_list);
  const double b = options.domain_end.value_or(2.0 * x0);
  if (!(x0 > 0.0 && x0 < b)) fail(ErrorCode::InvalidArgument, "x0 must lie inside (0, b)");

  const bool left = options.side == Side::Left;
  const double exact = rl_derivative_power(mu, spec.alpha, left ? x0 : b - x0);
  const auto fn = [mu, b, left](double x) { return std::pow(left ? x : b - x, mu); };

  std::size_t max_terms = 0;
  for (double h : h_list) {
    const auto grid = GridFn::from_function(0.0, b, h, fn);
    max_terms = std::max(max_terms, required_weight_count(grid, x0, spec.r, options.side));
  }
  const WeightSeq w = miller_weights(beta, spec.alpha, max_terms == 0 ? 0 : max_terms - 1);

  ConvergenceTable table;
  for (double h : h_list) {
    const auto grid = GridFn::from_function(0.0, b, h, fn);
    ConvergenceRow row;
    row.h = h;
    row.approx = apply_shifted_grunwald(grid, x0, spec, w, options.side);
    row.exact = exact;
    row.abs_error = std::fabs(row.approx - exact);
    if (!std::isfinite(row.abs_error)) fail(ErrorCode::Domain, "non-finite error at h = " + fmt17(h));
    const double floor = kRoundoffFloorFactor * std::numeric_limits<double>::epsilon() * std::fabs(exact);
    row.excluded = row.abs_error <= floor;
    table.rows.push_back(row);
  }

  // least squares on (log h, log error)
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : table.rows)
    if (!row.excluded) pts.emplace_back(std::log10(row.h), std::log10(row.abs_error));
  if (pts.size() < 2) {
    table.slope = std::numeric_limits<double>::quiet_NaN();
    table.residual = std::numeric_limits<double>::quiet_NaN();
    return table;
  }
  double mx = 0, my = 0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  table.slope = sxy / sxx;
  double ss = 0;
  for (const auto& [x, y] : pts) {
    const double e = y - (my + table.slope * (x - mx));
    ss += e * e;
  }
  table.residual = std::sqrt(ss / static_cast<double>(pts.size()));
  return table;
}

}  // namespace

ConvergenceTable estimate_order(const GeneratorSpec<double>& spec, double mu, double x0,
                                std::span<const double> h_list, const ConvergenceOptions& options) {
  const auto g = make_generator(spec);
  return run_study(spec, g.beta, mu, x0, h_list, options);
}

ConvergenceTable estimate_order(const GeneratorSpec<Rational>& spec, double mu, double x0,
                                std::span<const double> h_list, const ConvergenceOptions& options) {
  const auto g = make_generator(spec);
  return run_study(to_double(spec), to_double(g.beta), mu, x0, h_list, options);
}

std::vector<double> halving_steps(double h_start, std::size_t count) {
  if (!(h_start > 0.0)) fail(ErrorCode::InvalidArgument, "h_start must be > 0");
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::ldexp(h_start, -static_cast<int>(i)));
  return out;
}

std::string convergence_to_csv(const ConvergenceTable& table) {
  std::ostringstream os;
  os << "h,approx,exact,error\n";
  for (const auto& row : table.rows)
    os << fmt17(row.h) << ',' << fmt17(row.approx) << ',' << fmt17(row.exact) << ',' << fmt17(row.abs_error)
       << '\n';
  os << "# slope=" << fmt17(table.slope) << ",residual=" << fmt17(table.residual)
     << ",fitted_rows=" << table.fitted_rows() << ",excluded_rows=" << table.rows.size() - table.fitted_rows()
     << '\n';
  return os.str();
}

}  // namespace fracgen
