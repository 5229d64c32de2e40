#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracgen/coeffgen.hpp"
#include "fracgen/weights.hpp"

namespace fracgen {

enum class Side { Left, Right };

/// A function on [a, b] sampled at a + k h, zero-extended outside the
/// interval. Either backed by samples only, or by an evaluable function,
/// which also allows off-grid points (non-integer shifts).
class GridFn {
 public:
  static GridFn from_samples(double a, double b, double h, std::vector<double> samples);
  static GridFn from_function(double a, double b, double h, std::function<double(double)> fn);

  double a() const { return a_; }
  double b() const { return b_; }
  double h() const { return h_; }
  /// floor((b - a) / h) + 1
  std::size_t point_count() const { return count_; }
  bool evaluable() const { return static_cast<bool>(fn_); }

  /// Value at grid index i (zero outside [0, point_count)).
  double at_index(long long i) const;
  /// Value at an arbitrary point; throws OffGrid for samples-only input
  /// when x is not a grid point.
  double at(double x) const;
  /// Index i with a + i h == x (to rounding), if x is a grid point.
  std::optional<long long> grid_index(double x) const;

 private:
  GridFn(double a, double b, double h);

  double a_, b_, h_;
  std::size_t count_ = 0;
  std::vector<double> samples_;
  std::function<double(double)> fn_;
};

/// h^{-alpha} sum_{k=0}^{N + ceil(r)} w_k f(x -+ (k - r) h), with
/// N = floor((x - a)/h) for the left operator and floor((b - x)/h) for the
/// right one. Uses on-grid samples whenever the shift is an integer and x
/// is a grid point.
double apply_shifted_grunwald(const GridFn& f, double x, const GeneratorSpec<double>& spec,
                              const WeightSeq& w, Side side);

/// Weights needed by apply_shifted_grunwald at x.
std::size_t required_weight_count(const GridFn& f, double x, double r, Side side);

/// Left Riemann-Liouville derivative of x^mu with base point 0:
/// Gamma(mu+1)/Gamma(mu+1-alpha) x^{mu-alpha}.
double rl_derivative_power(double mu, double alpha, double x);

struct ConvergenceRow {
  double h = 0;
  double approx = 0;
  double exact = 0;
  double abs_error = 0;
  bool excluded = false;  // at the roundoff floor, left out of the fit
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  double slope = 0;     // NaN when fewer than two rows are usable
  double residual = 0;  // RMS deviation of log10(error) from the fitted line
  std::size_t fitted_rows() const;
  bool reached_roundoff_floor() const;
};

struct ConvergenceOptions {
  Side side = Side::Left;
  /// Right end of the domain [0, b]; defaults to 2 * x0.
  std::optional<double> domain_end;
};

/// Errors within this factor of machine epsilon (relative to |exact|) are
/// treated as roundoff and excluded from the slope fit.
inline constexpr double kRoundoffFloorFactor = 1e3;

/// Applies the operator to f(x) = x^mu (left) or (b - x)^mu (right) on
/// [0, b] for every h and fits log|error| against log h.
ConvergenceTable estimate_order(const GeneratorSpec<double>& spec, double mu, double x0,
                                std::span<const double> h_list, const ConvergenceOptions& options = {});

/// Exact variant: generator coefficients are computed in rationals first.
ConvergenceTable estimate_order(const GeneratorSpec<Rational>& spec, double mu, double x0,
                                std::span<const double> h_list, const ConvergenceOptions& options = {});

/// h_start, h_start/2, ... (count entries).
std::vector<double> halving_steps(double h_start, std::size_t count);

/// "h,approx,exact,error" rows and a trailing "# slope=...,residual=..." line.
std::string convergence_to_csv(const ConvergenceTable& table);

}  // namespace fracgen
