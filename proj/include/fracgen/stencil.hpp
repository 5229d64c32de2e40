#pragma once

#include <string>
#include <vector>

#include "fracgen/rational.hpp"

namespace fracgen {

struct StencilNode {
  Rational offset;  // in units of h, relative to x
  Rational coeff;

  friend bool operator==(const StencilNode&, const StencilNode&) = default;
};

/// d^n f/dx^n (x) ~ h^{-n} sum_k coeff_k f(x + offset_k h) + O(h^p).
///
/// Convention: f_j := f(x + j h). The left operator puts weight w_k on
/// offset r - k, k = 0..np, so the n-th moment is +n!. Zero coefficients
/// are kept, the node list always has np + 1 entries.
struct Stencil {
  int n = 1;
  int p = 1;
  Rational r;
  std::vector<StencilNode> nodes;

  int order() const { return p; }
  friend bool operator==(const Stencil&, const Stencil&) = default;
};

/// Expands (beta_0 + ... + beta_p z^p)^n exactly with lambda = r / n.
Stencil integer_stencil(int n, int p, const Rational& r);

/// sum_k coeff_k offset_k^m for m = 0..count-1 (count defaults to n + p).
std::vector<Rational> stencil_moments(const Stencil& s, int count = -1);

enum class StencilFormat { Text, Json };

StencilFormat parse_stencil_format(const std::string& name);

/// Text: "f''(x) ≈ (1·f₁ − 2·f₀ + 1·f₋₁)/h^2, order 2", zero terms dropped.
/// Json: exact rationals, all np + 1 nodes.
std::string render_stencil(const Stencil& s, StencilFormat format);

Stencil stencil_from_json(const std::string& text);

}  // namespace fracgen
