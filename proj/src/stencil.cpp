#include "fracgen/stencil.hpp"

#include <sstream>

#include "fracgen/coeffgen.hpp"
#include "fracgen/error.hpp"
#include "fracgen/serialize.hpp"
#include "fracgen/weights.hpp"

namespace fracgen {

Stencil integer_stencil(int n, int p, const Rational& r) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "derivative order n must be >= 1");
  if (p < 1) fail(ErrorCode::InvalidArgument, "approximation order p must be >= 1");
  const auto beta = beta_explicit(p, r / Rational(n));
  const auto expanded = integer_power_weights(beta, static_cast<unsigned>(n));

  Stencil s{n, p, r, {}};
  const int count = n * p + 1;
  s.nodes.reserve(count);
  for (int k = 0; k < count; ++k) s.nodes.push_back({r - Rational(k), expanded.coeff(static_cast<std::size_t>(k))});
  return s;
}

std::vector<Rational> stencil_moments(const Stencil& s, int count) {
  if (count < 0) count = s.n + s.p;
  std::vector<Rational> out(static_cast<std::size_t>(count), Rational(0));
  for (const auto& node : s.nodes) {
    Rational power(1);
    for (int m = 0; m < count; ++m) {
      out[m] += node.coeff * power;
      power *= node.offset;
    }
  }
  return out;
}

StencilFormat parse_stencil_format(const std::string& name) {
  if (name == "text") return StencilFormat::Text;
  if (name == "json") return StencilFormat::Json;
  fail(ErrorCode::InvalidArgument, "unknown stencil format '" + name + "' (expected text or json)");
}

namespace {

std::string subscript(const Rational& offset) {
  if (!offset.is_integer()) return "_{" + offset.to_string() + "}";
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  const std::string plain = offset.to_string();
  for (char c : plain) out += c == '-' ? "₋" : digits[c - '0'];
  return out;
}

std::string derivative_symbol(int n) {
  if (n <= 3) return "f" + std::string(static_cast<std::size_t>(n), '\'') + "(x)";
  return "f^(" + std::to_string(n) + ")(x)";
}

}  // namespace

std::string render_stencil(const Stencil& s, StencilFormat format) {
  if (format == StencilFormat::Json) return stencil_to_json(s);

  std::ostringstream os;
  os << derivative_symbol(s.n) << " ≈ (";
  bool first = true;
  for (const auto& node : s.nodes) {
    if (node.coeff.is_zero()) continue;
    const Rational magnitude = node.coeff.abs();
    if (first) {
      if (node.coeff.sign() < 0) os << "−";
    } else {
      os << (node.coeff.sign() < 0 ? " − " : " + ");
    }
    os << magnitude << "·f" << subscript(node.offset);
    first = false;
  }
  if (first) os << "0";
  os << ")/h";
  if (s.n > 1) os << "^" << s.n;
  os << ", order " << s.order();
  return os.str();
}

}  // namespace fracgen
