#pragma once

#include <string>

#include "fracgen/coeffgen.hpp"
#include "fracgen/stencil.hpp"
#include "fracgen/verify.hpp"

namespace fracgen {

// JSON documents. Exact values are written as "num/den" strings, floating
// values as JSON numbers. Parsers accept either and throw Parse on
// malformed input.

/// {"alpha", "p", "r", "lambda", "beta": [...]}
std::string generator_to_json(const Generator<Rational>& g);
std::string generator_to_json(const Generator<double>& g);
/// Reads alpha, r and beta; p is taken from the beta count and must match
/// "p" when present. lambda is recomputed from r / alpha.
Generator<Rational> generator_from_json(const std::string& text);

/// {"alpha", "p", "r", "confirmed_order", "leading_coeff", "tail": [...]}
std::string report_to_json(const OrderReport<Rational>& report);
std::string report_to_json(const OrderReport<double>& report);

/// {"n", "p", "r", "nodes": [{"offset", "coeff"}, ...], "order"}
std::string stencil_to_json(const Stencil& s);

}  // namespace fracgen
