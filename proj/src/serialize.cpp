#include "fracgen/serialize.hpp"

#include <json.hpp>

#include "fracgen/error.hpp"

namespace fracgen {

using nlohmann::json;

namespace {

json value(const Rational& q) { return q.to_string(); }
json value(double x) { return x; }

template <class T>
json array_of(const std::vector<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(value(x));
  return out;
}

Rational read_rational(const json& j, const char* what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    // Go through the shortest decimal text so 0.5 stays 1/2.
    return Rational::parse(json(j.get<double>()).dump());
  }
  fail(ErrorCode::Parse, std::string("field '") + what + "' must be a rational string or number");
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) fail(ErrorCode::Parse, std::string("missing field '") + name + "'");
  return doc.at(name);
}

int read_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::Parse, std::string("field '") + what + "' must be an integer");
  return j.get<int>();
}

template <class T>
std::string generator_json(const Generator<T>& g) {
  json doc;
  doc["alpha"] = value(g.spec.alpha);
  doc["p"] = g.beta.p();
  doc["r"] = value(g.spec.r);
  doc["lambda"] = value(g.beta.lambda);
  doc["beta"] = array_of(g.beta.betas);
  return doc.dump(2);
}

template <class T>
std::string report_json(const OrderReport<T>& report) {
  json doc;
  doc["alpha"] = value(report.spec.alpha);
  doc["p"] = report.spec.p;
  doc["r"] = value(report.spec.r);
  doc["confirmed_order"] = report.confirmed_order;
  doc["leading_coeff"] = value(report.leading_coeff);
  doc["tail"] = array_of(report.a_tail);
  return doc.dump(2);
}

}  // namespace

std::string generator_to_json(const Generator<Rational>& g) { return generator_json(g); }
std::string generator_to_json(const Generator<double>& g) { return generator_json(g); }

Generator<Rational> generator_from_json(const std::string& text) {
  const json doc = parse_document(text);
  Generator<Rational> g;
  g.spec.alpha = read_rational(field(doc, "alpha"), "alpha");
  g.spec.r = read_rational(field(doc, "r"), "r");
  const json& betas = field(doc, "beta");
  if (!betas.is_array() || betas.size() < 2) fail(ErrorCode::Parse, "field 'beta' must list at least two coefficients");
  for (const auto& b : betas) g.beta.betas.push_back(read_rational(b, "beta"));
  g.spec.p = g.beta.p();
  if (doc.contains("p") && read_int(doc.at("p"), "p") != g.spec.p)
    fail(ErrorCode::Parse, "field 'p' does not match the number of beta coefficients");
  g.spec.validate();
  g.beta.lambda = lambda_of(g.spec);
  return g;
}

std::string report_to_json(const OrderReport<Rational>& report) { return report_json(report); }
std::string report_to_json(const OrderReport<double>& report) { return report_json(report); }

std::string stencil_to_json(const Stencil& s) {
  json doc;
  doc["n"] = s.n;
  doc["p"] = s.p;
  doc["r"] = s.r.to_string();
  json nodes = json::array();
  for (const auto& node : s.nodes) nodes.push_back({{"offset", node.offset.to_string()}, {"coeff", node.coeff.to_string()}});
  doc["nodes"] = std::move(nodes);
  doc["order"] = s.order();
  return doc.dump(2);
}

Stencil stencil_from_json(const std::string& text) {
  const json doc = parse_document(text);
  Stencil s;
  s.n = read_int(field(doc, "n"), "n");
  s.p = read_int(field(doc, "p"), "p");
  s.r = read_rational(field(doc, "r"), "r");
  const json& nodes = field(doc, "nodes");
  if (!nodes.is_array()) fail(ErrorCode::Parse, "field 'nodes' must be an array");
  for (const auto& node : nodes)
    s.nodes.push_back({read_rational(field(node, "offset"), "offset"), read_rational(field(node, "coeff"), "coeff")});
  if (doc.contains("order") && read_int(doc.at("order"), "order") != s.p)
    fail(ErrorCode::Parse, "field 'order' does not match 'p'");
  return s;
}

}  // namespace fracgen
