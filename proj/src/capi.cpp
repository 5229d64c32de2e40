#include "fracgen/fracgen.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "fracgen/coeffgen.hpp"
#include "fracgen/error.hpp"
#include "fracgen/grunwald.hpp"
#include "fracgen/serialize.hpp"
#include "fracgen/stencil.hpp"
#include "fracgen/verify.hpp"
#include "fracgen/weights.hpp"

struct fracgen_generator {
  fracgen::Generator<fracgen::Rational> value;
};
struct fracgen_weights {
  fracgen::WeightSeq value;
};
struct fracgen_report {
  fracgen::OrderReport<fracgen::Rational> value;
};
struct fracgen_table {
  fracgen::ConvergenceTable value;
};
struct fracgen_stencil {
  fracgen::Stencil value;
};

namespace {

thread_local std::string last_error;

fracgen_status status_of(fracgen::ErrorCode code) {
  using fracgen::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return FRACGEN_E_INVALID_ARGUMENT;
    case ErrorCode::Parse: return FRACGEN_E_PARSE;
    case ErrorCode::Domain: return FRACGEN_E_DOMAIN;
    case ErrorCode::DegenerateGenerator: return FRACGEN_E_DEGENERATE;
    case ErrorCode::InconsistentGenerator: return FRACGEN_E_INCONSISTENT;
    case ErrorCode::OffGrid: return FRACGEN_E_OFF_GRID;
  }
  return FRACGEN_E_INTERNAL;
}

template <class F>
fracgen_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return FRACGEN_OK;
  } catch (const fracgen::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FRACGEN_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FRACGEN_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fracgen::fail(fracgen::ErrorCode::InvalidArgument, what);
}

char* copy_out(const std::string& s) {
  auto* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

fracgen::Side side_of(fracgen_side side) {
  return side == FRACGEN_RIGHT ? fracgen::Side::Right : fracgen::Side::Left;
}

}  // namespace

extern "C" {

const char* fracgen_version(void) { return "1.0.0"; }

const char* fracgen_last_error(void) { return last_error.c_str(); }

const char* fracgen_status_name(fracgen_status status) {
  switch (status) {
    case FRACGEN_OK: return "ok";
    case FRACGEN_E_INVALID_ARGUMENT: return "invalid argument";
    case FRACGEN_E_PARSE: return "parse error";
    case FRACGEN_E_DOMAIN: return "domain error";
    case FRACGEN_E_DEGENERATE: return "degenerate generator";
    case FRACGEN_E_INCONSISTENT: return "inconsistent generator";
    case FRACGEN_E_OFF_GRID: return "off-grid evaluation";
    case FRACGEN_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void fracgen_string_free(char* s) { std::free(s); }

fracgen_status fracgen_generator_create(const char* alpha, int p, const char* r, fracgen_generator** out) {
  return guarded([&] {
    require(alpha != nullptr && r != nullptr && out != nullptr, "null argument");
    fracgen::GeneratorSpec<fracgen::Rational> spec{fracgen::Rational::parse(alpha), p, fracgen::Rational::parse(r)};
    *out = new fracgen_generator{fracgen::make_generator(spec)};
  });
}

fracgen_status fracgen_generator_from_json(const char* json, fracgen_generator** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new fracgen_generator{fracgen::generator_from_json(json)};
  });
}

void fracgen_generator_free(fracgen_generator* g) { delete g; }

int fracgen_generator_order(const fracgen_generator* g) { return g ? g->value.beta.p() : -1; }

fracgen_status fracgen_generator_beta(const fracgen_generator* g, int index, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    require(index >= 0 && index <= g->value.beta.p(), "beta index out of range");
    *out = copy_out(g->value.beta.betas[static_cast<std::size_t>(index)].to_string());
  });
}

int fracgen_generator_has_zero_constant_term(const fracgen_generator* g) {
  return g && g->value.beta.has_zero_constant_term() ? 1 : 0;
}

fracgen_status fracgen_generator_to_json(const fracgen_generator* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = copy_out(fracgen::generator_to_json(g->value));
  });
}

fracgen_status fracgen_weights_compute(const fracgen_generator* g, size_t M, fracgen_weights** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = new fracgen_weights{fracgen::miller_weights(g->value, M)};
  });
}

void fracgen_weights_free(fracgen_weights* w) { delete w; }

size_t fracgen_weights_size(const fracgen_weights* w) { return w ? w->value.weights.size() : 0; }

const double* fracgen_weights_data(const fracgen_weights* w) { return w ? w->value.weights.data() : nullptr; }

fracgen_status fracgen_weights_to_csv(const fracgen_weights* w, char** out) {
  return guarded([&] {
    require(w != nullptr && out != nullptr, "null argument");
    *out = copy_out(fracgen::weights_to_csv(w->value));
  });
}

fracgen_status fracgen_apply_samples(const fracgen_generator* g, const fracgen_weights* w, double a, double b,
                                     double h, const double* samples, size_t count, double x, fracgen_side side,
                                     double* out) {
  return guarded([&] {
    require(g != nullptr && w != nullptr && out != nullptr, "null argument");
    require(samples != nullptr || count == 0, "null samples");
    auto grid = fracgen::GridFn::from_samples(a, b, h, std::vector<double>(samples, samples + count));
    *out = fracgen::apply_shifted_grunwald(grid, x, fracgen::to_double(g->value.spec), w->value, side_of(side));
  });
}

fracgen_status fracgen_apply_function(const fracgen_generator* g, const fracgen_weights* w, double a, double b,
                                      double h, fracgen_function f, void* user_data, double x, fracgen_side side,
                                      double* out) {
  return guarded([&] {
    require(g != nullptr && w != nullptr && f != nullptr && out != nullptr, "null argument");
    auto grid = fracgen::GridFn::from_function(a, b, h, [f, user_data](double t) { return f(t, user_data); });
    *out = fracgen::apply_shifted_grunwald(grid, x, fracgen::to_double(g->value.spec), w->value, side_of(side));
  });
}

fracgen_status fracgen_verify(const fracgen_generator* g, size_t K, fracgen_report** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const std::size_t depth = K == 0 ? fracgen::default_expansion_order(g->value.beta.p()) : K;
    *out = new fracgen_report{fracgen::verify_generator(g->value, depth)};
  });
}

void fracgen_report_free(fracgen_report* r) { delete r; }

int fracgen_report_confirmed_order(const fracgen_report* r) { return r ? r->value.confirmed_order : -1; }

fracgen_status fracgen_report_to_json(const fracgen_report* r, char** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = copy_out(fracgen::report_to_json(r->value));
  });
}

fracgen_status fracgen_converge(const fracgen_generator* g, double mu, double x0, double h_start, size_t h_count,
                                fracgen_side side, fracgen_table** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const auto steps = fracgen::halving_steps(h_start, h_count);
    fracgen::ConvergenceOptions options;
    options.side = side_of(side);
    *out = new fracgen_table{fracgen::estimate_order(g->value.spec, mu, x0, steps, options)};
  });
}

void fracgen_table_free(fracgen_table* t) { delete t; }

double fracgen_table_slope(const fracgen_table* t) { return t ? t->value.slope : 0.0; }

fracgen_status fracgen_table_to_csv(const fracgen_table* t, char** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null argument");
    *out = copy_out(fracgen::convergence_to_csv(t->value));
  });
}

fracgen_status fracgen_stencil_create(int n, int p, const char* r, fracgen_stencil** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = new fracgen_stencil{fracgen::integer_stencil(n, p, fracgen::Rational::parse(r))};
  });
}

fracgen_status fracgen_stencil_from_json(const char* json, fracgen_stencil** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new fracgen_stencil{fracgen::stencil_from_json(json)};
  });
}

void fracgen_stencil_free(fracgen_stencil* s) { delete s; }

size_t fracgen_stencil_size(const fracgen_stencil* s) { return s ? s->value.nodes.size() : 0; }

fracgen_status fracgen_stencil_render(const fracgen_stencil* s, const char* format, char** out) {
  return guarded([&] {
    require(s != nullptr && format != nullptr && out != nullptr, "null argument");
    *out = copy_out(fracgen::render_stencil(s->value, fracgen::parse_stencil_format(format)));
  });
}

int fracgen_stencil_equal(const fracgen_stencil* a, const fracgen_stencil* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

}  // extern "C"
