// fracgen command-line front end. Talks to the library only through the C
// interface in fracgen.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fracgen/fracgen.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string alpha;
  int p = 1;
  std::string r = "0";
  std::string format;
  std::string out;
  std::size_t M = 16;
  std::size_t K = 0;
  int n = 1;
  double mu = 8.0;
  double x0 = 1.0;
  double h_start = 0.0625;
  std::size_t h_count = 6;
  std::string side = "left";
  std::string beta_file;
  bool verbose = false;
};

struct StringDeleter {
  void operator()(char* s) const { fracgen_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* h) const { Free(h); }
};
using Generator = std::unique_ptr<fracgen_generator, HandleDeleter<fracgen_generator, fracgen_generator_free>>;
using Weights = std::unique_ptr<fracgen_weights, HandleDeleter<fracgen_weights, fracgen_weights_free>>;
using Report = std::unique_ptr<fracgen_report, HandleDeleter<fracgen_report, fracgen_report_free>>;
using Table = std::unique_ptr<fracgen_table, HandleDeleter<fracgen_table, fracgen_table_free>>;
using StencilHandle = std::unique_ptr<fracgen_stencil, HandleDeleter<fracgen_stencil, fracgen_stencil_free>>;

// Carries the exit code for a failed library call up to main.
struct CommandError {
  int exit_code;
  std::string message;
};

void check(fracgen_status status, const char* context) {
  if (status == FRACGEN_OK) return;
  const int code =
      (status == FRACGEN_E_PARSE || status == FRACGEN_E_INVALID_ARGUMENT) ? kExitUsage : kExitFailure;
  throw CommandError{code, std::string(context) + ": " + fracgen_status_name(status) + ": " + fracgen_last_error()};
}

void emit(const Options& opt, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (opt.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw CommandError{kExitUsage, "cannot open output file '" + opt.out + "'"};
  file << body;
}

std::string take(char* raw) { return OwnedString(raw).get(); }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw CommandError{kExitUsage, "unsupported --format '" + format + "'"};
}

Generator make_generator(const Options& opt) {
  fracgen_generator* raw = nullptr;
  check(fracgen_generator_create(opt.alpha.c_str(), opt.p, opt.r.c_str(), &raw), "generator");
  return Generator(raw);
}

Generator load_generator(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw CommandError{kExitUsage, "cannot read beta file '" + path + "'"};
  std::ostringstream buf;
  buf << file.rdbuf();
  fracgen_generator* raw = nullptr;
  check(fracgen_generator_from_json(buf.str().c_str(), &raw), "beta file");
  return Generator(raw);
}

fracgen_side parse_side(const std::string& side) {
  if (side == "left") return FRACGEN_LEFT;
  if (side == "right") return FRACGEN_RIGHT;
  throw CommandError{kExitUsage, "--side must be left or right"};
}

int cmd_coeffs(const Options& opt) {
  const std::string format = opt.format.empty() ? "json" : opt.format;
  require_format(format, {"json", "text"});
  auto g = make_generator(opt);
  if (format == "json") {
    char* json = nullptr;
    check(fracgen_generator_to_json(g.get(), &json), "coeffs");
    emit(opt, take(json));
  } else {
    std::ostringstream os;
    for (int j = 0; j <= fracgen_generator_order(g.get()); ++j) {
      char* beta = nullptr;
      check(fracgen_generator_beta(g.get(), j, &beta), "coeffs");
      os << "beta_" << j << " = " << take(beta) << '\n';
    }
    emit(opt, os.str());
  }
  if (fracgen_generator_has_zero_constant_term(g.get()))
    std::cerr << "warning: beta_0 = 0, no weight sequence exists for this shift\n";
  return kExitOk;
}

int cmd_weights(const Options& opt) {
  require_format(opt.format.empty() ? "csv" : opt.format, {"csv"});
  auto g = make_generator(opt);
  fracgen_weights* raw = nullptr;
  check(fracgen_weights_compute(g.get(), opt.M, &raw), "weights");
  Weights w(raw);
  char* csv = nullptr;
  check(fracgen_weights_to_csv(w.get(), &csv), "weights");
  emit(opt, take(csv));
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  require_format(opt.format.empty() ? "json" : opt.format, {"json"});
  auto g = opt.beta_file.empty() ? make_generator(opt) : load_generator(opt.beta_file);
  fracgen_report* raw = nullptr;
  check(fracgen_verify(g.get(), opt.K, &raw), "verify");
  Report report(raw);
  char* json = nullptr;
  check(fracgen_report_to_json(report.get(), &json), "verify");
  emit(opt, take(json));
  const int p = fracgen_generator_order(g.get());
  const int confirmed = fracgen_report_confirmed_order(report.get());
  if (confirmed < p) {
    std::cerr << "verify: confirmed order " << confirmed << " is below p = " << p << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_converge(const Options& opt) {
  require_format(opt.format.empty() ? "csv" : opt.format, {"csv"});
  const fracgen_side side = parse_side(opt.side);
  auto g = make_generator(opt);
  fracgen_table* raw = nullptr;
  check(fracgen_converge(g.get(), opt.mu, opt.x0, opt.h_start, opt.h_count, side, &raw), "converge");
  Table table(raw);
  char* csv = nullptr;
  check(fracgen_table_to_csv(table.get(), &csv), "converge");
  emit(opt, take(csv));
  return kExitOk;
}

int cmd_stencil(const Options& opt) {
  const std::string format = opt.format.empty() ? "text" : opt.format;
  require_format(format, {"text", "json"});
  fracgen_stencil* raw = nullptr;
  check(fracgen_stencil_create(opt.n, opt.p, opt.r.c_str(), &raw), "stencil");
  StencilHandle s(raw);
  char* text = nullptr;
  check(fracgen_stencil_render(s.get(), format.c_str(), &text), "stencil");
  emit(opt, take(text));
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& opt, bool needs_alpha) {
  auto* alpha = cmd->add_option("--alpha", opt.alpha, "fractional order, decimal or num/den");
  if (needs_alpha) alpha->required();
  cmd->add_option("--p", opt.p, "approximation order")->required();
  cmd->add_option("--r", opt.r, "shift, decimal or num/den")->capture_default_str();
  cmd->add_option("--format", opt.format, "output format");
  cmd->add_option("--out", opt.out, "output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grunwald-type generating functions for fractional derivatives"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_flag("--verbose", opt.verbose, "print run metadata on standard error");

  auto* coeffs = app.add_subcommand("coeffs", "print the generator coefficients beta_0..beta_p");
  add_common(coeffs, opt, true);

  auto* weights = app.add_subcommand("weights", "expand the Grunwald weights w_0..w_M");
  add_common(weights, opt, true);
  weights->add_option("--M", opt.M, "last weight index")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check G_r(z) = 1 + O(z^p) exactly");
  verify->add_option("--alpha", opt.alpha, "fractional order");
  verify->add_option("--p", opt.p, "approximation order");
  verify->add_option("--r", opt.r, "shift")->capture_default_str();
  verify->add_option("--K", opt.K, "expansion depth (default p + 4)");
  verify->add_option("--beta-file", opt.beta_file, "verify a generator JSON file instead");
  verify->add_option("--format", opt.format, "output format");
  verify->add_option("--out", opt.out, "output file");

  auto* converge = app.add_subcommand("converge", "empirical convergence order on f(x) = x^mu");
  add_common(converge, opt, true);
  converge->add_option("--mu", opt.mu, "power of the test function")->capture_default_str();
  converge->add_option("--x0", opt.x0, "evaluation point, domain is [0, 2 x0]")->capture_default_str();
  converge->add_option("--h-start", opt.h_start, "largest step size")->capture_default_str();
  converge->add_option("--h-count", opt.h_count, "number of halvings")->capture_default_str();
  converge->add_option("--side", opt.side, "left or right")->capture_default_str();

  auto* stencil = app.add_subcommand("stencil", "finite-difference stencil for the n-th derivative");
  stencil->add_option("--n", opt.n, "derivative order")->required();
  stencil->add_option("--p", opt.p, "approximation order")->required();
  stencil->add_option("--r", opt.r, "shift")->capture_default_str();
  stencil->add_option("--format", opt.format, "text or json");
  stencil->add_option("--out", opt.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (opt.verbose) std::cerr << "fracgen " << fracgen_version() << '\n';
    if (*coeffs) return cmd_coeffs(opt);
    if (*weights) return cmd_weights(opt);
    if (*verify) {
      if (opt.beta_file.empty() && (opt.alpha.empty() || verify->count("--p") == 0))
        throw CommandError{kExitUsage, "verify needs --alpha and --p, or --beta-file"};
      return cmd_verify(opt);
    }
    if (*converge) return cmd_converge(opt);
    if (*stencil) return cmd_stencil(opt);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }
  return kExitUsage;
}
