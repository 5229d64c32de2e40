#include <doctest.h>

#include <cmath>

#include "fracgen/coeffgen.hpp"
#include "fracgen/error.hpp"
#include "fracgen/serialize.hpp"
#include "oracles.hpp"

using namespace fracgen;
using fracgen::testing::q;
using fracgen::testing::qs;

TEST_CASE("lambda_of") {
  CHECK(lambda_of(GeneratorSpec<Rational>{Rational(2), 1, Rational(1)}) == q("1/2"));
  CHECK(lambda_of(GeneratorSpec<Rational>{Rational(1), 1, Rational(0)}) == Rational(0));
  CHECK(lambda_of(GeneratorSpec<Rational>{q("3/2"), 1, Rational(1)}) == q("2/3"));
  CHECK_THROWS_AS(lambda_of(GeneratorSpec<Rational>{Rational(0), 1, Rational(1)}), Error);
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(make_generator(GeneratorSpec<Rational>{Rational(0), 2, Rational(1)}), Error);
  CHECK_THROWS_AS(make_generator(GeneratorSpec<Rational>{q("-1/2"), 2, Rational(1)}), Error);
  CHECK_THROWS_AS(make_generator(GeneratorSpec<Rational>{q("1/2"), 0, Rational(1)}), Error);
  CHECK_THROWS_AS(make_generator(GeneratorSpec<double>{std::nan(""), 2, 1.0}), Error);
}

TEST_CASE("beta_explicit examples") {
  for (const char* lam : {"0", "1/2", "-7/3", "5"}) CHECK(beta_explicit(1, q(lam)).betas == qs({"1", "-1"}));
  CHECK(beta_explicit(2, q("1/2")).betas == qs({"1", "-1", "0"}));
  CHECK(beta_explicit(3, Rational(0)).betas == qs({"11/6", "-3", "3/2", "-1/3"}));
  CHECK_THROWS_AS(beta_explicit(0, Rational(0)), Error);
}

TEST_CASE("beta_vandermonde examples") {
  CHECK(beta_vandermonde(1, q("1/2")).betas == qs({"1", "-1"}));
  CHECK(beta_vandermonde(2, Rational(0)).betas == qs({"3/2", "-2", "1/2"}));
  CHECK(beta_vandermonde(4, Rational(0)).betas == qs({"25/12", "-4", "3", "-4/3", "1/4"}));
}

TEST_CASE("explicit form is regular at integer lambda where the reciprocal form is singular") {
  for (int p = 1; p <= 6; ++p) {
    for (int lam = 0; lam <= p; ++lam) {
      const auto b = beta_explicit(p, Rational(lam));
      CHECK(b.betas == beta_vandermonde(p, Rational(lam)).betas);
      CHECK_THROWS_AS(beta_reciprocal_form(p, Rational(lam)), Error);
    }
  }
}

TEST_CASE("property: three routes agree on random rational lambda") {
  fracgen::testing::RationalSampler sample(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = 1 + trial % 8;
    const Rational lambda = sample();
    const auto explicit_form = beta_explicit(p, lambda);
    CAPTURE(p);
    CAPTURE(lambda.to_string());
    CHECK(explicit_form.betas == beta_vandermonde(p, lambda).betas);
    bool singular = false;
    for (int m = 0; m <= p; ++m) singular = singular || lambda == Rational(m);
    if (!singular) CHECK(explicit_form.betas == beta_reciprocal_form(p, lambda).betas);
    Rational sum(0);
    for (const auto& b : explicit_form.betas) sum += b;
    CHECK(sum.is_zero());
    CHECK(satisfies_moment_conditions(explicit_form));
  }
}

TEST_CASE("moment_residual") {
  const auto b = beta_explicit(2, q("1/2"));
  CHECK(moment_residual(b, q("1/2"), 0).is_zero());
  CHECK(moment_residual(b, q("1/2"), 1).is_zero());
  CHECK(moment_residual(b, q("1/2"), 2).is_zero());
  // direct summation: (1/2)^3 * 1 + (-1/2)^3 * (-1) + (-3/2)^3 * 0 = 1/4
  CHECK(moment_residual(b, q("1/2"), 3) == q("1/4"));
  CHECK_THROWS_AS(moment_residual(b, q("1/2"), -1), Error);
}

TEST_CASE("degenerate constant term is allowed and flagged") {
  const auto b = beta_explicit(2, q("3/2"));
  CHECK(b.betas == qs({"0", "1", "-1"}));
  CHECK(b.has_zero_constant_term());
  CHECK(!beta_explicit(2, q("1/2")).has_zero_constant_term());
}

TEST_CASE("floating path stays within the documented moment tolerance") {
  for (double alpha : {std::sqrt(2.0), M_PI / 3.0, 0.3}) {
    for (int p = 1; p <= 8; ++p) {
      for (double r : {0.0, 1.0, std::exp(1.0)}) {
        const auto g = make_generator(GeneratorSpec<double>{alpha, p, r});
        CHECK(satisfies_moment_conditions(g.beta));
        const auto vandermonde = beta_vandermonde(p, r / alpha);
        for (int j = 0; j <= p; ++j)
          CHECK(g.beta.betas[j] == doctest::Approx(vandermonde.betas[j]).epsilon(1e-9).scale(1.0));
      }
    }
  }
}

TEST_CASE("det_u2 examples") {
  CHECK(det_u2<Rational>(qs({"1", "2"})) == Rational(3));
  CHECK(det_u2<Rational>(qs({"0", "1", "2"})) == Rational(4));
  CHECK(det_u2<Rational>(qs({"3/2", "-1", "3/2"})).is_zero());
  CHECK(det_vandermonde<Rational>(qs({"0", "1", "2"})) == Rational(2));
}

TEST_CASE("property: determinant closed forms match cofactor expansion") {
  fracgen::testing::RationalSampler sample(99, 12, 7);
  for (std::size_t size = 1; size <= 6; ++size) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Rational> xs;
      for (std::size_t i = 0; i < size; ++i) xs.push_back(sample());
      CHECK(det_u2<Rational>(xs) == fracgen::testing::cofactor_det(fracgen::testing::u2_matrix(xs)));
      std::vector<std::vector<Rational>> v(size, std::vector<Rational>(size));
      for (std::size_t row = 0; row < size; ++row)
        for (std::size_t col = 0; col < size; ++col) v[row][col] = xs[col].pow(static_cast<int>(row));
      CHECK(det_vandermonde<Rational>(xs) == fracgen::testing::cofactor_det(v));
    }
  }
}

TEST_CASE("generator JSON") {
  const auto g = make_generator(GeneratorSpec<Rational>{q("1/2"), 2, Rational(1)});
  const std::string json = generator_to_json(g);
  CHECK(json.find("\"lambda\": \"2\"") != std::string::npos);
  const auto back = generator_from_json(json);
  CHECK(back.spec.alpha == g.spec.alpha);
  CHECK(back.spec.r == g.spec.r);
  CHECK(back.spec.p == 2);
  CHECK(back.beta.betas == g.beta.betas);
  CHECK(back.beta.betas == qs({"-1/2", "2", "-3/2"}));

  CHECK_THROWS_AS(generator_from_json("{"), Error);
  CHECK_THROWS_AS(generator_from_json(R"({"alpha": "1/2", "r": "0"})"), Error);
  CHECK_THROWS_AS(generator_from_json(R"({"alpha": "1/2", "r": "0", "p": 3, "beta": ["1", "-1"]})"), Error);
  const auto numeric = generator_from_json(R"({"alpha": 0.5, "r": 1, "beta": [1, -1]})");
  CHECK(numeric.spec.alpha == q("1/2"));
}
