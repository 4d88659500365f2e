#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rrtrop/error.hpp"

using namespace rrtrop;
using namespace testing_helpers;

TEST_CASE("w_degree") {
  auto r = make_ring({"x", "y"});
  CHECK(w_degree(P(r, "x^2 + y^2 - 4*x - 4*y + 7"), W({0, -1})) == 0);
  CHECK(w_degree(P(r, "1"), W({3, -7})) == 0);
  CHECK(w_degree(P(r, "x^5 - x^4*y^2 + x^3*y^4 - x^2*y^6"), W({2, 1})) == 10);
  CHECK_THROWS_AS(w_degree(Polynomial(r), W({1, 1})), PreconditionError);
  CHECK(w_degree(P(r, "x + y"), WeightVector({Rational(1, 2), Rational(-1, 3)})) == Rational(1, 2));
}

TEST_CASE("initial_form") {
  auto r3 = make_ring({"x", "y", "z"});
  auto f = P(r3, "(x-y-z)^4 + (x-y-1)^2");
  CHECK(initial_form(f, W({0, 0, -1})) == P(r3, "(x-y)^4 + (x-y-1)^2"));
  CHECK(initial_form(f, W({0, 0, 0})) == f);
  auto r = make_ring({"x", "y"});
  CHECK(initial_form(P(r, "x^4 + x^2*y^2 - 1"), W({-1, 1})) == P(r, "x^2*y^2 - 1"));
  CHECK_THROWS_AS(initial_form(Polynomial(r), W({1, 1})), PreconditionError);
}

TEST_CASE("homogenize") {
  auto r = make_ring({"x"});
  auto h = homogenize(P(r, "x + 1"));
  CHECK(h.ring()->names() == std::vector<std::string>{"x0", "x"});
  CHECK(to_string(h) == "x0 + x");
  auto r2 = make_ring({"x", "y"});
  auto h2 = homogenize(P(r2, "x^4 + x^2*y^2 - 1"));
  CHECK(h2 == P(h2.ring(), "x^4 + x^2*y^2 - x0^4"));
  CHECK(dehomogenize(h2, r2) == P(r2, "x^4 + x^2*y^2 - 1"));
  CHECK(to_string(homogenize(P(r2, "x^2 + y^2 - 1"))) == "-x0^2 + x^2 + y^2");
  // homogenizing name avoids collisions
  auto rx0 = make_ring({"x0", "y"});
  CHECK(homogenizing_name(*rx0) == "x0_");
  CHECK_THROWS_AS(homogenize(Polynomial(r2)), PreconditionError);
}

TEST_CASE("weighted_homogenize") {
  auto r = make_ring({"x", "y"});
  auto f = P(r, "x - y^2");
  auto h = weighted_homogenize(f, W({2, 1}));
  CHECK(substitute_first(h, 1, r) == f);
  CHECK(substitute_first(h, 0, r) == initial_form(f, W({2, 1})));
  auto g = P(r, "x^2 + y^2 - 1");
  auto hg = weighted_homogenize(g, W({1, 1}));
  CHECK(hg == P(hg.ring(), "x^2 + y^2 - x0^2"));
  auto r1 = make_ring({"x"});
  CHECK(weighted_homogenize(P(r1, "x + 1"), W({1})) == P(make_ring({"x0", "x"}), "x + x0"));
  CHECK_THROWS_AS(weighted_homogenize(g, W({0, 1})), PreconditionError);
  CHECK_THROWS_AS(weighted_homogenize(g, WeightVector({Rational(1, 2), Rational(1)})), PreconditionError);
}

TEST_CASE("orthant_flip") {
  auto r = make_ring({"x", "y"});
  CHECK(orthant_flip(P(r, "x + y"), SignVector({1, 1})) == P(r, "x + y"));
  CHECK(orthant_flip(P(r, "x + y"), SignVector({-1, 1})) == P(r, "-x + y"));
  CHECK(orthant_flip(P(r, "x^2*y"), SignVector({-1, -1})) == P(r, "-x^2*y"));
  CHECK_THROWS(SignVector({1, 0}));
  CHECK_THROWS_AS(orthant_flip(P(r, "x"), SignVector({1})), PreconditionError);
}

TEST_CASE("arithmetic") {
  auto r = make_ring({"x", "y"});
  CHECK((P(r, "x") + P(r, "-x")).is_zero());
  CHECK(P(r, "x - y") * P(r, "x + y") == P(r, "x^2 - y^2"));
  CHECK(derivative(P(r, "x^3"), 0) == P(r, "3*x^2"));
  auto other = make_ring({"u", "v"});
  CHECK_THROWS_AS(P(r, "x") + P(other, "u"), PreconditionError);
}

TEST_CASE("parse and print") {
  auto r = make_ring({"x", "y"});
  for (std::string s : {"x^4 + x^2*y^2 - 1", "3/2*x", "-x", "0", "x*y - 2/3", "-7/5"}) {
    CHECK(to_string(P(r, s)) == s);
  }
  CHECK_THROWS_AS(P(r, "x + z"), ParseError);
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "x^-1"), ParseError);
  CHECK_THROWS_AS(P(r, "1/0"), ParseError);
  CHECK(parse_weight("(-1, 1/2)") == WeightVector({Rational(-1), Rational(1, 2)}));
  auto file = parse_polynomial_file("# comment\nvars: x, y\n\nx^2 - y\n  y + 1\n");
  CHECK(file.polynomials.size() == 2);
  CHECK(parse_polynomial_file(format_polynomial_file(file)).polynomials == file.polynomials);
  CHECK_THROWS_AS(parse_polynomial_file("x + 1\n"), ParseError);
}

TEST_CASE("properties: multiplicativity, degree laws, flips") {
  std::mt19937_64 rng(7);
  auto r = make_ring({"x", "y", "z"});
  std::uniform_int_distribution<int> sign(0, 1);
  for (int iter = 0; iter < 200; ++iter) {
    auto f = random_poly(rng, r, 4, 3), g = random_poly(rng, r, 4, 3);
    auto w = random_weight(rng, 3);
    CHECK(initial_form(f * g, w) == initial_form(f, w) * initial_form(g, w));
    CHECK(w_degree(f * g, w) == w_degree(f, w) + w_degree(g, w));
    auto s = f + g;
    if (!s.is_zero()) {
      auto df = w_degree(f, w), dg = w_degree(g, w);
      CHECK(w_degree(s, w) <= std::max(df, dg));
      if (df != dg) CHECK(w_degree(s, w) == std::max(df, dg));
    }
    SignVector pi({sign(rng) ? 1 : -1, sign(rng) ? 1 : -1, sign(rng) ? 1 : -1});
    CHECK(orthant_flip(orthant_flip(f, pi), pi) == f);
    CHECK(orthant_flip(f * g, pi) == orthant_flip(f, pi) * orthant_flip(g, pi));
    CHECK(initial_form(orthant_flip(f, pi), w) == orthant_flip(initial_form(f, w), pi));
    CHECK(P(r, to_string(f)) == f);
  }
}

TEST_CASE("property: weighted homogenization slices") {
  std::mt19937_64 rng(11);
  auto r = make_ring({"x", "y"});
  std::uniform_int_distribution<int> d(1, 4);
  for (int iter = 0; iter < 100; ++iter) {
    auto f = random_poly(rng, r, 5, 4);
    auto w = W({d(rng), d(rng)});
    auto h = weighted_homogenize(f, w);
    CHECK(substitute_first(h, 0, r) == initial_form(f, w));
    CHECK(substitute_first(h, 1, r) == f);
  }
}
