#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rrtrop/error.hpp"
#include "rrtrop/groebner.hpp"

using namespace rrtrop;
using namespace testing_helpers;

namespace {

// Independent reduction oracle: repeatedly cancel the largest divisible term.
Polynomial oracle_reduce(Polynomial f, const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  Polynomial rem(f.ring());
  while (!f.is_zero()) {
    Exponent lead = f.terms().begin()->first;
    for (const auto& [a, c] : f.terms())
      if (ord.compare(a, lead) > 0) lead = a;
    Rational lc = f.coefficient(lead);
    bool divided = false;
    for (const auto& g : G) {
      Exponent gl = g.terms().begin()->first;
      for (const auto& [a, c] : g.terms())
        if (ord.compare(a, gl) > 0) gl = a;
      bool divides = true;
      Exponent q(lead.size());
      for (std::size_t i = 0; i < lead.size(); ++i) {
        q[i] = lead[i] - gl[i];
        if (q[i] < 0) divides = false;
      }
      if (!divides) continue;
      f -= g.mul_term(q, lc / g.coefficient(gl));
      divided = true;
      break;
    }
    if (!divided) {
      rem += Polynomial::monomial(f.ring(), lead, lc);
      f -= Polynomial::monomial(f.ring(), lead, lc);
    }
  }
  return rem;
}

Exponent oracle_lead(const Polynomial& g, const MonomialOrder& ord) {
  Exponent gl = g.terms().begin()->first;
  for (const auto& [a, c] : g.terms())
    if (ord.compare(a, gl) > 0) gl = a;
  return gl;
}

bool oracle_is_groebner(const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      Exponent a = oracle_lead(G[i], ord), b = oracle_lead(G[j], ord), l(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) l[k] = std::max(a[k], b[k]);
      Exponent qa(a.size()), qb(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) qa[k] = l[k] - a[k], qb[k] = l[k] - b[k];
      auto s = G[i].mul_term(qa, 1 / G[i].coefficient(a)) - G[j].mul_term(qb, 1 / G[j].coefficient(b));
      if (!oracle_reduce(s, G, ord).is_zero()) return false;
    }
  return true;
}

std::vector<Polynomial> minors_2xn(int n, RingPtr& ring) {
  std::vector<std::string> names;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  ring = make_ring(names);
  std::vector<Polynomial> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      out.push_back(Polynomial::variable(ring, a) * Polynomial::variable(ring, n + b) -
                    Polynomial::variable(ring, b) * Polynomial::variable(ring, n + a));
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto r = make_ring({"x"});
  auto g1 = buchberger({P(r, "x")}, MonomialOrder());
  CHECK(g1.elements() == std::vector<Polynomial>{P(r, "x")});
  auto r2 = make_ring({"x", "y"});
  auto g2 = buchberger({P(r2, "x - y"), P(r2, "y - 1")}, MonomialOrder(TieBreak::Lex));
  CHECK(g2.elements() == std::vector<Polynomial>{P(r2, "x - 1"), P(r2, "y - 1")});
  CHECK(g2.reduced());
  auto r3 = make_ring({"x", "y", "z"});
  auto f = P(r3, "(x-y-z)^4 + (x-y-1)^2");
  for (auto tb : {TieBreak::Grlex, TieBreak::Lex, TieBreak::Grevlex}) {
    auto g = buchberger({f}, MonomialOrder(tb));
    REQUIRE(g.elements().size() == 1);
    CHECK(g.elements()[0] == f);
  }
  CHECK_THROWS_AS(buchberger({P(r2, "x")}, MonomialOrder(W({-1, 0}))), PreconditionError);
}

TEST_CASE("normal_form and membership") {
  auto r = make_ring({"x", "y"});
  CHECK(normal_form(P(r, "x^2"), buchberger({P(r, "x")}, MonomialOrder())).is_zero());
  CHECK(normal_form(P(r, "x + y"), buchberger({P(r, "x - y")}, MonomialOrder(TieBreak::Lex))) == P(r, "2*y"));
  CHECK(normal_form(P(r, "1"), buchberger({P(r, "x^2 + y")}, MonomialOrder())) == P(r, "1"));
  Ideal I({P(r, "x - y")});
  CHECK(is_member(P(r, "x - y"), I));
  CHECK(is_member(P(r, "-(x-y)^2"), I));
  CHECK_FALSE(is_member(P(r, "x"), Ideal({P(r, "x*y")})));
  CHECK_THROWS_AS(Ideal({Polynomial(r)}), PreconditionError);
}

TEST_CASE("initial_ideal examples") {
  auto r = make_ring({"x", "y"});
  Ideal a({P(r, "(x-2)^2 + (y-2)^2 - 1")});
  CHECK(initial_ideal(a, W({0, -1})) == std::vector<Polynomial>{P(r, "(x-2)^2 + 3")});
  Ideal e({P(r, "x^5 - x^4*y^2 + x^3*y^4 - x^2*y^6 + 1")});
  CHECK(initial_ideal(e, W({2, 1})) == std::vector<Polynomial>{P(r, "x^5 - x^4*y^2 + x^3*y^4 - x^2*y^6").monic()});
  Ideal c({P(r, "x^4 + x^2*y^2 - 1")});
  CHECK(initial_ideal(c, W({-1, 1})) == std::vector<Polynomial>{P(r, "x^2*y^2 - 1")});
  Ideal b({P(r, "x^2 + y"), P(r, "x*y - 1")});
  CHECK(initial_ideal(b, W({0, 0})) == b.basis(MonomialOrder()).elements());
  // rationally proportional weights agree
  CHECK(initial_ideal(b, W({2, 1})) == initial_ideal(b, WeightVector({Rational(1), Rational(1, 2)})));
}

TEST_CASE("monomial squarefree test") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(monomial_squarefree_test({P(r, "x*y"), P(r, "y*z")}));
  CHECK_FALSE(monomial_squarefree_test({P(r, "x^2")}));
  auto in = initial_ideal(Ideal({P(r, "x^4 - x^3 + y^2 + z^2")}), W({1, 1, 1}));
  CHECK(in == std::vector<Polynomial>{P(r, "x^4")});
  CHECK_FALSE(monomial_squarefree_test(in));
  // non-minimal generators do not count
  CHECK(monomial_squarefree_test({P(r, "x"), P(r, "x^2*y")}));
  CHECK_THROWS_AS(monomial_squarefree_test({P(r, "x + y")}), PreconditionError);
}

TEST_CASE("w-Groebner bases") {
  auto r = make_ring({"x", "y"});
  Ideal f({P(r, "x^3 - y^2 + x")});
  CHECK(is_w_groebner_basis(f.generators(), f, W({1, 5})));
  Ideal xy({P(r, "x"), P(r, "y")});
  // In_(1,2)(x + y) = y and In_(1,2)(x) = x generate <x, y>.
  CHECK(is_w_groebner_basis({P(r, "x + y"), P(r, "x")}, xy, W({1, 2})));
  // In_w of both generators is x^2, but y lies in the ideal.
  Ideal k({P(r, "x^2 + y"), P(r, "x^2")});
  CHECK_FALSE(is_w_groebner_basis(k.generators(), k, W({1, 1})));
  CHECK_THROWS_AS(is_w_groebner_basis({P(r, "x + 1")}, k, W({1, 1})), PreconditionError);

  RingPtr ring;
  auto minors = minors_2xn(3, ring);
  Ideal I(minors);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int i = 0; i < 10; ++i) {
    std::vector<long> w(6);
    for (auto& x : w) x = d(rng);
    CHECK(is_w_groebner_basis(minors, I, WeightVector::from_ints(w)));
  }
}

TEST_CASE("contains_monomial") {
  auto r = make_ring({"x", "y"});
  CHECK(contains_monomial({P(r, "x*y")}));
  CHECK(contains_monomial({P(r, "x + y"), P(r, "x - y")}));
  CHECK_FALSE(contains_monomial({P(r, "x - y")}));
  CHECK_FALSE(contains_monomial({P(r, "x^2*y^2 - 1")}));
}

TEST_CASE("property: Groebner basis invariants") {
  std::mt19937_64 rng(23);
  auto r = make_ring({"x", "y", "z"});
  for (int iter = 0; iter < 25; ++iter) {
    std::vector<Polynomial> gens{random_poly(rng, r, 3, 2), random_poly(rng, r, 3, 2)};
    for (auto tb : {TieBreak::Grlex, TieBreak::Lex}) {
      MonomialOrder ord(tb);
      auto G = buchberger(gens, ord);
      CHECK(oracle_is_groebner(G.elements(), ord));
      for (const auto& g : gens) CHECK(oracle_reduce(g, G.elements(), ord).is_zero());
      auto h = random_poly(rng, r, 4, 3);
      auto nf = normal_form(h, G);
      CHECK(normal_form(nf, G) == nf);
      CHECK(nf == oracle_reduce(h, G.elements(), ord));
      Ideal I(gens);
      auto m = random_poly(rng, r, 2, 2);
      CHECK(is_member(gens[0] + gens[1] * m, I));
    }
  }
}

TEST_CASE("property: direct and homogenized routes agree for w >= 0") {
  std::mt19937_64 rng(31);
  auto r = make_ring({"x", "y"});
  std::uniform_int_distribution<int> d(0, 3);
  for (int iter = 0; iter < 25; ++iter) {
    Ideal I({random_poly(rng, r, 3, 3), random_poly(rng, r, 3, 2)});
    auto w = W({d(rng), d(rng)});
    auto direct = initial_ideal(I, w, InitialRoute::Direct);
    auto homog = initial_ideal(I, w, InitialRoute::Homogenized);
    CHECK(direct == homog);
  }
}

TEST_CASE("property: composition of initial forms") {
  std::mt19937_64 rng(41);
  auto r = make_ring({"x", "y", "z"});
  for (int iter = 0; iter < 100; ++iter) {
    auto f = random_poly(rng, r, 6, 3);
    auto w = random_weight(rng, 3), v = random_weight(rng, 3);
    // epsilon below every breakpoint of the pairwise functionals on support(f)
    auto S = f.support();
    Rational eps = 1;
    for (const auto& a : S)
      for (const auto& b : S) {
        Rational dw = w.dot(a) - w.dot(b), dv = v.dot(a) - v.dot(b);
        if (sgn(dw) > 0) {
          Rational bound = dw / (abs(dv) + 1);
          if (bound < eps) eps = bound;
        }
      }
    eps /= 2;
    auto lhs = initial_form(initial_form(f, w), v);
    auto rhs = initial_form(f, w + v.scaled(eps));
    CHECK(lhs == rhs);
    // ideal version through the Groebner machinery
    Ideal I({f});
    CHECK(initial_ideal(Ideal({initial_form(f, w)}), v) == initial_ideal(I, w + v.scaled(eps)));
  }
}
