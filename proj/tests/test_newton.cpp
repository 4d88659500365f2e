#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "rrtrop/error.hpp"
#include "rrtrop/newton.hpp"

using namespace rrtrop;
using namespace testing_helpers;

namespace {

std::set<Exponent> as_set(const std::vector<Exponent>& v) { return {v.begin(), v.end()}; }

IntVec iv(std::initializer_list<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Oracle: a support point is a vertex iff some integer weight in a small box
// makes it the unique maximizer.
std::set<Exponent> brute_vertices(const Polynomial& f, int box) {
  auto S = f.support();
  std::set<Exponent> out;
  std::size_t n = f.nvars();
  std::vector<long> w(n, -box);
  for (;;) {
    Rational best;
    std::vector<Exponent> arg;
    auto wv = WeightVector::from_ints(w);
    for (const auto& a : S) {
      Rational d = wv.dot(a);
      if (arg.empty() || d > best) {
        best = d;
        arg = {a};
      } else if (d == best) {
        arg.push_back(a);
      }
    }
    if (arg.size() == 1) out.insert(arg[0]);
    std::size_t i = 0;
    while (i < n && w[i] == box) w[i++] = -box;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

}  // namespace

TEST_CASE("newton polytope vertices") {
  auto r = make_ring({"x", "y"});
  NewtonPolytope NP(P(r, "x^4 + x^2*y^2 - 1"));
  CHECK(as_set(NP.vertices()) == std::set<Exponent>{E({4, 0}), E({2, 2}), E({0, 0})});
  CHECK(NP.dim() == 2);
  auto r3 = make_ring({"x", "y", "z"});
  auto f = P(r3, "(x-y-z)^4 + (x-y-1)^2");
  NewtonPolytope D(f);
  // (2,0,0) and (0,2,0) lie on the segments from the origin to (4,0,0) and (0,4,0).
  CHECK(as_set(D.vertices()) == std::set<Exponent>{E({4, 0, 0}), E({0, 4, 0}), E({0, 0, 4}), E({0, 0, 0})});
  CHECK(as_set(D.vertices()) == brute_vertices(f, 3));
  NewtonPolytope C(P(r, "1"));
  CHECK(C.vertices() == std::vector<Exponent>{E({0, 0})});
  CHECK(C.dim() == 0);
  CHECK_THROWS_AS(NewtonPolytope(Polynomial(r)), PreconditionError);
}

TEST_CASE("normal fan of the dissonance polytope") {
  auto r3 = make_ring({"x", "y", "z"});
  Fan F(NewtonPolytope(P(r3, "(x-y-z)^4 + (x-y-1)^2")));
  CHECK(F.size() == 15);
  std::set<IntVec> rays;
  int twos = 0, threes = 0;
  for (const auto& c : F.cones()) {
    if (c.dim == 1) rays.insert(c.rays[0]);
    twos += c.dim == 2;
    threes += c.dim == 3;
    CHECK(c.dim + F.polytope().faces()[c.dual_face].dim == 3);
  }
  CHECK(rays == std::set<IntVec>{iv({1, 1, 1}), iv({0, 0, -1}), iv({0, -1, 0}), iv({-1, 0, 0})});
  CHECK(twos == 6);
  CHECK(threes == 4);
  CHECK(F.cone(0).dim == 0);
}

TEST_CASE("small fans") {
  auto r = make_ring({"x", "y"});
  Fan mono(NewtonPolytope(P(r, "x^2*y")));
  REQUIRE(mono.size() == 1);
  CHECK(mono.cone(0).dim == 2);
  CHECK(mono.cone(0).lineality.size() == 2);

  Fan tri(NewtonPolytope(P(r, "x^2 + y^2 - 1")));
  std::set<IntVec> rays;
  for (const auto& c : tri.cones())
    if (c.dim == 1) rays.insert(c.rays[0]);
  CHECK(rays == std::set<IntVec>{iv({-1, 0}), iv({0, -1}), iv({1, 1})});
  CHECK(tri.size() == 7);

  // a segment: lineality line plus two half-planes
  Fan seg(NewtonPolytope(P(r, "x + y")));
  CHECK(seg.size() == 3);
  CHECK(seg.cone(0).dim == 1);
  CHECK(seg.cone(0).lineality.size() == 1);
}

TEST_CASE("face_of") {
  auto r = make_ring({"x", "y"});
  NewtonPolytope NP(P(r, "x^4 + x^2*y^2 - 1"));
  CHECK(as_set(NP.face_vertices(NP.face_of(W({-1, 1})))) == std::set<Exponent>{E({0, 0}), E({2, 2})});
  CHECK(NP.face_of(W({0, 0})) == NP.whole_face());
  auto r3 = make_ring({"x", "y", "z"});
  NewtonPolytope D(P(r3, "(x-y-z)^4 + (x-y-1)^2"));
  for (const auto& a : D.face_points(D.face_of(W({0, 0, -1})))) CHECK(a[2] == 0);
}

TEST_CASE("edge_univariate") {
  auto r = make_ring({"x", "y"});
  auto c = P(r, "x^4 + x^2*y^2 - 1");
  auto e = edge_univariate(c, E({2, 2}), E({0, 0}));
  CHECK(e.b == E({0, 0}));
  CHECK(e.v == E({1, 1}));
  CHECK(e.d == 2);
  CHECK(e.gamma == std::vector<Rational>{-1, 0, 1});
  CHECK(reconstruct(e, r) == P(r, "x^2*y^2 - 1"));

  auto r3 = make_ring({"x", "y", "z"});
  auto f = P(r3, "(x-y-z)^4 + (x-y-1)^2");
  auto ex = edge_univariate(f, E({4, 0, 0}), E({0, 0, 0}));
  CHECK(ex.v == E({1, 0, 0}));
  CHECK(ex.d == 4);
  CHECK(ex.gamma == std::vector<Rational>{1, -2, 1, 0, 1});

  auto b = P(r, "x^2 + y^2 - 1");
  auto eb = edge_univariate(b, E({0, 2}), E({0, 0}));
  CHECK(eb.v == E({0, 1}));
  CHECK(eb.gamma == std::vector<Rational>{-1, 0, 1});

  CHECK_THROWS_AS(edge_univariate(c, E({4, 0}), E({4, 0})), PreconditionError);
  // interior diagonal of a square is not an edge
  CHECK_THROWS_AS(edge_univariate(P(r, "x*y + x + y + 1"), E({1, 1}), E({0, 0})), PreconditionError);
}

TEST_CASE("property: fan completeness and duality") {
  std::mt19937_64 rng(3);
  auto r = make_ring({"x", "y", "z"});
  std::vector<Polynomial> polys{P(r, "(x-y-z)^4 + (x-y-1)^2"), P(r, "x^2 + y^2 + z^2 - 1"),
                                P(r, "x*y*z + x^2 + y + 1"), P(r, "x^3 + y^3")};
  for (int i = 0; i < 4; ++i) polys.push_back(random_poly(rng, r, 6, 3));
  int samples = 0;
  for (const auto& f : polys) {
    Fan F{NewtonPolytope(f)};
    for (const auto& c : F.cones()) CHECK(c.dim + F.polytope().faces()[c.dual_face].dim == 3);
    for (int s = 0; s < 125; ++s, ++samples) {
      auto w = random_weight(rng, 3);
      std::size_t hits = 0, hit = 0;
      for (const auto& c : F.cones())
        if (relint_contains(c, w)) ++hits, hit = c.id;
      CHECK(hits == 1);
      CHECK(hit == F.cone_containing(w));
      auto face = F.polytope().face_of(w);
      auto in = initial_form(f, w);
      CHECK(as_set(in.support()) == as_set(F.polytope().face_points(face)));
    }
    // also exercise relative-interior points of every cone
    for (const auto& c : F.cones()) CHECK(F.cone_containing(F.interior_point(c.id)) == c.id);
  }
  CHECK(samples == 1000);
}

TEST_CASE("property: edge data roundtrip and gcd law") {
  std::mt19937_64 rng(19);
  auto r = make_ring({"x", "y", "z"});
  for (int i = 0; i < 20; ++i) {
    auto f = random_poly(rng, r, 6, 4);
    Fan F{NewtonPolytope(f)};
    for (const auto& c : F.cones()) {
      const auto& face = F.polytope().faces()[c.dual_face];
      if (face.dim != 1) continue;
      auto vs = F.polytope().face_vertices(c.dual_face);
      REQUIRE(vs.size() == 2);
      auto e = edge_univariate(f, vs[0], vs[1]);
      int g = 0;
      for (std::size_t k = 0; k < 3; ++k) g = std::gcd(g, std::abs(vs[0][k] - vs[1][k]));
      CHECK(e.d == g);
      CHECK(sgn(e.gamma.front()) != 0);
      CHECK(sgn(e.gamma.back()) != 0);
      CHECK(reconstruct(e, r) == initial_form(f, F.interior_point(c.id)));
    }
  }
}
