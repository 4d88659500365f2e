#pragma once

#include <random>
#include <string>
#include <vector>

#include "rrtrop/parse.hpp"
#include "rrtrop/poly.hpp"

namespace testing_helpers {

using namespace rrtrop;

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }
inline WeightVector W(std::initializer_list<long> v) {
  std::vector<long> x(v);
  return WeightVector::from_ints(x);
}
inline Exponent E(std::initializer_list<int> v) { return Exponent(v); }

// Random polynomial with small integer coefficients and exponents.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-5, 5);
  Polynomial f(ring);
  while (f.is_zero()) {
    for (int t = 0; t < terms; ++t) {
      Exponent a(ring->size());
      for (auto& x : a) x = e(rng);
      int coef = c(rng);
      if (coef != 0) f += Polynomial::monomial(ring, a, coef);
    }
  }
  return f;
}

inline WeightVector random_weight(std::mt19937_64& rng, std::size_t n, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi), den(1, 3);
  std::vector<Rational> w;
  for (std::size_t i = 0; i < n; ++i) w.emplace_back(d(rng), den(rng));
  for (auto& x : w) x.canonicalize();
  return WeightVector(std::move(w));
}

}  // namespace testing_helpers
