#pragma once

// Exact univariate real-root counting with Sturm sequences.

#include <optional>
#include <string>
#include <vector>

#include "rrtrop/newton.hpp"
#include "rrtrop/poly.hpp"

namespace rrtrop {

class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  // Coefficients from degree 0 upwards; trailing zeros are dropped.
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);
  static UnivariatePolynomial from_edge(const EdgeData& e) { return UnivariatePolynomial(e.gamma); }
  static UnivariatePolynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

  Rational evaluate(const Rational& t) const;
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial operator*(const UnivariatePolynomial& o) const;
  UnivariatePolynomial operator+(const UnivariatePolynomial& o) const;
  UnivariatePolynomial operator-() const;
  UnivariatePolynomial scaled(const Rational& c) const;
  // Positive rescaling to integer coefficients with content 1.
  UnivariatePolynomial primitive_positive() const;
  UnivariatePolynomial monic() const;
  bool operator==(const UnivariatePolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const UnivariatePolynomial& u, const std::string& var = "t");

struct DivMod {
  UnivariatePolynomial quotient, remainder;
};
DivMod divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

// p0 = u, p1 = u', p_{i+1} = -rem(p_{i-1}, p_i), each rescaled by a positive constant.
std::vector<UnivariatePolynomial> sturm_sequence(const UnivariatePolynomial& u);

struct RootRange {
  enum class Kind { All, Positive, Negative, Closed } kind = Kind::All;
  Rational lo, hi;  // Closed only

  static RootRange all() { return {}; }
  static RootRange positive() { return {Kind::Positive, 0, 0}; }
  static RootRange negative() { return {Kind::Negative, 0, 0}; }
  static RootRange closed(Rational lo, Rational hi) { return {Kind::Closed, std::move(lo), std::move(hi)}; }
};

// Number of distinct real roots in the range.
int count_real_roots(const UnivariatePolynomial& u, const RootRange& range = RootRange::all());
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& u);
// Yun's factorization: u = c * prod_i a_i^(i+1) with squarefree, pairwise coprime a_i.
std::vector<UnivariatePolynomial> squarefree_factorization(const UnivariatePolynomial& u);
// u takes both signs on R (some real root has odd multiplicity).
bool changes_sign(const UnivariatePolynomial& u);
// All roots real and distinct.
bool is_univariate_real_radical(const UnivariatePolynomial& u);
// x^b u(x^v) vanishes somewhere on (R*)^n.
bool edge_has_Rstar_zero(const EdgeData& e);
// 1 + max |c_k / c_d|.
Rational cauchy_bound(const UnivariatePolynomial& u);

}  // namespace rrtrop
