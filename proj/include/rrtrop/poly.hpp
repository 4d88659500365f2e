#pragma once

// Sparse multivariate polynomials over Q with weighted degrees, initial forms,
// (weighted) homogenization and orthant sign flips.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rrtrop {

using Rational = mpq_class;
using Integer = mpz_class;

// Exponent vector a in N^n. Signed storage so that EdgeData can reuse it for
// Laurent directions; stored polynomials never carry negative entries.
using Exponent = std::vector<int>;

int total_degree(const Exponent& a);

// Graded-lexicographic "greater" comparison; the canonical print order.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Ordered variable names. Polynomials over different rings never mix.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // Index of `name`, or -1.
  int index_of(const std::string& name) const;
  bool operator==(const Ring& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> entries);
  static WeightVector zero(std::size_t n);
  static WeightVector from_ints(std::span<const long> entries);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }
  bool all_positive() const { return all_positive_; }
  bool all_nonnegative() const { return all_nonnegative_; }
  bool is_zero() const;

  Rational dot(const Exponent& a) const;
  // Positive rescaling to a primitive integer vector (zero stays zero).
  std::vector<Integer> primitive_integer() const;

  WeightVector operator+(const WeightVector& o) const;
  WeightVector scaled(const Rational& c) const;
  bool operator==(const WeightVector& o) const { return entries_ == o.entries_; }

 private:
  std::vector<Rational> entries_;
  bool all_positive_ = true;
  bool all_nonnegative_ = true;
};

std::string to_string(const WeightVector& w);

class SignVector {
 public:
  explicit SignVector(std::vector<int> entries);
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

 private:
  std::vector<int> entries_;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial monomial(RingPtr ring, Exponent a, const Rational& c = 1);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(const Exponent& a) const;
  // Leading term under grlex (the first stored term).
  const Exponent& grlex_leading() const;
  int total_degree() const;
  std::vector<Exponent> support() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Multiply by c * x^a.
  Polynomial mul_term(const Exponent& a, const Rational& c) const;
  Rational evaluate(std::span<const Rational> point) const;
  // Scale so the grlex-leading coefficient is 1.
  Polynomial monic() const;
  // Scale to integer coefficients with content 1 and positive grlex-leading coefficient.
  Polynomial primitive() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& f, unsigned k);
Polynomial derivative(const Polynomial& f, std::size_t index);

// max{ w.a : f_a != 0 }; throws PreconditionError on f == 0.
Rational w_degree(const Polynomial& f, const WeightVector& w);
// Sum of the terms attaining w_degree(f).
Polynomial initial_form(const Polynomial& f, const WeightVector& w);
bool is_w_homogeneous(const Polynomial& f, const WeightVector& w);

// Name used for the homogenizing variable: "x0", suffixed with '_' until unused.
std::string homogenizing_name(const Ring& ring);
// x0^deg(f) f(x/x0) in the ring (x0, x_1..x_n).
Polynomial homogenize(const Polynomial& f);
Polynomial homogenize(const Polynomial& f, const RingPtr& target);
// x0 -> 1, dropping variable 0.
Polynomial dehomogenize(const Polynomial& F, const RingPtr& target);
// x0^deg_w(f) f(x_1/x0^w_1, ..., x_n/x0^w_n); w must be positive integers.
Polynomial weighted_homogenize(const Polynomial& f, const WeightVector& w);
// Substitute x0 = value and drop variable 0.
Polynomial substitute_first(const Polynomial& F, const Rational& value, const RingPtr& target);
// x_i -> pi_i x_i.
Polynomial orthant_flip(const Polynomial& f, const SignVector& pi);

// Canonical text: grlex-descending terms, e.g. "x^4 + x^2*y^2 - 1".
std::string to_string(const Polynomial& f);
std::string to_string(const Exponent& a);

}  // namespace rrtrop
