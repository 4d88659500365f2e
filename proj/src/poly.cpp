#include "rrtrop/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rrtrop/error.hpp"

namespace rrtrop {

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw ParseError("duplicate variable name '" + names_[i] + "'");
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b))
    throw PreconditionError(std::string(where) + ": polynomials over different variable lists");
}

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_) {
    e.canonicalize();
    if (sgn(e) <= 0) all_positive_ = false;
    if (sgn(e) < 0) all_nonnegative_ = false;
  }
}

WeightVector WeightVector::zero(std::size_t n) { return WeightVector(std::vector<Rational>(n, 0)); }

WeightVector WeightVector::from_ints(std::span<const long> entries) {
  std::vector<Rational> v;
  for (long e : entries) v.emplace_back(e);
  return WeightVector(std::move(v));
}

bool WeightVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return sgn(e) == 0; });
}

Rational WeightVector::dot(const Exponent& a) const {
  if (a.size() != entries_.size()) throw PreconditionError("weight dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += entries_[i] * a[i];
  return s;
}

std::vector<Integer> WeightVector::primitive_integer() const {
  Integer l = 1;
  for (const auto& e : entries_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& e : entries_) {
    Integer v = e.get_num() * (l / e.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
  if (o.size() != size()) throw PreconditionError("weight dimension mismatch");
  std::vector<Rational> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = entries_[i] + o.entries_[i];
  return WeightVector(std::move(v));
}

WeightVector WeightVector::scaled(const Rational& c) const {
  std::vector<Rational> v(entries_);
  for (auto& e : v) e *= c;
  return WeightVector(std::move(v));
}

std::string to_string(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].get_str();
  }
  return s + ")";
}

SignVector::SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e != 1 && e != -1) throw ParseError("sign vector entries must be +1 or -1");
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_->size()) throw PreconditionError("exponent dimension mismatch");
    for (int e : it->first)
      if (e < 0) throw PreconditionError("negative exponent in polynomial");
    it->second.canonicalize();
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Exponent zero(ring->size(), 0);
  return monomial(std::move(ring), std::move(zero), c);
}

Polynomial Polynomial::monomial(RingPtr ring, Exponent a, const Rational& c) {
  TermMap t;
  t.emplace(std::move(a), c);
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Exponent a(ring->size(), 0);
  a.at(index) = 1;
  return monomial(std::move(ring), std::move(a));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && rrtrop::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::coefficient(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponent& Polynomial::grlex_leading() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has undefined degree");
  return rrtrop::total_degree(terms_.begin()->first);
}

std::vector<Exponent> Polynomial::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [a, c] : terms_) s.push_back(a);
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "add");
  for (const auto& [a, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial Polynomial::mul_term(const Exponent& a, const Rational& c) const {
  Polynomial r(ring_);
  if (sgn(c) == 0) return r;
  for (const auto& [b, d] : terms_) {
    Exponent e(b);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += a[i];
    r.terms_.emplace(std::move(e), d * c);
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "multiply");
  Polynomial r(ring_);
  for (const auto& [a, c] : o.terms_) r += mul_term(a, c);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& [a, d] : r.terms_) d *= c;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw PreconditionError("evaluation point dimension mismatch");
  Rational s = 0;
  for (const auto& [a, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), a[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), a[i]);
      t *= p;
    }
    s += t;
  }
  return s;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * (Rational(1) / terms_.begin()->second);
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer l = 1, g = 0;
  for (const auto& [a, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [a, c] : terms_) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(l, g);
  if (sgn(terms_.begin()->second) < 0) scale = -scale;
  return *this * scale;
}

Polynomial pow(const Polynomial& f, unsigned k) {
  Polynomial r = Polynomial::constant(f.ring(), 1);
  Polynomial b = f;
  while (k) {
    if (k & 1U) r = r * b;
    k >>= 1U;
    if (k) b = b * b;
  }
  return r;
}

Polynomial derivative(const Polynomial& f, std::size_t index) {
  if (index >= f.nvars()) throw PreconditionError("derivative: variable index out of range");
  Polynomial::TermMap t;
  for (const auto& [a, c] : f.terms()) {
    if (a[index] == 0) continue;
    Exponent b(a);
    b[index] -= 1;
    t.emplace(std::move(b), c * a[index]);
  }
  return Polynomial(f.ring(), std::move(t));
}

Rational w_degree(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw PreconditionError("undefined degree: zero polynomial");
  if (w.size() != f.nvars()) throw PreconditionError("weight dimension mismatch");
  auto it = f.terms().begin();
  Rational best = w.dot(it->first);
  for (++it; it != f.terms().end(); ++it) {
    Rational d = w.dot(it->first);
    if (d > best) best = d;
  }
  return best;
}

Polynomial initial_form(const Polynomial& f, const WeightVector& w) {
  Rational top = w_degree(f, w);
  Polynomial::TermMap t;
  for (const auto& [a, c] : f.terms())
    if (w.dot(a) == top) t.emplace(a, c);
  return Polynomial(f.ring(), std::move(t));
}

bool is_w_homogeneous(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) return true;
  return initial_form(f, w).size() == f.size();
}

std::string homogenizing_name(const Ring& ring) {
  std::string name = "x0";
  while (ring.index_of(name) >= 0) name += "_";
  return name;
}

Polynomial homogenize(const Polynomial& f) {
  std::vector<std::string> names{homogenizing_name(*f.ring())};
  names.insert(names.end(), f.ring()->names().begin(), f.ring()->names().end());
  return homogenize(f, make_ring(std::move(names)));
}

Polynomial homogenize(const Polynomial& f, const RingPtr& target) {
  if (f.is_zero()) throw PreconditionError("homogenize: zero polynomial");
  if (target->size() != f.nvars() + 1) throw PreconditionError("homogenize: target ring size");
  int deg = f.total_degree();
  Polynomial::TermMap t;
  for (const auto& [a, c] : f.terms()) {
    Exponent b;
    b.reserve(a.size() + 1);
    b.push_back(deg - total_degree(a));
    b.insert(b.end(), a.begin(), a.end());
    t.emplace(std::move(b), c);
  }
  return Polynomial(target, std::move(t));
}

Polynomial substitute_first(const Polynomial& F, const Rational& value, const RingPtr& target) {
  if (target->size() + 1 != F.nvars()) throw PreconditionError("substitute: target ring size");
  Polynomial r(target);
  for (const auto& [a, c] : F.terms()) {
    Rational coeff = c;
    if (a[0] != 0) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), a[0]);
      mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), a[0]);
      coeff *= p;
    }
    if (sgn(coeff) == 0) continue;
    Exponent b(a.begin() + 1, a.end());
    r += Polynomial::monomial(target, std::move(b), coeff);
  }
  return r;
}

Polynomial dehomogenize(const Polynomial& F, const RingPtr& target) {
  return substitute_first(F, Rational(1), target);
}

Polynomial weighted_homogenize(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw PreconditionError("weighted_homogenize: zero polynomial");
  if (w.size() != f.nvars()) throw PreconditionError("weight dimension mismatch");
  for (const auto& e : w.entries())
    if (e.get_den() != 1 || sgn(e) <= 0)
      throw PreconditionError("weighted_homogenize: weights must be positive integers");
  Rational top = w_degree(f, w);
  std::vector<std::string> names{homogenizing_name(*f.ring())};
  names.insert(names.end(), f.ring()->names().begin(), f.ring()->names().end());
  RingPtr target = make_ring(std::move(names));
  Polynomial::TermMap t;
  for (const auto& [a, c] : f.terms()) {
    Rational gap = top - w.dot(a);
    Exponent b;
    b.push_back(static_cast<int>(gap.get_num().get_si()));
    b.insert(b.end(), a.begin(), a.end());
    t.emplace(std::move(b), c);
  }
  return Polynomial(target, std::move(t));
}

Polynomial orthant_flip(const Polynomial& f, const SignVector& pi) {
  if (pi.size() != f.nvars()) throw PreconditionError("orthant_flip: dimension mismatch");
  Polynomial::TermMap t;
  for (const auto& [a, c] : f.terms()) {
    int sign = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (pi[i] < 0 && (a[i] & 1)) sign = -sign;
    t.emplace(a, sign > 0 ? c : Rational(-c));
  }
  return Polynomial(f.ring(), std::move(t));
}

std::string to_string(const Exponent& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : f.terms()) {
    Rational mag = abs(c);
    bool negative = sgn(c) < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      std::string v = f.ring()->name(i);
      if (a[i] > 1) v += "^" + std::to_string(a[i]);
      factors.push_back(std::move(v));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

}  // namespace rrtrop
