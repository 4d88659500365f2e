#include "rrtrop/realroots.hpp"

#include <algorithm>

#include "rrtrop/error.hpp"

namespace rrtrop {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::from_roots(const std::vector<Rational>& roots) {
  UnivariatePolynomial p(std::vector<Rational>{1});
  for (const auto& r : roots) p = p * UnivariatePolynomial(std::vector<Rational>{-r, 1});
  return p;
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator-() const { return scaled(-1); }

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::scaled(const Rational& c) const {
  std::vector<Rational> r(coeffs_);
  for (auto& x : r) x *= c;
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::primitive_positive() const {
  if (is_zero()) return *this;
  Integer l = 1, g = 0;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return scaled(Rational(l, g));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

std::string to_string(const UnivariatePolynomial& u, const std::string& var) {
  if (u.is_zero()) return "0";
  RingPtr ring = make_ring({var});
  Polynomial::TermMap t;
  for (std::size_t k = 0; k < u.coeffs().size(); ++k)
    if (sgn(u[k])) t.emplace(Exponent{static_cast<int>(k)}, u[k]);
  return to_string(Polynomial(ring, std::move(t)));
}

DivMod divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quo;
  int db = b.degree();
  if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    Rational c = top / b.leading();
    quo[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return {UnivariatePolynomial(std::move(quo)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    UnivariatePolynomial r = divmod(a, b).remainder.primitive_positive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UnivariatePolynomial> sturm_sequence(const UnivariatePolynomial& u) {
  if (u.degree() < 1) throw PreconditionError("sturm_sequence: constant polynomial");
  std::vector<UnivariatePolynomial> seq{u, u.derivative()};
  for (;;) {
    UnivariatePolynomial r = -divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(r.primitive_positive());
  }
  return seq;
}

namespace {

int sign_variations(const std::vector<UnivariatePolynomial>& seq, const Rational& t) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(p.evaluate(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Roots of `u` in (lo, hi]; lo must not be a root.
int sturm_count(const UnivariatePolynomial& u, const Rational& lo, const Rational& hi) {
  if (u.degree() < 1) return 0;
  auto seq = sturm_sequence(u);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

// Strip t^m; returns m.
int strip_zero_root(UnivariatePolynomial& u) {
  int m = 0;
  while (m < static_cast<int>(u.coeffs().size()) && sgn(u[static_cast<std::size_t>(m)]) == 0) ++m;
  if (m > 0) u = UnivariatePolynomial(std::vector<Rational>(u.coeffs().begin() + m, u.coeffs().end()));
  return m;
}

}  // namespace

Rational cauchy_bound(const UnivariatePolynomial& u) {
  Rational best = 0;
  for (int k = 0; k < u.degree(); ++k) {
    Rational r = abs(u[static_cast<std::size_t>(k)] / u.leading());
    if (r > best) best = r;
  }
  return best + 1;
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw PreconditionError("squarefree_part: zero polynomial");
  if (u.degree() < 1) return UnivariatePolynomial(std::vector<Rational>{1});
  return divmod(u, gcd(u, u.derivative())).quotient.primitive_positive();
}

int count_real_roots(const UnivariatePolynomial& u, const RootRange& range) {
  if (u.is_zero()) throw PreconditionError("count_real_roots: zero polynomial");
  if (range.kind == RootRange::Kind::Closed) {
    if (range.lo > range.hi) return 0;
    UnivariatePolynomial s = squarefree_part(u);
    int extra = 0;
    auto divide_out = [&](const Rational& r) {
      if (s.degree() >= 1 && sgn(s.evaluate(r)) == 0) {
        s = divmod(s, UnivariatePolynomial(std::vector<Rational>{-r, 1})).quotient;
        ++extra;
      }
    };
    divide_out(range.lo);
    if (range.hi != range.lo) divide_out(range.hi);
    return extra + sturm_count(s, range.lo, range.hi);
  }
  UnivariatePolynomial p = u;
  int m = strip_zero_root(p);
  if (p.degree() < 1) return (range.kind == RootRange::Kind::All && m > 0) ? 1 : 0;
  Rational bound = cauchy_bound(p);
  switch (range.kind) {
    case RootRange::Kind::All: return sturm_count(p, -bound, bound) + (m > 0 ? 1 : 0);
    case RootRange::Kind::Positive: return sturm_count(p, 0, bound);
    case RootRange::Kind::Negative: return sturm_count(p, -bound, 0);
    default: break;
  }
  return 0;
}

std::vector<UnivariatePolynomial> squarefree_factorization(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw PreconditionError("squarefree_factorization: zero polynomial");
  std::vector<UnivariatePolynomial> out;
  if (u.degree() < 1) return out;
  UnivariatePolynomial a = gcd(u, u.derivative());
  UnivariatePolynomial b = divmod(u, a).quotient;
  UnivariatePolynomial c = divmod(u.derivative(), a).quotient;
  UnivariatePolynomial d = c + (-b.derivative());
  while (b.degree() >= 1) {
    UnivariatePolynomial g = d.is_zero() ? b.monic() : gcd(b, d);
    out.push_back(g.primitive_positive());
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c + (-b.derivative());
  }
  return out;
}

bool changes_sign(const UnivariatePolynomial& u) {
  if (u.degree() < 1) return false;
  UnivariatePolynomial odd(std::vector<Rational>{1});
  auto parts = squarefree_factorization(u);
  for (std::size_t i = 0; i < parts.size(); i += 2) odd = odd * parts[i];
  return odd.degree() >= 1 && count_real_roots(odd) > 0;
}

bool is_univariate_real_radical(const UnivariatePolynomial& u) {
  if (u.degree() < 1) throw PreconditionError("is_univariate_real_radical: constant polynomial");
  if (gcd(u, u.derivative()).degree() > 0) return false;
  return count_real_roots(u) == u.degree();
}

bool edge_has_Rstar_zero(const EdgeData& e) {
  UnivariatePolynomial u = UnivariatePolynomial::from_edge(e);
  if (u.degree() < 1) return false;
  if (count_real_roots(u, RootRange::positive()) > 0) return true;
  bool odd = std::any_of(e.v.begin(), e.v.end(), [](int x) { return x % 2 != 0; });
  return odd && count_real_roots(u, RootRange::negative()) > 0;
}

}  // namespace rrtrop
