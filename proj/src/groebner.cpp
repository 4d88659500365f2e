#include "rrtrop/groebner.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "rrtrop/error.hpp"

namespace rrtrop {

const char* to_string(TieBreak t) {
  switch (t) {
    case TieBreak::Grlex: return "grlex";
    case TieBreak::Lex: return "lex";
    case TieBreak::Grevlex: return "grevlex";
  }
  return "?";
}

TieBreak parse_tiebreak(const std::string& s) {
  if (s == "grlex") return TieBreak::Grlex;
  if (s == "lex") return TieBreak::Lex;
  if (s == "grevlex") return TieBreak::Grevlex;
  throw ParseError("unknown tie-break order '" + s + "' (expected grlex, lex or grevlex)");
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder::MonomialOrder(TieBreak tiebreak) : tiebreak_(tiebreak) {}

MonomialOrder::MonomialOrder(const WeightVector& weight, TieBreak tiebreak)
    : weight_(weight.primitive_integer()), tiebreak_(tiebreak) {
  bool all_zero = std::all_of(weight_.begin(), weight_.end(), [](const Integer& v) { return v == 0; });
  if (all_zero) {
    weight_.clear();
    return;
  }
  bool small = std::all_of(weight_.begin(), weight_.end(),
                           [](const Integer& v) { return abs(v) < Integer(1 << 30); });
  if (small)
    for (const auto& v : weight_) small_weight_.push_back(v.get_si());
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  if (!weight_.empty()) {
    if (!small_weight_.empty()) {
      __int128 wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += static_cast<__int128>(small_weight_[i]) * a[i];
        wb += static_cast<__int128>(small_weight_[i]) * b[i];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
    } else {
      Integer wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += weight_[i] * a[i];
        wb += weight_[i] * b[i];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
    }
  }
  if (tiebreak_ != TieBreak::Lex) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
  }
  if (tiebreak_ == TieBreak::Grevlex) {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

bool MonomialOrder::is_term_order() const {
  return std::all_of(weight_.begin(), weight_.end(), [](const Integer& v) { return v >= 0; });
}

bool MonomialOrder::operator<(const MonomialOrder& o) const {
  if (tiebreak_ != o.tiebreak_) return tiebreak_ < o.tiebreak_;
  return weight_ < o.weight_;
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  return tiebreak_ == o.tiebreak_ && weight_ == o.weight_;
}

const Exponent& leading_exponent(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw PreconditionError("zero polynomial has no leading term");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return best->first;
}

Rational leading_coefficient(const Polynomial& f, const MonomialOrder& order) {
  return f.coefficient(leading_exponent(f, order));
}

// ---------------------------------------------------------------------------
// Order-sorted working representation

namespace {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Exponent& a, const Exponent& b) const { return order->greater(a, b); }
};

using OPoly = std::map<Exponent, Rational, OrderGreater>;

OPoly to_opoly(const Polynomial& f, const MonomialOrder& order) {
  OPoly p(OrderGreater{&order});
  for (const auto& [a, c] : f.terms()) p.emplace(a, c);
  return p;
}

Polynomial from_opoly(const OPoly& p, const RingPtr& ring) {
  Polynomial::TermMap t;
  for (const auto& [a, c] : p) t.emplace(a, c);
  return Polynomial(ring, std::move(t));
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Exponent quotient(const Exponent& a, const Exponent& b) {
  Exponent q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// p -= c * x^shift * g
void subtract_multiple(OPoly& p, const OPoly& g, const Exponent& shift, const Rational& c) {
  for (const auto& [a, d] : g) {
    Exponent e(a);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
    auto [it, inserted] = p.emplace(std::move(e), -c * d);
    if (!inserted) {
      it->second -= c * d;
      if (sgn(it->second) == 0) p.erase(it);
    }
  }
}

// Full reduction of p by the (monic-or-not) basis; optional quotient tracking.
OPoly reduce(OPoly p, const std::vector<OPoly>& basis, std::vector<OPoly>* quotients) {
  OPoly r(p.key_comp());
  while (!p.empty()) {
    auto lead = p.begin();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& g = basis[k];
      if (g.empty()) continue;
      const auto& glead = *g.begin();
      if (!divides(glead.first, lead->first)) continue;
      Rational c = lead->second / glead.second;
      Exponent shift = quotient(lead->first, glead.first);
      if (quotients) (*quotients)[k].emplace(shift, c);
      subtract_multiple(p, g, shift, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.insert(*lead);
      p.erase(lead);
    }
  }
  return r;
}

void make_monic(OPoly& p) {
  if (p.empty()) return;
  Rational inv = 1 / p.begin()->second;
  for (auto& [a, c] : p) c *= inv;
}

OPoly s_polynomial(const OPoly& f, const OPoly& g) {
  const auto& [fa, fc] = *f.begin();
  const auto& [ga, gc] = *g.begin();
  Exponent l = lcm(fa, ga);
  OPoly s(f.key_comp());
  subtract_multiple(s, f, quotient(l, fa), Rational(-1) / fc);
  subtract_multiple(s, g, quotient(l, ga), Rational(1) / gc);
  return s;
}

std::vector<OPoly> reduce_basis(std::vector<OPoly> G, const MonomialOrder& order) {
  for (auto& g : G) make_monic(g);
  std::sort(G.begin(), G.end(),
            [&](const OPoly& a, const OPoly& b) { return order.greater(b.begin()->first, a.begin()->first); });
  std::vector<OPoly> minimal;
  for (const auto& g : G) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (divides(m.begin()->first, g.begin()->first)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  std::vector<OPoly> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    OPoly r = reduce(minimal[i], others, nullptr);
    make_monic(r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [&](const OPoly& a, const OPoly& b) { return order.greater(a.begin()->first, b.begin()->first); });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis / Buchberger

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> elements, MonomialOrder order, bool reduced)
    : elements_(std::move(elements)), order_(std::move(order)), reduced_(reduced) {}

bool GroebnerBasis::is_unit() const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [](const Polynomial& g) { return !g.is_zero() && g.is_constant(); });
}

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  std::vector<OPoly> basis;
  for (const auto& d : divisors) {
    require_same_ring(f.ring(), d.ring(), "divide");
    basis.push_back(to_opoly(d, order));
  }
  std::vector<OPoly> q(basis.size(), OPoly(OrderGreater{&order}));
  OPoly r = reduce(to_opoly(f, order), basis, &q);
  Division out{{}, from_opoly(r, f.ring())};
  for (const auto& qk : q) out.quotients.push_back(from_opoly(qk, f.ring()));
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
  if (!order.is_term_order())
    throw PreconditionError(
        "monomial order has negative weights and is not a well-order; homogenize first "
        "(initial_ideal does this automatically)");
  if (generators.empty()) throw PreconditionError("buchberger: no generators");
  const RingPtr& ring = generators.front().ring();
  std::vector<OPoly> G;
  for (const auto& g : generators) {
    require_same_ring(ring, g.ring(), "buchberger");
    if (g.is_zero()) continue;
    OPoly p = to_opoly(g, order);
    make_monic(p);
    G.push_back(std::move(p));
  }
  if (G.empty()) throw PreconditionError("buchberger: zero ideal");

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm under the order first.
    auto pick = pending.begin();
    Exponent best = lcm(G[pick->first].begin()->first, G[pick->second].begin()->first);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponent l = lcm(G[it->first].begin()->first, G[it->second].begin()->first);
      if (order.greater(best, l)) {
        best = std::move(l);
        pick = it;
      }
    }
    auto [i, j] = *pick;
    pending.erase(pick);
    const Exponent& li = G[i].begin()->first;
    const Exponent& lj = G[j].begin()->first;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(G[k].begin()->first, best) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    OPoly r = reduce(s_polynomial(G[i], G[j]), G, nullptr);
    if (r.empty()) continue;
    make_monic(r);
    G.push_back(std::move(r));
    std::size_t n = G.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  std::vector<Polynomial> out;
  for (const auto& g : reduce_basis(std::move(G), order)) out.push_back(from_opoly(g, ring));
  return GroebnerBasis(std::move(out), order, true);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return divide(f, basis.elements(), basis.order()).remainder;
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(std::vector<Polynomial> generators) : cache_(std::make_shared<Cache>()) {
  for (auto& g : generators)
    if (!g.is_zero()) generators_.push_back(std::move(g));
  if (generators_.empty()) throw PreconditionError("zero ideal: no nonzero generators");
  for (const auto& g : generators_) require_same_ring(generators_.front().ring(), g.ring(), "ideal");
}

const GroebnerBasis& Ideal::basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(generators_, order));
  for (const auto& g : generators_)
    if (!normal_form(g, *gb).is_zero())
      throw std::logic_error("Groebner basis failed verification against its generators");
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(order, std::move(gb));
  return *it->second;
}

bool is_member(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "is_member");
  if (f.is_zero()) return true;
  return normal_form(f, I.basis(MonomialOrder(TieBreak::Grlex))).is_zero();
}

bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  auto nonzero = [](const std::vector<Polynomial>& v) {
    return std::any_of(v.begin(), v.end(), [](const Polynomial& p) { return !p.is_zero(); });
  };
  bool za = !nonzero(a), zb = !nonzero(b);
  if (za || zb) return za == zb;
  Ideal ia(a), ib(b);
  return std::all_of(a.begin(), a.end(), [&](const Polynomial& p) { return is_member(p, ib); }) &&
         std::all_of(b.begin(), b.end(), [&](const Polynomial& p) { return is_member(p, ia); });
}

namespace {

std::vector<Polynomial> reduced_in_tiebreak(const std::vector<Polynomial>& gens, TieBreak tiebreak) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  return buchberger(nonzero, MonomialOrder(tiebreak)).elements();
}

}  // namespace

std::vector<Polynomial> initial_ideal(const Ideal& I, const WeightVector& w, InitialRoute route,
                                      TieBreak tiebreak) {
  if (w.size() != I.nvars()) throw PreconditionError("weight dimension mismatch");
  if (route == InitialRoute::Auto)
    route = w.all_nonnegative() ? InitialRoute::Direct : InitialRoute::Homogenized;

  std::vector<Polynomial> forms;
  if (route == InitialRoute::Direct) {
    if (!w.all_nonnegative())
      throw PreconditionError("direct initial ideal needs a nonnegative weight; homogenize first");
    for (const auto& g : I.basis(MonomialOrder(w, tiebreak)).elements()) forms.push_back(initial_form(g, w));
    return reduced_in_tiebreak(forms, tiebreak);
  }

  // Homogenize a degree-compatible basis; its homogenization generates the homogenized ideal.
  const auto& graded = I.basis(MonomialOrder(TieBreak::Grlex)).elements();
  std::vector<std::string> names{homogenizing_name(*I.ring())};
  names.insert(names.end(), I.ring()->names().begin(), I.ring()->names().end());
  RingPtr hring = make_ring(std::move(names));
  std::vector<Polynomial> hgens;
  for (const auto& g : graded) hgens.push_back(homogenize(g, hring));

  std::vector<Integer> wi = w.primitive_integer();
  Integer b = 0;
  for (const auto& e : wi)
    if (-e > b) b = -e;
  std::vector<Rational> lifted{Rational(b)};
  for (const auto& e : wi) lifted.emplace_back(e + b);
  WeightVector v(std::move(lifted));

  GroebnerBasis hbasis = buchberger(hgens, MonomialOrder(v, tiebreak));
  for (const auto& g : hbasis.elements())
    forms.push_back(dehomogenize(initial_form(g, v), I.ring()));
  return reduced_in_tiebreak(forms, tiebreak);
}

bool monomial_squarefree_test(const std::vector<Polynomial>& generators) {
  std::vector<Exponent> mons;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_monomial())
      throw PreconditionError("monomial_squarefree_test: '" + to_string(g) + "' is not a monomial");
    mons.push_back(g.terms().begin()->first);
  }
  for (std::size_t i = 0; i < mons.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < mons.size() && minimal; ++j) {
      if (i == j) continue;
      if (divides(mons[j], mons[i]) && (mons[j] != mons[i] || j < i)) minimal = false;
    }
    if (!minimal) continue;
    for (int e : mons[i])
      if (e > 1) return false;
  }
  return true;
}

bool is_w_groebner_basis(const std::vector<Polynomial>& gens, const Ideal& I, const WeightVector& w) {
  std::vector<Polynomial> forms;
  for (const auto& g : gens) {
    if (!is_member(g, I))
      throw PreconditionError("is_w_groebner_basis: '" + to_string(g) + "' is not in the ideal");
    if (!g.is_zero()) forms.push_back(initial_form(g, w));
  }
  return same_ideal(forms, initial_ideal(I, w));
}

bool contains_monomial(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw PreconditionError("contains_monomial: empty generator list");
  const RingPtr& ring = gens.front().ring();
  std::vector<std::string> names(ring->names());
  std::string t = "t";
  while (ring->index_of(t) >= 0) t += "_";
  names.push_back(t);
  RingPtr ext = make_ring(std::move(names));
  std::size_t n = ring->size();
  std::vector<Polynomial> lifted;
  for (const auto& g : gens) {
    Polynomial::TermMap terms;
    for (const auto& [a, c] : g.terms()) {
      Exponent b(a);
      b.push_back(0);
      terms.emplace(std::move(b), c);
    }
    lifted.emplace_back(ext, std::move(terms));
  }
  Exponent all(n + 1, 1);
  lifted.push_back(Polynomial::constant(ext, 1) - Polynomial::monomial(ext, all));
  return buchberger(lifted, MonomialOrder(TieBreak::Grevlex)).is_unit();
}

}  // namespace rrtrop
