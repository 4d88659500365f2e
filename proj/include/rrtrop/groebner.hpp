#pragma once

// Weight-refined monomial orders, Buchberger's algorithm, normal forms and
// initial ideals In_w(I).

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rrtrop/poly.hpp"

namespace rrtrop {

enum class TieBreak { Grlex, Lex, Grevlex };

const char* to_string(TieBreak t);
TieBreak parse_tiebreak(const std::string& s);

// Compare by w.a first, then by the tie-break term order. The weight is kept as
// a primitive integer vector, so proportional weights give identical orders.
class MonomialOrder {
 public:
  explicit MonomialOrder(TieBreak tiebreak = TieBreak::Grlex);
  MonomialOrder(const WeightVector& weight, TieBreak tiebreak = TieBreak::Grlex);

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Exponent& a, const Exponent& b) const;
  bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }
  // A well-order (needed by Buchberger) iff no weight entry is negative.
  bool is_term_order() const;
  const std::vector<Integer>& weight() const { return weight_; }
  TieBreak tiebreak() const { return tiebreak_; }
  bool operator<(const MonomialOrder& o) const;
  bool operator==(const MonomialOrder& o) const;

 private:
  std::vector<Integer> weight_;
  std::vector<long> small_weight_;
  TieBreak tiebreak_;
};

const Exponent& leading_exponent(const Polynomial& f, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& f, const MonomialOrder& order);

class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> elements, MonomialOrder order, bool reduced);
  const std::vector<Polynomial>& elements() const { return elements_; }
  const MonomialOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }
  bool is_unit() const;

 private:
  std::vector<Polynomial> elements_;
  MonomialOrder order_;
  bool reduced_;
};

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division by `divisors` under `order`, full reduction of every term.
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order);

// Reduced Groebner basis. Throws PreconditionError if the order has negative weights.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Ideal with a Groebner basis cache keyed by monomial order. Copies share the cache.
class Ideal {
 public:
  explicit Ideal(std::vector<Polynomial> generators);

  const std::vector<Polynomial>& generators() const { return generators_; }
  const RingPtr& ring() const { return generators_.front().ring(); }
  std::size_t nvars() const { return ring()->size(); }
  bool is_principal() const { return generators_.size() == 1; }

  const GroebnerBasis& basis(const MonomialOrder& order) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
  };
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool is_member(const Polynomial& f, const Ideal& I);
// Mutual containment of the generated ideals.
bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

enum class InitialRoute { Auto, Direct, Homogenized };

// Reduced basis (under the tie-break order) of In_w(I). Weights with negative
// entries go through homogenization with v = (0,w) + b(1,...,1), b = -min w_i.
std::vector<Polynomial> initial_ideal(const Ideal& I, const WeightVector& w,
                                      InitialRoute route = InitialRoute::Auto,
                                      TieBreak tiebreak = TieBreak::Grlex);

bool monomial_squarefree_test(const std::vector<Polynomial>& generators);

// True iff <In_w(gens)> = In_w(I). Throws PreconditionError naming a generator outside I.
bool is_w_groebner_basis(const std::vector<Polynomial>& gens, const Ideal& I, const WeightVector& w);

// True iff the ideal contains a monomial, via 1 in <gens, 1 - t x_1...x_n>.
bool contains_monomial(const std::vector<Polynomial>& gens);

}  // namespace rrtrop
