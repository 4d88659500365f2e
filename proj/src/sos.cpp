#include "rrtrop/sos.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rrtrop/error.hpp"
#include "rrtrop/parse.hpp"

namespace rrtrop {

Polynomial QMRepresentation::generator(std::size_t i) const {
  if (i == 0) return Polynomial::constant(h.ring(), 1);
  return generators.at(i - 1);
}

Polynomial QMRepresentation::expand() const {
  Polynomial sum = h;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    Polynomial sigma(h.ring());
    for (const auto& y : squares[i]) sigma += y * y;
    sum += i == 0 ? sigma : generators.at(i - 1) * sigma;
  }
  return sum;
}

namespace {

void check_shape(const Polynomial& f, const QMRepresentation& rep, const Ideal& I) {
  if (rep.squares.size() != rep.generators.size() + 1)
    throw PreconditionError("representation needs one square list per generator plus one for g_0 = 1");
  require_same_ring(f.ring(), rep.h.ring(), "representation");
  require_same_ring(f.ring(), I.ring(), "representation");
  for (const auto& g : rep.generators) require_same_ring(f.ring(), g.ring(), "representation");
  for (const auto& list : rep.squares)
    for (const auto& y : list) require_same_ring(f.ring(), y.ring(), "representation");
}

}  // namespace

VerifyResult verify_representation(const Polynomial& f, const QMRepresentation& rep, const Ideal& I) {
  check_shape(f, rep, I);
  VerifyResult r{false, false, false, f - rep.expand()};
  r.identity = r.discrepancy.is_zero();
  r.h_in_ideal = is_member(rep.h, I);
  r.ok = r.identity && r.h_in_ideal;
  return r;
}

const char* to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::Ok: return "OK";
    case ReductionStatus::BasisViolation: return "BASIS-VIOLATION";
    case ReductionStatus::IdentityInconsistent: return "IDENTITY-INCONSISTENT";
  }
  return "?";
}

std::optional<Rational> max_weighted_degree(const QMRepresentation& rep, const WeightVector& w) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < rep.squares.size(); ++i) {
    Polynomial g = rep.generator(i);
    if (g.is_zero()) continue;
    for (const auto& y : rep.squares[i]) {
      if (y.is_zero()) continue;
      Rational d = w_degree(g, w) + 2 * w_degree(y, w);
      if (!best || d > *best) best = d;
    }
  }
  return best;
}

std::optional<int> max_total_degree(const QMRepresentation& rep) {
  std::optional<int> best;
  for (std::size_t i = 0; i < rep.squares.size(); ++i) {
    Polynomial g = rep.generator(i);
    if (g.is_zero()) continue;
    for (const auto& y : rep.squares[i]) {
      if (y.is_zero()) continue;
      int d = g.total_degree() + 2 * y.total_degree();
      if (!best || d > *best) best = d;
    }
  }
  return best;
}

long stability_bound(const WeightVector& w, long d) {
  if (w.size() == 0 || !w.all_positive()) throw PreconditionError("stability_bound needs a strictly positive weight");
  Rational lo = w[0], hi = w[0];
  for (const auto& x : w.entries()) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  Rational x = hi / lo * d;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return c.get_si();
}

ReductionResult reduce_degree(const Polynomial& f, const QMRepresentation& rep, const Ideal& I,
                              const WeightVector& w, const BasisAssertion& assertion, TieBreak tiebreak) {
  if (w.size() != f.nvars()) throw PreconditionError("weight dimension mismatch");
  if (!w.all_positive()) throw PreconditionError("degree reduction needs a strictly positive weight");
  if (assertion.kind == BasisAssertionKind::RealRadicalInitial && !rep.generators.empty())
    throw PreconditionError("a real-radical initial ideal only justifies representations without generators");
  auto v = verify_representation(f, rep, I);
  if (!v.ok)
    throw PreconditionError("representation does not verify; discrepancy " + to_string(v.discrepancy) +
                            (v.h_in_ideal ? "" : ", h is not in the ideal"));

  const MonomialOrder order(w, tiebreak);
  const GroebnerBasis& basis = I.basis(order);
  std::vector<Polynomial> bases, initials;
  for (const auto& b : basis.elements()) {
    bases.push_back(b);
    initials.push_back(initial_form(b, w));
  }

  ReductionResult out{ReductionStatus::Ok, rep, {}, std::nullopt, std::nullopt, std::nullopt, {}};
  std::optional<Rational> target;
  if (!f.is_zero()) target = w_degree(f, w);
  out.trace.target_degree = target ? *target : Rational(0);

  for (;;) {
    auto d = max_weighted_degree(out.rep, w);
    if (!d || (target && *d <= *target)) break;

    ReductionStep step{*d, {}, Polynomial(f.ring()), {}, {}, 0};
    for (std::size_t i = 0; i < out.rep.squares.size(); ++i) {
      Polynomial g = out.rep.generator(i);
      if (g.is_zero()) continue;
      for (std::size_t j = 0; j < out.rep.squares[i].size(); ++j) {
        const Polynomial& y = out.rep.squares[i][j];
        if (y.is_zero() || w_degree(g, w) + 2 * w_degree(y, w) != *d) continue;
        step.active.emplace_back(i, j);
        Polynomial iy = initial_form(y, w);
        step.top += initial_form(g, w) * iy * iy;
        step.cancelled.push_back(iy);
      }
    }

    if (!divide(step.top, initials, order).remainder.is_zero()) {
      out.status = ReductionStatus::IdentityInconsistent;
      out.violation_top = step.top;
      out.message = "top-degree sum " + to_string(step.top) + " is not in the initial ideal";
      return out;
    }
    for (std::size_t k = 0; k < step.active.size(); ++k) {
      Division div = divide(step.cancelled[k], initials, order);
      if (!div.remainder.is_zero()) {
        out.status = ReductionStatus::BasisViolation;
        out.violation_top = step.top;
        out.violation_witness = step.cancelled[k];
        out.violation_pair = step.active[k];
        out.message = "top-degree sum " + to_string(step.top) + " lies in the initial ideal but " +
                      to_string(step.cancelled[k]) + " does not";
        return out;
      }
      Polynomial z(f.ring());
      for (std::size_t b = 0; b < bases.size(); ++b)
        if (!div.quotients[b].is_zero()) z += div.quotients[b] * bases[b];
      step.lifts.push_back(z);
    }

    for (std::size_t k = 0; k < step.active.size(); ++k) {
      auto [i, j] = step.active[k];
      Polynomial& y = out.rep.squares[i][j];
      const Polynomial& z = step.lifts[k];
      // g (y^2 - (y - z)^2) = g z (2y - z) moves into h
      out.rep.h += out.rep.generator(i) * z * (y * Rational(2) - z);
      y -= z;
    }
    for (auto& list : out.rep.squares)
      list.erase(std::remove_if(list.begin(), list.end(), [](const Polynomial& y) { return y.is_zero(); }),
                 list.end());
    auto next = max_weighted_degree(out.rep, w);
    step.next_degree = next ? *next : Rational(0);
    if (next && *next >= *d) {
      out.status = ReductionStatus::IdentityInconsistent;
      out.message = "weighted degree did not drop";
      out.trace.steps.push_back(std::move(step));
      return out;
    }
    out.trace.steps.push_back(std::move(step));
  }
  return out;
}

namespace {

using nlohmann::json;

std::vector<Polynomial> parse_list(const json& j, const RingPtr& ring, const char* key) {
  std::vector<Polynomial> out;
  if (!j.is_array()) throw ParseError(std::string("'") + key + "' must be an array of polynomials");
  for (const auto& e : j) out.push_back(parse_polynomial(e.get<std::string>(), ring));
  return out;
}

json list_json(const std::vector<Polynomial>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(to_string(p));
  return a;
}

}  // namespace

RepresentationFile parse_representation_file(const std::string& text) {
  try {
    json j = json::parse(text);
    std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
    RepresentationFile file{make_ring(names), Polynomial(make_ring(names)), {}, {{}, {}, Polynomial(make_ring(names))}, {}};
    file.f = parse_polynomial(j.at("f").get<std::string>(), file.ring);
    file.ideal = parse_list(j.at("ideal"), file.ring, "ideal");
    if (j.contains("generators")) file.rep.generators = parse_list(j["generators"], file.ring, "generators");
    const json& sq = j.at("squares");
    if (!sq.is_array()) throw ParseError("'squares' must be an array of arrays");
    for (const auto& list : sq) file.rep.squares.push_back(parse_list(list, file.ring, "squares"));
    file.rep.h = j.contains("h") ? parse_polynomial(j["h"].get<std::string>(), file.ring) : Polynomial(file.ring);
    if (j.contains("weight") && !j["weight"].is_null()) {
      file.weight = parse_weight(j["weight"].get<std::string>());
      if (file.weight->size() != names.size()) throw ParseError("weight dimension does not match vars");
    }
    if (file.rep.squares.size() != file.rep.generators.size() + 1)
      throw ParseError("'squares' needs one list per generator plus one for g_0 = 1");
    if (file.ideal.empty()) file.ideal.push_back(Polynomial(file.ring));
    return file;
  } catch (const json::exception& e) {
    throw ParseError(std::string("representation file: ") + e.what());
  }
}

RepresentationFile read_representation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_representation_file(buf.str());
}

std::string format_representation_file(const RepresentationFile& file) {
  json j;
  j["vars"] = file.ring->names();
  j["f"] = to_string(file.f);
  j["ideal"] = list_json(file.ideal);
  j["generators"] = list_json(file.rep.generators);
  json sq = json::array();
  for (const auto& list : file.rep.squares) sq.push_back(list_json(list));
  j["squares"] = sq;
  j["h"] = to_string(file.rep.h);
  if (file.weight) j["weight"] = to_string(*file.weight);
  return j.dump(2) + "\n";
}

}  // namespace rrtrop
