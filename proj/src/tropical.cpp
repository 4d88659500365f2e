#include "rrtrop/tropical.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>

#include "rrtrop/error.hpp"

namespace rrtrop {

const char* to_string(RealRadical v) {
  switch (v) {
    case RealRadical::Yes: return "YES";
    case RealRadical::No: return "NO";
    case RealRadical::Unknown: return "UNKNOWN";
  }
  return "?";
}

const char* to_string(Membership v) {
  switch (v) {
    case Membership::In: return "IN";
    case Membership::Out: return "OUT";
    case Membership::Unknown: return "UNKNOWN";
  }
  return "?";
}

const char* to_string(Squarefree v) {
  switch (v) {
    case Squarefree::Yes: return "YES";
    case Squarefree::No: return "NO";
    case Squarefree::NotApplicable: return "N/A";
  }
  return "?";
}

RealRadical parse_real_radical(const std::string& s) {
  if (s == "YES") return RealRadical::Yes;
  if (s == "NO") return RealRadical::No;
  if (s == "UNKNOWN") return RealRadical::Unknown;
  throw ParseError("bad real-radical verdict '" + s + "'");
}

Membership parse_membership(const std::string& s) {
  if (s == "IN") return Membership::In;
  if (s == "OUT") return Membership::Out;
  if (s == "UNKNOWN") return Membership::Unknown;
  throw ParseError("bad membership verdict '" + s + "'");
}

Squarefree parse_squarefree(const std::string& s) {
  if (s == "YES") return Squarefree::Yes;
  if (s == "NO") return Squarefree::No;
  if (s == "N/A") return Squarefree::NotApplicable;
  throw ParseError("bad square-free flag '" + s + "'");
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::CompactRstar: return "COMPACT_RSTAR";
    case CertificateKind::NoncompactRstar: return "NONCOMPACT_RSTAR";
    case CertificateKind::NoncompactR: return "NONCOMPACT_R";
    case CertificateKind::Stable: return "STABLE";
    case CertificateKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

CertificateKind parse_certificate_kind(const std::string& s) {
  for (auto k : {CertificateKind::CompactRstar, CertificateKind::NoncompactRstar, CertificateKind::NoncompactR,
                 CertificateKind::Stable, CertificateKind::Inconclusive})
    if (s == to_string(k)) return k;
  throw ParseError("bad certificate kind '" + s + "'");
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

bool all_at_most_one(const Exponent& a) {
  return std::all_of(a.begin(), a.end(), [](int e) { return e <= 1; });
}

Polynomial homogeneous_part(const Polynomial& g, int degree) {
  Polynomial::TermMap t;
  for (const auto& [a, c] : g.terms())
    if (total_degree(a) == degree) t.emplace(a, c);
  return Polynomial(g.ring(), std::move(t));
}

// Some x_i^2 divides every term.
bool square_divides(const std::vector<Exponent>& support, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    bool all = !support.empty();
    for (const auto& a : support)
      if (a[i] < 2) all = false;
    if (all) return true;
  }
  return false;
}

WeightVector to_weight(const IntVec& v) {
  std::vector<Rational> e;
  for (const auto& x : v) e.emplace_back(x);
  return WeightVector(std::move(e));
}


// Seeded search for an R*-zero of g: either an exact zero or two points of the
// same open orthant with opposite signs. For n <= 4 every magnitude sample is
// tried in all orthants, so the outcome is invariant under sign flips.
std::optional<SignWitness> search_sign_change(const Polynomial& g, std::uint64_t seed, int samples) {
  const std::size_t n = g.nvars();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 20), den(1, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  const bool all_orthants = n <= 4;
  const std::size_t patterns = all_orthants ? (std::size_t{1} << n) : 1;
  std::map<std::size_t, std::vector<Rational>> pos, neg;
  std::vector<Rational> mag(n), pt(n);
  for (int s = 0; s < samples; ++s) {
    for (auto& m : mag) {
      m = Rational(num(rng), den(rng));
      m.canonicalize();
    }
    for (std::size_t k = 0; k < patterns; ++k) {
      std::size_t mask = all_orthants ? k : 0;
      for (std::size_t i = 0; i < n; ++i) {
        bool negative = all_orthants ? ((k >> i) & 1) : coin(rng);
        if (negative) mask |= std::size_t{1} << i;
        pt[i] = negative ? Rational(-mag[i]) : mag[i];
      }
      int sg = sgn(g.evaluate(pt));
      if (sg == 0) return SignWitness{pt, pt};
      auto& mine = sg > 0 ? pos : neg;
      auto& other = sg > 0 ? neg : pos;
      mine.emplace(mask, pt);
      if (auto it = other.find(mask); it != other.end())
        return sg > 0 ? SignWitness{it->second, pt} : SignWitness{pt, it->second};
    }
  }
  return std::nullopt;
}

std::pair<Exponent, Exponent> edge_endpoints(const std::vector<Exponent>& verts) {
  if (verts.size() != 2) throw PreconditionError("edge face must have two vertices");
  // b is the lexicographically smaller endpoint
  if (verts[0] < verts[1]) return {verts[1], verts[0]};
  return {verts[0], verts[1]};
}

struct EdgeVerdict {
  RealRadical verdict;
  std::string rule;
};

EdgeVerdict edge_verdict(const EdgeData& e) {
  for (std::size_t i = 0; i < e.a.size(); ++i)
    if (e.a[i] >= 2 && e.b[i] >= 2) return {RealRadical::No, "square-divides"};
  auto u = UnivariatePolynomial::from_edge(e);
  return {is_univariate_real_radical(u) ? RealRadical::Yes : RealRadical::No, "edge-criterion"};
}

// Verdict of a face using only rules that do not look at other faces.
RealRadical base_verdict(const Polynomial& f, const NewtonPolytope& P, std::size_t face) {
  const Face& F = P.faces()[face];
  if (F.dim == 0) return all_at_most_one(P.points()[F.points.front()]) ? RealRadical::Yes : RealRadical::No;
  if (F.dim == 1) {
    auto [a, b] = edge_endpoints(P.face_vertices(face));
    return edge_verdict(edge_univariate(f, P, a, b)).verdict;
  }
  return classify_principal_form(P.face_form(f, face)).verdict;
}

std::vector<IntVec> span_generators(const Cone& c) {
  std::vector<IntVec> out(c.rays);
  out.insert(out.end(), c.lineality.begin(), c.lineality.end());
  return out;
}

}  // namespace

std::optional<LinearCoordinate> as_univariate_in_linear_form(const Polynomial& g) {
  if (g.is_zero() || g.is_constant()) return std::nullopt;
  const std::size_t n = g.nvars();
  const int D = g.total_degree();
  std::size_t pivot = n;
  Rational c;
  for (std::size_t i = 0; i < n && pivot == n; ++i) {
    Exponent a(n, 0);
    a[i] = D;
    c = g.coefficient(a);
    if (sgn(c)) pivot = i;
  }
  if (pivot == n) return std::nullopt;

  Polynomial l(g.ring());
  for (std::size_t j = 0; j < n; ++j) {
    Rational cj = 1;
    if (j != pivot) {
      Exponent a(n, 0);
      a[pivot] = D - 1;
      a[j] += 1;
      cj = g.coefficient(a) / (c * D);
    }
    if (sgn(cj)) l += Polynomial::variable(g.ring(), j) * cj;
  }

  std::vector<Rational> pc(static_cast<std::size_t>(D) + 1, 0);
  for (int k = 0; k <= D; ++k) {
    Exponent a(n, 0);
    a[pivot] = k;
    pc[static_cast<std::size_t>(k)] = g.coefficient(a);
  }
  Polynomial rebuilt(g.ring()), power = Polynomial::constant(g.ring(), 1);
  for (int k = 0; k <= D; ++k) {
    if (sgn(pc[static_cast<std::size_t>(k)])) rebuilt += power * pc[static_cast<std::size_t>(k)];
    if (k < D) power = power * l;
  }
  if (rebuilt != g) return std::nullopt;
  return LinearCoordinate{l, UnivariatePolynomial(std::move(pc))};
}

bool certified_nonnegative(const Polynomial& g) {
  Polynomial h = g;
  for (;;) {
    if (h.is_zero()) return true;
    if (h.is_constant()) return sgn(h.terms().begin()->second) > 0;
    if (auto lc = as_univariate_in_linear_form(h)) return sgn(lc->p.leading()) > 0 && !changes_sign(lc->p);
    const int D = h.total_degree();
    if (D % 2) return false;
    Polynomial top = homogeneous_part(h, D);
    auto lt = as_univariate_in_linear_form(top);
    if (!lt || sgn(lt->p.leading()) <= 0) return false;
    h -= top;
  }
}

FormVerdict classify_principal_form(const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("classify_principal_form: zero polynomial");
  if (g.is_constant()) return {RealRadical::Yes, "unit-ideal"};
  if (g.is_monomial()) {
    bool sf = all_at_most_one(g.terms().begin()->first);
    return {sf ? RealRadical::Yes : RealRadical::No, "squarefree-monomial"};
  }
  if (square_divides(g.support(), g.nvars())) return {RealRadical::No, "square-divides"};
  if (auto lc = as_univariate_in_linear_form(g))
    return {is_univariate_real_radical(lc->p) ? RealRadical::Yes : RealRadical::No, "linear-coordinate"};
  if (certified_nonnegative(g) || certified_nonnegative(-g)) return {RealRadical::No, "sign-definite"};
  return {RealRadical::Unknown, ""};
}

ConeReport classify_cone(const Polynomial& f, const Fan& fan, std::size_t id, const ClassifyOptions& opts) {
  if (id >= fan.size()) throw PreconditionError("cone " + std::to_string(id) + " is not in the fan");
  const NewtonPolytope& P = fan.polytope();
  const Cone& cone = fan.cone(id);
  const Face& face = P.faces()[cone.dual_face];
  const std::size_t n = f.nvars();

  ConeReport r;
  r.cone_id = id;
  r.dim = cone.dim;
  r.face_dim = face.dim;
  r.rays = cone.rays;
  r.lineality = cone.lineality;
  r.dual_face_vertices = cone.dual_face_vertices;
  r.weight = fan.interior_point(id);
  Polynomial g = P.face_form(f, cone.dual_face);
  r.initial = {g};
  r.is_monomial = g.is_monomial();

  if (face.dim == 0) {
    bool sf = all_at_most_one(g.terms().begin()->first);
    r.squarefree = sf ? Squarefree::Yes : Squarefree::No;
    r.real_radical = sf ? RealRadical::Yes : RealRadical::No;
    r.radical_rule = "squarefree-monomial";
    r.in_trop = false;
    r.rstar = Membership::Out;
    r.rstar_rule = "monomial";
    return r;
  }
  r.in_trop = true;

  if (face.dim == 1) {
    auto [a, b] = edge_endpoints(P.face_vertices(cone.dual_face));
    EdgeData e = edge_univariate(f, P, a, b);
    auto ev = edge_verdict(e);
    r.real_radical = ev.verdict;
    r.radical_rule = ev.rule;
    auto u = UnivariatePolynomial::from_edge(e);
    SturmEvidence s;
    s.roots_all = count_real_roots(u);
    s.roots_pos = count_real_roots(u, RootRange::positive());
    s.roots_neg = count_real_roots(u, RootRange::negative());
    s.squarefree = gcd(u, u.derivative()).degree() == 0;
    r.sturm = s;
    for (std::size_t i = 0; i < n; ++i)
      if (std::min(e.a[i], e.b[i]) == 1)
        r.notes.push_back("x" + std::to_string(i + 1) + " divides the edge form exactly once");
    r.rstar = edge_has_Rstar_zero(e) ? Membership::In : Membership::Out;
    r.rstar_rule = "edge-sturm";
    r.edge = std::move(e);
    return r;
  }

  // Faces of dimension >= 2.
  auto fv = classify_principal_form(g);
  r.real_radical = fv.verdict;
  r.radical_rule = fv.rule;
  if (fv.verdict == RealRadical::Unknown) {
    const auto extra = span_generators(cone);
    for (const auto& other : fan.cones()) {
      if (other.id == id || !P.face_contains(cone.dual_face, other.dual_face)) continue;
      if (base_verdict(f, P, other.dual_face) != RealRadical::Yes) continue;
      auto v = relint_point_in_orthant(other, extra, n, false);
      if (!v) continue;
      r.real_radical = RealRadical::Yes;
      r.radical_rule = "refinement-lift";
      r.radical_source = other.id;
      r.refinement = *v;
      break;
    }
  }

  if (r.real_radical == RealRadical::Yes) {
    r.rstar = Membership::In;
    r.rstar_rule = "real-radical";
    return r;
  }
  for (const auto& other : fan.cones()) {
    if (other.id == id || !P.face_contains(cone.dual_face, other.dual_face)) continue;
    if (P.faces()[other.dual_face].dim != 1) continue;
    auto [a, b] = edge_endpoints(P.face_vertices(other.dual_face));
    if (edge_has_Rstar_zero(edge_univariate(f, P, a, b))) {
      r.rstar = Membership::In;
      r.rstar_rule = "refinement-edge";
      r.rstar_source = other.id;
      return r;
    }
  }
  std::uint64_t seed = splitmix(opts.seed ^ splitmix(id + 1));
  if (auto w = search_sign_change(g, seed, opts.samples)) {
    r.rstar = Membership::In;
    r.rstar_rule = "sampled-sign-change";
    r.rstar_witness = std::move(w);
    return r;
  }
  r.rstar = Membership::Unknown;
  r.rstar_rule = "undecided";
  r.notes.push_back("no R*-zero found in " + std::to_string(opts.samples) + " samples; never reported OUT");
  return r;
}

std::vector<ConeReport> classify_all_cones_serial(const Polynomial& f, const Fan& fan, const ClassifyOptions& opts) {
  std::vector<ConeReport> out;
  out.reserve(fan.size());
  for (std::size_t id = 0; id < fan.size(); ++id) out.push_back(classify_cone(f, fan, id, opts));
  return out;
}

std::vector<ConeReport> classify_all_cones(const Polynomial& f, const Fan& fan, const ClassifyOptions& opts,
                                           int jobs) {
  const long count = static_cast<long>(fan.size());
  std::vector<ConeReport> out(fan.size());
  std::exception_ptr failure;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long id = 0; id < count; ++id) {
    try {
      out[static_cast<std::size_t>(id)] = classify_cone(f, fan, static_cast<std::size_t>(id), opts);
    } catch (...) {
#pragma omp critical(rrtrop_classify_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

ChainCheck verify_chain(const std::vector<ConeReport>& reports) {
  ChainCheck c;
  for (const auto& r : reports) {
    std::string tag = "cone " + std::to_string(r.cone_id) + ": ";
    if (r.real_radical == RealRadical::Unknown || r.rstar == Membership::Unknown) ++c.undecided;
    if (r.real_radical == RealRadical::Yes && r.in_trop && r.rstar == Membership::Out)
      c.violations.push_back(tag + "real radical and in Trop but OUT of the real tropical variety");
    if (r.real_radical == RealRadical::Yes && !r.in_trop && !r.is_monomial)
      c.violations.push_back(tag + "real radical non-monomial form outside Trop");
    if (r.rstar == Membership::In && !r.in_trop) c.violations.push_back(tag + "IN the real tropical variety but not in Trop");
    if (!r.in_trop && r.rstar != Membership::Out) c.violations.push_back(tag + "outside Trop but not OUT");
  }
  c.ok = c.violations.empty();
  return c;
}

PrincipalAnalysis analyze_principal(const Polynomial& f, const ClassifyOptions& opts, int jobs) {
  if (f.is_zero()) throw PreconditionError("analyze_principal: zero polynomial");
  Fan fan{NewtonPolytope(f)};
  auto reports = jobs == 1 ? classify_all_cones_serial(f, fan, opts) : classify_all_cones(f, fan, opts, jobs);
  auto chain = verify_chain(reports);
  return PrincipalAnalysis{f, std::move(fan), std::move(reports), std::move(chain), opts};
}

std::vector<std::size_t> trop_principal(const PrincipalAnalysis& a) {
  std::vector<std::size_t> out;
  for (const auto& r : a.reports)
    if (r.in_trop) out.push_back(r.cone_id);
  return out;
}

std::map<std::size_t, Membership> trop_real_principal(const PrincipalAnalysis& a) {
  std::map<std::size_t, Membership> out;
  for (const auto& r : a.reports)
    if (r.in_trop) out.emplace(r.cone_id, r.rstar);
  return out;
}

std::map<std::size_t, RealRadical> trop_rad_principal(const PrincipalAnalysis& a) {
  std::map<std::size_t, RealRadical> out;
  for (const auto& r : a.reports)
    if (r.in_trop) out.emplace(r.cone_id, r.real_radical);
  return out;
}

ConeReport classify_weight(const Ideal& I, const WeightVector& w, const ClassifyOptions& opts) {
  if (w.size() != I.nvars()) throw PreconditionError("weight dimension mismatch");
  if (I.is_principal()) {
    const Polynomial& f = I.generators().front();
    Fan fan{NewtonPolytope(f)};
    ConeReport r = classify_cone(f, fan, fan.cone_containing(w), opts);
    r.weight = w;
    r.notes.push_back("principal ideal: classified on its Newton polytope fan");
    return r;
  }

  ConeReport r;
  r.from_fan = false;
  r.weight = w;
  r.initial = initial_ideal(I, w);
  const auto& gens = r.initial;
  r.is_monomial = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_monomial(); });
  r.in_trop = r.is_monomial ? false : !contains_monomial(gens);

  if (r.is_monomial) {
    bool sf = monomial_squarefree_test(gens);
    r.squarefree = sf ? Squarefree::Yes : Squarefree::No;
    r.real_radical = sf ? RealRadical::Yes : RealRadical::No;
    r.radical_rule = "squarefree-monomial";
  } else if (gens.size() == 1) {
    auto fv = classify_principal_form(gens.front());
    r.real_radical = fv.verdict;
    r.radical_rule = fv.rule;
  }

  if (r.real_radical == RealRadical::Unknown && !r.is_monomial) {
    std::mt19937_64 rng(splitmix(opts.seed));
    std::uniform_int_distribution<int> d(1, 9);
    Ideal J(gens);
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<long> v(I.nvars());
      for (auto& x : v) x = d(rng);
      auto vw = WeightVector::from_ints(v);
      auto K = initial_ideal(J, vw);
      bool mono = std::all_of(K.begin(), K.end(), [](const Polynomial& g) { return g.is_monomial(); });
      if (mono && monomial_squarefree_test(K)) {
        r.real_radical = RealRadical::Yes;
        r.radical_rule = "refinement-lift";
        r.refinement = vw;
        break;
      }
    }
    bool binomial = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.size() <= 2; });
    if (r.real_radical == RealRadical::Unknown && binomial) {
      if (opts.assert_real_radical) {
        r.real_radical = RealRadical::Yes;
        r.radical_rule = "asserted";
        r.notes.push_back("binomial initial ideal: real radicality taken from the user assertion");
      } else {
        r.notes.push_back("binomial initial ideal: deciding real radicality needs the binomial real-radical "
                          "algorithm (not implemented); pass an assertion to use one");
      }
    }
  }

  if (!r.in_trop) {
    r.rstar = Membership::Out;
    r.rstar_rule = "contains-monomial";
  } else if (r.real_radical == RealRadical::Yes) {
    r.rstar = Membership::In;
    r.rstar_rule = "real-radical";
  } else if (gens.size() == 1) {
    if (auto wit = search_sign_change(gens.front(), splitmix(opts.seed ^ 0x5eed), opts.samples)) {
      r.rstar = Membership::In;
      r.rstar_rule = "sampled-sign-change";
      r.rstar_witness = std::move(wit);
    } else {
      r.rstar_rule = "undecided";
    }
  } else {
    r.rstar_rule = "undecided";
  }
  return r;
}

ComponentClassification classify_components(const Polynomial& target,
                                            const std::vector<std::pair<Polynomial, int>>& components,
                                            const std::optional<WeightVector>& w) {
  if (target.is_zero()) throw PreconditionError("classify_components: zero target");
  if (components.empty()) throw PreconditionError("classify_components: no components");

  // Merge components that agree up to a constant factor.
  std::vector<std::pair<Polynomial, int>> merged;
  for (const auto& [c, m] : components) {
    require_same_ring(target.ring(), c.ring(), "classify_components");
    if (m < 1) throw PreconditionError("component multiplicity must be positive");
    if (c.is_constant()) throw PreconditionError("component '" + to_string(c) + "' is constant");
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const auto& e) { return e.first.primitive() == c.primitive(); });
    if (it != merged.end())
      it->second += m;
    else
      merged.emplace_back(c, m);
  }

  Polynomial product = Polynomial::constant(target.ring(), 1);
  for (const auto& [c, m] : components) product = product * pow(c, static_cast<unsigned>(m));
  const Exponent& lead = target.grlex_leading();
  Rational scalar = product.is_zero() ? Rational(0) : target.coefficient(lead) / product.coefficient(lead);
  if (sgn(scalar) == 0 || product * scalar != target) {
    Polynomial discrepancy = target - product;
    throw ViolationError("component product does not match the target; discrepancy: " + to_string(discrepancy));
  }

  ComponentClassification out{target, {}, true, scalar, w, std::nullopt};
  for (const auto& [c, m] : merged) {
    ComponentVerdict v{c, m, RealRadical::Unknown, Membership::Unknown, {}};
    NewtonPolytope P(c);
    if (c.is_monomial()) {
      v.verdict = (m == 1 && all_at_most_one(c.terms().begin()->first)) ? RealRadical::Yes : RealRadical::No;
      v.rule = m == 1 ? "squarefree-monomial" : "not-reduced";
      v.rstar = Membership::Out;
    } else if (m >= 2) {
      v.verdict = RealRadical::No;
      v.rule = "not-reduced";
      v.rstar = Membership::Unknown;
    } else if (c.total_degree() == 1) {
      v.verdict = RealRadical::Yes;
      v.rule = "linear";
      v.rstar = Membership::In;
    } else if (P.dim() == 1) {
      auto verts = P.vertices();
      auto [a, b] = edge_endpoints(verts);
      EdgeData e = edge_univariate(c, P, a, b);
      auto ev = edge_verdict(e);
      v.verdict = ev.verdict;
      v.rule = ev.rule;
      v.rstar = edge_has_Rstar_zero(e) ? Membership::In : Membership::Out;
    } else {
      auto fv = classify_principal_form(c);
      v.verdict = fv.verdict;
      v.rule = fv.rule.empty() ? "undecided" : fv.rule;
      v.rstar = fv.verdict == RealRadical::Yes ? Membership::In : Membership::Unknown;
    }
    out.components.push_back(std::move(v));
  }
  if (w) {
    for (const auto& v : out.components)
      if (v.multiplicity == 1 && v.verdict == RealRadical::Yes && v.rstar == Membership::In && !v.component.is_monomial()) {
        out.conclusion = to_string(*w) + " ∈ LL(V_ℝ*(I))";
        break;
      }
  }
  return out;
}

long Certificate::bound(long d) const {
  if (!ratio) throw PreconditionError("certificate carries no degree bound");
  Rational x = *ratio * d;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return c.get_si();
}

namespace {

bool is_nonzero_report(const ConeReport& r) {
  if (r.from_fan) return r.dim > 0;
  return !r.weight.is_zero();
}

// A point of the closed cone outside the nonpositive orthant, if any.
std::optional<WeightVector> positive_direction(const ConeReport& r) {
  if (!r.from_fan) {
    for (const auto& x : r.weight.entries())
      if (sgn(x) > 0) return r.weight;
    return std::nullopt;
  }
  for (const auto& ray : r.rays)
    for (const auto& x : ray)
      if (sgn(x) > 0) return to_weight(ray);
  for (const auto& l : r.lineality)
    for (const auto& x : l) {
      if (sgn(x) > 0) return to_weight(l);
      if (sgn(x) < 0) {
        IntVec neg(l);
        for (auto& y : neg) y = -y;
        return to_weight(neg);
      }
    }
  return std::nullopt;
}

WeightVector representative(const ConeReport& r) {
  if (r.from_fan && !r.rays.empty()) return to_weight(r.rays.front());
  if (r.from_fan && !r.lineality.empty()) return to_weight(r.lineality.front());
  return r.weight;
}

Rational weight_ratio(const WeightVector& w) {
  Rational lo = w[0], hi = w[0];
  for (const auto& x : w.entries()) {
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  return hi / lo;
}

}  // namespace

Certificate compactness_certificate(const std::vector<ConeReport>& reports, bool complete,
                                    const std::vector<ComponentClassification>& components) {
  Certificate cert;
  if (complete) {
    bool all_out = true;
    std::vector<std::size_t> ids;
    for (const auto& r : reports) {
      if (!is_nonzero_report(r)) continue;
      ids.push_back(r.cone_id);
      if (r.rstar != Membership::Out) all_out = false;
    }
    if (all_out) {
      cert.kind = CertificateKind::CompactRstar;
      cert.cones = ids;
      cert.steps.push_back("every nonzero cone is OUT of the real tropical variety, so it is contained in {0}");
      for (const auto& r : reports)
        if (is_nonzero_report(r))
          cert.steps.push_back("cone " + std::to_string(r.cone_id) + " " + to_string(representative(r)) + ": " +
                               to_string(r.initial.front()) + " OUT (" + r.rstar_rule + ")");
      cert.steps.push_back("hence V_R*(I) is compact");
      return cert;
    }
  }

  const ConeReport* best = nullptr;
  std::optional<WeightVector> best_positive;
  for (const auto& r : reports) {
    if (!is_nonzero_report(r) || r.real_radical != RealRadical::Yes || !r.in_trop) continue;
    cert.cones.push_back(r.cone_id);
    auto pos = positive_direction(r);
    if (!best || (pos && !best_positive)) {
      best = &r;
      best_positive = pos;
    }
  }
  if (best) {
    for (std::size_t id : cert.cones) {
      const auto& r = *std::find_if(reports.begin(), reports.end(), [&](const ConeReport& x) { return x.cone_id == id; });
      cert.steps.push_back("cone " + std::to_string(id) + " " + to_string(representative(r)) + ": " +
                           to_string(r.initial.front()) + " real radical (" + r.radical_rule + ") and in Trop");
    }
    cert.steps.push_back("the real-radical tropical set is not contained in {0}, so V_R*(I) is not compact");
    if (best_positive) {
      cert.kind = CertificateKind::NoncompactR;
      cert.witness = best_positive;
      cert.steps.push_back("witness " + to_string(*best_positive) +
                           " lies outside the nonpositive orthant, so V_R(I) is not compact");
    } else {
      cert.kind = CertificateKind::NoncompactRstar;
      cert.witness = representative(*best);
    }
    return cert;
  }

  for (const auto& c : components) {
    if (!c.conclusion || !c.weight || c.weight->is_zero()) continue;
    bool positive = std::any_of(c.weight->entries().begin(), c.weight->entries().end(),
                                [](const Rational& x) { return sgn(x) > 0; });
    cert.witness = c.weight;
    cert.steps.push_back("verified real-radical component with an R*-zero: " + *c.conclusion);
    cert.steps.push_back("a nonzero vector lies in the logarithmic limit set, so V_R*(I) is not compact");
    if (positive) {
      cert.kind = CertificateKind::NoncompactR;
      cert.steps.push_back("it lies outside the nonpositive orthant, so V_R(I) is not compact");
      return cert;
    }
    cert.kind = CertificateKind::NoncompactRstar;
  }
  if (cert.kind == CertificateKind::Inconclusive) cert.steps.push_back("no decisive cone");
  return cert;
}

Certificate stability_certificate(const PrincipalAnalysis& a) {
  Certificate cert;
  const std::size_t n = a.f.nvars();
  for (const auto& r : a.reports) {
    if (r.real_radical != RealRadical::Yes) continue;
    auto v = relint_point_in_orthant(a.fan.cone(r.cone_id), {}, n, true);
    if (!v) continue;
    cert.kind = CertificateKind::Stable;
    cert.witness = *v;
    cert.cones = {r.cone_id};
    cert.ratio = weight_ratio(*v);
    cert.steps.push_back("cone " + std::to_string(r.cone_id) + ": " + to_string(r.initial.front()) +
                         " real radical (" + r.radical_rule + ")");
    if (r.edge) cert.steps.push_back("edge polynomial u = " + to_string(UnivariatePolynomial::from_edge(*r.edge)));
    cert.steps.push_back("positive weight " + to_string(*v) + " lies in its relative interior");
    cert.steps.push_back("degree bound l(d) = ceil(" + cert.ratio->get_str() + " * d)");
    return cert;
  }
  cert.steps.push_back("no real-radical cone meets the open positive orthant");
  return cert;
}

Certificate stability_certificate(const Ideal& I, const std::vector<WeightVector>& candidates,
                                  const ClassifyOptions& opts) {
  std::vector<WeightVector> ws = candidates;
  if (ws.empty()) ws.push_back(WeightVector(std::vector<Rational>(I.nvars(), 1)));
  Certificate cert;
  for (const auto& w : ws) {
    if (!w.all_positive()) {
      cert.steps.push_back("skipped " + to_string(w) + ": not strictly positive");
      continue;
    }
    ConeReport r = classify_weight(I, w, opts);
    if (r.real_radical != RealRadical::Yes) {
      cert.steps.push_back(to_string(w) + ": initial ideal real radical " + to_string(r.real_radical));
      continue;
    }
    cert.kind = CertificateKind::Stable;
    cert.witness = w;
    cert.ratio = weight_ratio(w);
    cert.steps.push_back(to_string(w) + ": initial ideal real radical (" + r.radical_rule + ")");
    if (r.refinement) cert.steps.push_back("monomial refinement by nonnegative weight " + to_string(*r.refinement));
    cert.steps.push_back("degree bound l(d) = ceil(" + cert.ratio->get_str() + " * d)");
    return cert;
  }
  if (I.is_principal() && candidates.empty()) return stability_certificate(analyze_principal(I.generators().front(), opts));
  return cert;
}

AuditResult universal_gb_squarefree_audit(const std::vector<Polynomial>& gens) {
  AuditResult out;
  out.steps.push_back("assumption (not verified): the generators form a universal Groebner basis");
  for (const auto& g : gens)
    for (const auto& [a, c] : g.terms())
      if (!all_at_most_one(a)) out.offending.push_back(to_string(Polynomial::monomial(g.ring(), a, c)));
  out.passed = out.offending.empty();
  if (out.passed) {
    out.steps.push_back("every term of every generator is a square-free monomial");
    out.steps.push_back("so every monomial initial ideal is generated by square-free monomials and is real radical");
    out.steps.push_back("every initial ideal has a monomial refinement, whose real radicality lifts back");
    out.steps.push_back("conclusion: the real-radical subfan covers all of R^n");
  }
  return out;
}

}  // namespace rrtrop
