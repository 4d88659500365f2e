#include "rrtrop/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rrtrop/error.hpp"
#include "rrtrop/linalg.hpp"

namespace rrtrop {

using linalg::QMat;
using linalg::QVec;

namespace {

int affine_dim(const std::vector<Exponent>& pts, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  QMat diffs;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    QVec d(pts[idx[0]].size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = pts[idx[k]][i] - pts[idx[0]][i];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(linalg::rank(diffs));
}

QMat direction_basis(const std::vector<Exponent>& pts, const std::vector<std::size_t>& idx) {
  QMat diffs;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    QVec d(pts[idx[0]].size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = pts[idx[k]][i] - pts[idx[0]][i];
    diffs.push_back(std::move(d));
  }
  return linalg::row_basis(std::move(diffs));
}

Integer idot(const IntVec& n, const Exponent& p) {
  Integer s = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i]) s += n[i] * p[i];
  return s;
}

// Calls fn on each k-subset of {0..m-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return;
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), 0);
  for (;;) {
    fn(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::vector<IntVec> primitive_rows(const QMat& rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(linalg::primitive(r));
  return out;
}

}  // namespace

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// NewtonPolytope

NewtonPolytope::NewtonPolytope(const Polynomial& f) : ambient_(f.nvars()) {
  if (f.is_zero()) throw PreconditionError("newton_polytope: zero polynomial");
  points_ = f.support();
  std::vector<std::size_t> all(points_.size());
  std::iota(all.begin(), all.end(), 0);
  dim_ = affine_dim(points_, all);

  QMat span = direction_basis(points_, all);
  lineality_ = primitive_rows(linalg::nullspace(span, ambient_));

  std::set<std::vector<std::size_t>> face_sets;
  std::map<std::vector<std::size_t>, IntVec> facet_normals;
  if (dim_ > 0) {
    const std::size_t k = static_cast<std::size_t>(dim_);
    for_each_subset(points_.size(), k, [&](const std::vector<std::size_t>& s) {
      // Normal n in span(L) orthogonal to the differences inside the subset.
      QMat m;
      for (std::size_t i = 1; i < s.size(); ++i) {
        QVec row(k);
        for (std::size_t j = 0; j < k; ++j) {
          Rational acc = 0;
          for (std::size_t c = 0; c < ambient_; ++c) acc += span[j][c] * (points_[s[i]][c] - points_[s[0]][c]);
          row[j] = acc;
        }
        m.push_back(std::move(row));
      }
      QMat coeffs = linalg::nullspace(m, k);
      if (coeffs.size() != 1) return;
      QVec n(ambient_, 0);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < ambient_; ++c) n[c] += coeffs[0][j] * span[j][c];
      IntVec normal = linalg::primitive(n);
      Integer base = idot(normal, points_[s[0]]);
      bool any_above = false, any_below = false;
      std::vector<std::size_t> on;
      for (std::size_t p = 0; p < points_.size(); ++p) {
        Integer v = idot(normal, points_[p]);
        if (v > base)
          any_above = true;
        else if (v < base)
          any_below = true;
        else
          on.push_back(p);
      }
      if (any_above && any_below) return;
      if (any_above)
        for (auto& x : normal) x = -x;
      if (facet_normals.emplace(on, normal).second) face_sets.insert(on);
    });
  }
  face_sets.insert(all);

  // Close under intersection with facets.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::size_t>> current(face_sets.begin(), face_sets.end());
    for (const auto& face : current) {
      for (const auto& [facet, normal] : facet_normals) {
        std::vector<std::size_t> inter;
        std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(), std::back_inserter(inter));
        if (!inter.empty() && face_sets.insert(inter).second) grew = true;
      }
    }
  }

  std::set<std::size_t> vertex_points;
  for (const auto& s : face_sets)
    if (s.size() == 1) vertex_points.insert(s[0]);
  if (dim_ == 0) vertex_points.insert(0);

  for (const auto& s : face_sets) {
    Face face;
    face.points = s;
    face.dim = affine_dim(points_, s);
    for (auto p : s)
      if (vertex_points.count(p)) face.vertices.push_back(p);
    face_index_[s] = faces_.size();
    faces_.push_back(std::move(face));
  }
  whole_ = face_index_.at(all);
  for (const auto& [facet, normal] : facet_normals) facets_.push_back({face_index_.at(facet), normal});
}

std::vector<Exponent> NewtonPolytope::vertices() const {
  std::vector<Exponent> v;
  for (const auto& f : faces_)
    if (f.dim == 0) v.push_back(points_[f.points[0]]);
  std::sort(v.begin(), v.end(), GrlexGreater{});
  return v;
}

std::size_t NewtonPolytope::face_of(const WeightVector& w) const {
  if (w.size() != ambient_) throw PreconditionError("weight dimension mismatch");
  std::vector<Rational> vals;
  vals.reserve(points_.size());
  for (const auto& p : points_) vals.push_back(w.dot(p));
  Rational top = *std::max_element(vals.begin(), vals.end());
  std::vector<std::size_t> arg;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] == top) arg.push_back(i);
  auto it = face_index_.find(arg);
  if (it == face_index_.end()) throw std::logic_error("argmax set is not a face of the Newton polytope");
  return it->second;
}

long NewtonPolytope::find_face(const std::vector<std::size_t>& points) const {
  auto it = face_index_.find(points);
  return it == face_index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<Exponent> NewtonPolytope::face_points(std::size_t face) const {
  std::vector<Exponent> out;
  for (auto p : faces_.at(face).points) out.push_back(points_[p]);
  return out;
}

std::vector<Exponent> NewtonPolytope::face_vertices(std::size_t face) const {
  std::vector<Exponent> out;
  for (auto p : faces_.at(face).vertices) out.push_back(points_[p]);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

Polynomial NewtonPolytope::face_form(const Polynomial& f, std::size_t face) const {
  Polynomial::TermMap t;
  for (auto p : faces_.at(face).points) t.emplace(points_[p], f.coefficient(points_[p]));
  return Polynomial(f.ring(), std::move(t));
}

bool NewtonPolytope::face_contains(std::size_t outer, std::size_t inner) const {
  const auto& o = faces_.at(outer).points;
  const auto& i = faces_.at(inner).points;
  return std::includes(o.begin(), o.end(), i.begin(), i.end());
}

// ---------------------------------------------------------------------------
// Fan

Fan::Fan(NewtonPolytope polytope) : polytope_(std::move(polytope)) {
  const auto& faces = polytope_.faces();
  const std::size_t n = polytope_.ambient_dim();
  std::vector<Cone> cones;
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    Cone c;
    c.dual_face = fi;
    c.dim = static_cast<int>(n) - faces[fi].dim;
    for (const auto& facet : polytope_.facets())
      if (polytope_.face_contains(facet.face, fi)) c.rays.push_back(facet.normal);
    std::sort(c.rays.begin(), c.rays.end());
    c.lineality = polytope_.lineality();
    c.dual_face_vertices = polytope_.face_vertices(fi);
    cones.push_back(std::move(c));
  }
  std::sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.rays != b.rays) return a.rays < b.rays;
    return a.dual_face_vertices < b.dual_face_vertices;
  });
  by_face_.assign(faces.size(), 0);
  for (std::size_t id = 0; id < cones.size(); ++id) {
    cones[id].id = id;
    by_face_[cones[id].dual_face] = id;
  }
  for (auto& c : cones)
    for (const auto& other : cones)
      if (other.id != c.id && polytope_.face_contains(other.dual_face, c.dual_face)) c.faces.push_back(other.id);
  cones_ = std::move(cones);
}

std::size_t Fan::cone_containing(const WeightVector& w) const { return by_face_.at(polytope_.face_of(w)); }

WeightVector Fan::interior_point(std::size_t id) const {
  const auto& c = cones_.at(id);
  std::vector<Rational> v(polytope_.ambient_dim(), 0);
  for (const auto& r : c.rays)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(r[i]);
  return WeightVector(std::move(v));
}

Fan normal_fan(const NewtonPolytope& P) { return Fan(P); }

bool relint_contains(const Cone& cone, const WeightVector& w) {
  const std::size_t n = w.size();
  const std::size_t nr = cone.rays.size(), nl = cone.lineality.size();
  const std::size_t nv = nr + nl;
  std::vector<linalg::Inequality> sys;
  for (std::size_t i = 0; i < n; ++i) {
    QVec row(nv);
    for (std::size_t j = 0; j < nr; ++j) row[j] = Rational(cone.rays[j][i]);
    for (std::size_t j = 0; j < nl; ++j) row[nr + j] = Rational(cone.lineality[j][i]);
    QVec neg(row);
    for (auto& x : neg) x = -x;
    sys.push_back({row, w[i], false});
    sys.push_back({neg, -w[i], false});
  }
  for (std::size_t j = 0; j < nr; ++j) {
    QVec row(nv, 0);
    row[j] = -1;
    sys.push_back({row, 0, true});
  }
  return linalg::solve_inequalities(sys, nv).has_value();
}

std::optional<WeightVector> relint_point_in_orthant(const Cone& cone, const std::vector<IntVec>& extra,
                                                    std::size_t n, bool strict) {
  const std::size_t nr = cone.rays.size();
  std::vector<IntVec> free(cone.lineality);
  free.insert(free.end(), extra.begin(), extra.end());
  const std::size_t nv = nr + free.size();
  std::vector<linalg::Inequality> sys;
  for (std::size_t i = 0; i < n; ++i) {
    QVec row(nv);
    for (std::size_t j = 0; j < nr; ++j) row[j] = -Rational(cone.rays[j][i]);
    for (std::size_t j = 0; j < free.size(); ++j) row[nr + j] = -Rational(free[j][i]);
    sys.push_back({row, strict ? Rational(-1) : Rational(0), false});
  }
  for (std::size_t j = 0; j < nr; ++j) {
    QVec row(nv, 0);
    row[j] = -1;
    sys.push_back({row, -1, false});
  }
  auto sol = linalg::solve_inequalities(sys, nv);
  if (!sol) return std::nullopt;
  QVec x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < nr; ++j) x[i] += (*sol)[j] * Rational(cone.rays[j][i]);
    for (std::size_t j = 0; j < free.size(); ++j) x[i] += (*sol)[nr + j] * Rational(free[j][i]);
  }
  std::vector<Rational> prim;
  for (const auto& e : linalg::primitive(x)) prim.emplace_back(e);
  return WeightVector(std::move(prim));
}

// ---------------------------------------------------------------------------
// Edges

EdgeData edge_univariate(const Polynomial& f, const Exponent& a, const Exponent& b) {
  return edge_univariate(f, NewtonPolytope(f), a, b);
}

EdgeData edge_univariate(const Polynomial& f, const NewtonPolytope& P, const Exponent& a, const Exponent& b) {
  bool found = false;
  for (const auto& face : P.faces()) {
    if (face.dim != 1 || face.vertices.size() != 2) continue;
    const auto& p = P.points()[face.vertices[0]];
    const auto& q = P.points()[face.vertices[1]];
    if ((p == a && q == b) || (p == b && q == a)) found = true;
  }
  if (!found) throw PreconditionError("edge_univariate: " + to_string(a) + "-" + to_string(b) + " is not an edge");
  EdgeData e;
  e.a = a;
  e.b = b;
  Integer g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer diff = a[i] - b[i];
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), diff.get_mpz_t());
  }
  e.d = static_cast<int>(g.get_si());
  e.v.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e.v[i] = (a[i] - b[i]) / e.d;
  e.gamma.resize(static_cast<std::size_t>(e.d) + 1);
  for (int k = 0; k <= e.d; ++k) {
    Exponent p(b);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += k * e.v[i];
    e.gamma[static_cast<std::size_t>(k)] = f.coefficient(p);
  }
  return e;
}

Polynomial reconstruct(const EdgeData& e, const RingPtr& ring) {
  Polynomial::TermMap t;
  for (int k = 0; k <= e.d; ++k) {
    Exponent p(e.b);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += k * e.v[i];
    t.emplace(std::move(p), e.gamma[static_cast<std::size_t>(k)]);
  }
  return Polynomial(ring, std::move(t));
}

}  // namespace rrtrop
