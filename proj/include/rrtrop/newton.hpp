#pragma once

// Newton polytopes, their face lattices and normal fans (the Groebner fan of a
// principal ideal), plus the lattice data of an edge.

#include <map>
#include <optional>
#include <vector>

#include "rrtrop/poly.hpp"

namespace rrtrop {

using IntVec = std::vector<Integer>;

struct Face {
  std::vector<std::size_t> points;    // indices into NewtonPolytope::points(), ascending
  std::vector<std::size_t> vertices;  // subset of `points` that are polytope vertices
  int dim = 0;
};

struct Facet {
  std::size_t face;  // index into faces()
  IntVec normal;     // primitive outward normal inside the affine span's direction space
};

class NewtonPolytope {
 public:
  explicit NewtonPolytope(const Polynomial& f);

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  // Support of the source polynomial, grlex-descending.
  const std::vector<Exponent>& points() const { return points_; }
  std::vector<Exponent> vertices() const;
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // Primitive integer basis of the orthogonal complement of the affine span's direction.
  const std::vector<IntVec>& lineality() const { return lineality_; }
  std::size_t whole_face() const { return whole_; }

  // Face maximizing w.a; support(In_w f) equals that face's point set.
  std::size_t face_of(const WeightVector& w) const;
  // Face with exactly this point set, or -1.
  long find_face(const std::vector<std::size_t>& points) const;
  std::vector<Exponent> face_points(std::size_t face) const;
  std::vector<Exponent> face_vertices(std::size_t face) const;
  // Restriction of `f` to the points of `face`.
  Polynomial face_form(const Polynomial& f, std::size_t face) const;
  // True iff face `inner` is contained in face `outer`.
  bool face_contains(std::size_t outer, std::size_t inner) const;

 private:
  std::size_t ambient_ = 0;
  int dim_ = 0;
  std::vector<Exponent> points_;
  std::vector<Face> faces_;
  std::vector<Facet> facets_;
  std::vector<IntVec> lineality_;
  std::map<std::vector<std::size_t>, std::size_t> face_index_;
  std::size_t whole_ = 0;
};

struct Cone {
  std::size_t id = 0;
  int dim = 0;
  std::vector<IntVec> rays;       // sorted primitive ray generators
  std::vector<IntVec> lineality;  // primitive basis of the lineality space
  std::size_t dual_face = 0;      // index into NewtonPolytope::faces()
  std::vector<Exponent> dual_face_vertices;
  std::vector<std::size_t> faces;  // ids of the proper faces of this cone
};

// Normal fan of a Newton polytope. Cones are ordered by dimension, then by rays,
// which gives stable ids (the lineality space is cone 0).
class Fan {
 public:
  explicit Fan(NewtonPolytope polytope);

  const NewtonPolytope& polytope() const { return polytope_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const Cone& cone(std::size_t id) const { return cones_.at(id); }
  std::size_t size() const { return cones_.size(); }
  std::size_t cone_of_face(std::size_t face) const { return by_face_.at(face); }
  // The unique cone whose relative interior contains w.
  std::size_t cone_containing(const WeightVector& w) const;
  // Point of the relative interior: sum of rays (zero on the lineality cone).
  WeightVector interior_point(std::size_t id) const;

 private:
  NewtonPolytope polytope_;
  std::vector<Cone> cones_;
  std::vector<std::size_t> by_face_;
};

Fan normal_fan(const NewtonPolytope& P);

// Relative-interior membership decided from rays and lineality alone.
bool relint_contains(const Cone& cone, const WeightVector& w);
// Some point of relint(cone) + extra lies in the closed orthant R_{>=0}^n
// (strictly positive when `strict`); returns such a point.
std::optional<WeightVector> relint_point_in_orthant(const Cone& cone, const std::vector<IntVec>& extra,
                                                    std::size_t n, bool strict);

struct EdgeData {
  Exponent a, b;  // endpoints; u is expanded from b towards a
  Exponent v;     // (a - b) / d, may have negative entries
  int d = 0;      // lattice length
  std::vector<Rational> gamma;  // gamma[k] = coefficient of x^(b + k v), k = 0..d
};

// Throws PreconditionError if (a, b) is not an edge of NP(f).
EdgeData edge_univariate(const Polynomial& f, const Exponent& a, const Exponent& b);
EdgeData edge_univariate(const Polynomial& f, const NewtonPolytope& P, const Exponent& a, const Exponent& b);
// x^b * sum gamma_k (x^v)^k as a polynomial over `ring`.
Polynomial reconstruct(const EdgeData& e, const RingPtr& ring);

std::string to_string(const IntVec& v);

}  // namespace rrtrop
