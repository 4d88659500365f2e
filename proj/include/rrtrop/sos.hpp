#pragma once

// Quadratic-module membership witnesses f = sum_i g_i sum_j y_ij^2 + h (h in I)
// and the weighted degree-reduction rewriter.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrtrop/groebner.hpp"
#include "rrtrop/poly.hpp"

namespace rrtrop {

struct QMRepresentation {
  std::vector<Polynomial> generators;            // g_1..g_s; g_0 = 1 is implicit
  std::vector<std::vector<Polynomial>> squares;  // squares[i] lists y_ij for g_i (index 0 is g_0)
  Polynomial h;                                  // ideal remainder

  // sum_i g_i sum_j y_ij^2 + h
  Polynomial expand() const;
  // g_i for i = 0..s, with g_0 = 1.
  Polynomial generator(std::size_t i) const;
};

struct VerifyResult {
  bool ok = false;
  bool identity = false;     // f == expand()
  bool h_in_ideal = false;
  Polynomial discrepancy;    // f - expand()
};

// Throws PreconditionError when the shape is malformed or rings differ.
VerifyResult verify_representation(const Polynomial& f, const QMRepresentation& rep, const Ideal& I);

enum class BasisAssertionKind { RealRadicalInitial, QMBasis };

// Justification for reduce_degree: In_w(I) certified real radical (only with
// no generators), or the user's claim that the In_w(g_i) form a QM basis.
struct BasisAssertion {
  BasisAssertionKind kind = BasisAssertionKind::RealRadicalInitial;
  std::string evidence;
};

struct ReductionStep {
  Rational degree;                                   // max w-degree before the step
  std::vector<std::pair<std::size_t, std::size_t>> active;  // (i, j) attaining it
  Polynomial top;                                    // sum over active of In(g_i) In(y_ij)^2
  std::vector<Polynomial> cancelled;                 // In_w(y_ij) per active pair
  std::vector<Polynomial> lifts;                     // z_ij in I with In_w(z_ij) = In_w(y_ij)
  Rational next_degree;                              // max w-degree after the step
};

struct ReductionTrace {
  Rational target_degree;  // deg_w(f)
  std::vector<ReductionStep> steps;
};

enum class ReductionStatus { Ok, BasisViolation, IdentityInconsistent };
const char* to_string(ReductionStatus s);

struct ReductionResult {
  ReductionStatus status = ReductionStatus::Ok;
  QMRepresentation rep;  // final (or last consistent) representation
  ReductionTrace trace;
  // BASIS-VIOLATION: the top sum lies in In_w(I) but `witness` = In_w(y_ij) does not.
  std::optional<Polynomial> violation_top, violation_witness;
  std::optional<std::pair<std::size_t, std::size_t>> violation_pair;
  std::string message;
};

// Precondition: the representation verifies and every w_i > 0.
ReductionResult reduce_degree(const Polynomial& f, const QMRepresentation& rep, const Ideal& I,
                              const WeightVector& w, const BasisAssertion& assertion,
                              TieBreak tiebreak = TieBreak::Grlex);

// max over nonzero y_ij of deg_w(g_i y_ij^2); nullopt when every y_ij is zero.
std::optional<Rational> max_weighted_degree(const QMRepresentation& rep, const WeightVector& w);
// Same with total degree.
std::optional<int> max_total_degree(const QMRepresentation& rep);

// ceil((max w_i / min w_i) * d).
long stability_bound(const WeightVector& w, long d);

// Representation file (JSON): vars, f, ideal, generators, squares, h, weight.
struct RepresentationFile {
  RingPtr ring;
  Polynomial f;
  std::vector<Polynomial> ideal;
  QMRepresentation rep;
  std::optional<WeightVector> weight;
};
RepresentationFile parse_representation_file(const std::string& text);
RepresentationFile read_representation_file(const std::string& path);
std::string format_representation_file(const RepresentationFile& file);

}  // namespace rrtrop
