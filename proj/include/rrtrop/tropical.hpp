#pragma once

// Cone classification for principal ideals (real radicality, membership in the
// tropical, real tropical and real-radical tropical sets), per-weight queries
// for general ideals, and the certificates derived from them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrtrop/groebner.hpp"
#include "rrtrop/newton.hpp"
#include "rrtrop/poly.hpp"
#include "rrtrop/realroots.hpp"

namespace rrtrop {

enum class RealRadical { Yes, No, Unknown };
enum class Membership { In, Out, Unknown };
enum class Squarefree { Yes, No, NotApplicable };

const char* to_string(RealRadical v);
const char* to_string(Membership v);
const char* to_string(Squarefree v);
RealRadical parse_real_radical(const std::string& s);
Membership parse_membership(const std::string& s);
Squarefree parse_squarefree(const std::string& s);

struct ClassifyOptions {
  std::uint64_t seed = 1;
  int samples = 1000;               // random witness search budget per cone
  bool assert_real_radical = false;  // user assertion for binomial initial ideals
};

struct SturmEvidence {
  int roots_all = 0, roots_pos = 0, roots_neg = 0;
  bool squarefree = false;
};

// Two points of one open orthant where the form takes opposite signs, or a
// single exact zero (then negative == positive).
struct SignWitness {
  std::vector<Rational> negative, positive;
};

struct ConeReport {
  std::size_t cone_id = 0;
  bool from_fan = true;  // false for a single-weight query on a general ideal
  int dim = -1;          // cone dimension (-1 when unknown)
  int face_dim = -1;     // dimension of the dual Newton polytope face
  std::vector<IntVec> rays, lineality;
  std::vector<Exponent> dual_face_vertices;
  WeightVector weight;  // a relative-interior point, or the queried weight
  std::vector<Polynomial> initial;

  bool is_monomial = false;
  Squarefree squarefree = Squarefree::NotApplicable;
  bool in_trop = false;
  Membership rstar = Membership::Unknown;
  RealRadical real_radical = RealRadical::Unknown;

  // Evidence.
  std::string radical_rule, rstar_rule;
  std::optional<EdgeData> edge;
  std::optional<SturmEvidence> sturm;
  std::optional<SignWitness> rstar_witness;
  std::optional<std::size_t> rstar_source;    // cone whose form has the R*-zero
  std::optional<std::size_t> radical_source;  // refinement cone certifying YES
  std::optional<WeightVector> refinement;     // nonnegative refining weight
  std::vector<std::string> notes;
};

// A linear change of coordinates turning g into a univariate polynomial:
// g = p(l) with l a nonzero linear form without constant term.
struct LinearCoordinate {
  Polynomial form;  // l
  UnivariatePolynomial p;
};
std::optional<LinearCoordinate> as_univariate_in_linear_form(const Polynomial& g);
// Exact certificate that g >= 0 on R^n: g = sum c_k l_k^(2 e_k) + p(l) with c_k > 0 and p >= 0.
bool certified_nonnegative(const Polynomial& g);

// Real-radical rules that look only at a single principal generator.
struct FormVerdict {
  RealRadical verdict = RealRadical::Unknown;
  std::string rule;
};
FormVerdict classify_principal_form(const Polynomial& g);

ConeReport classify_cone(const Polynomial& f, const Fan& fan, std::size_t id,
                         const ClassifyOptions& opts = {});
// Reports for every cone, ordered by id. The parallel version uses OpenMP and
// must agree with the serial one byte for byte.
std::vector<ConeReport> classify_all_cones_serial(const Polynomial& f, const Fan& fan,
                                                  const ClassifyOptions& opts = {});
std::vector<ConeReport> classify_all_cones(const Polynomial& f, const Fan& fan, const ClassifyOptions& opts = {},
                                           int jobs = 0);

struct ChainCheck {
  bool ok = true;
  std::vector<std::string> violations;
  int undecided = 0;  // cones with an UNKNOWN verdict, excluded from the check
};
ChainCheck verify_chain(const std::vector<ConeReport>& reports);

struct PrincipalAnalysis {
  Polynomial f;
  Fan fan;
  std::vector<ConeReport> reports;
  ChainCheck chain;
  ClassifyOptions options;
};
PrincipalAnalysis analyze_principal(const Polynomial& f, const ClassifyOptions& opts = {}, int jobs = 0);

// Cones of the tropical hypersurface: duals of positive-dimensional faces.
std::vector<std::size_t> trop_principal(const PrincipalAnalysis& a);
std::map<std::size_t, Membership> trop_real_principal(const PrincipalAnalysis& a);
std::map<std::size_t, RealRadical> trop_rad_principal(const PrincipalAnalysis& a);

// Single-weight classification for an arbitrary ideal.
ConeReport classify_weight(const Ideal& I, const WeightVector& w, const ClassifyOptions& opts = {});

struct ComponentVerdict {
  Polynomial component;
  int multiplicity = 1;
  RealRadical verdict = RealRadical::Unknown;
  Membership rstar = Membership::Unknown;  // component has a zero in (R*)^n
  std::string rule;
};

struct ComponentClassification {
  Polynomial target;
  std::vector<ComponentVerdict> components;
  bool product_verified = false;
  Rational scalar = 1;  // target = scalar * product
  std::optional<WeightVector> weight;
  std::optional<std::string> conclusion;  // "w ∈ LL(V_ℝ*(I))"
};

// Throws ViolationError when the product differs from the target by more than
// a nonzero constant; the message carries the discrepancy polynomial.
ComponentClassification classify_components(const Polynomial& target,
                                            const std::vector<std::pair<Polynomial, int>>& components,
                                            const std::optional<WeightVector>& w = std::nullopt);

enum class CertificateKind { CompactRstar, NoncompactRstar, NoncompactR, Stable, Inconclusive };
const char* to_string(CertificateKind k);
CertificateKind parse_certificate_kind(const std::string& s);

struct Certificate {
  CertificateKind kind = CertificateKind::Inconclusive;
  std::optional<WeightVector> witness;
  std::vector<std::size_t> cones;   // supporting cone report ids
  std::vector<std::string> steps;   // inference chain
  std::optional<Rational> ratio;    // stability: w_max / w_min
  // Stability degree bound l(d) = ceil(ratio * d).
  long bound(long d) const;
};

// `complete` means the reports cover every cone of the fan.
Certificate compactness_certificate(const std::vector<ConeReport>& reports, bool complete,
                                    const std::vector<ComponentClassification>& components = {});
Certificate stability_certificate(const PrincipalAnalysis& a);
Certificate stability_certificate(const Ideal& I, const std::vector<WeightVector>& candidates,
                                  const ClassifyOptions& opts = {});

struct AuditResult {
  bool passed = false;
  std::vector<std::string> offending;  // terms that are not square-free
  std::vector<std::string> steps;
};
// Caller asserts that `gens` is a universal Groebner basis; this is recorded, not checked.
AuditResult universal_gb_squarefree_audit(const std::vector<Polynomial>& gens);

}  // namespace rrtrop
