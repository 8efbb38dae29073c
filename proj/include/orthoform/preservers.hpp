#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthoform/element.hpp"
#include "orthoform/matrix.hpp"

namespace orthoform {

// Real-linear map between two spaces; columns are the coordinates of the
// images of the domain canonical basis in the codomain canonical basis.
class LinearMap {
 public:
  LinearMap(FiniteSpace domain, FiniteSpace codomain, RatMatrix m);
  static LinearMap identity(const FiniteSpace& sp);

  const FiniteSpace& domain() const { return domain_; }
  const FiniteSpace& codomain() const { return codomain_; }
  const RatMatrix& matrix() const { return matrix_; }

  AlgebraElement apply(const AlgebraElement& f) const;
  AlgebraElement basis_image(int i) const;

  bool operator==(const LinearMap& o) const {
    return domain_ == o.domain_ && codomain_ == o.codomain_ &&
           matrix_ == o.matrix_;
  }

 private:
  FiniteSpace domain_;
  FiniteSpace codomain_;
  RatMatrix matrix_;
};

// The normalized data of an orthogonality preserving map:
//   T(f)(s) = a1(s) Re f(phi(s)) + a2(s) Im f(phi(s))   on Z1,
//   T(f)(s) = 0                                         on Z3.
// phi is valued in the fixed points and cycle representatives of the domain
// and stored per codomain point (-1 on Z3); partners carry the same phi and
// conjugate weights.  a2 is zero wherever it is not determined (Z3 rows and
// phi landing on a fixed point).  Z2 is empty: every row functional of a
// finite-dimensional map is bounded.
struct PreserverStructure {
  FiniteSpace domain;
  FiniteSpace codomain;
  std::vector<int> phi;   // per codomain point; -1 for Z3
  std::vector<CRat> a1;   // T(1)
  std::vector<CRat> a2;   // T(i)

  std::vector<int> z1() const;
  std::vector<int> z2() const { return {}; }
  std::vector<int> z3() const;

  bool operator==(const PreserverStructure& o) const {
    return domain == o.domain && codomain == o.codomain && phi == o.phi &&
           a1 == o.a1 && a2 == o.a2;
  }
};

struct BiopCertificate {
  PreserverStructure structure;          // of T
  std::vector<int> point_bijection;      // codomain point -> domain point
  std::vector<std::pair<int, Rat>> determinants;  // per codomain cycle rep
  PreserverStructure inverse_structure;  // of T^{-1}
};

struct BiopDecision {
  bool ok;
  std::string reason;  // empty when ok
  std::optional<BiopCertificate> certificate;
};

// First pair of domain basis indices with disjoint orbit supports whose
// images fail to be orthogonal; nullopt iff T preserves orthogonality.
std::optional<std::pair<int, int>> op_violation_witness(const LinearMap& t);

bool is_orthogonality_preserving(const LinearMap& t);

// Recovers (phi, T(1), T(i)) and the Z1/Z3 split.  Throws MultiOrbitSupport
// (a NotOrthogonalityPreserving) when some codomain point is hit by two
// domain orbits.
PreserverStructure analyze(const LinearMap& t);

// Builds the induced map; validates the structure invariants (reality on
// fixed points, conjugate symmetry across cycles, normalization) and throws
// InvalidStructure on violation.  The result preserves orthogonality by
// construction.
LinearMap reconstruct(const PreserverStructure& s);

// Decides whether T is a bi-orthogonality preserving linear bijection via
// the structural criterion: T bijective, Z3 empty, phi a structure-preserving
// bijection, a1 nonvanishing, and det [[Re a1, Re a2], [Im a1, Im a2]] != 0
// on every codomain cycle rep.  The decision is cross-checked against the
// direct route (T bijective, T and T^{-1} both orthogonality preserving).
BiopDecision is_biorthogonality_preserving(const LinearMap& t);

// Two-sided exact inverse from a certificate; throws InvalidCertificate when
// the certificate does not reproduce mutually inverse maps.
LinearMap invert_biop(const BiopCertificate& cert);

// Property check: T^{-1}(g) invertible for every invertible g, enumerated
// exhaustively on a small grid when dim <= 3 and sampled otherwise.  Requires
// an orthogonality preserving bijection (NotOPBijection).
bool inverse_preserves_invertibles_check(const LinearMap& t, int trials = 200,
                                         std::uint64_t seed = 0x5eed);

struct RemarkItem {
  std::string item;  // "a" .. "e"
  bool applicable;
  bool passed;
  std::string note;
};

// Consequences of the support-map description for a surjective map: Z3
// empty, phi maps cycle points to cycle orbits and is injective there, and
// the weight pair spans the plane on cycle points.  Items that are vacuous
// at finite scale are reported as such.
std::vector<RemarkItem> remark_consequences_check(const LinearMap& t);

// For an orthogonality preserving bijection with no codomain fixed points,
// asserts bi-orthogonality preservation (PreconditionFailed otherwise).
bool f2_empty_implies_biop_check(const LinearMap& t);

struct BiopAdmissibility {
  bool ok;
  std::optional<LinearMap> witness;  // composition operator f -> f . phi
};

// Spaces admit a bi-orthogonality preserving bijection iff the fixed-point
// counts and cycle counts agree; the witness is the induced *-isomorphism.
BiopAdmissibility spaces_admit_biop(const FiniteSpace& l1, const FiniteSpace& l2);

// Test utility: T(f g) = T(f) T(g) on all basis pairs.
bool is_multiplicative(const LinearMap& t);

}  // namespace orthoform
