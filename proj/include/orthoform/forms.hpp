#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orthoform/element.hpp"
#include "orthoform/matrix.hpp"

namespace orthoform {

// Real-linear functional, stored as coefficients over the canonical basis.
class Functional {
 public:
  Functional(FiniteSpace space, std::vector<Rat> coeffs);
  static Functional zero(const FiniteSpace& sp);

  const FiniteSpace& space() const { return space_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat operator()(const AlgebraElement& x) const;

  Functional operator+(const Functional& o) const;
  Functional operator-(const Functional& o) const;
  Functional scaled(const Rat& s) const;
  // x |-> (*this)(x*): flips the sign of the U coefficients.
  Functional precompose_involution() const;

  bool operator==(const Functional& o) const {
    return space_ == o.space_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Functional& o) const { return !(*this == o); }

 private:
  FiniteSpace space_;
  std::vector<Rat> coeffs_;
};

// Bilinear form V: A x A -> R, V(x, y) = coords(x)^T M coords(y) with
// M[i][j] = V(b_i, b_j) over the canonical basis.
class BilinearForm {
 public:
  BilinearForm(FiniteSpace space, RatMatrix m);
  static BilinearForm zero(const FiniteSpace& sp);

  const FiniteSpace& space() const { return space_; }
  const RatMatrix& matrix() const { return matrix_; }

  Rat operator()(const AlgebraElement& x, const AlgebraElement& y) const;

  bool operator==(const BilinearForm& o) const {
    return space_ == o.space_ && matrix_ == o.matrix_;
  }

 private:
  FiniteSpace space_;
  RatMatrix matrix_;
};

struct FormDecomposition {
  Functional phi1;
  Functional phi2;
};

// Complex-bilinear form on C(K) over the complex basis {chi_t}.
class ComplexForm {
 public:
  ComplexForm(FiniteSpace space, std::vector<CRat> entries);

  const FiniteSpace& space() const { return space_; }
  const CRat& at(int t, int r) const {
    return entries_[static_cast<size_t>(t) * space_.size() + r];
  }

 private:
  FiniteSpace space_;
  std::vector<CRat> entries_;  // size x size, row-major
};

// A form is orthogonal iff it vanishes on every pair of canonical basis
// elements with disjoint orbit supports, i.e. the matrix is block-diagonal
// with respect to the orbit partition.
bool is_orthogonal_form(const BilinearForm& v);

// Independent check: enumerates all cross-orbit basis pairs and then samples
// `trials` random pairs with disjoint orbit supports, evaluating the form on
// each.  Returns the first pair (x, y) with V(x, y) != 0 or V(x, y*) != 0.
std::optional<std::pair<AlgebraElement, AlgebraElement>> orthogonality_oracle(
    const BilinearForm& v, int trials, std::uint64_t seed);

// (x, y) |-> g1(x y) + g2(x y*); always an orthogonal form.
BilinearForm compose_form(const Functional& g1, const Functional& g2);

// Constructive decomposition of an orthogonal form V into functionals with
// V(x, y) = phi1(x y) + phi2(x y*).  Built from psi1(x) = V(x, 1),
// psi2(x) = V(1, x), psi4(x) = V(x u0*, u0); throws NotOrthogonal (with a
// witness basis pair) when V is not orthogonal.
FormDecomposition decompose(const BilinearForm& v);

using FunctionalPair = std::pair<Functional, Functional>;

// True iff p and q induce the same form under compose_form.  Also evaluates
// the three kernel conditions (sum equality, difference on skew elements,
// difference on products of skew elements) and asserts they agree with form
// equality.
bool representation_equivalent(const FunctionalPair& p, const FunctionalPair& q);

// Dimension of the affine set {(g1, g2) : compose_form(g1, g2) = V}.
int representation_space_dim(const BilinearForm& v);

// For orthogonal symmetric V: phi1(x) = V(x, 1) satisfies
// V(a, b) = phi1((a b + b a) / 2) for self-adjoint a, b.
Functional symmetric_sa_functional(const BilinearForm& v);

struct SaConditionsReport {
  bool orthogonal_on_sa;            // (a)
  bool vanishes_on_projections;     // (b)
  bool product_against_unit;        // (c)
  bool all() const {
    return orthogonal_on_sa && vanishes_on_projections && product_against_unit;
  }
};

// Evaluates the three equivalent conditions for a form to be orthogonal on
// the self-adjoint part, by three independent routes, and asserts that they
// agree.  Projection pairs are enumerated exhaustively up to 12 orbits and
// sampled beyond.
SaConditionsReport sa_orthogonality_conditions(const BilinearForm& v);

// The unique complex-bilinear extension of V to C(K) x C(K):
//   V~(x1 + i x2, y1 + i y2)
//     = V(x1, y1) - V(x2, y2) + i [V(x1, y2) + V(x2, y1)],
// re-expressed over the complex basis {chi_t}.
ComplexForm complexify_form(const BilinearForm& v);

// Orthogonality of the extension reduces to the vanishing of all
// off-diagonal entries over {chi_t}.
bool is_extension_orthogonal(const ComplexForm& w);

// Exact solvability of V(x, y) = g(x y) for a single functional g.
bool phi2_eliminable(const BilinearForm& v);

struct DisjointnessReport {
  bool sym_vs_skew;       // V(chi_D, u_B) = V(u_B, chi_D) = 0 for D, B disjoint
  bool skew_vs_skew;      // V(u_B, u_C) = 0 for B, C disjoint
  bool trimmed_products;  // V((u0 u0* - u_C u_C*) u_B, u_C) = 0 both slots
  bool all() const { return sym_vs_skew && skew_vs_skew && trimmed_products; }
};

// Exhaustively checks the three orthogonality identities over all
// sigma-invariant D and all subsets B, C of the cycle reps.  Requires an
// orthogonal form (throws NotOrthogonal otherwise).
DisjointnessReport disjointness_identities(const BilinearForm& v);

}  // namespace orthoform
