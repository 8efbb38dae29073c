#pragma once

#include <utility>
#include <vector>

#include "orthoform/rational.hpp"
#include "orthoform/space.hpp"

namespace orthoform {

// A tau-symmetric function on a FiniteSpace: values(sigma(t)) must equal
// conj(values(t)), which forces real values on fixed points.  Immutable
// after construction; the constructor rejects violations.
class AlgebraElement {
 public:
  AlgebraElement(FiniteSpace space, std::vector<CRat> values);

  const FiniteSpace& space() const { return space_; }
  const CRat& value(int point) const { return values_[point]; }
  const std::vector<CRat>& values() const { return values_; }
  bool is_zero() const;

  bool operator==(const AlgebraElement& o) const {
    return space_ == o.space_ && values_ == o.values_;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

 private:
  FiniteSpace space_;
  std::vector<CRat> values_;
};

AlgebraElement zero_element(const FiniteSpace& sp);
AlgebraElement unit(const FiniteSpace& sp);

// u0 = i (chi_O - chi_{sigma(O)}), the skew generator over the full cycle set.
AlgebraElement u0(const FiniteSpace& sp);

// chi_D for a sigma-invariant point set D (given as point indices).
AlgebraElement indicator(const FiniteSpace& sp, const std::vector<int>& pts);

// u_C = i (chi_C - chi_{sigma(C)}) for C a subset of the cycle reps.
AlgebraElement u_set(const FiniteSpace& sp, const std::vector<int>& reps);

AlgebraElement basis_element(const FiniteSpace& sp, int basis_index);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const Rat& s, const AlgebraElement& x);
AlgebraElement involution(const AlgebraElement& x);

// Real coordinates over the canonical basis; mutually inverse bijections.
std::vector<Rat> coords(const AlgebraElement& x);
AlgebraElement from_coords(const FiniteSpace& sp, const std::vector<Rat>& c);

// a and b are orthogonal iff a b* = 0 pointwise.
bool is_orthogonal_pair(const AlgebraElement& x, const AlgebraElement& y);

bool is_invertible(const AlgebraElement& x);

// Sorted ids of the orbits on which x has a nonzero value.
std::vector<int> orbit_support(const AlgebraElement& x);

// x = h + k with h* = h and k* = -k; k vanishes on fixed points.
std::pair<AlgebraElement, AlgebraElement> sa_skew_split(const AlgebraElement& x);

}  // namespace orthoform
