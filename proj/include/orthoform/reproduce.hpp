#pragma once

#include "orthoform/forms.hpp"
#include "orthoform/preservers.hpp"

namespace orthoform {

// Bundled demonstration instances exercised by the `reproduce` CLI command.

// Two-point space {t1, t2} swapped by sigma, with the form
// V(x, y) = Re(x(t1) y(t2)).  The real form is orthogonal, but its
// complex-bilinear extension is not.
struct ComplexificationDemo {
  FiniteSpace space;
  BilinearForm form;
};
ComplexificationDemo complexification_demo();

// A five-point domain (one fixed point, two cycles) mapped onto a five-point
// codomain (three fixed points, one cycle) by splitting one domain cycle
// into real and imaginary parts.  The map is an orthogonality preserving
// bijection whose inverse does not preserve orthogonality.
struct BiopDemo {
  FiniteSpace domain;
  FiniteSpace codomain;
  LinearMap map;
};
BiopDemo biop_demo();

}  // namespace orthoform
