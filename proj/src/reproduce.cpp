#include "orthoform/reproduce.hpp"

namespace orthoform {

ComplexificationDemo complexification_demo() {
  FiniteSpace sp = make_space({"t1", "t2"}, {{"t1", "t2"}, {"t2", "t1"}});
  // V(x, y) = Re(x(t1) y(t2)) is the identity matrix over (S(t1), U(t1)).
  return {sp, BilinearForm(sp, RatMatrix::identity(2))};
}

BiopDemo biop_demo() {
  FiniteSpace l1 = make_space({"t1", "t1'", "t2", "t3", "t3'"},
                              {{"t1", "t1'"}, {"t1'", "t1"}, {"t3", "t3'"},
                               {"t3'", "t3"}});
  FiniteSpace l2 = make_space({"s1", "s1'", "s2", "s3", "s4"},
                              {{"s1", "s1'"}, {"s1'", "s1"}});

  // T(f)(s1) = f(t1), T(f)(s2) = f(t2), T(f)(s3) = Re f(t3),
  // T(f)(s4) = Im f(t3).
  PreserverStructure s{l1, l2, std::vector<int>(l2.size(), -1),
                       std::vector<CRat>(l2.size()), std::vector<CRat>(l2.size())};
  int t1 = l1.index("t1"), t2 = l1.index("t2"), t3 = l1.index("t3");
  int s1 = l2.index("s1"), s1c = l2.index("s1'");
  int s2 = l2.index("s2"), s3 = l2.index("s3"), s4 = l2.index("s4");

  s.phi[s1] = t1;
  s.a1[s1] = CRat(Rat(1));
  s.a2[s1] = CRat::unit_i();
  s.phi[s1c] = t1;
  s.a1[s1c] = s.a1[s1].conj();
  s.a2[s1c] = s.a2[s1].conj();

  s.phi[s2] = t2;
  s.a1[s2] = CRat(Rat(1));

  s.phi[s3] = t3;
  s.a1[s3] = CRat(Rat(1));

  s.phi[s4] = t3;
  s.a2[s4] = CRat(Rat(1));

  return {l1, l2, reconstruct(s)};
}

}  // namespace orthoform
