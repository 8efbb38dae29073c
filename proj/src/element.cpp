#include "orthoform/element.hpp"

#include <algorithm>

namespace orthoform {

AlgebraElement::AlgebraElement(FiniteSpace space, std::vector<CRat> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != space_.size())
    throw Error("value count does not match space size");
  for (int t = 0; t < space_.size(); ++t) {
    if (values_[space_.sigma(t)] != values_[t].conj())
      throw Error("values are not tau-symmetric at '" + space_.label(t) + "'");
  }
}

bool AlgebraElement::is_zero() const {
  for (const CRat& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

AlgebraElement zero_element(const FiniteSpace& sp) {
  return AlgebraElement(sp, std::vector<CRat>(sp.size()));
}

AlgebraElement unit(const FiniteSpace& sp) {
  return AlgebraElement(sp, std::vector<CRat>(sp.size(), CRat(Rat(1))));
}

AlgebraElement u0(const FiniteSpace& sp) { return u_set(sp, sp.cycle_reps()); }

AlgebraElement indicator(const FiniteSpace& sp, const std::vector<int>& pts) {
  std::vector<CRat> v(sp.size());
  for (int t : pts) v[t] = CRat(Rat(1));
  return AlgebraElement(sp, v);  // ctor rejects non-sigma-invariant sets
}

AlgebraElement u_set(const FiniteSpace& sp, const std::vector<int>& reps) {
  std::vector<CRat> v(sp.size());
  for (int t : reps) {
    if (sp.is_fixed(t) || !sp.is_rep(t))
      throw Error("u_set argument must be a set of cycle representatives");
    v[t] = CRat::unit_i();
    v[sp.sigma(t)] = -CRat::unit_i();
  }
  return AlgebraElement(sp, v);
}

AlgebraElement basis_element(const FiniteSpace& sp, int basis_index) {
  const BasisItem& item = sp.basis()[basis_index];
  std::vector<CRat> v(sp.size());
  if (item.kind == BasisKind::S) {
    v[item.point] = CRat(Rat(1));
    v[sp.sigma(item.point)] = CRat(Rat(1));
  } else {
    v[item.point] = CRat::unit_i();
    v[sp.sigma(item.point)] = -CRat::unit_i();
  }
  return AlgebraElement(sp, v);
}

namespace {
void require_same_space(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.space() != y.space()) throw SpaceMismatch("elements on different spaces");
}
}  // namespace

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_space(x, y);
  std::vector<CRat> v(x.space().size());
  for (int t = 0; t < x.space().size(); ++t) v[t] = x.value(t) * y.value(t);
  return AlgebraElement(x.space(), v);
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_space(x, y);
  std::vector<CRat> v(x.space().size());
  for (int t = 0; t < x.space().size(); ++t) v[t] = x.value(t) + y.value(t);
  return AlgebraElement(x.space(), v);
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_space(x, y);
  std::vector<CRat> v(x.space().size());
  for (int t = 0; t < x.space().size(); ++t) v[t] = x.value(t) - y.value(t);
  return AlgebraElement(x.space(), v);
}

AlgebraElement scale(const Rat& s, const AlgebraElement& x) {
  std::vector<CRat> v(x.space().size());
  for (int t = 0; t < x.space().size(); ++t) v[t] = x.value(t) * s;
  return AlgebraElement(x.space(), v);
}

AlgebraElement involution(const AlgebraElement& x) {
  std::vector<CRat> v(x.space().size());
  for (int t = 0; t < x.space().size(); ++t) v[t] = x.value(t).conj();
  return AlgebraElement(x.space(), v);
}

std::vector<Rat> coords(const AlgebraElement& x) {
  const FiniteSpace& sp = x.space();
  std::vector<Rat> c;
  c.reserve(sp.dim());
  for (const BasisItem& item : sp.basis())
    c.push_back(item.kind == BasisKind::S ? x.value(item.point).re
                                          : x.value(item.point).im);
  return c;
}

AlgebraElement from_coords(const FiniteSpace& sp, const std::vector<Rat>& c) {
  if (static_cast<int>(c.size()) != sp.dim())
    throw Error("coordinate count does not match dimension");
  std::vector<CRat> v(sp.size());
  for (int b = 0; b < sp.dim(); ++b) {
    const BasisItem& item = sp.basis()[b];
    if (item.kind == BasisKind::S)
      v[item.point].re = c[b];
    else
      v[item.point].im = c[b];
  }
  for (int t : sp.cycle_reps()) v[sp.sigma(t)] = v[t].conj();
  return AlgebraElement(sp, v);
}

bool is_orthogonal_pair(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_space(x, y);
  for (int t = 0; t < x.space().size(); ++t)
    if (!(x.value(t) * y.value(t).conj()).is_zero()) return false;
  return true;
}

bool is_invertible(const AlgebraElement& x) {
  for (int t = 0; t < x.space().size(); ++t)
    if (x.value(t).is_zero()) return false;
  return true;
}

std::vector<int> orbit_support(const AlgebraElement& x) {
  std::vector<int> out;
  const FiniteSpace& sp = x.space();
  for (int orbit = 0; orbit < sp.orbit_count(); ++orbit)
    if (!x.value(sp.orbit_rep(orbit)).is_zero()) out.push_back(orbit);
  return out;
}

std::pair<AlgebraElement, AlgebraElement> sa_skew_split(const AlgebraElement& x) {
  AlgebraElement star = involution(x);
  AlgebraElement h = scale(rat(1, 2), add(x, star));
  AlgebraElement k = scale(rat(1, 2), sub(x, star));
  return {h, k};
}

}  // namespace orthoform
