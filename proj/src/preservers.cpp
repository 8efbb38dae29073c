#include "orthoform/preservers.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace orthoform {

LinearMap::LinearMap(FiniteSpace domain, FiniteSpace codomain, RatMatrix m)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      matrix_(std::move(m)) {
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
    throw Error("map matrix must be dim(codomain) x dim(domain)");
}

LinearMap LinearMap::identity(const FiniteSpace& sp) {
  return LinearMap(sp, sp, RatMatrix::identity(sp.dim()));
}

AlgebraElement LinearMap::apply(const AlgebraElement& f) const {
  if (f.space() != domain_) throw SpaceMismatch("map applied across spaces");
  return from_coords(codomain_, matrix_.apply(coords(f)));
}

AlgebraElement LinearMap::basis_image(int i) const {
  std::vector<Rat> col(codomain_.dim());
  for (int r = 0; r < codomain_.dim(); ++r) col[r] = matrix_.at(r, i);
  return from_coords(codomain_, col);
}

std::vector<int> PreserverStructure::z1() const {
  std::vector<int> out;
  for (int p = 0; p < codomain.size(); ++p)
    if (phi[p] >= 0) out.push_back(p);
  return out;
}

std::vector<int> PreserverStructure::z3() const {
  std::vector<int> out;
  for (int p = 0; p < codomain.size(); ++p)
    if (phi[p] < 0) out.push_back(p);
  return out;
}

std::optional<std::pair<int, int>> op_violation_witness(const LinearMap& t) {
  const FiniteSpace& d = t.domain();
  std::vector<AlgebraElement> images;
  images.reserve(d.dim());
  for (int i = 0; i < d.dim(); ++i) images.push_back(t.basis_image(i));
  for (int i = 0; i < d.dim(); ++i)
    for (int j = i + 1; j < d.dim(); ++j) {
      if (d.orbit_of(d.basis()[i].point) == d.orbit_of(d.basis()[j].point))
        continue;
      if (!is_orthogonal_pair(images[i], images[j])) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool is_orthogonality_preserving(const LinearMap& t) {
  return !op_violation_witness(t).has_value();
}

PreserverStructure analyze(const LinearMap& t) {
  const FiniteSpace& d = t.domain();
  const FiniteSpace& c = t.codomain();

  std::vector<AlgebraElement> images;
  images.reserve(d.dim());
  for (int i = 0; i < d.dim(); ++i) images.push_back(t.basis_image(i));

  PreserverStructure s{d, c, std::vector<int>(c.size(), -1),
                       std::vector<CRat>(c.size()), std::vector<CRat>(c.size())};

  AlgebraElement t_one = c.size() ? t.apply(unit(d)) : zero_element(c);

  for (int p = 0; p < c.size(); ++p) {
    if (!c.is_rep(p)) continue;  // partners are filled from their rep
    int hit_orbit = -1;
    int hit_basis = -1;
    for (int i = 0; i < d.dim(); ++i) {
      if (images[i].value(p).is_zero()) continue;
      int orbit = d.orbit_of(d.basis()[i].point);
      if (hit_orbit < 0) {
        hit_orbit = orbit;
        hit_basis = i;
      } else if (orbit != hit_orbit) {
        throw MultiOrbitSupport(
            "two domain orbits support the row at '" + c.label(p) + "'",
            {hit_basis, i});
      }
    }
    if (hit_orbit < 0) continue;  // Z3 row

    int rep = d.orbit_rep(hit_orbit);
    s.phi[p] = rep;
    s.a1[p] = t_one.value(p);
    if (!d.is_fixed(rep))
      s.a2[p] = images[d.basis_index(BasisKind::U, rep)].value(p);
    int q = c.sigma(p);
    if (q != p) {
      s.phi[q] = rep;
      s.a1[q] = s.a1[p].conj();
      s.a2[q] = s.a2[p].conj();
    }
  }

  // Reconstruction identity on every basis element and codomain point.
  for (int i = 0; i < d.dim(); ++i) {
    AlgebraElement bi = basis_element(d, i);
    for (int p = 0; p < c.size(); ++p) {
      CRat expected;
      if (s.phi[p] >= 0) {
        const CRat& at_phi = bi.value(s.phi[p]);
        expected = s.a1[p] * at_phi.re + s.a2[p] * at_phi.im;
      }
      if (images[i].value(p) != expected)
        throw Error("internal: reconstruction identity failed in analyze");
    }
  }
  return s;
}

LinearMap reconstruct(const PreserverStructure& s) {
  const FiniteSpace& d = s.domain;
  const FiniteSpace& c = s.codomain;
  if (static_cast<int>(s.phi.size()) != c.size() ||
      static_cast<int>(s.a1.size()) != c.size() ||
      static_cast<int>(s.a2.size()) != c.size())
    throw InvalidStructure("field sizes do not match the codomain");

  for (int p = 0; p < c.size(); ++p) {
    int q = c.sigma(p);
    if (q != p && (s.phi[q] != s.phi[p] || s.a1[q] != s.a1[p].conj() ||
                   s.a2[q] != s.a2[p].conj()))
      throw InvalidStructure("structure is not conjugate-symmetric at '" +
                             c.label(p) + "'");
    if (s.phi[p] < 0) {
      if (!s.a1[p].is_zero() || !s.a2[p].is_zero())
        throw InvalidStructure("weights must vanish on Z3 at '" + c.label(p) + "'");
      continue;
    }
    if (s.phi[p] >= d.size() || !d.is_rep(s.phi[p]))
      throw InvalidStructure("phi must land on a fixed point or cycle rep");
    if (c.is_fixed(p) && (!s.a1[p].is_real() || !s.a2[p].is_real()))
      throw InvalidStructure("weights must be real on codomain fixed points");
    if (d.is_fixed(s.phi[p]) && !s.a2[p].is_zero())
      throw InvalidStructure("a2 must vanish where phi lands on a fixed point");
    if (s.a1[p].is_zero() && s.a2[p].is_zero())
      throw InvalidStructure("|a1| + |a2| must not vanish on Z1 at '" +
                             c.label(p) + "'");
  }

  RatMatrix m(c.dim(), d.dim());
  for (int i = 0; i < d.dim(); ++i) {
    AlgebraElement bi = basis_element(d, i);
    std::vector<CRat> vals(c.size());
    for (int p = 0; p < c.size(); ++p) {
      if (s.phi[p] < 0) continue;
      const CRat& at_phi = bi.value(s.phi[p]);
      vals[p] = s.a1[p] * at_phi.re + s.a2[p] * at_phi.im;
    }
    std::vector<Rat> col = coords(AlgebraElement(c, vals));
    for (int r = 0; r < c.dim(); ++r) m.at(r, i) = col[r];
  }
  return LinearMap(d, c, m);
}

namespace {

Rat weight_det(const CRat& a1, const CRat& a2) {
  return a1.re * a2.im - a1.im * a2.re;
}

BiopDecision criterion_decision(const LinearMap& t) {
  const FiniteSpace& d = t.domain();
  const FiniteSpace& c = t.codomain();
  auto fail = [](std::string reason) {
    return BiopDecision{false, std::move(reason), std::nullopt};
  };

  if (d.dim() != c.dim() || t.matrix().rank() != d.dim())
    return fail("not a linear bijection");
  if (auto w = op_violation_witness(t))
    return fail("not orthogonality preserving (basis pair " +
                std::to_string(w->first) + "," + std::to_string(w->second) + ")");

  PreserverStructure s = analyze(t);
  if (!s.z3().empty()) return fail("Z3 is not empty");

  std::set<int> hit;
  for (int p : c.fixed_points()) {
    if (!d.is_fixed(s.phi[p]))
      return fail("phi(F2) is not contained in F1 at '" + c.label(p) + "'");
    if (!hit.insert(s.phi[p]).second)
      return fail("support map not injective on F2 at '" + c.label(p) + "'");
  }
  for (int p : c.cycle_reps()) {
    if (d.is_fixed(s.phi[p]))
      return fail("phi(O2) is not contained in O1 at '" + c.label(p) + "'");
    if (!hit.insert(s.phi[p]).second)
      return fail("support map not injective on O2 at '" + c.label(p) + "'");
  }
  if (d.fixed_points().size() != c.fixed_points().size() ||
      d.cycle_reps().size() != c.cycle_reps().size())
    return fail("support map is not onto: fixed/cycle counts differ");

  for (int p = 0; p < c.size(); ++p)
    if (s.a1[p].is_zero()) return fail("a1 vanishes at '" + c.label(p) + "'");

  std::vector<std::pair<int, Rat>> dets;
  for (int p : c.cycle_reps()) {
    Rat det = weight_det(s.a1[p], s.a2[p]);
    if (det == 0)
      return fail("weight determinant vanishes at '" + c.label(p) + "'");
    dets.emplace_back(p, det);
  }

  // Certificate: point-level bijection and the inverse structure built from
  // the inverted 2x2 weight blocks.
  std::vector<int> bijection(c.size(), -1);
  PreserverStructure inv{c, d, std::vector<int>(d.size(), -1),
                         std::vector<CRat>(d.size()), std::vector<CRat>(d.size())};
  for (int p = 0; p < c.size(); ++p) {
    if (!c.is_rep(p)) continue;
    int rep = s.phi[p];
    bijection[p] = rep;
    bijection[c.sigma(p)] = d.sigma(rep);
    inv.phi[rep] = p;
    if (d.is_fixed(rep)) {
      inv.a1[rep] = CRat(1 / s.a1[p].re);
    } else {
      Rat det = weight_det(s.a1[p], s.a2[p]);
      inv.a1[rep] = CRat(s.a2[p].im / det, -s.a1[p].im / det);
      inv.a2[rep] = CRat(-s.a2[p].re / det, s.a1[p].re / det);
      int rep2 = d.sigma(rep);
      inv.phi[rep2] = p;
      inv.a1[rep2] = inv.a1[rep].conj();
      inv.a2[rep2] = inv.a2[rep].conj();
    }
  }
  BiopCertificate cert{s, bijection, dets, inv};
  return BiopDecision{true, "", cert};
}

bool direct_decision(const LinearMap& t) {
  if (t.domain().dim() != t.codomain().dim()) return false;
  std::optional<RatMatrix> inv = t.matrix().inverse();
  if (!inv) return false;
  if (op_violation_witness(t)) return false;
  LinearMap back(t.codomain(), t.domain(), *inv);
  return !op_violation_witness(back).has_value();
}

}  // namespace

BiopDecision is_biorthogonality_preserving(const LinearMap& t) {
  BiopDecision decision = criterion_decision(t);
  if (decision.ok != direct_decision(t))
    throw Error("internal: structural criterion disagrees with direct decision");
  return decision;
}

LinearMap invert_biop(const BiopCertificate& cert) {
  LinearMap t = [&] {
    try {
      return reconstruct(cert.structure);
    } catch (const InvalidStructure& e) {
      throw InvalidCertificate(std::string("bad forward structure: ") + e.what());
    }
  }();
  LinearMap s = [&] {
    try {
      return reconstruct(cert.inverse_structure);
    } catch (const InvalidStructure& e) {
      throw InvalidCertificate(std::string("bad inverse structure: ") + e.what());
    }
  }();
  if (s.matrix() * t.matrix() != RatMatrix::identity(t.domain().dim()) ||
      t.matrix() * s.matrix() != RatMatrix::identity(t.codomain().dim()))
    throw InvalidCertificate("certificate does not yield a two-sided inverse");
  return s;
}

bool inverse_preserves_invertibles_check(const LinearMap& t, int trials,
                                         std::uint64_t seed) {
  const FiniteSpace& c = t.codomain();
  if (t.domain().dim() != c.dim()) throw NotOPBijection("map is not square");
  std::optional<RatMatrix> inv = t.matrix().inverse();
  if (!inv) throw NotOPBijection("map is not bijective");
  if (op_violation_witness(t))
    throw NotOPBijection("map does not preserve orthogonality");
  LinearMap back(c, t.domain(), *inv);

  auto ok = [&](const AlgebraElement& g) {
    return !is_invertible(g) || is_invertible(back.apply(g));
  };

  if (c.dim() <= 3) {
    std::vector<Rat> coeff(c.dim(), Rat(-1));
    while (true) {
      if (!ok(from_coords(c, coeff))) return false;
      int pos = 0;
      while (pos < c.dim() && coeff[pos] == 1) coeff[pos++] = -1;
      if (pos == c.dim()) break;
      coeff[pos] += 1;
    }
    return true;
  }

  std::mt19937_64 eng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    AlgebraElement g = unit(c);
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<Rat> coeff(c.dim());
      for (Rat& x : coeff) {
        long num = static_cast<long>(eng() % 17) - 8;
        long den = static_cast<long>(eng() % 8) + 1;
        x = rat(num, den);
      }
      AlgebraElement candidate = from_coords(c, coeff);
      if (is_invertible(candidate)) {
        g = candidate;
        break;
      }
    }
    if (!ok(g)) return false;
  }
  return true;
}

std::vector<RemarkItem> remark_consequences_check(const LinearMap& t) {
  if (auto w = op_violation_witness(t))
    throw NotOrthogonalityPreserving("map does not preserve orthogonality",
                                     *w);
  PreserverStructure s = analyze(t);
  const FiniteSpace& c = t.codomain();
  const FiniteSpace& d = t.domain();
  bool surjective = t.matrix().rank() == c.dim();

  std::vector<RemarkItem> items;
  items.push_back({"a", surjective, !surjective || s.z3().empty(),
                   surjective ? "surjective maps have no zero rows"
                              : "map not surjective"});
  items.push_back({"b", true, true,
                   "finite spaces: Z2 is empty, so Z1 is closed automatically"});
  items.push_back({"c", true, true,
                   "finite spaces: Z2 is empty and every point is isolated"});

  bool d_ok = true;
  bool span_ok = true;
  bool inj_ok = true;
  std::set<int> seen;
  for (int p : c.cycle_reps()) {
    if (s.phi[p] < 0) continue;  // not in Z1
    if (d.is_fixed(s.phi[p])) d_ok = false;
    if (weight_det(s.a1[p], s.a2[p]) == 0) span_ok = false;
    if (!seen.insert(s.phi[p]).second) inj_ok = false;
  }
  items.push_back({"d", surjective, !surjective || d_ok,
                   "phi maps cycle points into cycle orbits"});
  items.push_back({"e", surjective, !surjective || (span_ok && inj_ok),
                   "weights span the plane and phi is injective on cycle reps"});
  return items;
}

bool f2_empty_implies_biop_check(const LinearMap& t) {
  if (!t.codomain().fixed_points().empty())
    throw PreconditionFailed("codomain has fixed points");
  if (t.domain().dim() != t.codomain().dim() || !t.matrix().inverse())
    throw PreconditionFailed("map is not a linear bijection");
  if (op_violation_witness(t))
    throw PreconditionFailed("map does not preserve orthogonality");
  return is_biorthogonality_preserving(t).ok;
}

BiopAdmissibility spaces_admit_biop(const FiniteSpace& l1, const FiniteSpace& l2) {
  if (l1.fixed_points().size() != l2.fixed_points().size() ||
      l1.cycle_reps().size() != l2.cycle_reps().size())
    return {false, std::nullopt};

  PreserverStructure s{l1, l2, std::vector<int>(l2.size(), -1),
                       std::vector<CRat>(l2.size()), std::vector<CRat>(l2.size())};
  for (size_t k = 0; k < l2.fixed_points().size(); ++k) {
    int p = l2.fixed_points()[k];
    s.phi[p] = l1.fixed_points()[k];
    s.a1[p] = CRat(Rat(1));
  }
  for (size_t k = 0; k < l2.cycle_reps().size(); ++k) {
    int p = l2.cycle_reps()[k];
    int q = l2.sigma(p);
    s.phi[p] = s.phi[q] = l1.cycle_reps()[k];
    s.a1[p] = s.a1[q] = CRat(Rat(1));
    s.a2[p] = CRat::unit_i();
    s.a2[q] = -CRat::unit_i();
  }
  return {true, reconstruct(s)};
}

bool is_multiplicative(const LinearMap& t) {
  const FiniteSpace& d = t.domain();
  for (int i = 0; i < d.dim(); ++i) {
    AlgebraElement bi = basis_element(d, i);
    for (int j = 0; j < d.dim(); ++j) {
      AlgebraElement bj = basis_element(d, j);
      if (t.apply(multiply(bi, bj)) != multiply(t.apply(bi), t.apply(bj)))
        return false;
    }
  }
  return true;
}

}  // namespace orthoform
