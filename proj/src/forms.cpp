#include "orthoform/forms.hpp"

#include <random>

namespace orthoform {

Functional::Functional(FiniteSpace space, std::vector<Rat> coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != space_.dim())
    throw Error("coefficient count does not match dimension");
}

Functional Functional::zero(const FiniteSpace& sp) {
  return Functional(sp, std::vector<Rat>(sp.dim(), Rat(0)));
}

Rat Functional::operator()(const AlgebraElement& x) const {
  if (x.space() != space_) throw SpaceMismatch("functional applied across spaces");
  std::vector<Rat> c = coords(x);
  Rat out(0);
  for (int i = 0; i < space_.dim(); ++i) out += coeffs_[i] * c[i];
  return out;
}

Functional Functional::operator+(const Functional& o) const {
  if (space_ != o.space_) throw SpaceMismatch("functional sum across spaces");
  std::vector<Rat> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Functional(space_, c);
}

Functional Functional::operator-(const Functional& o) const {
  if (space_ != o.space_) throw SpaceMismatch("functional difference across spaces");
  std::vector<Rat> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return Functional(space_, c);
}

Functional Functional::scaled(const Rat& s) const {
  std::vector<Rat> c(coeffs_);
  for (Rat& x : c) x *= s;
  return Functional(space_, c);
}

Functional Functional::precompose_involution() const {
  std::vector<Rat> c(coeffs_);
  for (int i = 0; i < space_.dim(); ++i)
    if (space_.basis()[i].kind == BasisKind::U) c[i] = -c[i];
  return Functional(space_, c);
}

BilinearForm::BilinearForm(FiniteSpace space, RatMatrix m)
    : space_(std::move(space)), matrix_(std::move(m)) {
  if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim())
    throw Error("form matrix must be dim x dim");
}

BilinearForm BilinearForm::zero(const FiniteSpace& sp) {
  return BilinearForm(sp, RatMatrix(sp.dim(), sp.dim()));
}

Rat BilinearForm::operator()(const AlgebraElement& x,
                             const AlgebraElement& y) const {
  if (x.space() != space_ || y.space() != space_)
    throw SpaceMismatch("form evaluated across spaces");
  std::vector<Rat> cx = coords(x);
  std::vector<Rat> my = matrix_.apply(coords(y));
  Rat out(0);
  for (int i = 0; i < space_.dim(); ++i) out += cx[i] * my[i];
  return out;
}

ComplexForm::ComplexForm(FiniteSpace space, std::vector<CRat> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  if (entries_.size() !=
      static_cast<size_t>(space_.size()) * static_cast<size_t>(space_.size()))
    throw Error("complex form matrix must be |K| x |K|");
}

namespace {

// First cross-orbit basis pair on which the form does not vanish.
std::optional<std::pair<int, int>> cross_orbit_violation(const BilinearForm& v) {
  const FiniteSpace& sp = v.space();
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = 0; j < sp.dim(); ++j) {
      if (sp.orbit_of(sp.basis()[i].point) == sp.orbit_of(sp.basis()[j].point))
        continue;
      if (v.matrix().at(i, j) != 0) return std::make_pair(i, j);
    }
  return std::nullopt;
}

void require_orthogonal(const BilinearForm& v, const char* op) {
  if (auto bad = cross_orbit_violation(v))
    throw NotOrthogonal(std::string(op) + " requires an orthogonal form", *bad);
}

Rat random_rat(std::mt19937_64& eng, long bound) {
  long num = static_cast<long>(eng() % (2 * bound + 1)) - bound;
  long den = static_cast<long>(eng() % bound) + 1;
  return rat(num, den);
}

}  // namespace

bool is_orthogonal_form(const BilinearForm& v) {
  return !cross_orbit_violation(v).has_value();
}

std::optional<std::pair<AlgebraElement, AlgebraElement>> orthogonality_oracle(
    const BilinearForm& v, int trials, std::uint64_t seed) {
  const FiniteSpace& sp = v.space();
  int dim = sp.dim();

  auto offends = [&](const AlgebraElement& x, const AlgebraElement& y) {
    return v(x, y) != 0 || v(x, involution(y)) != 0;
  };

  // Every cross-orbit basis pair is an orthogonal pair; try them all first.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (sp.orbit_of(sp.basis()[i].point) == sp.orbit_of(sp.basis()[j].point))
        continue;
      AlgebraElement x = basis_element(sp, i);
      AlgebraElement y = basis_element(sp, j);
      if (offends(x, y)) return std::make_pair(x, y);
    }

  // Random pairs with disjoint orbit supports.
  if (sp.orbit_count() >= 2) {
    std::mt19937_64 eng(seed);
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<int> side(sp.orbit_count());
      for (int& s : side) s = static_cast<int>(eng() % 3);
      std::vector<Rat> cx(dim, Rat(0)), cy(dim, Rat(0));
      for (int b = 0; b < dim; ++b) {
        int orbit = sp.orbit_of(sp.basis()[b].point);
        if (side[orbit] == 0)
          cx[b] = random_rat(eng, 8);
        else if (side[orbit] == 1)
          cy[b] = random_rat(eng, 8);
      }
      AlgebraElement x = from_coords(sp, cx);
      AlgebraElement y = from_coords(sp, cy);
      if (offends(x, y)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

BilinearForm compose_form(const Functional& g1, const Functional& g2) {
  if (g1.space() != g2.space())
    throw SpaceMismatch("compose_form functionals on different spaces");
  const FiniteSpace& sp = g1.space();
  int dim = sp.dim();
  RatMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    AlgebraElement bi = basis_element(sp, i);
    for (int j = 0; j < dim; ++j) {
      AlgebraElement bj = basis_element(sp, j);
      m.at(i, j) = g1(multiply(bi, bj)) + g2(multiply(bi, involution(bj)));
    }
  }
  return BilinearForm(sp, m);
}

FormDecomposition decompose(const BilinearForm& v) {
  require_orthogonal(v, "decompose");
  const FiniteSpace& sp = v.space();
  int dim = sp.dim();

  AlgebraElement one = unit(sp);
  AlgebraElement u = u0(sp);
  AlgebraElement ustar = involution(u);

  std::vector<Rat> c1(dim), c2(dim), c4(dim);
  for (int i = 0; i < dim; ++i) {
    AlgebraElement bi = basis_element(sp, i);
    c1[i] = v(bi, one);
    c2[i] = v(one, bi);
    c4[i] = v(multiply(bi, ustar), u);
  }
  Functional psi1(sp, c1), psi2(sp, c2), psi4(sp, c4);

  Rat quarter = rat(1, 4);
  Functional ph1 = (psi1.scaled(2) + psi2 + psi4).scaled(quarter);
  Functional ph2 = (psi1.scaled(2) - psi2 - psi4).scaled(quarter);
  Functional ph3 = (psi2 - psi4).scaled(quarter);
  Functional ph4 = (psi4 - psi2).scaled(quarter);

  FormDecomposition d{ph1 + ph4.precompose_involution(),
                      ph2 + ph3.precompose_involution()};

  for (int i = 0; i < dim; ++i) {
    AlgebraElement bi = basis_element(sp, i);
    for (int j = 0; j < dim; ++j) {
      AlgebraElement bj = basis_element(sp, j);
      Rat rhs = d.phi1(multiply(bi, bj)) + d.phi2(multiply(bi, involution(bj)));
      if (v.matrix().at(i, j) != rhs)
        throw Error("internal: decomposition identity failed on a basis pair");
    }
  }
  return d;
}

bool representation_equivalent(const FunctionalPair& p, const FunctionalPair& q) {
  const FiniteSpace& sp = p.first.space();
  if (p.second.space() != sp || q.first.space() != sp || q.second.space() != sp)
    throw SpaceMismatch("representation pairs on different spaces");

  bool forms_equal =
      compose_form(p.first, p.second).matrix() == compose_form(q.first, q.second).matrix();

  // Kernel conditions: equal sums, and equal differences on the skew part
  // and on products of skew elements (the S and U coefficients over cycles).
  Functional dsum = (p.first + p.second) - (q.first + q.second);
  Functional ddiff = (p.first - p.second) - (q.first - q.second);
  bool conds = true;
  for (const Rat& c : dsum.coeffs())
    if (c != 0) conds = false;
  for (int t : sp.cycle_reps()) {
    if (ddiff.coeffs()[sp.basis_index(BasisKind::U, t)] != 0) conds = false;
    if (ddiff.coeffs()[sp.basis_index(BasisKind::S, t)] != 0) conds = false;
  }

  if (conds != forms_equal)
    throw Error("internal: kernel conditions disagree with form equality");
  return forms_equal;
}

namespace {

// Matrix of (g1, g2) |-> compose_form(g1, g2), rows indexed by basis pairs.
RatMatrix composition_matrix(const FiniteSpace& sp, bool include_g2) {
  int dim = sp.dim();
  RatMatrix c(dim * dim, include_g2 ? 2 * dim : dim);
  for (int i = 0; i < dim; ++i) {
    AlgebraElement bi = basis_element(sp, i);
    for (int j = 0; j < dim; ++j) {
      AlgebraElement bj = basis_element(sp, j);
      std::vector<Rat> prod = coords(multiply(bi, bj));
      std::vector<Rat> prod_star = coords(multiply(bi, involution(bj)));
      for (int k = 0; k < dim; ++k) {
        c.at(i * dim + j, k) = prod[k];
        if (include_g2) c.at(i * dim + j, dim + k) = prod_star[k];
      }
    }
  }
  return c;
}

std::vector<Rat> vectorized(const RatMatrix& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace

int representation_space_dim(const BilinearForm& v) {
  require_orthogonal(v, "representation_space_dim");
  const FiniteSpace& sp = v.space();
  RatMatrix c = composition_matrix(sp, true);
  if (!c.solve(vectorized(v.matrix())).has_value())
    throw Error("internal: orthogonal form has no representation");
  return 2 * sp.dim() - c.rank();
}

bool phi2_eliminable(const BilinearForm& v) {
  RatMatrix c = composition_matrix(v.space(), false);
  return c.solve(vectorized(v.matrix())).has_value();
}

Functional symmetric_sa_functional(const BilinearForm& v) {
  require_orthogonal(v, "symmetric_sa_functional");
  if (v.matrix() != v.matrix().transpose())
    throw NotSymmetric("form is not symmetric");
  const FiniteSpace& sp = v.space();
  AlgebraElement one = unit(sp);
  std::vector<Rat> c(sp.dim());
  for (int i = 0; i < sp.dim(); ++i) c[i] = v(basis_element(sp, i), one);
  Functional phi1(sp, c);

  for (int i = 0; i < sp.dim(); ++i) {
    if (sp.basis()[i].kind != BasisKind::S) continue;
    AlgebraElement a = basis_element(sp, i);
    for (int j = 0; j < sp.dim(); ++j) {
      if (sp.basis()[j].kind != BasisKind::S) continue;
      AlgebraElement b = basis_element(sp, j);
      AlgebraElement jordan =
          scale(rat(1, 2), add(multiply(a, b), multiply(b, a)));
      if (v(a, b) != phi1(jordan))
        throw Error("internal: symmetric self-adjoint identity failed");
    }
  }
  return phi1;
}

SaConditionsReport sa_orthogonality_conditions(const BilinearForm& v) {
  const FiniteSpace& sp = v.space();
  int m = sp.orbit_count();

  // (a) orthogonality on the self-adjoint part: the S x S cross-orbit
  // entries of the matrix.
  bool a = true;
  for (int i = 0; i < sp.dim() && a; ++i) {
    if (sp.basis()[i].kind != BasisKind::S) continue;
    for (int j = 0; j < sp.dim(); ++j) {
      if (sp.basis()[j].kind != BasisKind::S) continue;
      if (sp.orbit_of(sp.basis()[i].point) == sp.orbit_of(sp.basis()[j].point))
        continue;
      if (v.matrix().at(i, j) != 0) {
        a = false;
        break;
      }
    }
  }

  // (b) vanishing on orthogonal projections.  Projections are indicators of
  // sigma-invariant sets, i.e. orbit unions; pairs of disjoint ones are
  // enumerated exhaustively up to 12 orbits and sampled beyond.
  std::vector<std::vector<int>> orbit_pts(m);
  for (int t = 0; t < sp.size(); ++t) orbit_pts[sp.orbit_of(t)].push_back(t);
  RatMatrix table(m, m);
  for (int k = 0; k < m; ++k) {
    AlgebraElement pk = indicator(sp, orbit_pts[k]);
    for (int l = 0; l < m; ++l)
      table.at(k, l) = v(pk, indicator(sp, orbit_pts[l]));
  }
  auto disjoint_pair_value = [&](const std::vector<int>& side) {
    Rat sum(0);
    for (int k = 0; k < m; ++k) {
      if (side[k] != 1) continue;
      for (int l = 0; l < m; ++l)
        if (side[l] == 2) sum += table.at(k, l);
    }
    return sum;
  };
  bool b = true;
  if (m <= 12) {
    std::vector<int> side(m, 0);
    while (true) {
      if (disjoint_pair_value(side) != 0) {
        b = false;
        break;
      }
      int pos = 0;
      while (pos < m && side[pos] == 2) side[pos++] = 0;
      if (pos == m) break;
      ++side[pos];
    }
  } else {
    std::mt19937_64 eng(0x9a27c3);
    for (int trial = 0; trial < 2000 && b; ++trial) {
      std::vector<int> side(m);
      for (int& s : side) s = static_cast<int>(eng() % 3);
      if (disjoint_pair_value(side) != 0) b = false;
    }
  }

  // (c) V(a, b) = V(a b, 1) on commuting self-adjoint pairs.
  bool c = true;
  AlgebraElement one = unit(sp);
  for (int i = 0; i < sp.dim() && c; ++i) {
    if (sp.basis()[i].kind != BasisKind::S) continue;
    AlgebraElement bi = basis_element(sp, i);
    for (int j = 0; j < sp.dim(); ++j) {
      if (sp.basis()[j].kind != BasisKind::S) continue;
      AlgebraElement bj = basis_element(sp, j);
      if (v(bi, bj) != v(multiply(bi, bj), one)) {
        c = false;
        break;
      }
    }
  }

  if (a != b || b != c)
    throw Error("internal: the three self-adjoint conditions disagree");
  return {a, b, c};
}

ComplexForm complexify_form(const BilinearForm& v) {
  const FiniteSpace& sp = v.space();
  int n = sp.size();

  // chi_t = x1 + i x2 with x1, x2 in the real algebra.
  std::vector<AlgebraElement> re_part, im_part;
  re_part.reserve(n);
  im_part.reserve(n);
  Rat half = rat(1, 2);
  for (int t = 0; t < n; ++t) {
    if (sp.is_fixed(t)) {
      re_part.push_back(basis_element(sp, sp.basis_index(BasisKind::S, t)));
      im_part.push_back(zero_element(sp));
    } else {
      int r = sp.is_rep(t) ? t : sp.sigma(t);
      AlgebraElement s = basis_element(sp, sp.basis_index(BasisKind::S, r));
      AlgebraElement u = basis_element(sp, sp.basis_index(BasisKind::U, r));
      re_part.push_back(scale(half, s));
      im_part.push_back(scale(sp.is_rep(t) ? -half : half, u));
    }
  }

  std::vector<CRat> w(static_cast<size_t>(n) * n);
  for (int t = 0; t < n; ++t)
    for (int r = 0; r < n; ++r)
      w[static_cast<size_t>(t) * n + r] =
          CRat(v(re_part[t], re_part[r]) - v(im_part[t], im_part[r]),
               v(re_part[t], im_part[r]) + v(im_part[t], re_part[r]));
  return ComplexForm(sp, w);
}

bool is_extension_orthogonal(const ComplexForm& w) {
  int n = w.space().size();
  for (int t = 0; t < n; ++t)
    for (int r = 0; r < n; ++r)
      if (t != r && !w.at(t, r).is_zero()) return false;
  return true;
}

DisjointnessReport disjointness_identities(const BilinearForm& v) {
  require_orthogonal(v, "disjointness_identities");
  const FiniteSpace& sp = v.space();
  int m = sp.orbit_count();
  int nreps = static_cast<int>(sp.cycle_reps().size());
  if (m > 16) throw Error("disjointness_identities enumerates subsets; space too large");

  std::vector<std::vector<int>> orbit_pts(m);
  for (int t = 0; t < sp.size(); ++t) orbit_pts[sp.orbit_of(t)].push_back(t);

  auto sym_subset = [&](unsigned mask) {
    std::vector<int> pts;
    for (int k = 0; k < m; ++k)
      if (mask & (1u << k))
        pts.insert(pts.end(), orbit_pts[k].begin(), orbit_pts[k].end());
    return indicator(sp, pts);
  };
  auto skew_subset = [&](unsigned mask) {
    std::vector<int> reps;
    for (int k = 0; k < nreps; ++k)
      if (mask & (1u << k)) reps.push_back(sp.cycle_reps()[k]);
    return u_set(sp, reps);
  };
  auto orbits_of_mask = [&](unsigned rep_mask) {
    unsigned orbits = 0;
    for (int k = 0; k < nreps; ++k)
      if (rep_mask & (1u << k)) orbits |= 1u << sp.orbit_of(sp.cycle_reps()[k]);
    return orbits;
  };

  DisjointnessReport report{true, true, true};

  for (unsigned d = 0; d < (1u << m); ++d) {
    AlgebraElement chi_d = sym_subset(d);
    for (unsigned bmask = 0; bmask < (1u << nreps); ++bmask) {
      if ((orbits_of_mask(bmask) & d) != 0) continue;  // D and B meet
      AlgebraElement ub = skew_subset(bmask);
      if (v(chi_d, ub) != 0 || v(ub, chi_d) != 0) report.sym_vs_skew = false;
    }
  }

  AlgebraElement u = u0(sp);
  AlgebraElement nn = multiply(u, involution(u));  // chi over all cycles
  for (unsigned bmask = 0; bmask < (1u << nreps); ++bmask) {
    AlgebraElement ub = skew_subset(bmask);
    for (unsigned cmask = 0; cmask < (1u << nreps); ++cmask) {
      AlgebraElement uc = skew_subset(cmask);
      if ((bmask & cmask) == 0) {
        if (v(ub, uc) != 0 || v(uc, ub) != 0) report.skew_vs_skew = false;
      }
      AlgebraElement trimmed =
          multiply(sub(nn, multiply(uc, involution(uc))), ub);
      if (v(trimmed, uc) != 0 || v(uc, trimmed) != 0)
        report.trimmed_products = false;
    }
  }
  return report;
}

}  // namespace orthoform
