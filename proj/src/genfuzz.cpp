#include "orthoform/genfuzz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "orthoform/json_io.hpp"

namespace orthoform {

using nlohmann::json;

long Rng::range(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat Rng::rational(long bound) {
  return rat(range(-bound, bound), range(1, bound));
}

Rat Rng::nonzero_rational(long bound) {
  while (true) {
    Rat r = rational(bound);
    if (r != 0) return r;
  }
}

CRat Rng::crational(long bound) { return CRat(rational(bound), rational(bound)); }

CRat Rng::nonzero_crational(long bound) {
  while (true) {
    CRat z = crational(bound);
    if (!z.is_zero()) return z;
  }
}

std::uint64_t trial_seed(std::uint64_t master, int trial) {
  // splitmix64 over (master, trial)
  std::uint64_t x = master + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

FiniteSpace space_with_shape(int fixed, int cycles, Rng& rng,
                             const std::string& prefix) {
  int n = fixed + 2 * cycles;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::map<std::string, std::string> sigma;
  for (int k = 0; k < cycles; ++k) {
    int a = order[fixed + 2 * k], b = order[fixed + 2 * k + 1];
    sigma[labels[a]] = labels[b];
    sigma[labels[b]] = labels[a];
  }
  return make_space(labels, sigma);
}

FiniteSpace random_space(Rng& rng, const GenConfig& cfg) {
  int f = static_cast<int>(rng.range(0, cfg.max_fixed));
  int c = static_cast<int>(rng.range(0, cfg.max_cycles));
  if (f == 0 && c == 0) {
    if (cfg.max_cycles > 0)
      c = 1;
    else
      f = 1;
  }
  return space_with_shape(f, c, rng);
}

AlgebraElement random_element(const FiniteSpace& sp, Rng& rng,
                              const GenConfig& cfg) {
  std::vector<Rat> c(sp.dim());
  for (Rat& x : c) x = rng.rational(cfg.coeff_bound);
  return from_coords(sp, c);
}

Functional random_functional(const FiniteSpace& sp, Rng& rng,
                             const GenConfig& cfg) {
  std::vector<Rat> c(sp.dim());
  for (Rat& x : c) x = rng.rational(cfg.coeff_bound);
  return Functional(sp, c);
}

BilinearForm random_orthogonal_form(const FiniteSpace& sp, Rng& rng,
                                    const GenConfig& cfg) {
  return compose_form(random_functional(sp, rng, cfg),
                      random_functional(sp, rng, cfg));
}

BilinearForm random_orthogonal_form_complete(const FiniteSpace& sp, Rng& rng,
                                             const GenConfig& cfg) {
  RatMatrix m(sp.dim(), sp.dim());
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = 0; j < sp.dim(); ++j)
      if (sp.orbit_of(sp.basis()[i].point) == sp.orbit_of(sp.basis()[j].point))
        m.at(i, j) = rng.rational(cfg.coeff_bound);
  return BilinearForm(sp, m);
}

namespace {

void fill_partner(PreserverStructure& s, int p) {
  int q = s.codomain.sigma(p);
  if (q == p) return;
  s.phi[q] = s.phi[p];
  s.a1[q] = s.a1[p].conj();
  s.a2[q] = s.a2[p].conj();
}

std::vector<int> codomain_reps(const FiniteSpace& sp) {
  std::vector<int> reps = sp.fixed_points();
  reps.insert(reps.end(), sp.cycle_reps().begin(), sp.cycle_reps().end());
  return reps;
}

}  // namespace

PreserverStructure random_op_structure(const FiniteSpace& l1,
                                       const FiniteSpace& l2, Rng& rng,
                                       const GenConfig& cfg) {
  PreserverStructure s{l1, l2, std::vector<int>(l2.size(), -1),
                       std::vector<CRat>(l2.size()), std::vector<CRat>(l2.size())};
  std::vector<int> pool = codomain_reps(l1);
  for (int p : codomain_reps(l2)) {
    if (pool.empty() || rng.chance(1, 8)) continue;  // zero row
    int t = pool[rng.range(0, static_cast<long>(pool.size()) - 1)];
    bool real_only = l2.is_fixed(p);
    if (l1.is_fixed(t)) {
      s.a1[p] = real_only ? CRat(rng.nonzero_rational(cfg.coeff_bound))
                          : rng.nonzero_crational(cfg.coeff_bound);
    } else {
      do {
        s.a1[p] = real_only ? CRat(rng.rational(cfg.coeff_bound))
                            : rng.crational(cfg.coeff_bound);
        s.a2[p] = real_only ? CRat(rng.rational(cfg.coeff_bound))
                            : rng.crational(cfg.coeff_bound);
      } while (s.a1[p].is_zero() && s.a2[p].is_zero());
    }
    s.phi[p] = t;
    fill_partner(s, p);
  }
  return s;
}

LinearMap random_op_map(const FiniteSpace& l1, const FiniteSpace& l2, Rng& rng,
                        const GenConfig& cfg) {
  return reconstruct(random_op_structure(l1, l2, rng, cfg));
}

bool spaces_admit_op_surjection(const FiniteSpace& l1, const FiniteSpace& l2) {
  long c1 = static_cast<long>(l1.cycle_reps().size());
  long c2 = static_cast<long>(l2.cycle_reps().size());
  long f1 = static_cast<long>(l1.fixed_points().size());
  long f2 = static_cast<long>(l2.fixed_points().size());
  return c2 <= c1 && f2 <= f1 + 2 * (c1 - c2);
}

namespace {

Rat weight_det(const CRat& a1, const CRat& a2) {
  return a1.re * a2.im - a1.im * a2.re;
}

void draw_nonsingular_complex(PreserverStructure& s, int p, Rng& rng, long bound) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    s.a1[p] = rng.crational(bound);
    s.a2[p] = rng.crational(bound);
    if (weight_det(s.a1[p], s.a2[p]) != 0) return;
  }
  throw Error("internal: could not draw a nonsingular weight pair");
}

}  // namespace

LinearMap random_op_surjection(const FiniteSpace& l1, const FiniteSpace& l2,
                               Rng& rng, const GenConfig& cfg) {
  if (!spaces_admit_op_surjection(l1, l2))
    throw IncompatibleSpaces("codomain needs more freedom than the domain offers");

  PreserverStructure s{l1, l2, std::vector<int>(l2.size(), -1),
                       std::vector<CRat>(l2.size()), std::vector<CRat>(l2.size())};
  std::vector<int> o1 = l1.cycle_reps(), o2 = l2.cycle_reps();
  std::vector<int> f1 = l1.fixed_points(), f2 = l2.fixed_points();
  rng.shuffle(o1);
  rng.shuffle(o2);
  rng.shuffle(f1);
  rng.shuffle(f2);

  for (size_t k = 0; k < o2.size(); ++k) {
    int p = o2[k];
    s.phi[p] = o1[k];
    draw_nonsingular_complex(s, p, rng, cfg.coeff_bound);
    fill_partner(s, p);
  }

  // Remaining sources feed the codomain fixed points: one point per domain
  // fixed point, up to two per unused domain cycle.
  std::vector<int> slots = f1;
  for (size_t k = o2.size(); k < o1.size(); ++k) {
    slots.push_back(o1[k]);
    slots.push_back(o1[k]);
  }
  rng.shuffle(slots);
  std::map<int, std::vector<int>> fed;  // source -> codomain fixed points
  for (size_t k = 0; k < f2.size(); ++k) fed[slots[k]].push_back(f2[k]);

  for (const auto& [t, pts] : fed) {
    if (l1.is_fixed(t)) {
      int p = pts[0];
      s.phi[p] = t;
      s.a1[p] = CRat(rng.nonzero_rational(cfg.coeff_bound));
    } else if (pts.size() == 1) {
      int p = pts[0];
      s.phi[p] = t;
      do {
        s.a1[p] = CRat(rng.rational(cfg.coeff_bound));
        s.a2[p] = CRat(rng.rational(cfg.coeff_bound));
      } while (s.a1[p].is_zero() && s.a2[p].is_zero());
    } else {
      int p = pts[0], q = pts[1];
      s.phi[p] = t;
      s.phi[q] = t;
      for (int attempt = 0;; ++attempt) {
        s.a1[p] = CRat(rng.rational(cfg.coeff_bound));
        s.a2[p] = CRat(rng.rational(cfg.coeff_bound));
        s.a1[q] = CRat(rng.rational(cfg.coeff_bound));
        s.a2[q] = CRat(rng.rational(cfg.coeff_bound));
        if (s.a1[p].re * s.a2[q].re - s.a2[p].re * s.a1[q].re != 0) break;
        if (attempt > 1000)
          throw Error("internal: could not draw a nonsingular fixed-point block");
      }
    }
  }

  LinearMap m = reconstruct(s);
  if (m.matrix().rank() != l2.dim())
    throw Error("internal: surjection generator produced a rank-deficient map");
  return m;
}

LinearMap random_op_bijection(const FiniteSpace& l1, const FiniteSpace& l2,
                              Rng& rng, const GenConfig& cfg) {
  if (l1.dim() != l2.dim())
    throw IncompatibleSpaces("bijection needs equal dimensions");
  return random_op_surjection(l1, l2, rng, cfg);
}

FiniteSpace bijection_codomain_for(const FiniteSpace& l1, int split_cycles,
                                   Rng& rng) {
  int c1 = static_cast<int>(l1.cycle_reps().size());
  int f1 = static_cast<int>(l1.fixed_points().size());
  if (split_cycles < 0 || split_cycles > c1)
    throw IncompatibleSpaces("cannot split that many cycles");
  return space_with_shape(f1 + 2 * split_cycles, c1 - split_cycles, rng, "q");
}

LinearMap random_biop_map(const FiniteSpace& l1, const FiniteSpace& l2, Rng& rng,
                          const GenConfig& cfg) {
  if (!spaces_admit_biop(l1, l2).ok)
    throw IncompatibleSpaces("spaces do not admit a bi-orthogonality preserver");
  for (int regen = 0; regen < 100; ++regen) {
    PreserverStructure s{l1, l2, std::vector<int>(l2.size(), -1),
                         std::vector<CRat>(l2.size()),
                         std::vector<CRat>(l2.size())};
    std::vector<int> o1 = l1.cycle_reps(), f1 = l1.fixed_points();
    rng.shuffle(o1);
    rng.shuffle(f1);

    for (size_t k = 0; k < f1.size(); ++k) {
      int p = l2.fixed_points()[k];
      s.phi[p] = f1[k];
      s.a1[p] = CRat(rng.nonzero_rational(cfg.coeff_bound));
    }
    bool ok = true;
    for (size_t k = 0; k < o1.size() && ok; ++k) {
      int p = l2.cycle_reps()[k];
      s.phi[p] = o1[k];
      ok = false;
      for (int attempt = 0; attempt < 100; ++attempt) {
        s.a1[p] = rng.crational(cfg.coeff_bound);
        s.a2[p] = rng.crational(cfg.coeff_bound);
        if (weight_det(s.a1[p], s.a2[p]) != 0) {
          ok = true;
          break;
        }
      }
      fill_partner(s, p);
    }
    if (!ok) continue;
    return reconstruct(s);
  }
  throw Error("internal: bi-orthogonality generator kept drawing zero determinants");
}

json report_to_json(const SuiteReport& report) {
  return json{{"suite", report.suite},
              {"seed", report.seed},
              {"trials", report.trials},
              {"status", report.pass ? "pass" : "fail"},
              {"counterexample", report.counterexample}};
}

// ---------------------------------------------------------------------------
// Suites

namespace {

using TrialFn = std::function<std::optional<json>(Rng&, const GenConfig&)>;

std::optional<json> pass() { return std::nullopt; }

json space_cex(const FiniteSpace& sp, const std::string& detail) {
  return json{{"space", io::space_to_json(sp)}, {"detail", detail}};
}

std::optional<json> trial_algebra_axioms(Rng& rng, const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  AlgebraElement x = random_element(sp, rng, cfg);
  AlgebraElement y = random_element(sp, rng, cfg);
  AlgebraElement z = random_element(sp, rng, cfg);
  Rat r = rng.rational(cfg.coeff_bound);
  auto fail = [&](const std::string& what) {
    json j = space_cex(sp, what);
    j["x"] = io::element_to_json(x);
    j["y"] = io::element_to_json(y);
    j["z"] = io::element_to_json(z);
    return j;
  };
  if (multiply(x, y) != multiply(y, x)) return fail("commutativity failed");
  if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z)))
    return fail("associativity failed");
  if (multiply(add(x, scale(r, y)), z) !=
      add(multiply(x, z), scale(r, multiply(y, z))))
    return fail("bilinearity failed");
  if (involution(multiply(x, y)) != multiply(involution(x), involution(y)))
    return fail("involution is not multiplicative");
  if (involution(involution(x)) != x) return fail("involution is not period 2");
  if (multiply(unit(sp), x) != x) return fail("unit is not neutral");
  return pass();
}

std::optional<json> trial_tau_symmetry(Rng& rng, const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  AlgebraElement x = random_element(sp, rng, cfg);
  AlgebraElement y = random_element(sp, rng, cfg);
  AlgebraElement built =
      involution(add(multiply(x, y), scale(rng.rational(cfg.coeff_bound), u0(sp))));
  for (int t = 0; t < sp.size(); ++t)
    if (built.value(sp.sigma(t)) != built.value(t).conj())
      return space_cex(sp, "constructed element lost tau-symmetry");
  return pass();
}

std::optional<json> trial_orthogonality_support(Rng& rng, const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  AlgebraElement x = random_element(sp, rng, cfg);
  AlgebraElement y = random_element(sp, rng, cfg);
  bool direct = is_orthogonal_pair(x, y);
  bool pointwise = true;
  for (int t = 0; t < sp.size(); ++t)
    if (!(x.value(t) * y.value(t).conj()).is_zero()) pointwise = false;
  std::vector<int> sx = orbit_support(x), sy = orbit_support(y);
  std::vector<int> inter;
  std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                        std::back_inserter(inter));
  bool by_support = inter.empty();
  if (direct != pointwise || direct != by_support) {
    json j = space_cex(sp, "orthogonality characterizations disagree");
    j["x"] = io::element_to_json(x);
    j["y"] = io::element_to_json(y);
    return j;
  }
  return pass();
}

std::optional<json> trial_coords_roundtrip(Rng& rng, const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  if (static_cast<int>(sp.basis().size()) != sp.size())
    return space_cex(sp, "basis size differs from point count");
  AlgebraElement x = random_element(sp, rng, cfg);
  if (from_coords(sp, coords(x)) != x)
    return space_cex(sp, "from_coords(coords(x)) != x");
  std::vector<Rat> c(sp.dim());
  for (Rat& v : c) v = rng.rational(cfg.coeff_bound);
  if (coords(from_coords(sp, c)) != c)
    return space_cex(sp, "coords(from_coords(c)) != c");
  return pass();
}

std::optional<json> trial_sa_skew_split(Rng& rng, const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  AlgebraElement x = random_element(sp, rng, cfg);
  auto [h, k] = sa_skew_split(x);
  auto fail = [&](const std::string& what) {
    json j = space_cex(sp, what);
    j["x"] = io::element_to_json(x);
    return j;
  };
  if (add(h, k) != x) return fail("h + k != x");
  if (involution(h) != h) return fail("h is not self-adjoint");
  if (involution(k) != scale(Rat(-1), k)) return fail("k is not skew");
  for (int t : sp.fixed_points())
    if (!k.value(t).is_zero()) return fail("skew part does not vanish on F");
  return pass();
}

std::optional<json> trial_compose_soundness(Rng& rng, const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  BilinearForm v = random_orthogonal_form(sp, rng, cfg);
  if (!is_orthogonal_form(v))
    return json{{"form", io::form_to_json(v)},
                {"detail", "composed form failed the orthogonality decider"}};
  if (auto cex = orthogonality_oracle(v, 20, rng.next())) {
    json j{{"form", io::form_to_json(v)},
           {"detail", "oracle found an orthogonal pair with nonzero value"}};
    j["x"] = io::element_to_json(cex->first);
    j["y"] = io::element_to_json(cex->second);
    return j;
  }
  return pass();
}

std::optional<json> trial_decompose_complete(Rng& rng, const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  BilinearForm v = random_orthogonal_form_complete(sp, rng, cfg);
  FormDecomposition d = decompose(v);  // asserts the identity internally
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = 0; j < sp.dim(); ++j) {
      AlgebraElement bi = basis_element(sp, i), bj = basis_element(sp, j);
      if (v(bi, bj) !=
          d.phi1(multiply(bi, bj)) + d.phi2(multiply(bi, involution(bj))))
        return json{{"form", io::form_to_json(v)},
                    {"detail", "decomposition identity failed"}};
    }
  return pass();
}

std::optional<json> trial_oracle_agreement(Rng& rng, const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  BilinearForm v = rng.chance(1, 2) ? random_orthogonal_form_complete(sp, rng, cfg)
                                    : BilinearForm(sp, [&] {
                                        RatMatrix m(sp.dim(), sp.dim());
                                        for (int i = 0; i < sp.dim(); ++i)
                                          for (int j = 0; j < sp.dim(); ++j)
                                            m.at(i, j) = rng.rational(cfg.coeff_bound);
                                        return m;
                                      }());
  bool decided = is_orthogonal_form(v);
  auto cex = orthogonality_oracle(v, 30, rng.next());
  if (decided != !cex.has_value()) {
    json j{{"form", io::form_to_json(v)},
           {"detail", "decider and oracle disagree"}};
    if (cex) {
      j["x"] = io::element_to_json(cex->first);
      j["y"] = io::element_to_json(cex->second);
    }
    return j;
  }
  return pass();
}

std::optional<json> trial_representation_equivalence(Rng& rng,
                                                     const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  Functional g1 = random_functional(sp, rng, cfg);
  Functional g2 = random_functional(sp, rng, cfg);

  // Shift along the kernel: (g1 + d, g2 - d) with d supported on the S
  // coefficients of fixed points.
  std::vector<Rat> dc(sp.dim(), Rat(0));
  for (int t : sp.fixed_points())
    dc[sp.basis_index(BasisKind::S, t)] = rng.rational(cfg.coeff_bound);
  Functional d(sp, dc);
  if (!representation_equivalent({g1, g2}, {g1 + d, g2 - d}))
    return json{{"detail", "kernel shift was not recognized as equivalent"},
                {"g1", io::functional_to_json(g1)},
                {"g2", io::functional_to_json(g2)}};

  // Any nonzero perturbation of g1 alone changes the form.
  std::vector<Rat> ec(sp.dim(), Rat(0));
  ec[rng.range(0, sp.dim() - 1)] = rng.nonzero_rational(cfg.coeff_bound);
  Functional e(sp, ec);
  if (representation_equivalent({g1, g2}, {g1 + e, g2}))
    return json{{"detail", "perturbed pair wrongly declared equivalent"},
                {"g1", io::functional_to_json(g1)},
                {"perturbation", io::functional_to_json(e)}};
  return pass();
}

std::optional<json> trial_symmetric_sa(Rng& rng, const GenConfig& cfg) {
  GenConfig small = cfg;
  small.max_fixed = std::min(cfg.max_fixed, 3);
  small.max_cycles = std::min(cfg.max_cycles, 2);
  FiniteSpace sp = random_space(rng, small);
  BilinearForm v0 = random_orthogonal_form_complete(sp, rng, small);
  RatMatrix sym(sp.dim(), sp.dim());
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = 0; j < sp.dim(); ++j)
      sym.at(i, j) = v0.matrix().at(i, j) + v0.matrix().at(j, i);
  BilinearForm v(sp, sym);

  Functional phi1 = symmetric_sa_functional(v);  // asserts the identity
  AlgebraElement one = unit(sp);
  for (int t : sp.fixed_points())
    if (phi1(basis_element(sp, sp.basis_index(BasisKind::S, t))) !=
        v(basis_element(sp, sp.basis_index(BasisKind::S, t)), one))
      return json{{"form", io::form_to_json(v)},
                  {"detail", "phi1 disagrees with V(., 1)"}};

  if (!sa_orthogonality_conditions(v).all())
    return json{{"form", io::form_to_json(v)},
                {"detail", "orthogonal form failed a self-adjoint condition"}};
  return pass();
}

std::optional<json> trial_complexification(Rng& rng, const GenConfig& cfg) {
  FiniteSpace sp = random_space(rng, cfg);
  BilinearForm v = rng.chance(1, 2)
                       ? random_orthogonal_form_complete(sp, rng, cfg)
                       : compose_form(random_functional(sp, rng, cfg),
                                      Functional::zero(sp));
  bool ext = is_extension_orthogonal(complexify_form(v));
  bool elim = phi2_eliminable(v);
  if (ext != elim)
    return json{{"form", io::form_to_json(v)},
                {"detail", "extension orthogonality disagrees with phi2 "
                           "eliminability"},
                {"extension_orthogonal", ext},
                {"phi2_eliminable", elim}};
  return pass();
}

std::optional<json> trial_op_support(Rng& rng, const GenConfig& cfg) {
  FiniteSpace l1 = random_space(rng, cfg);
  FiniteSpace l2 = random_space(rng, cfg);
  LinearMap t = [&] {
    if (rng.chance(1, 2)) return random_op_map(l1, l2, rng, cfg);
    RatMatrix m(l2.dim(), l1.dim());
    for (int i = 0; i < l2.dim(); ++i)
      for (int j = 0; j < l1.dim(); ++j) m.at(i, j) = rng.rational(2);
    return LinearMap(l1, l2, m);
  }();

  bool by_pairs = is_orthogonality_preserving(t);

  bool by_points = true;
  for (int p = 0; p < l2.size() && by_points; ++p) {
    int seen = -1;
    for (int i = 0; i < l1.dim(); ++i) {
      if (t.basis_image(i).value(p).is_zero()) continue;
      int orbit = l1.orbit_of(l1.basis()[i].point);
      if (seen < 0)
        seen = orbit;
      else if (seen != orbit)
        by_points = false;
    }
  }
  if (by_pairs != by_points)
    return json{{"map", io::map_to_json(t)},
                {"detail", "basis-pair and per-point characterizations disagree"}};

  if (by_pairs && l1.orbit_count() >= 2) {
    for (int sample = 0; sample < 20; ++sample) {
      std::vector<Rat> cx(l1.dim(), Rat(0)), cy(l1.dim(), Rat(0));
      std::vector<int> side(l1.orbit_count());
      for (int& sd : side) sd = static_cast<int>(rng.range(0, 2));
      for (int b = 0; b < l1.dim(); ++b) {
        int orbit = l1.orbit_of(l1.basis()[b].point);
        if (side[orbit] == 0)
          cx[b] = rng.rational(cfg.coeff_bound);
        else if (side[orbit] == 1)
          cy[b] = rng.rational(cfg.coeff_bound);
      }
      AlgebraElement x = from_coords(l1, cx), y = from_coords(l1, cy);
      if (!is_orthogonal_pair(t.apply(x), t.apply(y))) {
        json j{{"map", io::map_to_json(t)},
               {"detail", "oracle found an orthogonal pair with non-orthogonal "
                          "images"}};
        j["x"] = io::element_to_json(x);
        j["y"] = io::element_to_json(y);
        return j;
      }
    }
  }
  return pass();
}

std::optional<json> trial_op_roundtrip(Rng& rng, const GenConfig& cfg) {
  FiniteSpace l1 = random_space(rng, cfg);
  FiniteSpace l2 = random_space(rng, cfg);
  PreserverStructure s = random_op_structure(l1, l2, rng, cfg);
  LinearMap t = reconstruct(s);
  if (!(analyze(t) == s))
    return json{{"map", io::map_to_json(t)},
                {"detail", "analyze(reconstruct(s)) != s"}};
  LinearMap t2 = reconstruct(analyze(t));
  if (!(t2.matrix() == t.matrix()))
    return json{{"map", io::map_to_json(t)},
                {"detail", "reconstruct(analyze(t)) != t"}};
  return pass();
}

std::optional<json> trial_biop_criterion(Rng& rng, const GenConfig& cfg) {
  FiniteSpace l1 = random_space(rng, cfg);
  long kind = rng.range(0, 2);
  LinearMap t = [&] {
    if (kind == 0) {
      FiniteSpace l2 = space_with_shape(
          static_cast<int>(l1.fixed_points().size()),
          static_cast<int>(l1.cycle_reps().size()), rng, "q");
      return random_biop_map(l1, l2, rng, cfg);
    }
    if (kind == 1) {
      int c1 = static_cast<int>(l1.cycle_reps().size());
      FiniteSpace l2 =
          bijection_codomain_for(l1, static_cast<int>(rng.range(0, c1)), rng);
      return random_op_bijection(l1, l2, rng, cfg);
    }
    FiniteSpace l2 = random_space(rng, cfg);
    return random_op_map(l1, l2, rng, cfg);
  }();
  // is_biorthogonality_preserving cross-validates the structural criterion
  // against the direct route and throws on any disagreement.
  BiopDecision d = is_biorthogonality_preserving(t);
  if (kind == 0 && !d.ok)
    return json{{"map", io::map_to_json(t)},
                {"detail", "generator-certified map rejected: " + d.reason}};
  if (d.ok) {
    LinearMap s = invert_biop(*d.certificate);
    if (!(s.matrix() * t.matrix() == RatMatrix::identity(l1.dim())))
      return json{{"map", io::map_to_json(t)},
                  {"detail", "inverse from certificate is not a left inverse"}};
  }
  return pass();
}

std::optional<json> trial_inverse_invertibles(Rng& rng, const GenConfig& cfg) {
  FiniteSpace l1 = random_space(rng, cfg);
  int c1 = static_cast<int>(l1.cycle_reps().size());
  FiniteSpace l2 =
      bijection_codomain_for(l1, static_cast<int>(rng.range(0, c1)), rng);
  LinearMap t = random_op_bijection(l1, l2, rng, cfg);
  if (!inverse_preserves_invertibles_check(t, 30, rng.next()))
    return json{{"map", io::map_to_json(t)},
                {"detail", "inverse mapped an invertible element to a "
                           "non-invertible one"}};
  return pass();
}

std::optional<json> trial_automatic_continuity(Rng& rng, const GenConfig& cfg) {
  FiniteSpace l1 = random_space(rng, cfg);
  FiniteSpace l2 = random_space(rng, cfg);
  LinearMap t = random_op_map(l1, l2, rng, cfg);
  PreserverStructure s = analyze(t);
  if (s.z1().size() + s.z3().size() != static_cast<size_t>(l2.size()) ||
      !s.z2().empty())
    return json{{"map", io::map_to_json(t)},
                {"detail", "rows not exhausted by the bounded/zero split"}};
  return pass();
}

std::optional<json> trial_biop_inverse(Rng& rng, const GenConfig& cfg) {
  FiniteSpace l1 = random_space(rng, cfg);
  FiniteSpace l2 = space_with_shape(static_cast<int>(l1.fixed_points().size()),
                                    static_cast<int>(l1.cycle_reps().size()),
                                    rng, "q");
  LinearMap t = random_biop_map(l1, l2, rng, cfg);
  BiopDecision d = is_biorthogonality_preserving(t);
  if (!d.ok)
    return json{{"map", io::map_to_json(t)},
                {"detail", "generated map not recognized: " + d.reason}};
  LinearMap s = invert_biop(*d.certificate);
  if (!(s.matrix() * t.matrix() == RatMatrix::identity(l1.dim())) ||
      !(t.matrix() * s.matrix() == RatMatrix::identity(l2.dim())))
    return json{{"map", io::map_to_json(t)},
                {"detail", "certificate inverse is not two-sided"}};
  return pass();
}

std::optional<json> trial_f2_empty_biop(Rng& rng, const GenConfig& cfg) {
  int cycles = static_cast<int>(rng.range(1, std::max(1, cfg.max_cycles)));
  FiniteSpace l1 = space_with_shape(0, cycles, rng, "p");
  FiniteSpace l2 = space_with_shape(0, cycles, rng, "q");
  LinearMap t = random_op_bijection(l1, l2, rng, cfg);
  if (!f2_empty_implies_biop_check(t))
    return json{{"map", io::map_to_json(t)},
                {"detail", "bijection with no codomain fixed points is not "
                           "bi-orthogonality preserving"}};
  return pass();
}

std::optional<json> trial_disjointness_identities(Rng& rng, const GenConfig& cfg) {
  GenConfig small = cfg;
  small.max_fixed = std::min(cfg.max_fixed, 3);
  small.max_cycles = std::min(cfg.max_cycles, 3);
  FiniteSpace sp = random_space(rng, small);
  BilinearForm v = random_orthogonal_form_complete(sp, rng, small);
  DisjointnessReport r = disjointness_identities(v);
  if (!r.all())
    return json{{"form", io::form_to_json(v)},
                {"detail", "an orthogonality identity failed"}};
  return pass();
}

std::optional<json> trial_selfcheck_mutation(Rng& rng, const GenConfig& cfg) {
  GenConfig shaped = cfg;
  shaped.max_fixed = std::max(cfg.max_fixed, 1);
  shaped.max_cycles = std::max(cfg.max_cycles, 1);
  FiniteSpace sp = space_with_shape(
      static_cast<int>(rng.range(1, shaped.max_fixed)),
      static_cast<int>(rng.range(1, shaped.max_cycles)), rng, "p");
  BilinearForm v0 = random_orthogonal_form_complete(sp, rng, shaped);
  RatMatrix m = v0.matrix();
  // Flip one cross-orbit entry; the decider must catch it, so the
  // "invariant" below is expected to fail.
  std::vector<std::pair<int, int>> cross;
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = 0; j < sp.dim(); ++j)
      if (sp.orbit_of(sp.basis()[i].point) != sp.orbit_of(sp.basis()[j].point))
        cross.emplace_back(i, j);
  auto [i, j] = cross[rng.range(0, static_cast<long>(cross.size()) - 1)];
  m.at(i, j) = 1;
  BilinearForm v(sp, m);
  if (!is_orthogonal_form(v)) {
    json cex{{"form", io::form_to_json(v)},
             {"detail", "mutated form rejected by the decider (expected)"}};
    if (auto pair = orthogonality_oracle(v, 10, rng.next())) {
      cex["x"] = io::element_to_json(pair->first);
      cex["y"] = io::element_to_json(pair->second);
    }
    return cex;
  }
  return pass();
}

const std::map<std::string, TrialFn>& registry() {
  static const std::map<std::string, TrialFn> suites = {
      {"algebra-axioms", trial_algebra_axioms},
      {"tau-symmetry", trial_tau_symmetry},
      {"orthogonality-support", trial_orthogonality_support},
      {"coords-roundtrip", trial_coords_roundtrip},
      {"sa-skew-split", trial_sa_skew_split},
      {"compose-soundness", trial_compose_soundness},
      {"decompose-complete", trial_decompose_complete},
      {"oracle-agreement", trial_oracle_agreement},
      {"representation-equivalence", trial_representation_equivalence},
      {"symmetric-sa", trial_symmetric_sa},
      {"complexification", trial_complexification},
      {"op-support", trial_op_support},
      {"op-roundtrip", trial_op_roundtrip},
      {"biop-criterion", trial_biop_criterion},
      {"inverse-invertibles", trial_inverse_invertibles},
      {"automatic-continuity", trial_automatic_continuity},
      {"biop-inverse", trial_biop_inverse},
      {"f2-empty-biop", trial_f2_empty_biop},
      {"disjointness-identities", trial_disjointness_identities},
      {"selfcheck-mutation", trial_selfcheck_mutation},
  };
  return suites;
}

// Smallest space bounds at which the suite still fails, scanning total size
// upward; falls back to the original counterexample.
json shrink(const TrialFn& fn, const GenConfig& cfg, json original) {
  for (int total = 1; total <= cfg.max_fixed + 2 * cfg.max_cycles; ++total) {
    for (int c = 0; c <= std::min(cfg.max_cycles, total / 2); ++c) {
      int f = total - 2 * c;
      if (f > cfg.max_fixed) continue;
      GenConfig small = cfg;
      small.max_fixed = f;
      small.max_cycles = c;
      for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(trial_seed(cfg.seed, trial));
        try {
          if (auto cex = fn(rng, small)) {
            (*cex)["shrunk_bounds"] =
                json{{"max_fixed", f}, {"max_cycles", c}};
            return *cex;
          }
        } catch (const Error&) {
          // Generators may reject degenerate bounds; not a failure.
        }
      }
    }
  }
  return original;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) {
    (void)fn;
    if (name != "selfcheck-mutation") names.push_back(name);
  }
  return names;
}

SuiteReport run_suite(const std::string& name, const GenConfig& cfg) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownSuite("unknown suite '" + name + "'");
  SuiteReport report{name, cfg.seed, cfg.trials, true, nullptr};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(trial_seed(cfg.seed, trial));
    std::optional<json> cex;
    try {
      cex = it->second(rng, cfg);
    } catch (const Error& e) {
      cex = json{{"detail", std::string("exception: ") + e.what()}};
    }
    if (cex) {
      report.pass = false;
      report.counterexample = shrink(it->second, cfg, *cex);
      report.counterexample["trial"] = trial;
      break;
    }
  }
  return report;
}

}  // namespace orthoform
