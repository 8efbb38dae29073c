// Acceptance suite: end-to-end checks of the library's headline guarantees,
// one printed line per criterion.  Everything is exact rational arithmetic;
// no tolerances anywhere.  Exit code = number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "orthoform/genfuzz.hpp"
#include "orthoform/json_io.hpp"
#include "orthoform/reproduce.hpp"

using namespace orthoform;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

Result fail(std::string detail) { return {false, std::move(detail)}; }

bool decomposition_identity(const BilinearForm& v, const FormDecomposition& d) {
  const FiniteSpace& sp = v.space();
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = 0; j < sp.dim(); ++j) {
      AlgebraElement bi = basis_element(sp, i), bj = basis_element(sp, j);
      if (v(bi, bj) !=
          d.phi1(multiply(bi, bj)) + d.phi2(multiply(bi, involution(bj))))
        return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// 1. Decomposition: every orthogonal form splits as phi1(xy) + phi2(xy*).

Result criterion_decomposition() {
  GenConfig cfg;
  cfg.seed = 0xC1;
  cfg.max_fixed = 4;
  cfg.max_cycles = 3;  // |K| <= 10
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng(trial_seed(cfg.seed, trial));
    FiniteSpace sp = random_space(rng, cfg);
    BilinearForm v = random_orthogonal_form_complete(sp, rng, cfg);
    FormDecomposition d = decompose(v);
    if (!decomposition_identity(v, d))
      return fail("identity failed at trial " + std::to_string(trial));
  }
  return {true, "1000 complete-generator forms decomposed exactly"};
}

// ---------------------------------------------------------------------------
// 2. Converse: composed forms are orthogonal; the oracle finds nothing.

Result criterion_converse() {
  GenConfig cfg;
  cfg.seed = 0xC2;
  cfg.max_fixed = 4;
  cfg.max_cycles = 3;
  long sampled_pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng(trial_seed(cfg.seed, trial));
    FiniteSpace sp = random_space(rng, cfg);
    BilinearForm v = random_orthogonal_form(sp, rng, cfg);
    if (!is_orthogonal_form(v))
      return fail("composed form rejected at trial " + std::to_string(trial));
    if (orthogonality_oracle(v, 10, rng.next()).has_value())
      return fail("oracle counterexample at trial " + std::to_string(trial));
    sampled_pairs += 10;
  }
  return {true, "1000 composed forms pass; " + std::to_string(sampled_pairs) +
                    " sampled orthogonal pairs vanish"};
}

// ---------------------------------------------------------------------------
// 3. Two-point demo: extension value, non-orthogonality, decomposition.

Result criterion_complexification_demo() {
  ComplexificationDemo demo = complexification_demo();
  const FiniteSpace& sp = demo.space;

  if (!is_orthogonal_form(demo.form)) return fail("real form not orthogonal");

  FormDecomposition d = decompose(demo.form);
  Functional re_delta(sp, {Rat(1), Rat(0)});
  if (!representation_equivalent({d.phi1, d.phi2},
                                 {Functional::zero(sp), re_delta}))
    return fail("decomposition not equivalent to (0, Re delta_t1)");

  ComplexForm w = complexify_form(demo.form);
  if (is_extension_orthogonal(w)) return fail("extension wrongly orthogonal");

  const CRat& value = w.at(sp.index("t1"), sp.index("t2"));
  if (value.is_zero()) return fail("extension vanishes on (chi_t1, chi_t2)");
  if (value != CRat(Rat(1)))
    return fail("extension value on (chi_t1, chi_t2) is " + crat_str(value) +
                ", required exactly 1");
  return {true, "demo reproduced"};
}

// ---------------------------------------------------------------------------
// 4. Extension orthogonality coincides with phi2-eliminability.

Result criterion_extension_agreement() {
  GenConfig cfg;
  cfg.seed = 0xC4;
  int eliminable = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng(trial_seed(cfg.seed, trial));
    FiniteSpace sp = random_space(rng, cfg);
    BilinearForm v = trial % 2 == 0
                         ? random_orthogonal_form_complete(sp, rng, cfg)
                         : compose_form(random_functional(sp, rng, cfg),
                                        Functional::zero(sp));
    bool ext = is_extension_orthogonal(complexify_form(v));
    bool elim = phi2_eliminable(v);
    if (ext != elim)
      return fail("disagreement at trial " + std::to_string(trial));
    if (elim) ++eliminable;
  }
  return {true, "500 forms agree (" + std::to_string(eliminable) +
                    " with orthogonal extension)"};
}

// ---------------------------------------------------------------------------
// 5. Symmetric forms factor on the self-adjoint part; the three conditions
//    are equivalent.

Result criterion_symmetric_sa() {
  GenConfig cfg;
  cfg.seed = 0xC5;
  cfg.max_fixed = 3;
  cfg.max_cycles = 2;
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng(trial_seed(cfg.seed, trial));
    FiniteSpace sp = random_space(rng, cfg);
    BilinearForm v0 = random_orthogonal_form_complete(sp, rng, cfg);
    RatMatrix sym(sp.dim(), sp.dim());
    for (int i = 0; i < sp.dim(); ++i)
      for (int j = 0; j < sp.dim(); ++j)
        sym.at(i, j) = v0.matrix().at(i, j) + v0.matrix().at(j, i);
    BilinearForm v(sp, sym);
    Functional phi1 = symmetric_sa_functional(v);  // throws if identity fails
    // Explicit re-check on self-adjoint basis pairs.
    for (int i = 0; i < sp.dim(); ++i) {
      if (sp.basis()[i].kind != BasisKind::S) continue;
      AlgebraElement a = basis_element(sp, i);
      for (int j = 0; j < sp.dim(); ++j) {
        if (sp.basis()[j].kind != BasisKind::S) continue;
        AlgebraElement b = basis_element(sp, j);
        AlgebraElement jordan =
            scale(rat(1, 2), add(multiply(a, b), multiply(b, a)));
        if (v(a, b) != phi1(jordan))
          return fail("jordan identity failed at trial " + std::to_string(trial));
      }
    }
  }

  // Pairwise equivalence of the three conditions, orthogonal and mutated.
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng(trial_seed(cfg.seed ^ 0x55, trial));
    FiniteSpace sp = space_with_shape(static_cast<int>(rng.range(1, 3)),
                                      static_cast<int>(rng.range(1, 2)), rng);
    BilinearForm v = random_orthogonal_form_complete(sp, rng, cfg);
    if (trial % 2 == 1) {
      // Nonzero cross-orbit S x S entry: all three conditions must flip.
      RatMatrix m = v.matrix();
      int i = sp.basis_index(BasisKind::S, sp.fixed_points()[0]);
      int j = sp.basis_index(BasisKind::S, sp.cycle_reps()[0]);
      m.at(i, j) = rng.nonzero_rational(cfg.coeff_bound);
      v = BilinearForm(sp, m);
    }
    SaConditionsReport r = sa_orthogonality_conditions(v);  // throws if the three disagree
    bool expected = trial % 2 == 0;
    if (r.orthogonal_on_sa != expected || r.vanishes_on_projections != expected ||
        r.product_against_unit != expected)
      return fail("condition values unexpected at trial " + std::to_string(trial));
  }
  return {true, "500 symmetric forms + 200 equivalence checks pass"};
}

// ---------------------------------------------------------------------------
// 6. Structure round-trips.

Result criterion_structure_roundtrips() {
  GenConfig cfg;
  cfg.seed = 0xC6;
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng(trial_seed(cfg.seed, trial));
    FiniteSpace l1 = random_space(rng, cfg);
    FiniteSpace l2 = random_space(rng, cfg);
    PreserverStructure s = random_op_structure(l1, l2, rng, cfg);
    LinearMap t = reconstruct(s);
    if (!(analyze(t) == s))
      return fail("analyze(reconstruct) mismatch at trial " + std::to_string(trial));
    if (!(reconstruct(analyze(t)).matrix() == t.matrix()))
      return fail("reconstruct(analyze) mismatch at trial " + std::to_string(trial));
  }
  return {true, "500 map and 500 structure round-trips exact"};
}

// ---------------------------------------------------------------------------
// 7. Bi-orthogonality criterion vs the direct decision.

struct Option {
  int phi;  // -1 for a zero row
  CRat a1, a2;
};

std::vector<int> reps_of(const FiniteSpace& sp) {
  std::vector<int> reps = sp.fixed_points();
  reps.insert(reps.end(), sp.cycle_reps().begin(), sp.cycle_reps().end());
  return reps;
}

// All weight options over the +-1/0 grid for one codomain rep.
std::vector<Option> options_for(const FiniteSpace& l1, const FiniteSpace& l2,
                                int p) {
  static const long grid[] = {-1, 0, 1};
  std::vector<Option> out;
  out.push_back({-1, CRat(), CRat()});
  bool p_fixed = l2.is_fixed(p);
  for (int t : reps_of(l1)) {
    if (l1.is_fixed(t)) {
      if (p_fixed) {
        out.push_back({t, CRat(Rat(-1)), CRat()});
        out.push_back({t, CRat(Rat(1)), CRat()});
      } else {
        for (long re : grid)
          for (long im : grid) {
            if (re == 0 && im == 0) continue;
            out.push_back({t, CRat(re, im), CRat()});
          }
      }
    } else {
      if (p_fixed) {
        for (long a1 : grid)
          for (long a2 : grid) {
            if (a1 == 0 && a2 == 0) continue;
            out.push_back({t, CRat(Rat(a1)), CRat(Rat(a2))});
          }
      } else {
        for (long a1re : grid)
          for (long a1im : grid)
            for (long a2re : grid)
              for (long a2im : grid) {
                if (a1re == 0 && a1im == 0 && a2re == 0 && a2im == 0) continue;
                out.push_back({t, CRat(a1re, a1im), CRat(a2re, a2im)});
              }
      }
    }
  }
  return out;
}

// Enumerates every structure-generated map between l1 and l2 over the grid
// and lets is_biorthogonality_preserving cross-validate itself on each.
std::pair<long, long> enumerate_grid_maps(const FiniteSpace& l1,
                                          const FiniteSpace& l2) {
  std::vector<int> reps2 = reps_of(l2);
  std::vector<std::vector<Option>> options;
  options.reserve(reps2.size());
  for (int p : reps2) options.push_back(options_for(l1, l2, p));

  long checked = 0, positives = 0;
  std::vector<size_t> idx(reps2.size(), 0);
  while (true) {
    PreserverStructure s{l1, l2, std::vector<int>(l2.size(), -1),
                         std::vector<CRat>(l2.size()),
                         std::vector<CRat>(l2.size())};
    for (size_t k = 0; k < reps2.size(); ++k) {
      const Option& o = options[k][idx[k]];
      int p = reps2[k];
      s.phi[p] = o.phi;
      s.a1[p] = o.a1;
      s.a2[p] = o.a2;
      int q = l2.sigma(p);
      if (q != p) {
        s.phi[q] = o.phi;
        s.a1[q] = o.a1.conj();
        s.a2[q] = o.a2.conj();
      }
    }
    LinearMap t = reconstruct(s);
    BiopDecision d = is_biorthogonality_preserving(t);  // self-cross-validates
    if (d.ok) {
      invert_biop(*d.certificate);  // throws unless exactly two-sided
      ++positives;
    }
    ++checked;

    size_t pos = 0;
    while (pos < idx.size() && idx[pos] + 1 == options[pos].size())
      idx[pos++] = 0;
    if (pos == idx.size()) break;
    ++idx[pos];
  }
  return {checked, positives};
}

Result criterion_biop_agreement() {
  // (i) exhaustive enumeration over |K| <= 4 spaces and the +-1 grid.
  Rng shape_rng(1);
  std::vector<std::pair<int, int>> shapes = {{1, 0}, {2, 0}, {3, 0}, {4, 0},
                                             {0, 1}, {1, 1}, {2, 1}, {0, 2}};
  std::vector<FiniteSpace> spaces;
  spaces.reserve(shapes.size());
  for (auto [f, c] : shapes) spaces.push_back(space_with_shape(f, c, shape_rng));

  long total = 0, positives = 0;
  for (const FiniteSpace& l1 : spaces)
    for (const FiniteSpace& l2 : spaces) {
      if (l1.dim() != l2.dim()) continue;
      auto [checked, pos] = enumerate_grid_maps(l1, l2);
      total += checked;
      positives += pos;
    }
  // A few mismatched-dimension spot checks (criterion must agree on "false").
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 4}, {3, 0}, {1, 5}}) {
    auto [checked, pos] = enumerate_grid_maps(spaces[a], spaces[b]);
    total += checked;
    if (pos != 0) return fail("mismatched spaces produced a positive");
  }
  if (positives == 0) return fail("exhaustive grid found no positive instance");

  // (ii) 500 random larger instances.
  GenConfig cfg;
  cfg.seed = 0xC7;
  cfg.max_fixed = 3;
  cfg.max_cycles = 2;
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng(trial_seed(cfg.seed, trial));
    FiniteSpace l1 = random_space(rng, cfg);
    LinearMap t = [&] {
      long kind = rng.range(0, 2);
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
    BiopDecision d = is_biorthogonality_preserving(t);
    if (d.ok) invert_biop(*d.certificate);
  }
  return {true, std::to_string(total) + " exhaustive grid maps (" +
                    std::to_string(positives) +
                    " positive) + 500 random instances agree"};
}

// ---------------------------------------------------------------------------
// 8. The bundled preserver demo.

Result criterion_biop_demo() {
  BiopDemo demo = biop_demo();
  if (demo.map.matrix().rank() != demo.domain.dim() ||
      demo.domain.dim() != demo.codomain.dim())
    return fail("demo map is not a bijection");
  if (!is_orthogonality_preserving(demo.map))
    return fail("demo map does not preserve orthogonality");
  BiopDecision d = is_biorthogonality_preserving(demo.map);
  if (d.ok) return fail("demo map wrongly bi-orthogonality preserving");
  if (spaces_admit_biop(demo.domain, demo.codomain).ok)
    return fail("demo spaces wrongly admit a bi-preserver");
  return {true, "OP bijection, not bi-OP (" + d.reason + "), spaces inequivalent"};
}

// ---------------------------------------------------------------------------
// 9. Inverses preserve invertibles; no codomain fixed points forces bi-OP.

Result criterion_inverse_properties() {
  GenConfig cfg;
  cfg.seed = 0xC9;
  cfg.max_fixed = 3;
  cfg.max_cycles = 2;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(trial_seed(cfg.seed, trial));
    FiniteSpace l1 = random_space(rng, cfg);
    int c1 = static_cast<int>(l1.cycle_reps().size());
    FiniteSpace l2 =
        bijection_codomain_for(l1, static_cast<int>(rng.range(0, c1)), rng);
    LinearMap t = random_op_bijection(l1, l2, rng, cfg);
    if (!inverse_preserves_invertibles_check(t, 50, rng.next()))
      return fail("invertibility lost at trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(trial_seed(cfg.seed ^ 0x99, trial));
    int cycles = static_cast<int>(rng.range(1, cfg.max_cycles));
    FiniteSpace l1 = space_with_shape(0, cycles, rng, "p");
    FiniteSpace l2 = space_with_shape(0, cycles, rng, "q");
    LinearMap t = random_op_bijection(l1, l2, rng, cfg);
    if (!inverse_preserves_invertibles_check(t, 50, rng.next()))
      return fail("invertibility lost (no fixed points) at trial " +
                  std::to_string(trial));
    if (!f2_empty_implies_biop_check(t))
      return fail("fixed-point-free bijection not bi-OP at trial " +
                  std::to_string(trial));
  }
  return {true, "200 bijections keep invertibles; fixed-point-free ones are bi-OP"};
}

// ---------------------------------------------------------------------------
// 10. Mutation detection with serialized counterexamples.

Result criterion_mutation_detection() {
  // Forms: flipping any single cross-orbit entry is caught.
  Rng rng(0xCA);
  GenConfig cfg;
  FiniteSpace sp = space_with_shape(2, 2, rng);  // |K| = 6, 4 orbits
  BilinearForm v = random_orthogonal_form_complete(sp, rng, cfg);
  long flips = 0;
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = 0; j < sp.dim(); ++j) {
      if (sp.orbit_of(sp.basis()[i].point) == sp.orbit_of(sp.basis()[j].point))
        continue;
      RatMatrix m = v.matrix();
      m.at(i, j) = 1;
      BilinearForm mutant(sp, m);
      if (is_orthogonal_form(mutant))
        return fail("undetected form mutation at entry (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
      auto cex = orthogonality_oracle(mutant, 20, rng.next());
      if (!cex) return fail("oracle missed the mutated entry");
      io::json doc{{"x", io::element_to_json(cex->first)},
                   {"y", io::element_to_json(cex->second)}};
      if (io::emit(doc).size() < 3) return fail("empty counterexample");
      ++flips;
    }

  // Maps: redirecting one basis image across orbits is caught.
  FiniteSpace l1 = space_with_shape(2, 2, rng, "p");
  FiniteSpace l2 = space_with_shape(2, 2, rng, "q");
  LinearMap t = random_biop_map(l1, l2, rng, cfg);
  long redirects = 0;
  for (int i = 0; i < l1.dim(); ++i) {
    int j = -1;
    for (int cand = 0; cand < l1.dim(); ++cand)
      if (l1.orbit_of(l1.basis()[cand].point) !=
          l1.orbit_of(l1.basis()[i].point)) {
        j = cand;
        break;
      }
    if (j < 0) continue;
    RatMatrix m = t.matrix();
    for (int r = 0; r < l2.dim(); ++r) m.at(r, i) = m.at(r, j);
    LinearMap mutant(l1, l2, m);
    auto witness = op_violation_witness(mutant);
    if (!witness) return fail("redirected image not caught as an OP violation");
    if (is_biorthogonality_preserving(mutant).ok)
      return fail("redirected image still declared bi-OP");
    io::json doc{
        {"x", io::element_to_json(basis_element(l1, witness->first))},
        {"y", io::element_to_json(basis_element(l1, witness->second))}};
    if (io::emit(doc).size() < 3) return fail("empty witness document");
    ++redirects;
  }
  return {true, std::to_string(flips) + " entry flips and " +
                    std::to_string(redirects) + " image redirects all caught"};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* summary;
    double budget_seconds;
    std::function<Result()> run;
  };
  int only = 0;  // 0 = run everything
  if (argc > 1) only = std::atoi(argv[1]);
  std::vector<Criterion> criteria = {
      {1, "decomposition of orthogonal forms", 30, criterion_decomposition},
      {2, "soundness of composed forms", 30, criterion_converse},
      {3, "two-point complexification demo", 1, criterion_complexification_demo},
      {4, "extension orthogonality = phi2-eliminability", 60,
       criterion_extension_agreement},
      {5, "symmetric forms on the self-adjoint part", 60, criterion_symmetric_sa},
      {6, "structure round-trips", 60, criterion_structure_roundtrips},
      {7, "bi-orthogonality criterion agreement", 300, criterion_biop_agreement},
      {8, "bundled preserver demo", 1, criterion_biop_demo},
      {9, "inverse properties of OP bijections", 60, criterion_inverse_properties},
      {10, "mutation detection", 30, criterion_mutation_detection},
  };

  int failures = 0;
  int executed = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++executed;
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = elapsed <= c.budget_seconds;
    bool pass = r.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2fs/%gs) %s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.summary, elapsed,
                c.budget_seconds, r.detail.c_str(),
                !r.pass || in_budget ? "" : " [over budget]");
  }
  std::printf("%d/%d criteria passed\n", executed - failures, executed);
  return failures;
}
