#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthoform/forms.hpp"
#include "orthoform/preservers.hpp"

namespace orthoform {

// Deterministic generation: identical config yields identical objects and
// byte-identical reports.  Each trial derives its own seed from the master
// seed and the trial index, so trial order carries no hidden state.
struct GenConfig {
  std::uint64_t seed = 0;
  int max_fixed = 3;
  int max_cycles = 3;
  long coeff_bound = 8;  // numerators in [-bound, bound], denominators in [1, bound]
  int trials = 100;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  long range(long lo, long hi);  // inclusive
  bool chance(int num, int den) { return range(1, den) <= num; }

  Rat rational(long bound);
  Rat nonzero_rational(long bound);
  CRat crational(long bound);
  CRat nonzero_crational(long bound);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<size_t>(range(0, static_cast<long>(i) - 1))]);
  }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t trial_seed(std::uint64_t master, int trial);

FiniteSpace random_space(Rng& rng, const GenConfig& cfg);
FiniteSpace space_with_shape(int fixed, int cycles, Rng& rng,
                             const std::string& prefix = "p");

AlgebraElement random_element(const FiniteSpace& sp, Rng& rng, const GenConfig& cfg);
Functional random_functional(const FiniteSpace& sp, Rng& rng, const GenConfig& cfg);

// Sound generator: compose_form over two random functionals.
BilinearForm random_orthogonal_form(const FiniteSpace& sp, Rng& rng,
                                    const GenConfig& cfg);

// Complete generator: an arbitrary matrix with every cross-orbit entry
// zeroed, reaching every orthogonal form.
BilinearForm random_orthogonal_form_complete(const FiniteSpace& sp, Rng& rng,
                                             const GenConfig& cfg);

// Structures drawn with random support maps and weights; about one codomain
// orbit in eight is a zero row.
PreserverStructure random_op_structure(const FiniteSpace& l1, const FiniteSpace& l2,
                                       Rng& rng, const GenConfig& cfg);
LinearMap random_op_map(const FiniteSpace& l1, const FiniteSpace& l2, Rng& rng,
                        const GenConfig& cfg);

// Surjections exist iff the codomain needs no more degrees of freedom per
// source orbit than the domain provides: cycles2 <= cycles1 and
// fixed2 <= fixed1 + 2 (cycles1 - cycles2).
bool spaces_admit_op_surjection(const FiniteSpace& l1, const FiniteSpace& l2);
LinearMap random_op_surjection(const FiniteSpace& l1, const FiniteSpace& l2,
                               Rng& rng, const GenConfig& cfg);
LinearMap random_op_bijection(const FiniteSpace& l1, const FiniteSpace& l2,
                              Rng& rng, const GenConfig& cfg);
// Codomain shape for an orthogonality preserving bijection out of l1: k
// domain cycles are split into pairs of fixed points.
FiniteSpace bijection_codomain_for(const FiniteSpace& l1, int split_cycles,
                                   Rng& rng);

LinearMap random_biop_map(const FiniteSpace& l1, const FiniteSpace& l2, Rng& rng,
                          const GenConfig& cfg);  // IncompatibleSpaces

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  bool pass = true;
  nlohmann::json counterexample;  // null on pass
};

nlohmann::json report_to_json(const SuiteReport& report);

// One suite per library invariant.  "selfcheck-mutation" always fails (it
// asserts that a mutated form still passes) to demonstrate counterexample
// reporting, and is excluded from suite_names().
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const GenConfig& cfg);

}  // namespace orthoform
