#pragma once

#include <map>
#include <string>
#include <vector>

#include "orthoform/errors.hpp"

namespace orthoform {

enum class BasisKind { S, U };

struct BasisItem {
  BasisKind kind;
  int point;  // a fixed point for S entries on F, otherwise a 2-cycle rep
  bool operator==(const BasisItem&) const = default;
};

// A finite point set with a period-2 involution sigma.  The partition into
// fixed points F, 2-cycle representatives O (smaller list index per cycle)
// and their sigma-images is computed on construction, together with the
// canonical real basis order:
//
//   S(t) = chi_t                    for t in F, in point order
//   S(t) = chi_t + chi_{sigma(t)}   for t in O, in point order, followed by
//   U(t) = i (chi_t - chi_{sigma(t)})
//
// The basis has one real coordinate per point, so dim == size.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  int size() const { return static_cast<int>(points_.size()); }
  int dim() const { return size(); }

  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(int i) const { return points_[i]; }
  int index(const std::string& label) const;  // -1 when absent

  int sigma(int i) const { return sigma_[i]; }
  bool is_fixed(int i) const { return sigma_[i] == i; }
  bool is_rep(int i) const { return sigma_[i] >= i; }

  int orbit_of(int i) const { return orbit_[i]; }
  int orbit_count() const { return static_cast<int>(orbit_rep_.size()); }
  int orbit_rep(int orbit) const { return orbit_rep_[orbit]; }

  const std::vector<int>& fixed_points() const { return fixed_; }
  const std::vector<int>& cycle_reps() const { return reps_; }

  const std::vector<BasisItem>& basis() const { return basis_; }
  int basis_index(BasisKind kind, int rep_point) const;

  bool operator==(const FiniteSpace& o) const {
    return points_ == o.points_ && sigma_ == o.sigma_;
  }
  bool operator!=(const FiniteSpace& o) const { return !(*this == o); }

  friend FiniteSpace make_space(const std::vector<std::string>& points,
                                const std::map<std::string, std::string>& sigma);

 private:
  std::vector<std::string> points_;
  std::vector<int> sigma_;
  std::vector<int> orbit_;      // point -> orbit id (first-seen order)
  std::vector<int> orbit_rep_;  // orbit id -> representative point
  std::vector<int> fixed_;      // F, point order
  std::vector<int> reps_;       // O, point order
  std::vector<BasisItem> basis_;
  std::vector<int> basis_s_;  // rep point -> index of its S entry (-1 otherwise)
  std::vector<int> basis_u_;  // rep point -> index of its U entry (-1 otherwise)
};

// Validates that sigma describes an involution of the given points; labels
// missing from the map are treated as fixed.  Throws DuplicateLabel or
// NonInvolutive.
FiniteSpace make_space(const std::vector<std::string>& points,
                       const std::map<std::string, std::string>& sigma);

}  // namespace orthoform
