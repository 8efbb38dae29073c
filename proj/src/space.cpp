#include "orthoform/space.hpp"

#include <set>

namespace orthoform {

int FiniteSpace::index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (points_[i] == label) return i;
  return -1;
}

int FiniteSpace::basis_index(BasisKind kind, int rep_point) const {
  int idx = kind == BasisKind::S ? basis_s_[rep_point] : basis_u_[rep_point];
  if (idx < 0) throw Error("no such basis entry");
  return idx;
}

FiniteSpace make_space(const std::vector<std::string>& points,
                       const std::map<std::string, std::string>& sigma) {
  FiniteSpace sp;
  sp.points_ = points;

  std::set<std::string> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw DuplicateLabel("duplicate point '" + p + "'");

  int n = sp.size();
  sp.sigma_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    auto it = sigma.find(points[i]);
    if (it == sigma.end()) {
      sp.sigma_[i] = i;
      continue;
    }
    int j = sp.index(it->second);
    if (j < 0)
      throw NonInvolutive("sigma maps '" + points[i] + "' to unknown label '" +
                          it->second + "'");
    sp.sigma_[i] = j;
  }
  for (const auto& [key, value] : sigma) {
    (void)value;
    if (sp.index(key) < 0)
      throw NonInvolutive("sigma mentions unknown label '" + key + "'");
  }
  for (int i = 0; i < n; ++i)
    if (sp.sigma_[sp.sigma_[i]] != i)
      throw NonInvolutive("sigma is not an involution at '" + points[i] + "'");

  sp.orbit_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (sp.orbit_[i] >= 0) continue;
    int id = static_cast<int>(sp.orbit_rep_.size());
    sp.orbit_rep_.push_back(i);
    sp.orbit_[i] = id;
    sp.orbit_[sp.sigma_[i]] = id;
  }
  for (int i = 0; i < n; ++i) {
    if (sp.is_fixed(i))
      sp.fixed_.push_back(i);
    else if (sp.is_rep(i))
      sp.reps_.push_back(i);
  }

  sp.basis_s_.assign(n, -1);
  sp.basis_u_.assign(n, -1);
  for (int t : sp.fixed_) {
    sp.basis_s_[t] = static_cast<int>(sp.basis_.size());
    sp.basis_.push_back({BasisKind::S, t});
  }
  for (int t : sp.reps_) {
    sp.basis_s_[t] = static_cast<int>(sp.basis_.size());
    sp.basis_.push_back({BasisKind::S, t});
    sp.basis_u_[t] = static_cast<int>(sp.basis_.size());
    sp.basis_.push_back({BasisKind::U, t});
  }
  return sp;
}

}  // namespace orthoform
