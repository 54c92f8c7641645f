#include "equihh/burnside.hpp"

#include <stdexcept>

namespace equihh {

IVec BurnsideRing::multiply(const IVec& a, const IVec& b) const {
  const auto k = static_cast<Eigen::Index>(reps.size());
  IVec out = IVec::Zero(k);
  for (Eigen::Index t = 0; t < k; ++t) out(t) = a.transpose() * structure[t] * b;
  return out;
}

BurnsideRing burnside_ring(const GroupPtr& g) {
  BurnsideRing br;
  br.group = g;
  for (auto& cls : conjugacy_classes_of_subgroups(g)) br.reps.push_back(cls.front());
  const int k = static_cast<int>(br.reps.size());
  for (int t = 0; t < k; ++t) br.structure.push_back(IMat::Zero(k, k));
  for (int i = 0; i < k; ++i) {
    if (br.reps[i].order() == g->order()) br.unit_index = i;
    for (int j = 0; j < k; ++j) {
      FiniteGSet prod = product_gset(orbit_gset(g, br.reps[i]), orbit_gset(g, br.reps[j]));
      IVec v = orbit_class_vector(br, prod);
      for (int t = 0; t < k; ++t) br.structure[t](i, j) = v(t);
    }
  }
  return br;
}

int orbit_class_index(const BurnsideRing& br, const Subgroup& stab) {
  for (size_t i = 0; i < br.reps.size(); ++i)
    for (int x = 0; x < br.group->order(); ++x)
      if (conjugate_subgroup(br.reps[i], x) == stab) return static_cast<int>(i);
  throw std::logic_error("orbit_class_index: class not found");
}

IVec orbit_class_vector(const BurnsideRing& br, const FiniteGSet& x) {
  IVec v = IVec::Zero(static_cast<Eigen::Index>(br.reps.size()));
  for (auto& orb : x.orbits()) v(orbit_class_index(br, x.stabilizer(orb[0]))) += 1;
  return v;
}

}  // namespace equihh
