#ifndef EQUIHH_BURNSIDE_HPP
#define EQUIHH_BURNSIDE_HPP

#include "equihh/gset.hpp"
#include "equihh/linalg.hpp"

namespace equihh {

// The Burnside ring of G on the basis of orbit classes [G/H], H up to
// conjugacy. structure(i, j) lists the multiplicities of each basis class in
// [G/H_i] * [G/H_j].
struct BurnsideRing {
  GroupPtr group;
  std::vector<Subgroup> reps;           // conjugacy class representatives
  std::vector<IMat> structure;          // reps.size() matrices; structure[k](i,j) = coeff of class k
  int unit_index = 0;                   // position of [G/G]

  IVec multiply(const IVec& a, const IVec& b) const;
};

BurnsideRing burnside_ring(const GroupPtr& g);

// Index of the conjugacy class of stab in reps.
int orbit_class_index(const BurnsideRing& br, const Subgroup& stab);

// Class vector of an arbitrary finite G-set.
IVec orbit_class_vector(const BurnsideRing& br, const FiniteGSet& x);

}  // namespace equihh

#endif
