#ifndef EQUIHH_CHAIN_HPP
#define EQUIHH_CHAIN_HPP

#include <string>

#include "equihh/abelian.hpp"
#include "equihh/algebra.hpp"

namespace equihh {

// A nonnegatively graded chain complex of free modules over Z or F_p,
// truncated at degree ranks.size()-1. d[q] maps degree q to degree q-1
// (d[0] is an empty placeholder).
struct ChainComplex {
  BaseRing base;
  std::vector<Eigen::Index> ranks;
  std::vector<IMat> d;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
  void validate() const;  // shapes and d o d = 0
};

// Invariant factors (over Z) or dimensions (over F_p) per degree. Degrees
// above `complete_through` depend on truncated data and are not reported.
struct HomologyResult {
  BaseRing base;
  int complete_through = -1;
  std::vector<Eigen::Index> free_rank;         // dimension when base is F_p
  std::vector<std::vector<ZInt>> torsion;      // empty lists when base is F_p

  std::string degree_string(int q) const;
  bool operator==(const HomologyResult& o) const {
    return base == o.base && complete_through == o.complete_through && free_rank == o.free_rank &&
           torsion == o.torsion;
  }
};

// Homology in degrees 0 .. top()-1 (the top degree is not reported since the
// incoming differential is truncated away).
HomologyResult homology(const ChainComplex& c);

bool is_chain_map(const ChainComplex& a, const ChainComplex& b, const std::vector<IMat>& f);

// Whether the sum of the induced maps (+)_i H_q(A_i) -> H_q(B) is an
// isomorphism for all q in [0, maxdeg]; all A_i must equal `a` here (several
// chain maps out of the same source).
bool chain_maps_induce_iso(const ChainComplex& a, const ChainComplex& b,
                           const std::vector<std::vector<IMat>>& maps, int maxdeg);

// Apply an invertible change of basis per degree (for property tests).
ChainComplex change_basis(const ChainComplex& c, const std::vector<IMat>& u,
                          const std::vector<IMat>& uinv);

}  // namespace equihh

#endif
