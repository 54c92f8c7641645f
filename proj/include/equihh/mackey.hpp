#ifndef EQUIHH_MACKEY_HPP
#define EQUIHH_MACKEY_HPP

#include <map>
#include <memory>

#include "equihh/abelian.hpp"
#include "equihh/span.hpp"

namespace equihh {

// Shared bookkeeping for the orbit category of G: the canonical subgroup
// list, one orbit G-set per subgroup, coset representatives, and all
// equivariant maps between orbits.
struct OrbitContext {
  GroupPtr group;
  std::vector<Subgroup> subs;
  std::vector<FiniteGSet> orbits;
  std::vector<std::vector<int>> reps;  // reps[h][p] = coset representative of point p
  // maps[k][h]: all equivariant maps orbits[k] -> orbits[h]
  std::vector<std::vector<std::vector<std::vector<int>>>> maps;

  int sub_index(const Subgroup& s) const;
  int map_index(int k, int h, const std::vector<int>& f) const;
  // point map of the projection orbits[k] -> orbits[h] (subs[k] <= subs[h])
  std::vector<int> projection(int k, int h) const;
  // the iso kappa_a : G/aHa^-1 -> G/H, xK -> xaH; returns (index of aHa^-1, point map)
  std::pair<int, std::vector<int>> conj_iso(int h, int a) const;
};

using OrbitContextPtr = std::shared_ptr<const OrbitContext>;
OrbitContextPtr make_orbit_context(GroupPtr g);

// Product-preserving functor (Set^G)^op -> Ab, stored on orbits: a value per
// subgroup and a matrix per equivariant map between orbits (contravariantly).
struct CoefficientSystem {
  OrbitContextPtr ctx;
  std::vector<AbGroup> values;
  // mat[k][h][mi]: F(f) : values[h] -> values[k] for f = ctx->maps[k][h][mi]
  std::vector<std::vector<std::vector<ZMat>>> mat;

  const AbGroup& value(int h) const { return values[h]; }
  void validate() const;  // identities and contravariant functoriality
};

// Coefficient system with every value equal to `v` and every map the identity.
CoefficientSystem constant_system(const OrbitContextPtr& ctx, const AbGroup& v);

// Mackey functor: contravariant data as above plus transfers along the
// projections G/K -> G/H for K <= H.
struct MackeyFunctor {
  OrbitContextPtr ctx;
  std::vector<AbGroup> values;
  std::vector<std::vector<std::vector<ZMat>>> res;  // layout as CoefficientSystem::mat
  std::map<std::pair<int, int>, ZMat> tr;           // (k,h), subs[k] <= subs[h]: M(k) -> M(h)

  const AbGroup& value(int h) const { return values[h]; }
  ZMat restriction(int k, int h, const std::vector<int>& f) const;
  const ZMat& transfer(int k, int h) const;
  // conjugation M(G/H) -> M(G/gHg^-1), the value on j(kappa_g)
  ZMat conjugation(int h, int g) const;

  // Value on an arbitrary span between two orbits of the context (the span's
  // source/target must literally be ctx->orbits[src_sub] / ctx->orbits[tgt_sub]).
  ZMat span_matrix(const SpanMorphism& s, int src_sub, int tgt_sub) const;

  // Functoriality over the Burnside category via compose_spans, checked on
  // all pairs of composable orbit-apex spans.
  void validate() const;
};

// Build full map tables from projections, conjugations and transfers.
// resproj[(k,h)]: M(h) -> M(k) along the projection; conj[(h,g)]: M(h) ->
// M(g H g^-1); trproj[(k,h)]: M(k) -> M(h).
MackeyFunctor mackey_from_primitives(const OrbitContextPtr& ctx, std::vector<AbGroup> values,
                                     const std::map<std::pair<int, int>, ZMat>& resproj,
                                     const std::map<std::pair<int, int>, ZMat>& conj,
                                     const std::map<std::pair<int, int>, ZMat>& trproj);

struct JShriekResult {
  MackeyFunctor mackey;
  // unit F -> j* j_! F, one matrix per subgroup: F(G/H) -> (j_!F)(G/H)
  std::vector<ZMat> unit;
};

// Left Kan extension along j, computed orbitwise as the additive coend over
// isomorphism classes of orbit-apex spans.
JShriekResult j_lower_shriek(const CoefficientSystem& f);

CoefficientSystem j_upper_star(const MackeyFunctor& m);

// The Burnside Mackey functor: value at G/H is free on H-conjugacy classes of
// subgroups of H, with the usual induction/restriction/conjugation.
MackeyFunctor burnside_mackey_functor(const OrbitContextPtr& ctx);

struct MackeyMap {
  const MackeyFunctor* src = nullptr;
  const MackeyFunctor* dst = nullptr;
  std::vector<ZMat> level;  // per subgroup, on generators

  bool commutes() const;  // with all restrictions and transfers
};

struct LevelEntryConstraint {
  int level;
  Eigen::Index row, col;
  ZInt value;
};

struct MackeyMapFamily {
  bool solvable = false;
  MackeyMap particular;
  std::vector<MackeyMap> basis;  // kernel directions (aux coordinates dropped)
};

// All integer solutions of the Mackey-map equations plus entry constraints.
MackeyMapFamily solve_mackey_maps(const MackeyFunctor& a, const MackeyFunctor& b,
                                  const std::vector<LevelEntryConstraint>& constraints);

// Whether `m` lies in the affine family (particular + integer span of basis).
bool family_contains(const MackeyMapFamily& fam, const MackeyMap& m);

}  // namespace equihh

#endif
