#include <doctest.h>

#include "equihh/mackey.hpp"

using namespace equihh;

namespace {

ZMat zmat1x1(long long v) {
  ZMat m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("j_! of the constant C_2 system reproduces the free Mackey functor") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  auto ctx = make_orbit_context(c2);
  REQUIRE(ctx->subs.size() == 2);  // {e} first, C_2 second

  CoefficientSystem f = constant_system(ctx, AbGroup::free_of_rank(1));
  f.validate();
  JShriekResult jf = j_lower_shriek(f);
  const MackeyFunctor& m = jf.mackey;

  CHECK(m.values[1].free_rank() == 2);  // value Z^2 at C_2/C_2
  CHECK(m.values[1].invariant_factors().empty());
  CHECK(m.values[0].free_rank() == 1);  // value Z at C_2/e
  CHECK(m.values[0].invariant_factors().empty());

  // transfer = inclusion of the second component, restriction = (1,2)
  ZMat tr = m.transfer(0, 1);
  REQUIRE(tr.rows() == 2);
  CHECK(tr(0, 0) == 0);
  CHECK(tr(1, 0) == 1);
  ZMat res = m.restriction(0, 1, ctx->projection(0, 1));
  REQUIRE(res.cols() == 2);
  CHECK(res(0, 0) == 1);
  CHECK(res(0, 1) == 2);

  // double coset: res o tr = 2 on the underlying level
  CHECK(ZMat(res * tr) == zmat1x1(2));
  // conjugation acts trivially on the underlying level
  CHECK(m.conjugation(0, 1) == zmat1x1(1));

  m.validate();

  // unit F -> j* j_! F: injective on the underlying level
  CHECK(AbMap{&f.values[0], &m.values[0], jf.unit[0]}.is_injective());
  // unit matrices commute with all restrictions
  CoefficientSystem jm = j_upper_star(m);
  for (int k = 0; k < 2; ++k)
    for (int h = 0; h < 2; ++h)
      for (size_t fi = 0; fi < ctx->maps[k][h].size(); ++fi) {
        ZMat lhs = jf.unit[k] * f.mat[k][h][fi];
        ZMat rhs = jm.mat[k][h][fi] * jf.unit[h];
        CHECK(AbMap{&f.values[h], &m.values[k], lhs}.equals(AbMap{&f.values[h], &m.values[k], rhs}));
      }
  jm.validate();
}

TEST_CASE("j_! of the zero system is zero and trivial groups are fixed points") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  auto ctx = make_orbit_context(c2);
  CoefficientSystem zero = constant_system(ctx, AbGroup::free_of_rank(0));
  JShriekResult jz = j_lower_shriek(zero);
  for (auto& v : jz.mackey.values) CHECK(v.is_trivial());

  auto c1 = make_group(FiniteGroup::cyclic(1));
  auto ctx1 = make_orbit_context(c1);
  CoefficientSystem f1 = constant_system(ctx1, AbGroup::free_of_rank(2));
  JShriekResult j1 = j_lower_shriek(f1);
  CHECK(j1.mackey.values[0].free_rank() == 2);
  // j is an isomorphism of categories for the trivial group; the unit is iso
  CHECK(AbMap{&f1.values[0], &j1.mackey.values[0], j1.unit[0]}.is_isomorphism());
}

TEST_CASE("j_! functoriality for C_4 and torsion input") {
  auto c4 = make_group(FiniteGroup::cyclic(4));
  auto ctx = make_orbit_context(c4);
  CoefficientSystem f = constant_system(ctx, AbGroup::free_of_rank(1));
  JShriekResult jf = j_lower_shriek(f);
  jf.mackey.validate();

  CoefficientSystem t = constant_system(ctx, AbGroup::from_invariants(0, {2}));
  JShriekResult jt = j_lower_shriek(t);
  jt.mackey.validate();
}

TEST_CASE("burnside Mackey functor of C_2") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  auto ctx = make_orbit_context(c2);
  MackeyFunctor bm = burnside_mackey_functor(ctx);
  CHECK(bm.values[1].free_rank() == 2);
  CHECK(bm.values[0].free_rank() == 1);
  bm.validate();

  // res o tr = 2 (free orbit restricted) and res[G/G] = 1
  ZMat res = bm.restriction(0, 1, ctx->projection(0, 1));
  ZMat tr = bm.transfer(0, 1);
  CHECK(ZMat(res * tr) == zmat1x1(2));

  // identity is a solution with the identity pinned on the underlying level
  MackeyMapFamily fam =
      solve_mackey_maps(bm, bm, {LevelEntryConstraint{0, 0, 0, ZInt(1)}});
  REQUIRE(fam.solvable);
  MackeyMap id;
  id.src = &bm;
  id.dst = &bm;
  for (auto& v : bm.values) id.level.push_back(ZMat::Identity(v.ngens(), v.ngens()));
  CHECK(id.commutes());
  CHECK(family_contains(fam, id));
}

TEST_CASE("solve_mackey_maps finds the identity without constraints") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  auto ctx = make_orbit_context(c2);
  CoefficientSystem f = constant_system(ctx, AbGroup::free_of_rank(1));
  MackeyFunctor m = j_lower_shriek(f).mackey;
  MackeyMapFamily fam = solve_mackey_maps(m, m, {});
  REQUIRE(fam.solvable);
  MackeyMap id;
  id.src = &m;
  id.dst = &m;
  for (auto& v : m.values) id.level.push_back(ZMat::Identity(v.ngens(), v.ngens()));
  CHECK(family_contains(fam, id));
}

TEST_CASE("no-section obstruction for the paper's C_2 Mackey functors") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  auto ctx = make_orbit_context(c2);

  // A = (Z, Z; res 1, tr 2): the fixed-point Mackey functor of K_{C_2}(F_4)
  std::vector<AbGroup> values{AbGroup::free_of_rank(1), AbGroup::free_of_rank(1)};
  std::map<std::pair<int, int>, ZMat> resproj, conj, trproj;
  resproj[{0, 0}] = zmat1x1(1);
  resproj[{1, 1}] = zmat1x1(1);
  resproj[{0, 1}] = zmat1x1(1);
  trproj[{0, 0}] = zmat1x1(1);
  trproj[{1, 1}] = zmat1x1(1);
  trproj[{0, 1}] = zmat1x1(2);
  for (int h = 0; h < 2; ++h)
    for (int a = 0; a < 2; ++a) conj[{h, a}] = zmat1x1(1);
  MackeyFunctor a = mackey_from_primitives(ctx, values, resproj, conj, trproj);
  a.validate();

  CoefficientSystem f = constant_system(ctx, AbGroup::free_of_rank(1));
  MackeyFunctor b = j_lower_shriek(f).mackey;

  // a section would have underlying component +1 or -1; both are impossible
  for (long long sign : {1LL, -1LL}) {
    MackeyMapFamily fam =
        solve_mackey_maps(a, b, {LevelEntryConstraint{0, 0, 0, ZInt(sign)}});
    CHECK(!fam.solvable);
  }
  // without the section constraint solutions do exist (e.g. zero)
  CHECK(solve_mackey_maps(a, b, {}).solvable);
}

TEST_CASE("j_! for S_3 satisfies Mackey functoriality") {
  auto s3 = make_group(FiniteGroup::symmetric(3));
  auto ctx = make_orbit_context(s3);
  CoefficientSystem f = constant_system(ctx, AbGroup::free_of_rank(1));
  JShriekResult jf = j_lower_shriek(f);
  jf.mackey.validate();
  // top value: one free summand per conjugacy class of subgroups (4 for S_3)
  int top = static_cast<int>(ctx->subs.size()) - 1;
  CHECK(jf.mackey.values[top].free_rank() == 4);
}
