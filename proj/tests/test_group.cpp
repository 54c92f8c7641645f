#include <doctest.h>

#include "equihh/group.hpp"

using namespace equihh;

TEST_CASE("cyclic group tables") {
  FiniteGroup c1 = FiniteGroup::cyclic(1);
  CHECK(c1.order() == 1);
  CHECK(c1.table() == std::vector<int>{0});

  FiniteGroup c2 = FiniteGroup::cyclic(2);
  CHECK(c2.table() == std::vector<int>{0, 1, 1, 0});

  FiniteGroup c4 = FiniteGroup::cyclic(4);
  CHECK(c4.mul(1, 3) == 0);           // sigma * sigma^3 = e
  CHECK(c4.element_order(2) == 2);    // sigma^2 has order 2
  CHECK(c4.element_order(1) == 4);
  CHECK_THROWS(FiniteGroup::cyclic(0));
}

TEST_CASE("subgroup enumeration") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  CHECK(subgroups(c2).size() == 2);

  auto c4 = make_group(FiniteGroup::cyclic(4));
  auto s4 = subgroups(c4);
  REQUIRE(s4.size() == 3);
  CHECK(s4[0].elems == std::vector<int>{0});
  CHECK(s4[1].elems == std::vector<int>{0, 2});
  CHECK(s4[2].elems == std::vector<int>{0, 1, 2, 3});

  auto c6 = make_group(FiniteGroup::cyclic(6));
  CHECK(subgroups(c6).size() == 4);

  // the subgroup count of C_n is the number of divisors of n
  for (int n = 1; n <= 12; ++n) {
    int divisors = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) ++divisors;
    auto cn = make_group(FiniteGroup::cyclic(n));
    auto subs = subgroups(cn);
    CHECK(static_cast<int>(subs.size()) == divisors);
    for (auto& h : subs) h.validate();
  }
}

TEST_CASE("weyl groups") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  CHECK(weyl_group(c2, full_subgroup(c2)).group.order() == 1);

  auto c4 = make_group(FiniteGroup::cyclic(4));
  WeylGroup w = weyl_group(c4, trivial_subgroup(c4));
  CHECK(w.group.order() == 4);
  CHECK(groups_isomorphic(w.group, *c4));

  // S_3 with H generated by a transposition: N(H) = H, so W is trivial
  auto s3 = make_group(FiniteGroup::symmetric(3));
  Subgroup transposition = generated_subgroup(s3, {1});
  REQUIRE(transposition.order() == 2);
  // independent normalizer oracle
  std::vector<int> n_oracle;
  for (int g = 0; g < s3->order(); ++g) {
    bool norm = true;
    for (int h : transposition.elems)
      if (!transposition.contains(s3->conj(g, h))) norm = false;
    if (norm) n_oracle.push_back(g);
  }
  CHECK(normalizer(transposition) == n_oracle);
  CHECK(weyl_group(s3, transposition).group.order() == 1);

  // W_G({e}) is isomorphic to G for small groups
  for (int n = 1; n <= 8; ++n) {
    auto cn = make_group(FiniteGroup::cyclic(n));
    CHECK(groups_isomorphic(weyl_group(cn, trivial_subgroup(cn)).group, *cn));
  }
  CHECK(groups_isomorphic(weyl_group(s3, trivial_subgroup(s3)).group, *s3));
}

TEST_CASE("conjugacy classes of subgroups") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  CHECK(conjugacy_classes_of_subgroups(c2).size() == 2);

  auto c4 = make_group(FiniteGroup::cyclic(4));
  for (auto& cls : conjugacy_classes_of_subgroups(c4)) CHECK(cls.size() == 1);

  auto s3 = make_group(FiniteGroup::symmetric(3));
  auto classes = conjugacy_classes_of_subgroups(s3);
  REQUIRE(classes.size() == 4);
  std::vector<size_t> sizes;
  for (auto& cls : classes) sizes.push_back(cls.size());
  CHECK(sizes == std::vector<size_t>{1, 3, 1, 1});
}

TEST_CASE("group isomorphism testing distinguishes C_4 from the Klein group") {
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  FiniteGroup klein =
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(!groups_isomorphic(c4, klein));
  CHECK(groups_isomorphic(klein, klein));
  CHECK(groups_isomorphic(FiniteGroup::symmetric(3),
                          FiniteGroup::symmetric(3)));
}
