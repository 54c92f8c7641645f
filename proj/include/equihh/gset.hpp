#ifndef EQUIHH_GSET_HPP
#define EQUIHH_GSET_HPP

#include <vector>

#include "equihh/group.hpp"

namespace equihh {

// A finite left G-set: act(x, g) is the point g.x, stored as a size x |G|
// table, so act(act(x,g),h) = act(x, hg).
class FiniteGSet {
 public:
  FiniteGSet() = default;
  FiniteGSet(GroupPtr group, int size, std::vector<int> action);

  const GroupPtr& group() const { return group_; }
  int size() const { return size_; }
  int act(int x, int g) const { return act_[x * group_->order() + g]; }
  const std::vector<int>& action_table() const { return act_; }

  void validate() const;

  bool operator==(const FiniteGSet& o) const {
    return group_ == o.group_ && size_ == o.size_ && act_ == o.act_;
  }

  std::vector<int> orbit_of(int x) const;            // sorted
  std::vector<std::vector<int>> orbits() const;      // sorted by min point
  Subgroup stabilizer(int x) const;
  std::vector<int> fixed_points(const Subgroup& h) const;

 private:
  GroupPtr group_;
  int size_ = 0;
  std::vector<int> act_;
};

// The orbit G/H; point 0 is the coset H.
FiniteGSet orbit_gset(const GroupPtr& g, const Subgroup& h);
// Coset containing x, as a point of orbit_gset(g, h).
int coset_point(const GroupPtr& g, const Subgroup& h, int x);

FiniteGSet empty_gset(const GroupPtr& g);
FiniteGSet disjoint_union(const FiniteGSet& a, const FiniteGSet& b);
FiniteGSet product_gset(const FiniteGSet& a, const FiniteGSet& b);  // diagonal action

bool is_equivariant(const FiniteGSet& x, const FiniteGSet& y, const std::vector<int>& f);
std::vector<std::vector<int>> all_equivariant_maps(const FiniteGSet& x, const FiniteGSet& y);

// Restriction of X to the orbit of the given points (new set, point map out).
struct SubGSet {
  FiniteGSet set;
  std::vector<int> points;  // original indices, in the new order
};
SubGSet restrict_to_points(const FiniteGSet& x, const std::vector<int>& pts);

}  // namespace equihh

#endif
