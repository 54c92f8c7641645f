#ifndef EQUIHH_GROUP_HPP
#define EQUIHH_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

namespace equihh {

// A finite group as an explicit multiplication table on indices 0..order-1.
// The identity is always index 0.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<int> table);

  int order() const { return n_; }
  int mul(int a, int b) const { return tbl_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int element_order(int g) const;
  const std::vector<int>& table() const { return tbl_; }

  // Throws std::invalid_argument with a witness on any axiom failure.
  void validate() const;

  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);  // n <= 4
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

 private:
  int n_;
  std::vector<int> tbl_;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

struct Subgroup {
  GroupPtr parent;
  std::vector<int> elems;  // sorted, containing 0

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int g) const;
  void validate() const;
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
  bool operator<(const Subgroup& o) const {
    if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
    return elems < o.elems;
  }
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup generated_subgroup(const GroupPtr& g, std::vector<int> gens);
Subgroup conjugate_subgroup(const Subgroup& h, int g);
bool subgroup_leq(const Subgroup& k, const Subgroup& h);

// All subgroups, sorted by order then lexicographically by element list.
std::vector<Subgroup> subgroups(const GroupPtr& g);

std::vector<int> normalizer(const Subgroup& h);

struct WeylGroup {
  FiniteGroup group;             // N_G(H)/H as a table group
  std::vector<int> normalizer;   // elements of N_G(H), sorted
  std::vector<int> coset_index;  // |G| entries; -1 outside N_G(H)
};

WeylGroup weyl_group(const GroupPtr& g, const Subgroup& h);

// Partition of subgroups(G) into conjugacy classes; class representative is
// the lexicographically least member and classes are sorted by representative.
std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const GroupPtr& g);

// Brute-force isomorphism testing (intended for order <= 12).
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace equihh

#endif
