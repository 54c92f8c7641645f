#include "equihh/gset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace equihh {

FiniteGSet::FiniteGSet(GroupPtr group, int size, std::vector<int> action)
    : group_(std::move(group)), size_(size), act_(std::move(action)) {
  if (size_ < 0) throw std::invalid_argument("G-set size negative");
  if (static_cast<int>(act_.size()) != size_ * group_->order())
    throw std::invalid_argument("G-set action table size mismatch");
  validate();
}

void FiniteGSet::validate() const {
  const int n = group_->order();
  for (int x = 0; x < size_; ++x)
    for (int g = 0; g < n; ++g)
      if (act(x, g) < 0 || act(x, g) >= size_)
        throw std::invalid_argument("G-set action out of range");
  for (int x = 0; x < size_; ++x)
    if (act(x, 0) != x) throw std::invalid_argument("G-set: identity must act trivially");
  for (int x = 0; x < size_; ++x)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (act(act(x, g), h) != act(x, group_->mul(h, g)))
          throw std::invalid_argument("G-set action not compatible with multiplication");
}

std::vector<int> FiniteGSet::orbit_of(int x) const {
  std::set<int> o;
  for (int g = 0; g < group_->order(); ++g) o.insert(act(x, g));
  return {o.begin(), o.end()};
}

std::vector<std::vector<int>> FiniteGSet::orbits() const {
  std::vector<bool> seen(size_, false);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < size_; ++x) {
    if (seen[x]) continue;
    auto o = orbit_of(x);
    for (int y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

Subgroup FiniteGSet::stabilizer(int x) const {
  std::vector<int> e;
  for (int g = 0; g < group_->order(); ++g)
    if (act(x, g) == x) e.push_back(g);
  return Subgroup{group_, std::move(e)};
}

std::vector<int> FiniteGSet::fixed_points(const Subgroup& h) const {
  std::vector<int> out;
  for (int x = 0; x < size_; ++x) {
    bool fixed = true;
    for (int g : h.elems)
      if (act(x, g) != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(x);
  }
  return out;
}

FiniteGSet orbit_gset(const GroupPtr& g, const Subgroup& h) {
  const int n = g->order();
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    for (int k : h.elems) coset[g->mul(x, k)] = id;
    reps.push_back(x);
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> act(m * n);
  for (int p = 0; p < m; ++p)
    for (int a = 0; a < n; ++a) act[p * n + a] = coset[g->mul(a, reps[p])];
  return FiniteGSet(g, m, std::move(act));
}

int coset_point(const GroupPtr& g, const Subgroup& h, int x) {
  // recompute the rep labelling used by orbit_gset
  const int n = g->order();
  std::vector<int> coset(n, -1);
  int id = 0;
  for (int y = 0; y < n; ++y) {
    if (coset[y] >= 0) continue;
    for (int k : h.elems) coset[g->mul(y, k)] = id;
    ++id;
  }
  return coset[x];
}

FiniteGSet empty_gset(const GroupPtr& g) { return FiniteGSet(g, 0, {}); }

FiniteGSet disjoint_union(const FiniteGSet& a, const FiniteGSet& b) {
  if (a.group() != b.group()) throw std::invalid_argument("disjoint_union: different groups");
  const int n = a.group()->order();
  std::vector<int> act((a.size() + b.size()) * n);
  for (int x = 0; x < a.size(); ++x)
    for (int g = 0; g < n; ++g) act[x * n + g] = a.act(x, g);
  for (int x = 0; x < b.size(); ++x)
    for (int g = 0; g < n; ++g) act[(a.size() + x) * n + g] = a.size() + b.act(x, g);
  return FiniteGSet(a.group(), a.size() + b.size(), std::move(act));
}

FiniteGSet product_gset(const FiniteGSet& a, const FiniteGSet& b) {
  if (a.group() != b.group()) throw std::invalid_argument("product_gset: different groups");
  const int n = a.group()->order();
  std::vector<int> act(a.size() * b.size() * n);
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      for (int g = 0; g < n; ++g)
        act[(x * b.size() + y) * n + g] = a.act(x, g) * b.size() + b.act(y, g);
  return FiniteGSet(a.group(), a.size() * b.size(), std::move(act));
}

bool is_equivariant(const FiniteGSet& x, const FiniteGSet& y, const std::vector<int>& f) {
  if (x.group() != y.group() || static_cast<int>(f.size()) != x.size()) return false;
  for (int p = 0; p < x.size(); ++p) {
    if (f[p] < 0 || f[p] >= y.size()) return false;
    for (int g = 0; g < x.group()->order(); ++g)
      if (f[x.act(p, g)] != y.act(f[p], g)) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_equivariant_maps(const FiniteGSet& x, const FiniteGSet& y) {
  if (x.group() != y.group()) throw std::invalid_argument("all_equivariant_maps: groups differ");
  auto orbs = x.orbits();
  std::vector<std::vector<int>> out;
  std::vector<int> f(x.size(), -1);
  const int n = x.group()->order();

  // choose the image of each orbit representative; the rest is forced
  std::vector<int> reps;
  for (auto& o : orbs) reps.push_back(o[0]);

  auto backtrack = [&](auto&& self, size_t i) -> void {
    if (i == reps.size()) {
      out.push_back(f);
      return;
    }
    int r = reps[i];
    for (int img = 0; img < y.size(); ++img) {
      bool ok = true;
      std::vector<std::pair<int, int>> assigned;
      for (int g = 0; g < n && ok; ++g) {
        int src = x.act(r, g), dst = y.act(img, g);
        int& slot = f[src];
        if (slot == -1) {
          slot = dst;
          assigned.push_back({src, dst});
        } else if (slot != dst) {
          ok = false;
        }
      }
      if (ok) self(self, i + 1);
      for (auto& [s, d] : assigned) f[s] = -1;
    }
  };
  backtrack(backtrack, 0);
  return out;
}

SubGSet restrict_to_points(const FiniteGSet& x, const std::vector<int>& pts) {
  const int n = x.group()->order();
  std::map<int, int> idx;
  for (size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = static_cast<int>(i);
  std::vector<int> act(pts.size() * n);
  for (size_t i = 0; i < pts.size(); ++i)
    for (int g = 0; g < n; ++g) {
      auto it = idx.find(x.act(pts[i], g));
      if (it == idx.end()) throw std::invalid_argument("restrict_to_points: not closed");
      act[i * n + g] = it->second;
    }
  return SubGSet{FiniteGSet(x.group(), static_cast<int>(pts.size()), std::move(act)), pts};
}

}  // namespace equihh
