#include "equihh/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace equihh {

FiniteGroup::FiniteGroup(int order, std::vector<int> table) : n_(order), tbl_(std::move(table)) {
  if (n_ <= 0) throw std::invalid_argument("group order must be positive");
  if (static_cast<int>(tbl_.size()) != n_ * n_)
    throw std::invalid_argument("group table size mismatch");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) inv_[a] = b;
  validate();
}

void FiniteGroup::validate() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) < 0 || mul(a, b) >= n_)
        throw std::invalid_argument("group table entry out of range");
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw std::invalid_argument("index 0 is not a two-sided identity");
  for (int a = 0; a < n_; ++a)
    if (inv_[a] < 0) throw std::invalid_argument("missing inverse");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("group table not associative");
}

int FiniteGroup::element_order(int g) const {
  int k = 1, x = g;
  while (x != 0) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(t));
}

namespace {

void perms_of(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("symmetric: supported for n <= 4");
  std::vector<std::vector<int>> perms;
  perms_of(n, perms);  // lexicographic, identity first
  std::map<std::vector<int>, int> rank;
  for (size_t i = 0; i < perms.size(); ++i) rank[perms[i]] = static_cast<int>(i);
  const int m = static_cast<int>(perms.size());
  std::vector<int> t(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a * m + b] = rank[c];
    }
  return FiniteGroup(m, std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int ax = x / nb, bx = x % nb, ay = y / nb, by = y % nb;
      t[x * n + y] = a.mul(ax, ay) * nb + b.mul(bx, by);
    }
  return FiniteGroup(n, std::move(t));
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elems.begin(), elems.end(), g);
}

void Subgroup::validate() const {
  if (!contains(0)) throw std::invalid_argument("subgroup missing identity");
  for (int a : elems) {
    if (!contains(parent->inv(a))) throw std::invalid_argument("subgroup not closed under inverse");
    for (int b : elems)
      if (!contains(parent->mul(a, b)))
        throw std::invalid_argument("subgroup not closed under multiplication");
  }
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> e(g->order());
  std::iota(e.begin(), e.end(), 0);
  return Subgroup{g, std::move(e)};
}

Subgroup generated_subgroup(const GroupPtr& g, std::vector<int> gens) {
  std::set<int> s{0};
  for (int x : gens) s.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g->mul(a, b)).second) grew = true;
    for (int a : cur)
      if (s.insert(g->inv(a)).second) grew = true;
  }
  return Subgroup{g, std::vector<int>(s.begin(), s.end())};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  std::vector<int> e;
  e.reserve(h.elems.size());
  for (int x : h.elems) e.push_back(h.parent->conj(g, x));
  std::sort(e.begin(), e.end());
  return Subgroup{h.parent, std::move(e)};
}

bool subgroup_leq(const Subgroup& k, const Subgroup& h) {
  return std::includes(h.elems.begin(), h.elems.end(), k.elems.begin(), k.elems.end());
}

std::vector<Subgroup> subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> todo{trivial_subgroup(g)};
  seen.insert(todo[0].elems);
  for (size_t i = 0; i < todo.size(); ++i) {
    Subgroup cur = todo[i];
    for (int x = 1; x < g->order(); ++x) {
      if (cur.contains(x)) continue;
      std::vector<int> gens = cur.elems;
      gens.push_back(x);
      Subgroup bigger = generated_subgroup(g, gens);
      if (seen.insert(bigger.elems).second) todo.push_back(bigger);
    }
  }
  std::sort(todo.begin(), todo.end());
  return todo;
}

std::vector<int> normalizer(const Subgroup& h) {
  std::vector<int> n;
  for (int g = 0; g < h.parent->order(); ++g)
    if (conjugate_subgroup(h, g) == h) n.push_back(g);
  return n;
}

WeylGroup weyl_group(const GroupPtr& g, const Subgroup& h) {
  std::vector<int> n = normalizer(h);
  std::vector<int> coset_index(g->order(), -1);
  std::vector<int> reps;
  for (int x : n) {
    if (coset_index[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    for (int k : h.elems) coset_index[g->mul(x, k)] = id;
    reps.push_back(x);
  }
  // coset of the identity comes out first because n is sorted and 0 in N_G(H)
  const int m = static_cast<int>(reps.size());
  std::vector<int> t(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a * m + b] = coset_index[g->mul(reps[a], reps[b])];
  return WeylGroup{FiniteGroup(m, std::move(t)), std::move(n), std::move(coset_index)};
}

std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> all = subgroups(g);
  std::set<std::vector<int>> used;
  std::vector<std::vector<Subgroup>> classes;
  for (const Subgroup& h : all) {
    if (used.count(h.elems)) continue;
    std::set<std::vector<int>> orbit;
    for (int x = 0; x < g->order(); ++x) orbit.insert(conjugate_subgroup(h, x).elems);
    std::vector<Subgroup> cls;
    for (const auto& e : orbit) {
      used.insert(e);
      cls.push_back(Subgroup{g, e});
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;  // reps are lexicographically least; order inherited from `all`
}

namespace {

bool extend_iso(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& img,
                std::vector<bool>& used, int next) {
  const int n = a.order();
  while (next < n && img[next] >= 0) ++next;
  if (next == n) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (img[a.mul(x, y)] != b.mul(img[x], img[y])) return false;
    return true;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || a.element_order(next) != b.element_order(cand)) continue;
    std::vector<int> save_img = img;
    std::vector<bool> save_used = used;
    img[next] = cand;
    used[cand] = true;
    // close the partial map under products; bail out on conflicts
    bool ok = true;
    bool grew = true;
    while (grew && ok) {
      grew = false;
      for (int x = 0; x < n && ok; ++x) {
        if (img[x] < 0) continue;
        for (int y = 0; y < n && ok; ++y) {
          if (img[y] < 0) continue;
          int z = a.mul(x, y), w = b.mul(img[x], img[y]);
          if (img[z] < 0) {
            if (used[w]) {
              ok = false;
            } else {
              img[z] = w;
              used[w] = true;
              grew = true;
            }
          } else if (img[z] != w) {
            ok = false;
          }
        }
      }
    }
    if (ok && extend_iso(a, b, img, used, next + 1)) return true;
    img = save_img;
    used = save_used;
  }
  return false;
}

}  // namespace

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> img(a.order(), -1);
  std::vector<bool> used(a.order(), false);
  img[0] = 0;
  used[0] = true;
  return extend_iso(a, b, img, used, 1);
}

}  // namespace equihh
