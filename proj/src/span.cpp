#include "equihh/span.hpp"

#include <algorithm>
#include <stdexcept>

#include "equihh/group.hpp"

namespace equihh {

void SpanMorphism::validate() const {
  if (!is_equivariant(apex, source, left)) throw std::invalid_argument("span: left leg not equivariant");
  if (!is_equivariant(apex, target, right)) throw std::invalid_argument("span: right leg not equivariant");
}

SpanMorphism identity_span(const FiniteGSet& x) {
  std::vector<int> id(x.size());
  for (int i = 0; i < x.size(); ++i) id[i] = i;
  return SpanMorphism{x, x, x, id, id};
}

SpanMorphism j_embed(const FiniteGSet& x, const FiniteGSet& y, const std::vector<int>& f) {
  if (!is_equivariant(x, y, f)) throw std::invalid_argument("j_embed: map not equivariant");
  std::vector<int> id(x.size());
  for (int i = 0; i < x.size(); ++i) id[i] = i;
  return SpanMorphism{y, x, x, f, id};
}

SpanMorphism transfer_span(const FiniteGSet& x, const FiniteGSet& y, const std::vector<int>& f) {
  if (!is_equivariant(x, y, f)) throw std::invalid_argument("transfer_span: map not equivariant");
  std::vector<int> id(x.size());
  for (int i = 0; i < x.size(); ++i) id[i] = i;
  return SpanMorphism{x, y, x, id, f};
}

SpanMorphism compose_spans(const SpanMorphism& s2, const SpanMorphism& s1) {
  if (!(s1.target == s2.source))
    throw std::invalid_argument("compose_spans: boundary G-sets do not match");
  const GroupPtr& g = s1.apex.group();
  const int n = g->order();

  // pullback {(a1, a2) : right1(a1) = left2(a2)} with the diagonal action
  std::vector<std::pair<int, int>> pts;
  for (int a1 = 0; a1 < s1.apex.size(); ++a1)
    for (int a2 = 0; a2 < s2.apex.size(); ++a2)
      if (s1.right[a1] == s2.left[a2]) pts.push_back({a1, a2});

  auto index_of = [&](int a1, int a2) {
    auto it = std::lower_bound(pts.begin(), pts.end(), std::make_pair(a1, a2));
    return static_cast<int>(it - pts.begin());
  };

  const int m = static_cast<int>(pts.size());
  std::vector<int> act(m * n), left(m), right(m);
  for (int i = 0; i < m; ++i) {
    auto [a1, a2] = pts[i];
    left[i] = s1.left[a1];
    right[i] = s2.right[a2];
    for (int x = 0; x < n; ++x) act[i * n + x] = index_of(s1.apex.act(a1, x), s2.apex.act(a2, x));
  }
  return SpanMorphism{s1.source, s2.target, FiniteGSet(g, m, std::move(act)), std::move(left),
                      std::move(right)};
}

namespace {

bool match_orbits(const SpanMorphism& a, const SpanMorphism& b,
                  const std::vector<std::vector<int>>& aorbs, std::vector<int>& image,
                  std::vector<bool>& used, size_t oi) {
  if (oi == aorbs.size()) return true;
  const GroupPtr& g = a.apex.group();
  const int n = g->order();
  int rep = aorbs[oi][0];
  for (int cand = 0; cand < b.apex.size(); ++cand) {
    if (used[cand]) continue;
    if (a.left[rep] != b.left[cand] || a.right[rep] != b.right[cand]) continue;
    std::vector<std::pair<int, int>> assigned;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      int src = a.apex.act(rep, x), dst = b.apex.act(cand, x);
      if (image[src] == -1) {
        if (used[dst]) {
          ok = false;
        } else {
          image[src] = dst;
          used[dst] = true;
          assigned.push_back({src, dst});
        }
      } else if (image[src] != dst) {
        ok = false;
      }
    }
    if (ok) {
      for (int p : aorbs[oi])
        if (a.left[p] != b.left[image[p]] || a.right[p] != b.right[image[p]]) {
          ok = false;
          break;
        }
    }
    if (ok && match_orbits(a, b, aorbs, image, used, oi + 1)) return true;
    for (auto& [s, d] : assigned) {
      image[s] = -1;
      used[d] = false;
    }
  }
  return false;
}

}  // namespace

namespace {

// multiset of per-orbit leg profiles; equal for isomorphic spans
std::vector<std::vector<int>> span_profile(const SpanMorphism& s) {
  std::vector<std::vector<int>> prof;
  for (auto& orb : s.apex.orbits()) {
    std::vector<int> p;
    p.push_back(static_cast<int>(orb.size()));
    std::vector<std::pair<int, int>> legs;
    for (int q : orb) legs.push_back({s.left[q], s.right[q]});
    std::sort(legs.begin(), legs.end());
    for (auto& [l, r] : legs) {
      p.push_back(l);
      p.push_back(r);
    }
    prof.push_back(std::move(p));
  }
  std::sort(prof.begin(), prof.end());
  return prof;
}

}  // namespace

bool spans_isomorphic(const SpanMorphism& a, const SpanMorphism& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) return false;
  if (a.apex.size() != b.apex.size()) return false;
  if (span_profile(a) != span_profile(b)) return false;
  std::vector<int> image(a.apex.size(), -1);
  std::vector<bool> used(b.apex.size(), false);
  auto aorbs = a.apex.orbits();
  return match_orbits(a, b, aorbs, image, used, 0);
}

std::vector<SpanMorphism> decompose_span(const SpanMorphism& s) {
  std::vector<SpanMorphism> out;
  for (auto& orb : s.apex.orbits()) {
    SubGSet sub = restrict_to_points(s.apex, orb);
    std::vector<int> l(orb.size()), r(orb.size());
    for (size_t i = 0; i < orb.size(); ++i) {
      l[i] = s.left[orb[i]];
      r[i] = s.right[orb[i]];
    }
    out.push_back(SpanMorphism{s.source, s.target, sub.set, std::move(l), std::move(r)});
  }
  return out;
}

std::vector<SpanMorphism> all_orbit_spans(const GroupPtr& g, const FiniteGSet& x,
                                          const FiniteGSet& y) {
  std::vector<SpanMorphism> out;
  for (const Subgroup& l : subgroups(g)) {
    FiniteGSet apex = orbit_gset(g, l);
    auto lmaps = all_equivariant_maps(apex, x);
    auto rmaps = all_equivariant_maps(apex, y);
    for (const auto& lm : lmaps)
      for (const auto& rm : rmaps) {
        SpanMorphism s{x, y, apex, lm, rm};
        if (find_span(out, s) < 0) out.push_back(std::move(s));
      }
  }
  return out;
}

int find_span(const std::vector<SpanMorphism>& list, const SpanMorphism& s) {
  for (size_t i = 0; i < list.size(); ++i)
    if (spans_isomorphic(list[i], s)) return static_cast<int>(i);
  return -1;
}

}  // namespace equihh
