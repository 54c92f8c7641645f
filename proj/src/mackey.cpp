#include "equihh/mackey.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace equihh {

int OrbitContext::sub_index(const Subgroup& s) const {
  for (size_t i = 0; i < subs.size(); ++i)
    if (subs[i] == s) return static_cast<int>(i);
  throw std::logic_error("OrbitContext: subgroup not found");
}

int OrbitContext::map_index(int k, int h, const std::vector<int>& f) const {
  const auto& list = maps[k][h];
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == f) return static_cast<int>(i);
  throw std::logic_error("OrbitContext: map not found");
}

std::vector<int> OrbitContext::projection(int k, int h) const {
  std::vector<int> f(orbits[k].size());
  for (int p = 0; p < orbits[k].size(); ++p)
    f[p] = coset_point(group, subs[h], reps[k][p]);
  return f;
}

std::pair<int, std::vector<int>> OrbitContext::conj_iso(int h, int a) const {
  Subgroup conj = conjugate_subgroup(subs[h], a);
  int h2 = sub_index(conj);
  std::vector<int> f(orbits[h2].size());
  for (int p = 0; p < orbits[h2].size(); ++p)
    f[p] = coset_point(group, subs[h], group->mul(reps[h2][p], a));
  return {h2, f};
}

OrbitContextPtr make_orbit_context(GroupPtr g) {
  auto ctx = std::make_shared<OrbitContext>();
  ctx->group = g;
  ctx->subs = subgroups(g);
  const int ns = static_cast<int>(ctx->subs.size());
  for (int h = 0; h < ns; ++h) {
    ctx->orbits.push_back(orbit_gset(g, ctx->subs[h]));
    // recover the coset representatives in orbit_gset order
    const int n = g->order();
    std::vector<int> coset(n, -1), reps;
    for (int x = 0; x < n; ++x) {
      if (coset[x] >= 0) continue;
      for (int k : ctx->subs[h].elems) coset[g->mul(x, k)] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
    ctx->reps.push_back(std::move(reps));
  }
  ctx->maps.resize(ns);
  for (int k = 0; k < ns; ++k) {
    ctx->maps[k].resize(ns);
    for (int h = 0; h < ns; ++h)
      ctx->maps[k][h] = all_equivariant_maps(ctx->orbits[k], ctx->orbits[h]);
  }
  return ctx;
}

void CoefficientSystem::validate() const {
  const int ns = static_cast<int>(ctx->subs.size());
  for (int h = 0; h < ns; ++h) {
    std::vector<int> id(ctx->orbits[h].size());
    for (int p = 0; p < ctx->orbits[h].size(); ++p) id[p] = p;
    const ZMat& m = mat[h][h][ctx->map_index(h, h, id)];
    if (m.rows() != values[h].ngens() || !AbMap{&values[h], &values[h], m}.equals(AbMap{
            &values[h], &values[h], ZMat(ZMat::Identity(values[h].ngens(), values[h].ngens()))}))
      throw std::invalid_argument("coefficient system: identity map is not the identity");
  }
  for (int k = 0; k < ns; ++k)
    for (int h = 0; h < ns; ++h)
      for (size_t fi = 0; fi < ctx->maps[k][h].size(); ++fi) {
        AbMap ff{&values[h], &values[k], mat[k][h][fi]};
        if (!ff.well_defined()) throw std::invalid_argument("coefficient system: map not well defined");
        for (int l = 0; l < ns; ++l)
          for (size_t gi = 0; gi < ctx->maps[l][k].size(); ++gi) {
            // composite f o g : orbits[l] -> orbits[h]
            const auto& f = ctx->maps[k][h][fi];
            const auto& g = ctx->maps[l][k][gi];
            std::vector<int> fg(g.size());
            for (size_t p = 0; p < g.size(); ++p) fg[p] = f[g[p]];
            const ZMat& mfg = mat[l][h][ctx->map_index(l, h, fg)];
            ZMat comp = mat[l][k][gi] * mat[k][h][fi];
            if (!AbMap{&values[h], &values[l], mfg}.equals(AbMap{&values[h], &values[l], comp}))
              throw std::invalid_argument("coefficient system: functoriality failure");
          }
      }
}

CoefficientSystem constant_system(const OrbitContextPtr& ctx, const AbGroup& v) {
  CoefficientSystem f;
  f.ctx = ctx;
  const int ns = static_cast<int>(ctx->subs.size());
  f.values.assign(ns, v);
  f.mat.resize(ns);
  for (int k = 0; k < ns; ++k) {
    f.mat[k].resize(ns);
    for (int h = 0; h < ns; ++h)
      f.mat[k][h].assign(ctx->maps[k][h].size(), ZMat::Identity(v.ngens(), v.ngens()));
  }
  return f;
}

ZMat MackeyFunctor::restriction(int k, int h, const std::vector<int>& f) const {
  return res[k][h][ctx->map_index(k, h, f)];
}

const ZMat& MackeyFunctor::transfer(int k, int h) const {
  auto it = tr.find({k, h});
  if (it == tr.end()) throw std::logic_error("MackeyFunctor: missing transfer");
  return it->second;
}

ZMat MackeyFunctor::conjugation(int h, int g) const {
  auto [h2, f] = ctx->conj_iso(h, g);
  return res[h2][h][ctx->map_index(h2, h, f)];
}

namespace {

// Present a transitive-apex span as one with apex literally an orbit G-set.
struct OrbitSpan {
  int apex_sub;
  SpanMorphism span;
};

OrbitSpan to_orbit_span(const OrbitContext& ctx, const SpanMorphism& s) {
  Subgroup stab = s.apex.stabilizer(0);
  int l = ctx.sub_index(stab);
  const FiniteGSet& model = ctx.orbits[l];
  std::vector<int> left(model.size()), right(model.size());
  for (int p = 0; p < model.size(); ++p) {
    int q = s.apex.act(0, ctx.reps[l][p]);
    left[p] = s.left[q];
    right[p] = s.right[q];
  }
  return OrbitSpan{l, SpanMorphism{s.source, s.target, model, std::move(left), std::move(right)}};
}

}  // namespace

ZMat MackeyFunctor::span_matrix(const SpanMorphism& s, int src_sub, int tgt_sub) const {
  ZMat out = ZMat::Zero(values[tgt_sub].ngens(), values[src_sub].ngens());
  for (const SpanMorphism& comp : decompose_span(s)) {
    OrbitSpan os = to_orbit_span(*ctx, comp);
    const int l = os.apex_sub;
    // restriction along the left leg
    ZMat rmat = restriction(l, src_sub, os.span.left);
    // transfer along the right leg r = kappa_a o proj
    int a = ctx->reps[tgt_sub][os.span.right[0]];
    auto [h2, kappa] = ctx->conj_iso(tgt_sub, a);
    // inverse of kappa_a : orbits[tgt_sub] -> orbits[h2]
    std::vector<int> kappa_inv(kappa.size());
    for (size_t p = 0; p < kappa.size(); ++p) kappa_inv[kappa[p]] = static_cast<int>(p);
    ZMat tmat = restriction(tgt_sub, h2, kappa_inv);  // M(h2) -> M(tgt)
    out += tmat * transfer(l, h2) * rmat;
  }
  return out;
}

void MackeyFunctor::validate() const {
  const int ns = static_cast<int>(ctx->subs.size());
  std::vector<std::vector<std::vector<SpanMorphism>>> spans(ns,
                                                            std::vector<std::vector<SpanMorphism>>(ns));
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      spans[i][j] = all_orbit_spans(ctx->group, ctx->orbits[i], ctx->orbits[j]);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      for (const auto& s1 : spans[i][j])
        for (int k = 0; k < ns; ++k)
          for (const auto& s2 : spans[j][k]) {
            ZMat lhs = span_matrix(compose_spans(s2, s1), i, k);
            ZMat rhs = span_matrix(s2, j, k) * span_matrix(s1, i, j);
            if (!AbMap{&values[i], &values[k], lhs}.equals(AbMap{&values[i], &values[k], rhs}))
              throw std::invalid_argument("Mackey functor: double coset functoriality failure");
          }
}

MackeyFunctor mackey_from_primitives(const OrbitContextPtr& ctx, std::vector<AbGroup> values,
                                     const std::map<std::pair<int, int>, ZMat>& resproj,
                                     const std::map<std::pair<int, int>, ZMat>& conj,
                                     const std::map<std::pair<int, int>, ZMat>& trproj) {
  MackeyFunctor m;
  m.ctx = ctx;
  m.values = std::move(values);
  const int ns = static_cast<int>(ctx->subs.size());
  m.res.resize(ns);
  for (int k = 0; k < ns; ++k) {
    m.res[k].resize(ns);
    for (int h = 0; h < ns; ++h)
      for (const auto& f : ctx->maps[k][h]) {
        // f = kappa_a o proj with a the representative of f(eK)
        int a = ctx->reps[h][f[0]];
        auto [h2, kappa] = ctx->conj_iso(h, a);
        ZMat cm = conj.at({h, a});  // M(h) -> M(h2)
        (void)kappa;
        ZMat pm = resproj.at({k, h2});  // M(h2) -> M(k)
        m.res[k][h].push_back(ZMat(pm * cm));
      }
  }
  for (const auto& [kh, mat] : trproj) m.tr[kh] = mat;
  return m;
}

JShriekResult j_lower_shriek(const CoefficientSystem& f) {
  const OrbitContextPtr& ctx = f.ctx;
  const int ns = static_cast<int>(ctx->subs.size());

  // span lists per (source subgroup, target subgroup)
  std::vector<std::vector<std::vector<SpanMorphism>>> spans(ns,
                                                            std::vector<std::vector<SpanMorphism>>(ns));
  for (int h = 0; h < ns; ++h)
    for (int t = 0; t < ns; ++t)
      spans[h][t] = all_orbit_spans(ctx->group, ctx->orbits[h], ctx->orbits[t]);

  struct Level {
    std::vector<std::pair<int, int>> blocks;  // (source sub h, span index) per block
    std::vector<Eigen::Index> offset;
    Eigen::Index ngens = 0;
    AbGroup raw;
    ZMat can, lift;  // canonical coordinates of raw and a section
  };
  std::vector<Level> lv(ns);

  auto block_of = [&](const Level& L, int h, int si) {
    for (size_t b = 0; b < L.blocks.size(); ++b)
      if (L.blocks[b] == std::make_pair(h, si)) return L.offset[b];
    throw std::logic_error("j_lower_shriek: block not found");
  };

  for (int t = 0; t < ns; ++t) {
    Level& L = lv[t];
    // blocks grouped by source orbit, larger stabilizers first, so that the
    // identity-span generators precede proper-transfer generators
    for (int h = ns - 1; h >= 0; --h)
      for (size_t si = 0; si < spans[h][t].size(); ++si) {
        L.blocks.push_back({h, static_cast<int>(si)});
        L.offset.push_back(L.ngens);
        L.ngens += f.values[h].ngens();
      }

    std::vector<ZVec> rels;
    // torsion relations of each F-value, per block
    for (size_t b = 0; b < L.blocks.size(); ++b) {
      const AbGroup& vh = f.values[L.blocks[b].first];
      for (Eigen::Index c = 0; c < vh.relations().cols(); ++c) {
        ZVec r = ZVec::Zero(L.ngens);
        r.segment(L.offset[b], vh.ngens()) = vh.relations().col(c);
        rels.push_back(std::move(r));
      }
    }
    // coend relations: for u : orbits[h'] -> orbits[h] and psi from h',
    //   [psi o j(u)] (x) v  =  [psi] (x) F(u) v
    for (int h = 0; h < ns; ++h)
      for (int h2 = 0; h2 < ns; ++h2)
        for (size_t ui = 0; ui < ctx->maps[h2][h].size(); ++ui) {
          const auto& u = ctx->maps[h2][h][ui];
          const ZMat& fu = f.mat[h2][h][ui];  // F(u): values[h] -> values[h2]
          for (size_t pi = 0; pi < spans[h2][t].size(); ++pi) {
            const SpanMorphism& psi = spans[h2][t][pi];
            // psi o j(u): precompose the left leg with u
            std::vector<int> newleft(psi.left.size());
            for (size_t p = 0; p < psi.left.size(); ++p) newleft[p] = u[psi.left[p]];
            SpanMorphism chi{ctx->orbits[h], psi.target, psi.apex, newleft, psi.right};
            int ci = find_span(spans[h][t], chi);
            if (ci < 0) throw std::logic_error("j_lower_shriek: composite span missing");
            Eigen::Index off_c = block_of(L, h, ci);
            Eigen::Index off_p = block_of(L, h2, static_cast<int>(pi));
            for (Eigen::Index v = 0; v < f.values[h].ngens(); ++v) {
              ZVec r = ZVec::Zero(L.ngens);
              r(off_c + v) += 1;
              for (Eigen::Index w = 0; w < f.values[h2].ngens(); ++w) r(off_p + w) -= fu(w, v);
              if (!is_zero(r)) rels.push_back(std::move(r));
            }
          }
        }

    ZMat relmat = ZMat::Zero(L.ngens, static_cast<Eigen::Index>(rels.size()));
    for (size_t c = 0; c < rels.size(); ++c) relmat.col(c) = rels[c];
    L.raw = AbGroup(L.ngens, relmat);
    L.can = L.raw.coord_matrix();
    L.lift = L.raw.lift_matrix();
  }

  MackeyFunctor m;
  m.ctx = ctx;
  for (int t = 0; t < ns; ++t)
    m.values.push_back(AbGroup::from_invariants(lv[t].raw.free_rank(), lv[t].raw.invariant_factors()));

  // raw matrix of postcomposition with a span mu : orbits[t] -> orbits[t2]
  auto raw_post = [&](int t, int t2, const SpanMorphism& mu) {
    ZMat raw = ZMat::Zero(lv[t2].ngens, lv[t].ngens);
    for (size_t b = 0; b < lv[t].blocks.size(); ++b) {
      auto [h, si] = lv[t].blocks[b];
      SpanMorphism comp = compose_spans(mu, spans[h][t][si]);
      for (const SpanMorphism& piece : decompose_span(comp)) {
        int ci = find_span(spans[h][t2], piece);
        if (ci < 0) throw std::logic_error("j_lower_shriek: postcomposite span missing");
        Eigen::Index off2 = 0;
        for (size_t b2 = 0; b2 < lv[t2].blocks.size(); ++b2)
          if (lv[t2].blocks[b2] == std::make_pair(h, ci)) off2 = lv[t2].offset[b2];
        for (Eigen::Index v = 0; v < f.values[h].ngens(); ++v) raw(off2 + v, lv[t].offset[b] + v) += 1;
      }
    }
    return raw;
  };

  m.res.resize(ns);
  for (int k = 0; k < ns; ++k) {
    m.res[k].resize(ns);
    for (int t = 0; t < ns; ++t)
      for (const auto& u : ctx->maps[k][t]) {
        SpanMorphism ju = j_embed(ctx->orbits[k], ctx->orbits[t], u);
        ZMat raw = raw_post(t, k, ju);
        m.res[k][t].push_back(ZMat(lv[k].can * raw * lv[t].lift));
      }
  }
  for (int k = 0; k < ns; ++k)
    for (int t = 0; t < ns; ++t) {
      if (!subgroup_leq(ctx->subs[k], ctx->subs[t])) continue;
      SpanMorphism tsp = transfer_span(ctx->orbits[k], ctx->orbits[t], ctx->projection(k, t));
      ZMat raw = raw_post(k, t, tsp);
      m.tr[{k, t}] = ZMat(lv[t].can * raw * lv[k].lift);
    }

  JShriekResult out;
  out.mackey = std::move(m);
  for (int h = 0; h < ns; ++h) {
    SpanMorphism idsp = identity_span(ctx->orbits[h]);
    int si = find_span(spans[h][h], idsp);
    if (si < 0) throw std::logic_error("j_lower_shriek: identity span missing");
    Eigen::Index off = block_of(lv[h], h, si);
    ZMat raw = ZMat::Zero(lv[h].ngens, f.values[h].ngens());
    for (Eigen::Index v = 0; v < f.values[h].ngens(); ++v) raw(off + v, v) = 1;
    out.unit.push_back(ZMat(lv[h].can * raw));
  }
  return out;
}

CoefficientSystem j_upper_star(const MackeyFunctor& m) {
  CoefficientSystem f;
  f.ctx = m.ctx;
  f.values = m.values;
  f.mat = m.res;
  return f;
}

MackeyFunctor burnside_mackey_functor(const OrbitContextPtr& ctx) {
  const GroupPtr& g = ctx->group;
  const int ns = static_cast<int>(ctx->subs.size());

  // basis of M(G/H): H-conjugacy classes of subgroups of H
  std::vector<std::vector<Subgroup>> basis(ns);
  auto class_index = [&](int h, const Subgroup& l) {
    for (size_t i = 0; i < basis[h].size(); ++i)
      for (int x : ctx->subs[h].elems)
        if (conjugate_subgroup(l, x) == basis[h][i]) return static_cast<Eigen::Index>(i);
    throw std::logic_error("burnside_mackey_functor: class not found");
  };
  for (int h = 0; h < ns; ++h) {
    std::set<std::vector<int>> used;
    for (const Subgroup& l : subgroups(g)) {
      if (!subgroup_leq(l, ctx->subs[h]) || used.count(l.elems)) continue;
      basis[h].push_back(l);
      for (int x : ctx->subs[h].elems) used.insert(conjugate_subgroup(l, x).elems);
    }
  }

  std::vector<AbGroup> values;
  for (int h = 0; h < ns; ++h)
    values.push_back(AbGroup::free_of_rank(static_cast<Eigen::Index>(basis[h].size())));

  std::map<std::pair<int, int>, ZMat> resproj, conjmaps, trproj;
  for (int h = 0; h < ns; ++h) {
    const Subgroup& H = ctx->subs[h];
    for (int k = 0; k < ns; ++k) {
      const Subgroup& K = ctx->subs[k];
      if (!subgroup_leq(K, H)) continue;
      // restriction: decompose H/L into K-orbits
      ZMat rm = ZMat::Zero(static_cast<Eigen::Index>(basis[k].size()),
                           static_cast<Eigen::Index>(basis[h].size()));
      for (size_t bi = 0; bi < basis[h].size(); ++bi) {
        const Subgroup& L = basis[h][bi];
        std::set<int> seen;
        for (int x : H.elems) {
          // coset x L; pick its least element as the label
          int label = x;
          for (int l : L.elems) label = std::min(label, g->mul(x, l));
          if (seen.count(label)) continue;
          // mark the whole K-orbit of this coset
          Subgroup stab{g, {}};
          std::set<int> orbit_labels;
          for (int kk : K.elems) {
            int y = g->mul(kk, x);
            int lab = y;
            for (int l : L.elems) lab = std::min(lab, g->mul(y, l));
            orbit_labels.insert(lab);
          }
          for (int lab : orbit_labels) seen.insert(lab);
          // stabilizer of the coset x L inside K
          std::vector<int> st;
          for (int kk : K.elems) {
            int y = g->mul(g->inv(x), g->mul(kk, x));
            if (L.contains(y)) st.push_back(kk);
          }
          std::sort(st.begin(), st.end());
          rm(class_index(k, Subgroup{g, st}), static_cast<Eigen::Index>(bi)) += 1;
        }
      }
      resproj[{k, h}] = rm;
      // transfer: [K/L] -> [H/L]
      ZMat tm = ZMat::Zero(static_cast<Eigen::Index>(basis[h].size()),
                           static_cast<Eigen::Index>(basis[k].size()));
      for (size_t bi = 0; bi < basis[k].size(); ++bi)
        tm(class_index(h, basis[k][bi]), static_cast<Eigen::Index>(bi)) += 1;
      trproj[{k, h}] = tm;
    }
    for (int a = 0; a < g->order(); ++a) {
      auto [h2, kappa] = ctx->conj_iso(h, a);
      (void)kappa;
      // M(j(kappa_a)): M(H) -> M(aHa^-1), [H/L] -> [aHa^-1 / aLa^-1]
      ZMat cm = ZMat::Zero(static_cast<Eigen::Index>(basis[h2].size()),
                           static_cast<Eigen::Index>(basis[h].size()));
      for (size_t bi = 0; bi < basis[h].size(); ++bi)
        cm(class_index(h2, conjugate_subgroup(basis[h][bi], a)), static_cast<Eigen::Index>(bi)) = 1;
      conjmaps[{h, a}] = cm;
    }
  }
  return mackey_from_primitives(ctx, std::move(values), resproj, conjmaps, trproj);
}

bool MackeyMap::commutes() const {
  const OrbitContextPtr& ctx = src->ctx;
  const int ns = static_cast<int>(ctx->subs.size());
  for (int k = 0; k < ns; ++k)
    for (int h = 0; h < ns; ++h)
      for (size_t fi = 0; fi < ctx->maps[k][h].size(); ++fi) {
        ZMat lhs = level[k] * src->res[k][h][fi];
        ZMat rhs = dst->res[k][h][fi] * level[h];
        if (!AbMap{&src->values[h], &dst->values[k], lhs}.equals(
                AbMap{&src->values[h], &dst->values[k], rhs}))
          return false;
      }
  for (const auto& [kh, tmat] : src->tr) {
    ZMat lhs = level[kh.second] * tmat;
    ZMat rhs = dst->tr.at(kh) * level[kh.first];
    if (!AbMap{&src->values[kh.first], &dst->values[kh.second], lhs}.equals(
            AbMap{&src->values[kh.first], &dst->values[kh.second], rhs}))
      return false;
  }
  return true;
}

MackeyMapFamily solve_mackey_maps(const MackeyFunctor& a, const MackeyFunctor& b,
                                  const std::vector<LevelEntryConstraint>& constraints) {
  const OrbitContextPtr& ctx = a.ctx;
  const int ns = static_cast<int>(ctx->subs.size());

  // unknown layout: per level, the entries of X_h (row-major), then auxiliary
  // unknowns appended per congruence equation
  std::vector<Eigen::Index> xoff(ns);
  Eigen::Index nx = 0;
  for (int h = 0; h < ns; ++h) {
    xoff[h] = nx;
    nx += b.values[h].ngens() * a.values[h].ngens();
  }

  struct Eq {  // sum_k coeff_k * z_k = rhs, one row per equation
    std::vector<std::pair<Eigen::Index, ZInt>> terms;
    ZInt rhs = 0;
  };
  std::vector<Eq> eqs;
  Eigen::Index naux = 0;

  auto xvar = [&](int h, Eigen::Index r, Eigen::Index c) {
    return xoff[h] + r * a.values[h].ngens() + c;
  };

  // matrix equation X_t * L - R * X_s = RelB_t * W (modulo target relations)
  auto add_mat_eq = [&](int s, int t, const ZMat& l, const ZMat& r) {
    const ZMat& relb = b.values[t].relations();
    Eigen::Index wbase = nx + naux;
    naux += relb.cols() * a.values[s].ngens();
    for (Eigen::Index i = 0; i < b.values[t].ngens(); ++i)
      for (Eigen::Index j = 0; j < a.values[s].ngens(); ++j) {
        Eq e;
        // (X_t * L)(i,j) = sum_k X_t(i,k) L(k,j)
        for (Eigen::Index k = 0; k < a.values[t].ngens(); ++k)
          if (l(k, j) != 0) e.terms.push_back({xvar(t, i, k), l(k, j)});
        // -(R * X_s)(i,j) = -sum_k R(i,k) X_s(k,j)
        for (Eigen::Index k = 0; k < b.values[s].ngens(); ++k)
          if (r(i, k) != 0) e.terms.push_back({xvar(s, k, j), -r(i, k)});
        // -(RelB_t * W)(i,j)
        for (Eigen::Index k = 0; k < relb.cols(); ++k)
          if (relb(i, k) != 0) e.terms.push_back({wbase + k * a.values[s].ngens() + j, -relb(i, k)});
        eqs.push_back(std::move(e));
      }
  };

  for (int k = 0; k < ns; ++k)
    for (int h = 0; h < ns; ++h)
      for (size_t fi = 0; fi < ctx->maps[k][h].size(); ++fi)
        add_mat_eq(h, k, a.res[k][h][fi], b.res[k][h][fi]);
  for (const auto& [kh, tmat] : a.tr) add_mat_eq(kh.first, kh.second, tmat, b.tr.at(kh));

  // well-definedness: X_h * RelA_h = RelB_h * W
  for (int h = 0; h < ns; ++h) {
    const ZMat& rela = a.values[h].relations();
    const ZMat& relb = b.values[h].relations();
    if (rela.cols() == 0) continue;
    Eigen::Index wbase = nx + naux;
    naux += relb.cols() * rela.cols();
    for (Eigen::Index i = 0; i < b.values[h].ngens(); ++i)
      for (Eigen::Index j = 0; j < rela.cols(); ++j) {
        Eq e;
        for (Eigen::Index k = 0; k < a.values[h].ngens(); ++k)
          if (rela(k, j) != 0) e.terms.push_back({xvar(h, i, k), rela(k, j)});
        for (Eigen::Index k = 0; k < relb.cols(); ++k)
          if (relb(i, k) != 0) e.terms.push_back({wbase + k * rela.cols() + j, -relb(i, k)});
        eqs.push_back(std::move(e));
      }
  }

  for (const auto& c : constraints) {
    Eq e;
    e.terms.push_back({xvar(c.level, c.row, c.col), ZInt(1)});
    e.rhs = c.value;
    eqs.push_back(std::move(e));
  }

  const Eigen::Index nz = nx + naux;
  ZMat M = ZMat::Zero(static_cast<Eigen::Index>(eqs.size()), nz);
  ZVec rhs = ZVec::Zero(static_cast<Eigen::Index>(eqs.size()));
  for (size_t r = 0; r < eqs.size(); ++r) {
    for (auto& [c, v] : eqs[r].terms) M(static_cast<Eigen::Index>(r), c) += v;
    rhs(static_cast<Eigen::Index>(r)) = eqs[r].rhs;
  }

  MackeyMapFamily fam;
  auto part = solve_integer(M, rhs);
  if (!part) return fam;
  fam.solvable = true;

  auto extract = [&](const ZVec& z) {
    MackeyMap mm;
    mm.src = &a;
    mm.dst = &b;
    for (int h = 0; h < ns; ++h) {
      ZMat x(b.values[h].ngens(), a.values[h].ngens());
      for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = z(xvar(h, i, j));
      mm.level.push_back(std::move(x));
    }
    return mm;
  };

  fam.particular = extract(*part);
  ZMat ker = integer_kernel(M);
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    MackeyMap dir = extract(ZVec(ker.col(j)));
    bool zero = true;
    for (auto& l : dir.level)
      if (!is_zero(l)) zero = false;
    if (!zero) fam.basis.push_back(std::move(dir));
  }
  return fam;
}

bool family_contains(const MackeyMapFamily& fam, const MackeyMap& m) {
  if (!fam.solvable) return false;
  // stack the differences into one vector and solve against basis directions
  Eigen::Index total = 0;
  for (auto& l : m.level) total += l.size();
  ZVec diff(total);
  Eigen::Index at = 0;
  for (size_t h = 0; h < m.level.size(); ++h) {
    ZMat d = m.level[h] - fam.particular.level[h];
    for (Eigen::Index i = 0; i < d.rows(); ++i)
      for (Eigen::Index j = 0; j < d.cols(); ++j) diff(at++) = d(i, j);
  }
  ZMat bas = ZMat::Zero(total, static_cast<Eigen::Index>(fam.basis.size()));
  for (size_t b = 0; b < fam.basis.size(); ++b) {
    at = 0;
    for (size_t h = 0; h < m.level.size(); ++h)
      for (Eigen::Index i = 0; i < m.level[h].rows(); ++i)
        for (Eigen::Index j = 0; j < m.level[h].cols(); ++j)
          bas(at++, static_cast<Eigen::Index>(b)) = fam.basis[b].level[h](i, j);
  }
  return solve_integer(bas, diff).has_value();
}

}  // namespace equihh
