#include "equihh/hochschild.hpp"

#include <stdexcept>

namespace equihh {

namespace {

// mixed-radix index over q algebra slots followed by one module slot
inline Eigen::Index pack(const std::vector<int>& idx, int r, int mrank) {
  Eigen::Index out = 0;
  for (size_t t = 0; t + 1 < idx.size(); ++t) out = out * r + idx[t];
  return out * mrank + idx.back();
}

inline Eigen::Index pow_rank(int r, int q) {
  Eigen::Index out = 1;
  for (int t = 0; t < q; ++t) out *= r;
  return out;
}

}  // namespace

IMat hochschild_face(const GAlgebra& R, const Bimodule& M, int q, int i) {
  const int r = R.rank(), mr = M.rank();
  const BaseRing& b = R.base();
  IMat out = IMat::Zero(pow_rank(r, q - 1) * mr, pow_rank(r, q) * mr);
  std::vector<int> src(q + 1, 0);
  for (Eigen::Index col = 0; col < out.cols(); ++col) {
    // decode (i_1..i_q, j)
    Eigen::Index c = col;
    src[q] = static_cast<int>(c % mr);
    c /= mr;
    for (int t = q - 1; t >= 0; --t) {
      src[t] = static_cast<int>(c % r);
      c /= r;
    }
    std::vector<int> dst(q, 0);
    if (i == 0) {
      // (x_2..x_q, m.x_1)
      for (int t = 0; t + 1 < q; ++t) dst[t] = src[t + 1];
      const IMat& act = M.right(src[0]);
      for (int k = 0; k < mr; ++k) {
        if (act(k, src[q]) == 0) continue;
        dst[q - 1] = k;
        out(pack(dst, r, mr), col) = b.add(out(pack(dst, r, mr), col), act(k, src[q]));
      }
    } else if (i < q) {
      // multiply slots i, i+1
      for (int t = 0; t < i - 1; ++t) dst[t] = src[t];
      for (int t = i + 1; t < q; ++t) dst[t - 1] = src[t];
      dst[q - 1] = src[q];
      for (int k = 0; k < r; ++k) {
        long long c2 = R.mu(src[i - 1], src[i], k);
        if (c2 == 0) continue;
        dst[i - 1] = k;
        out(pack(dst, r, mr), col) = b.add(out(pack(dst, r, mr), col), c2);
      }
    } else {
      // (x_1..x_{q-1}, x_q.m)
      for (int t = 0; t < q - 1; ++t) dst[t] = src[t];
      const IMat& act = M.left(src[q - 1]);
      for (int k = 0; k < mr; ++k) {
        if (act(k, src[q]) == 0) continue;
        dst[q - 1] = k;
        out(pack(dst, r, mr), col) = b.add(out(pack(dst, r, mr), col), act(k, src[q]));
      }
    }
  }
  return out;
}

ChainComplex hochschild_complex(const GAlgebra& R, const Bimodule& M, int n) {
  if (&M.over() != &R) throw std::invalid_argument("hochschild_complex: bimodule over another ring");
  ChainComplex c;
  c.base = R.base();
  for (int q = 0; q <= n; ++q) c.ranks.push_back(pow_rank(R.rank(), q) * M.rank());
  c.d.push_back(IMat());
  for (int q = 1; q <= n; ++q) {
    IMat d = IMat::Zero(c.ranks[q - 1], c.ranks[q]);
    for (int i = 0; i <= q; ++i) {
      if (i % 2 == 0)
        d += hochschild_face(R, M, q, i);
      else
        d -= hochschild_face(R, M, q, i);
    }
    if (!c.base.is_z) reduce_mod(d, c.base.p);
    c.d.push_back(std::move(d));
  }
  c.validate();
  return c;
}

ChainComplex twisted_cyclic_complex(const GAlgebra& R, int n) {
  const GroupPtr& g = R.group();
  // require a cyclic acting group generated by element 1
  if (g->order() > 1) {
    Subgroup gen = generated_subgroup(g, {1});
    if (gen.order() != g->order())
      throw std::invalid_argument("twisted_cyclic_complex: acting group not cyclic on generator 1");
  }
  const int sigma_inv = g->order() > 1 ? g->inv(1) : 0;
  const int r = R.rank();
  const BaseRing& b = R.base();

  ChainComplex c;
  c.base = b;
  for (int q = 0; q <= n; ++q) c.ranks.push_back(pow_rank(r, q + 1));
  c.d.push_back(IMat());
  for (int q = 1; q <= n; ++q) {
    IMat d = IMat::Zero(c.ranks[q - 1], c.ranks[q]);
    std::vector<int> src(q + 1, 0), dst(q, 0);
    for (Eigen::Index col = 0; col < c.ranks[q]; ++col) {
      Eigen::Index cc = col;
      for (int t = q; t >= 0; --t) {
        src[t] = static_cast<int>(cc % r);
        cc /= r;
      }
      auto emit = [&](long long coeff, int sign) {
        Eigen::Index row = 0;
        for (int t = 0; t < q; ++t) row = row * r + dst[t];
        d(row, col) = b.add(d(row, col), sign > 0 ? coeff : b.sub(0, coeff));
      };
      // d_0: (x_2,...,x_{q+1} . sigma^{-1}(x_1))
      for (int t = 0; t + 1 < q; ++t) dst[t] = src[t + 1];
      for (int a = 0; a < r; ++a) {
        long long ca = R.action(sigma_inv)(a, src[0]);
        if (ca == 0) continue;
        for (int k = 0; k < r; ++k) {
          long long m = R.mu(src[q], a, k);
          if (m == 0) continue;
          dst[q - 1] = k;
          emit(b.mul(ca, m), +1);
        }
      }
      // d_i, 0 < i <= q: multiply slots i, i+1
      for (int i = 1; i <= q; ++i) {
        for (int t = 0; t < i - 1; ++t) dst[t] = src[t];
        for (int t = i + 1; t <= q; ++t) dst[t - 1] = src[t];
        for (int k = 0; k < r; ++k) {
          long long m = R.mu(src[i - 1], src[i], k);
          if (m == 0) continue;
          dst[i - 1] = k;
          emit(m, i % 2 == 0 ? +1 : -1);
        }
      }
    }
    if (!b.is_z) reduce_mod(d, b.p);
    c.d.push_back(std::move(d));
  }
  c.validate();
  return c;
}

TwistedHH twisted_hochschild(const GAlgebra& R, int n) {
  const GroupPtr& g = R.group();
  const int sigma_inv = g->order() > 1 ? g->inv(1) : 0;
  ChainComplex direct = twisted_cyclic_complex(R, n);
  Bimodule coeff = twist_right(regular_bimodule(R), sigma_inv);
  ChainComplex viacoeff = hochschild_complex(R, coeff, n);
  if (direct.ranks != viacoeff.ranks)
    throw std::logic_error("twisted_hochschild: rank mismatch between constructions");
  for (int q = 1; q <= n; ++q)
    if (direct.d[q] != viacoeff.d[q])
      throw std::logic_error("twisted_hochschild: constructions disagree matrix-for-matrix");
  TwistedHH out;
  out.complex = std::move(direct);
  out.hom = homology(out.complex);
  return out;
}

void BimoduleSR::validate() const {
  const BaseRing& b = left_over->base();
  if (!(right_over->base() == b)) throw std::invalid_argument("BimoduleSR: mixed bases");
  auto norm = [&](IMat m) {
    if (!b.is_z) reduce_mod(m, b.p);
    return m;
  };
  IMat lu = IMat::Zero(rank, rank), ru = IMat::Zero(rank, rank);
  for (int i = 0; i < left_over->rank(); ++i) lu += left[i] * left_over->unit()(i);
  for (int i = 0; i < right_over->rank(); ++i) ru += right[i] * right_over->unit()(i);
  if (norm(lu) != IMat::Identity(rank, rank) || norm(ru) != IMat::Identity(rank, rank))
    throw std::invalid_argument("BimoduleSR: units do not act as identity");
  for (int i = 0; i < left_over->rank(); ++i)
    for (int j = 0; j < left_over->rank(); ++j) {
      IMat comp = IMat::Zero(rank, rank);
      for (int k = 0; k < left_over->rank(); ++k) comp += left[k] * left_over->mu(i, j, k);
      if (norm(IMat(left[i] * left[j])) != norm(comp))
        throw std::invalid_argument("BimoduleSR: left action not associative");
    }
  for (int i = 0; i < right_over->rank(); ++i)
    for (int j = 0; j < right_over->rank(); ++j) {
      IMat comp = IMat::Zero(rank, rank);
      for (int k = 0; k < right_over->rank(); ++k) comp += right[k] * right_over->mu(i, j, k);
      if (norm(IMat(right[j] * right[i])) != norm(comp))
        throw std::invalid_argument("BimoduleSR: right action not associative");
    }
  for (int i = 0; i < left_over->rank(); ++i)
    for (int j = 0; j < right_over->rank(); ++j)
      if (norm(IMat(left[i] * right[j])) != norm(IMat(right[j] * left[i])))
        throw std::invalid_argument("BimoduleSR: actions do not commute");
}

BimoduleSR as_sr(const GAlgebra& r, const Bimodule& m) {
  BimoduleSR out;
  out.left_over = &r;
  out.right_over = &r;
  out.rank = m.rank();
  for (int i = 0; i < r.rank(); ++i) {
    out.left.push_back(m.left(i));
    out.right.push_back(m.right(i));
  }
  out.validate();
  return out;
}

BimoduleSR column_module(const GAlgebra& mat, const GAlgebra& r, int k) {
  // column vectors R^k: left action of M_k(R), right action of R
  const int rr = r.rank(), rank = k * rr;
  auto idx = [&](int a, int i) { return a * rr + i; };
  BimoduleSR out;
  out.left_over = &mat;
  out.right_over = &r;
  out.rank = rank;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int i = 0; i < rr; ++i) {
        IMat m = IMat::Zero(rank, rank);
        // e_{ab} b_i . (column with b_j at slot c) = delta_{bc} (b_i b_j) at slot a
        for (int j = 0; j < rr; ++j)
          for (int t = 0; t < rr; ++t) m(idx(a, t), idx(b, j)) = r.mu(i, j, t);
        out.left.push_back(std::move(m));
      }
  for (int j = 0; j < rr; ++j) {
    IMat m = IMat::Zero(rank, rank);
    for (int a = 0; a < k; ++a)
      for (int i = 0; i < rr; ++i)
        for (int t = 0; t < rr; ++t) m(idx(a, t), idx(a, i)) = r.mu(i, j, t);
    out.right.push_back(std::move(m));
  }
  out.validate();
  return out;
}

BimoduleSR row_module(const GAlgebra& r, const GAlgebra& mat, int k) {
  // row vectors R^k: left action of R, right action of M_k(R)
  const int rr = r.rank(), rank = k * rr;
  auto idx = [&](int a, int i) { return a * rr + i; };
  BimoduleSR out;
  out.left_over = &r;
  out.right_over = &mat;
  out.rank = rank;
  for (int i = 0; i < rr; ++i) {
    IMat m = IMat::Zero(rank, rank);
    for (int a = 0; a < k; ++a)
      for (int j = 0; j < rr; ++j)
        for (int t = 0; t < rr; ++t) m(idx(a, t), idx(a, j)) = r.mu(i, j, t);
    out.left.push_back(std::move(m));
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int i = 0; i < rr; ++i) {
        IMat m = IMat::Zero(rank, rank);
        // (row with b_j at slot c) . e_{ab} b_i = delta_{ca} (b_j b_i) at slot b
        for (int j = 0; j < rr; ++j)
          for (int t = 0; t < rr; ++t) m(idx(b, t), idx(a, j)) = r.mu(j, i, t);
        out.right.push_back(std::move(m));
      }
  out.validate();
  return out;
}

namespace {

struct BarShape {
  int mrank, rrank, nrank;
  Eigen::Index dim(int q) const { return mrank * pow_rank(rrank, q) * nrank; }
  Eigen::Index pack(int a, const std::vector<int>& mid, int b) const {
    Eigen::Index out = a;
    for (int x : mid) out = out * rrank + x;
    return out * nrank + b;
  }
};

IMat bar_face(const BimoduleSR& M, const GAlgebra& R, const BimoduleSR& N, int q, int i) {
  BarShape sh{M.rank, R.rank(), N.rank};
  const BaseRing& base = R.base();
  IMat out = IMat::Zero(sh.dim(q - 1), sh.dim(q));
  std::vector<int> mid(q);
  for (Eigen::Index col = 0; col < out.cols(); ++col) {
    Eigen::Index c = col;
    int b = static_cast<int>(c % N.rank);
    c /= N.rank;
    for (int t = q - 1; t >= 0; --t) {
      mid[t] = static_cast<int>(c % R.rank());
      c /= R.rank();
    }
    int a = static_cast<int>(c);
    std::vector<int> dst(q - 1);
    if (i == 0) {
      for (int t = 1; t < q; ++t) dst[t - 1] = mid[t];
      const IMat& act = M.right[mid[0]];
      for (int k = 0; k < M.rank; ++k)
        if (act(k, a) != 0) out(sh.pack(k, dst, b), col) = base.add(out(sh.pack(k, dst, b), col), act(k, a));
    } else if (i < q) {
      for (int t = 0; t < i - 1; ++t) dst[t] = mid[t];
      for (int t = i + 1; t < q; ++t) dst[t - 1] = mid[t];
      for (int k = 0; k < R.rank(); ++k) {
        long long cc = R.mu(mid[i - 1], mid[i], k);
        if (cc == 0) continue;
        dst[i - 1] = k;
        out(sh.pack(a, dst, b), col) = base.add(out(sh.pack(a, dst, b), col), cc);
      }
    } else {
      for (int t = 0; t + 1 < q; ++t) dst[t] = mid[t];
      const IMat& act = N.left[mid[q - 1]];
      for (int k = 0; k < N.rank; ++k)
        if (act(k, b) != 0) out(sh.pack(a, dst, k), col) = base.add(out(sh.pack(a, dst, k), col), act(k, b));
    }
  }
  return out;
}

}  // namespace

ChainComplex two_sided_bar(const BimoduleSR& m, const GAlgebra& r, const BimoduleSR& n, int ndeg) {
  if (m.right_over != &r || n.left_over != &r)
    throw std::invalid_argument("two_sided_bar: modules not compatible over the middle algebra");
  BarShape sh{m.rank, r.rank(), n.rank};
  ChainComplex c;
  c.base = r.base();
  for (int q = 0; q <= ndeg; ++q) c.ranks.push_back(sh.dim(q));
  c.d.push_back(IMat());
  for (int q = 1; q <= ndeg; ++q) {
    IMat d = IMat::Zero(c.ranks[q - 1], c.ranks[q]);
    for (int i = 0; i <= q; ++i) {
      if (i % 2 == 0)
        d += bar_face(m, r, n, q, i);
      else
        d -= bar_face(m, r, n, q, i);
    }
    if (!c.base.is_z) reduce_mod(d, c.base.p);
    c.d.push_back(std::move(d));
  }
  c.validate();
  return c;
}

std::pair<ChainComplex, std::vector<IMat>> bar_augmentation(const BimoduleSR& m, const GAlgebra& r,
                                                            int ndeg) {
  BimoduleSR rr = as_sr(r, regular_bimodule(r));
  ChainComplex bar = two_sided_bar(m, r, rr, ndeg);
  ChainComplex target;
  target.base = r.base();
  target.ranks.assign(ndeg + 1, 0);
  target.ranks[0] = m.rank;
  target.d.push_back(IMat());
  for (int q = 1; q <= ndeg; ++q) target.d.push_back(IMat::Zero(target.ranks[q - 1], target.ranks[q]));
  std::vector<IMat> f;
  // degree 0: M (x) R -> M by the right action
  IMat f0 = IMat::Zero(m.rank, bar.ranks[0]);
  for (int a = 0; a < m.rank; ++a)
    for (int j = 0; j < r.rank(); ++j)
      for (int k = 0; k < m.rank; ++k) f0(k, a * r.rank() + j) = m.right[j](k, a);
  if (!r.base().is_z) reduce_mod(f0, r.base().p);
  f.push_back(std::move(f0));
  for (int q = 1; q <= ndeg; ++q) f.push_back(IMat::Zero(0, bar.ranks[q]));
  return {std::move(bar), std::move(f)};
}

namespace {

// generic bisimplicial shadow of N^cyc(R; B(N; S; M)) with
//   X_{p,q} = R^p (x) N (x) S^q (x) M
struct NerveBar {
  const GAlgebra* R;
  const GAlgebra* S;
  const BimoduleSR* N;  // (R,S): left R, right S
  const BimoduleSR* M;  // (S,R): left S, right R

  Eigen::Index dim(int p, int q) const {
    return pow_rank(R->rank(), p) * N->rank * pow_rank(S->rank(), q) * M->rank;
  }
  Eigen::Index pack(const std::vector<int>& rpart, int a, const std::vector<int>& spart, int b) const {
    Eigen::Index out = 0;
    for (int x : rpart) out = out * R->rank() + x;
    out = out * N->rank + a;
    for (int x : spart) out = out * S->rank() + x;
    return out * M->rank + b;
  }
  void unpack(Eigen::Index col, int p, int q, std::vector<int>& rpart, int& a,
              std::vector<int>& spart, int& b) const {
    b = static_cast<int>(col % M->rank);
    col /= M->rank;
    spart.resize(q);
    for (int t = q - 1; t >= 0; --t) {
      spart[t] = static_cast<int>(col % S->rank());
      col /= S->rank();
    }
    a = static_cast<int>(col % N->rank);
    col /= N->rank;
    rpart.resize(p);
    for (int t = p - 1; t >= 0; --t) {
      rpart[t] = static_cast<int>(col % R->rank());
      col /= R->rank();
    }
  }

  // horizontal face i at bidegree (p,q): nerve direction
  IMat hface(int p, int q, int i) const {
    const BaseRing& base = R->base();
    IMat out = IMat::Zero(dim(p - 1, q), dim(p, q));
    std::vector<int> rp, sp, rd;
    int a, b;
    for (Eigen::Index col = 0; col < out.cols(); ++col) {
      unpack(col, p, q, rp, a, sp, b);
      rd.assign(p - 1, 0);
      if (i == 0) {
        // rotate x_1 onto the M slot through the right R-action
        for (int t = 1; t < p; ++t) rd[t - 1] = rp[t];
        const IMat& act = M->right[rp[0]];
        for (int k = 0; k < M->rank; ++k)
          if (act(k, b) != 0) {
            Eigen::Index row = pack(rd, a, sp, k);
            out(row, col) = base.add(out(row, col), act(k, b));
          }
      } else if (i < p) {
        for (int t = 0; t < i - 1; ++t) rd[t] = rp[t];
        for (int t = i + 1; t < p; ++t) rd[t - 1] = rp[t];
        for (int k = 0; k < R->rank(); ++k) {
          long long c = R->mu(rp[i - 1], rp[i], k);
          if (c == 0) continue;
          rd[i - 1] = k;
          Eigen::Index row = pack(rd, a, sp, b);
          out(row, col) = base.add(out(row, col), c);
        }
      } else {
        // left R-action on the N slot
        for (int t = 0; t + 1 < p; ++t) rd[t] = rp[t];
        const IMat& act = N->left[rp[p - 1]];
        for (int k = 0; k < N->rank; ++k)
          if (act(k, a) != 0) {
            Eigen::Index row = pack(rd, k, sp, b);
            out(row, col) = base.add(out(row, col), act(k, a));
          }
      }
    }
    return out;
  }

  // vertical face j at bidegree (p,q): bar direction of B(N;S;M)
  IMat vface(int p, int q, int j) const {
    const BaseRing& base = R->base();
    IMat out = IMat::Zero(dim(p, q - 1), dim(p, q));
    std::vector<int> rp, sp, sd;
    int a, b;
    for (Eigen::Index col = 0; col < out.cols(); ++col) {
      unpack(col, p, q, rp, a, sp, b);
      sd.assign(q - 1, 0);
      if (j == 0) {
        // right S-action on N
        for (int t = 1; t < q; ++t) sd[t - 1] = sp[t];
        const IMat& act = N->right[sp[0]];
        for (int k = 0; k < N->rank; ++k)
          if (act(k, a) != 0) {
            Eigen::Index row = pack(rp, k, sd, b);
            out(row, col) = base.add(out(row, col), act(k, a));
          }
      } else if (j < q) {
        for (int t = 0; t < j - 1; ++t) sd[t] = sp[t];
        for (int t = j + 1; t < q; ++t) sd[t - 1] = sp[t];
        for (int k = 0; k < S->rank(); ++k) {
          long long c = S->mu(sp[j - 1], sp[j], k);
          if (c == 0) continue;
          sd[j - 1] = k;
          Eigen::Index row = pack(rp, a, sd, b);
          out(row, col) = base.add(out(row, col), c);
        }
      } else {
        // left S-action on M
        for (int t = 0; t + 1 < q; ++t) sd[t] = sp[t];
        const IMat& act = M->left[sp[q - 1]];
        for (int k = 0; k < M->rank; ++k)
          if (act(k, b) != 0) {
            Eigen::Index row = pack(rp, a, sd, k);
            out(row, col) = base.add(out(row, col), act(k, b));
          }
      }
    }
    return out;
  }

  // transposition X_{p,q} -> Y_{q,p}: (rbar, n, sbar, m) -> (sbar, m, rbar, n)
  IMat transpose_to(const NerveBar& y, int p, int q) const {
    IMat out = IMat::Zero(y.dim(q, p), dim(p, q));
    std::vector<int> rp, sp;
    int a, b;
    for (Eigen::Index col = 0; col < out.cols(); ++col) {
      unpack(col, p, q, rp, a, sp, b);
      out(y.pack(sp, b, rp, a), col) = 1;
    }
    return out;
  }
};

}  // namespace

DwmReport check_dwm(const BimoduleSR& m_sr, const BimoduleSR& n_rs, const GAlgebra& r,
                    const GAlgebra& s, int n) {
  if (m_sr.left_over != &s || m_sr.right_over != &r)
    throw std::invalid_argument("check_dwm: M must be an (S,R)-bimodule");
  if (n_rs.left_over != &r || n_rs.right_over != &s)
    throw std::invalid_argument("check_dwm: N must be an (R,S)-bimodule");
  NerveBar x{&r, &s, &n_rs, &m_sr};  // X = N^cyc(R; B(N;S;M))
  NerveBar y{&s, &r, &m_sr, &n_rs};  // Y = N^cyc(S; B(M;R;N))
  const BaseRing& base = r.base();
  auto norm = [&](IMat mm) {
    if (!base.is_z) reduce_mod(mm, base.p);
    return mm;
  };
  DwmReport rep;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q <= n; ++q) {
      // horizontal faces of X match vertical faces of Y under transposition
      for (int i = 0; p >= 1 && i <= p; ++i) {
        IMat lhs = norm(IMat(x.transpose_to(y, p - 1, q) * x.hface(p, q, i)));
        IMat rhs = norm(IMat(y.vface(q, p, i) * x.transpose_to(y, p, q)));
        if (lhs != rhs) {
          rep.ok = false;
          rep.p = p;
          rep.q = q;
          rep.detail = "horizontal face " + std::to_string(i);
          return rep;
        }
      }
      for (int j = 0; q >= 1 && j <= q; ++j) {
        IMat lhs = norm(IMat(x.transpose_to(y, p, q - 1) * x.vface(p, q, j)));
        IMat rhs = norm(IMat(y.hface(q, p, j) * x.transpose_to(y, p, q)));
        if (lhs != rhs) {
          rep.ok = false;
          rep.p = p;
          rep.q = q;
          rep.detail = "vertical face " + std::to_string(j);
          return rep;
        }
      }
    }
  return rep;
}

MoritaReport morita_check(const GAlgebra& r, int n, int maxdeg, bool twisted) {
  GAlgebra a = matrix_algebra(r, n);
  const int sigma_inv = r.group()->order() > 1 ? r.group()->inv(1) : 0;
  Bimodule ma = twisted ? twist_right(regular_bimodule(a), sigma_inv) : regular_bimodule(a);
  Bimodule mr = twisted ? twist_right(regular_bimodule(r), sigma_inv) : regular_bimodule(r);
  ChainComplex ca = hochschild_complex(a, ma, maxdeg + 1);
  ChainComplex cr = hochschild_complex(r, mr, maxdeg + 1);

  // generalized trace on each degree
  const int rr = r.rank();
  auto aidx = [&](int row, int col, int i) { return (row * n + col) * rr + i; };
  std::vector<IMat> f;
  for (int q = 0; q <= maxdeg + 1; ++q) {
    IMat fq = IMat::Zero(cr.ranks[q], ca.ranks[q]);
    // iterate over source basis: q+1 slots of matrix-algebra basis elements
    std::vector<Eigen::Index> idx(q + 1, 0);
    const Eigen::Index arank = a.rank();
    Eigen::Index total = ca.ranks[q];
    for (Eigen::Index col = 0; col < total; ++col) {
      Eigen::Index c = col;
      for (int t = q; t >= 0; --t) {
        idx[t] = c % arank;
        c /= arank;
      }
      // decode each slot as (row, col, i); the trace keeps chains of matching
      // indices around the cycle
      std::vector<int> mrow(q + 1), mcol(q + 1), mi(q + 1);
      for (int t = 0; t <= q; ++t) {
        Eigen::Index e = idx[t];
        mi[t] = static_cast<int>(e % rr);
        e /= rr;
        mcol[t] = static_cast<int>(e % n);
        mrow[t] = static_cast<int>(e / n);
      }
      // slots are (x_1, ..., x_q, m); the cycle condition is
      // col(x_1) = row(x_2), ..., col(x_q) = row(m), col(m) = row(x_1)
      bool keep = true;
      for (int t = 0; t < q; ++t)
        if (mcol[t] != mrow[t + 1]) keep = false;
      if (mcol[q] != mrow[0]) keep = false;
      if (!keep) continue;
      Eigen::Index rowidx = 0;
      for (int t = 0; t <= q; ++t) rowidx = rowidx * rr + mi[t];
      fq(rowidx, col) += 1;
    }
    (void)aidx;
    f.push_back(std::move(fq));
  }

  MoritaReport rep;
  rep.chain_map_ok = is_chain_map(ca, cr, f);
  rep.iso_ok = rep.chain_map_ok && chain_maps_induce_iso(ca, cr, {f}, maxdeg);
  rep.matrix_side = homology(ca);
  rep.ring_side = homology(cr);
  return rep;
}

AdditivityReport additivity_check(const GAlgebra& r, int maxdeg) {
  GAlgebra ut = upper_triangular(r);
  ChainComplex cr = hochschild_complex(r, regular_bimodule(r), maxdeg + 1);
  ChainComplex cu = hochschild_complex(ut, regular_bimodule(ut), maxdeg + 1);
  const int rr = r.rank();
  // cells (0,0) -> block 0, (1,1) -> block 2 in the upper_triangular basis
  auto embed = [&](int cellblock) {
    std::vector<IMat> f;
    for (int q = 0; q <= maxdeg + 1; ++q) {
      IMat fq = IMat::Zero(cu.ranks[q], cr.ranks[q]);
      for (Eigen::Index col = 0; col < cr.ranks[q]; ++col) {
        Eigen::Index c = col, row = 0, mult = 1;
        std::vector<int> digits(q + 1);
        for (int t = q; t >= 0; --t) {
          digits[t] = static_cast<int>(c % rr);
          c /= rr;
        }
        for (int t = 0; t <= q; ++t) row = row * (3 * rr) + (cellblock * rr + digits[t]);
        (void)mult;
        fq(row, col) = 1;
      }
      f.push_back(std::move(fq));
    }
    return f;
  };
  std::vector<IMat> f1 = embed(0), f2 = embed(2);
  AdditivityReport rep;
  rep.chain_maps_ok = is_chain_map(cr, cu, f1) && is_chain_map(cr, cu, f2);
  rep.iso_ok = rep.chain_maps_ok && chain_maps_induce_iso(cr, cu, {f1, f2}, maxdeg);
  rep.triangular = homology(cu);
  rep.ring = homology(cr);
  return rep;
}

H0Quotient::H0Quotient(BaseRing base, Eigen::Index rank, const std::vector<IVec>& span)
    : base_(base), rank_(rank) {
  if (base_.is_z) {
    ZMat rel(rank, static_cast<Eigen::Index>(span.size()));
    for (size_t j = 0; j < span.size(); ++j) rel.col(static_cast<Eigen::Index>(j)) = to_z(span[j]);
    zgroup_ = AbGroup(rank, rel);
  } else {
    IMat rows(static_cast<Eigen::Index>(span.size()), rank);
    for (size_t j = 0; j < span.size(); ++j) rows.row(static_cast<Eigen::Index>(j)) = span[j].transpose();
    rref_mod_p(rows, base_.p);
    echelon_ = rows;
  }
}

ZVec H0Quotient::class_of(const IVec& v) const {
  if (v.size() != rank_) throw std::invalid_argument("H0Quotient::class_of: size");
  if (base_.is_z) return zgroup_.canonical(to_z(v));
  IVec w = v;
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = mod_norm(w(i), base_.p);
  for (Eigen::Index r = 0; r < echelon_.rows(); ++r) {
    Eigen::Index piv = -1;
    for (Eigen::Index c = 0; c < echelon_.cols(); ++c)
      if (echelon_(r, c) != 0) {
        piv = c;
        break;
      }
    if (piv < 0) break;
    long long f = w(piv);
    if (f == 0) continue;
    for (Eigen::Index c = 0; c < w.size(); ++c) w(c) = mod_norm(w(c) - f * echelon_(r, c), base_.p);
  }
  ZVec out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) out(i) = w(i);
  return out;
}

Eigen::Index H0Quotient::dim() const {
  if (base_.is_z) return zgroup_.free_rank();
  Eigen::Index nz = 0;
  for (Eigen::Index r = 0; r < echelon_.rows(); ++r)
    if (!echelon_.row(r).isZero()) ++nz;
  return rank_ - nz;
}

std::string H0Quotient::to_string() const {
  if (base_.is_z) return zgroup_.to_string();
  return "F" + std::to_string(base_.p) + "^" + std::to_string(dim());
}

H0Quotient hh0_untwisted(const GAlgebra& r) {
  std::vector<IVec> span;
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < r.rank(); ++j) {
      IVec v = r.multiply(IVec::Unit(r.rank(), i), IVec::Unit(r.rank(), j)) -
               r.multiply(IVec::Unit(r.rank(), j), IVec::Unit(r.rank(), i));
      for (Eigen::Index t = 0; t < v.size(); ++t) v(t) = r.base().norm(v(t));
      if (!v.isZero()) span.push_back(std::move(v));
    }
  return H0Quotient(r.base(), r.rank(), span);
}

H0Quotient hh0_twisted(const GAlgebra& r) {
  const GroupPtr& g = r.group();
  const int sigma_inv = g->order() > 1 ? g->inv(1) : 0;
  std::vector<IVec> span;
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < r.rank(); ++j) {
      IVec v = r.multiply(IVec::Unit(r.rank(), i), IVec::Unit(r.rank(), j)) -
               r.multiply(IVec::Unit(r.rank(), j), r.act(sigma_inv, IVec::Unit(r.rank(), i)));
      for (Eigen::Index t = 0; t < v.size(); ++t) v(t) = r.base().norm(v(t));
      if (!v.isZero()) span.push_back(std::move(v));
    }
  return H0Quotient(r.base(), r.rank(), span);
}

}  // namespace equihh
