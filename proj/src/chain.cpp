#include "equihh/chain.hpp"

#include <stdexcept>

namespace equihh {

void ChainComplex::validate() const {
  if (ranks.empty()) throw std::invalid_argument("chain complex: needs at least degree 0");
  if (d.size() != ranks.size()) throw std::invalid_argument("chain complex: d size mismatch");
  for (int q = 1; q <= top(); ++q)
    if (d[q].rows() != ranks[q - 1] || d[q].cols() != ranks[q])
      throw std::invalid_argument("chain complex: differential shape mismatch");
  for (int q = 2; q <= top(); ++q) {
    IMat dd = d[q - 1] * d[q];
    if (!base.is_z) reduce_mod(dd, base.p);
    if (!dd.isZero()) throw std::invalid_argument("chain complex: d o d != 0");
  }
}

std::string HomologyResult::degree_string(int q) const {
  if (!base.is_z) return "dim " + std::to_string(free_rank[q]);
  AbGroup g = AbGroup::from_invariants(free_rank[q], torsion[q]);
  return g.to_string();
}

namespace {

struct DegreeData {
  // F_p: kernel basis K, image-in-kernel coordinates Z, dimension
  // Z: kernel basis K, homology presentation
  IMat kp, zp;
  Eigen::Index dim = 0;
  ZMat kz;
  AbGroup hz;
};

DegreeData degree_data(const ChainComplex& c, int q) {
  DegreeData out;
  const Eigen::Index nq = c.ranks[q];
  if (c.base.is_z) {
    ZMat dq = (q >= 1) ? to_z(c.d[q]) : ZMat::Zero(0, nq);
    out.kz = integer_kernel(dq);
    ZMat y = ZMat::Zero(out.kz.cols(), (q + 1 <= c.top()) ? c.d[q + 1].cols() : 0);
    if (q + 1 <= c.top()) {
      ZMat im = to_z(c.d[q + 1]);
      for (Eigen::Index j = 0; j < im.cols(); ++j) {
        auto sol = solve_integer(out.kz, ZVec(im.col(j)));
        if (!sol) throw std::logic_error("homology: image not contained in kernel");
        y.col(j) = *sol;
      }
    }
    out.hz = AbGroup(out.kz.cols(), y);
  } else {
    IMat dq = (q >= 1) ? c.d[q] : IMat::Zero(0, nq);
    out.kp = kernel_mod_p(dq, c.base.p);
    if (q + 1 <= c.top()) {
      const IMat& im = c.d[q + 1];
      out.zp = IMat::Zero(out.kp.cols(), im.cols());
      for (Eigen::Index j = 0; j < im.cols(); ++j) {
        auto sol = solve_mod_p(out.kp, IVec(im.col(j)), c.base.p);
        if (!sol) throw std::logic_error("homology: image not contained in kernel");
        out.zp.col(j) = *sol;
      }
    } else {
      out.zp = IMat::Zero(out.kp.cols(), 0);
    }
    out.dim = out.kp.cols() - rank_mod_p(out.zp, c.base.p);
  }
  return out;
}

}  // namespace

HomologyResult homology(const ChainComplex& c) {
  c.validate();
  HomologyResult r;
  r.base = c.base;
  r.complete_through = c.top() - 1;
  for (int q = 0; q < c.top(); ++q) {
    DegreeData dd = degree_data(c, q);
    if (c.base.is_z) {
      r.free_rank.push_back(dd.hz.free_rank());
      r.torsion.push_back(dd.hz.invariant_factors());
    } else {
      r.free_rank.push_back(dd.dim);
      r.torsion.push_back({});
    }
  }
  return r;
}

bool is_chain_map(const ChainComplex& a, const ChainComplex& b, const std::vector<IMat>& f) {
  if (!(a.base == b.base)) return false;
  int n = std::min(a.top(), b.top());
  if (static_cast<int>(f.size()) < n + 1) return false;
  for (int q = 0; q <= n; ++q)
    if (f[q].rows() != b.ranks[q] || f[q].cols() != a.ranks[q]) return false;
  for (int q = 1; q <= n; ++q) {
    IMat diff = f[q - 1] * a.d[q] - b.d[q] * f[q];
    if (!a.base.is_z) reduce_mod(diff, a.base.p);
    if (!diff.isZero()) return false;
  }
  return true;
}

bool chain_maps_induce_iso(const ChainComplex& a, const ChainComplex& b,
                           const std::vector<std::vector<IMat>>& maps, int maxdeg) {
  if (maxdeg >= a.top() || maxdeg >= b.top())
    throw std::invalid_argument("chain_maps_induce_iso: complexes not deep enough");
  for (int q = 0; q <= maxdeg; ++q) {
    DegreeData da = degree_data(a, q);
    DegreeData db = degree_data(b, q);
    if (a.base.is_z) {
      const Eigen::Index ka = da.kz.cols();
      const Eigen::Index nrel = da.hz.relations().cols();
      // direct sum of |maps| copies of H_q(A)
      const Eigen::Index nm = static_cast<Eigen::Index>(maps.size());
      ZMat rel = ZMat::Zero(ka * nm, nrel * nm);
      for (Eigen::Index i = 0; i < nm; ++i)
        rel.block(ka * i, nrel * i, ka, nrel) = da.hz.relations();
      AbGroup sum(ka * nm, rel);
      ZMat w(db.kz.cols(), ka * nm);
      for (Eigen::Index i = 0; i < nm; ++i) {
        ZMat fk = to_z(maps[i][q]) * da.kz;
        for (Eigen::Index j = 0; j < ka; ++j) {
          auto sol = solve_integer(db.kz, ZVec(fk.col(j)));
          if (!sol) return false;
          w.col(ka * i + j) = *sol;
        }
      }
      AbMap ind{&sum, &db.hz, w};
      if (!ind.is_isomorphism()) return false;
    } else {
      const long long p = a.base.p;
      Eigen::Index dim_src = 0;
      std::vector<IMat> ws;
      for (size_t i = 0; i < maps.size(); ++i) {
        IMat fk = mat_mul_mod(maps[i][q], da.kp, p);
        IMat w(db.kp.cols(), da.kp.cols());
        for (Eigen::Index j = 0; j < da.kp.cols(); ++j) {
          auto sol = solve_mod_p(db.kp, IVec(fk.col(j)), p);
          if (!sol) return false;
          w.col(j) = *sol;
        }
        ws.push_back(std::move(w));
        dim_src += da.dim;
      }
      if (dim_src != db.dim) return false;
      // surjectivity of the combined map onto H_q(B)
      const Eigen::Index nw = static_cast<Eigen::Index>(ws.size());
      IMat stacked(db.kp.cols(), db.zp.cols() + da.kp.cols() * nw);
      stacked.leftCols(db.zp.cols()) = db.zp;
      for (Eigen::Index i = 0; i < nw; ++i)
        stacked.middleCols(db.zp.cols() + da.kp.cols() * i, da.kp.cols()) = ws[i];
      Eigen::Index image_dim = rank_mod_p(stacked, p) - rank_mod_p(db.zp, p);
      if (image_dim != db.dim) return false;
    }
  }
  return true;
}

ChainComplex change_basis(const ChainComplex& c, const std::vector<IMat>& u,
                          const std::vector<IMat>& uinv) {
  ChainComplex out;
  out.base = c.base;
  out.ranks = c.ranks;
  out.d.push_back(IMat());
  for (int q = 1; q <= c.top(); ++q) {
    IMat nd = u[q - 1] * c.d[q] * uinv[q];
    if (!c.base.is_z) reduce_mod(nd, c.base.p);
    out.d.push_back(std::move(nd));
  }
  return out;
}

}  // namespace equihh
