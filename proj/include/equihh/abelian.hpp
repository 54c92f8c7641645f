#ifndef EQUIHH_ABELIAN_HPP
#define EQUIHH_ABELIAN_HPP

#include <string>
#include <vector>

#include "equihh/linalg.hpp"

namespace equihh {

// A finitely generated abelian group presented as Z^n / col(rel), kept with a
// Smith decomposition so that every element class has a unique canonical
// coordinate vector.
class AbGroup {
 public:
  AbGroup() : AbGroup(0) {}

  explicit AbGroup(Eigen::Index ngens, ZMat rel = ZMat())
      : ngens_(ngens), rel_(rel.size() ? rel : ZMat::Zero(ngens, 0)) {
    if (rel_.rows() != ngens_) throw std::invalid_argument("AbGroup: relation rows != gens");
    sf_ = smith_normal_form(rel_);
    for (Eigen::Index i = 0; i < ngens_; ++i) {
      ZInt d = i < static_cast<Eigen::Index>(sf_.diag.size()) ? sf_.diag[i] : ZInt(0);
      if (d == 0)
        free_idx_.push_back(i);
      else if (d > 1) {
        torsion_idx_.push_back(i);
        torsion_.push_back(d);
      }
    }
  }

  static AbGroup free_of_rank(Eigen::Index r) { return AbGroup(r); }

  // Z/d_1 (+) ... (+) Z^r presented with one generator per summand; torsion
  // generators come first so that generators line up with canonical()
  // coordinates.
  static AbGroup from_invariants(Eigen::Index free_rank, const std::vector<ZInt>& torsion) {
    Eigen::Index n = free_rank + static_cast<Eigen::Index>(torsion.size());
    ZMat rel = ZMat::Zero(n, static_cast<Eigen::Index>(torsion.size()));
    for (size_t k = 0; k < torsion.size(); ++k) rel(static_cast<Eigen::Index>(k), k) = torsion[k];
    return AbGroup(n, rel);
  }

  Eigen::Index ngens() const { return ngens_; }
  const ZMat& relations() const { return rel_; }
  Eigen::Index free_rank() const { return static_cast<Eigen::Index>(free_idx_.size()); }
  const std::vector<ZInt>& invariant_factors() const { return torsion_; }
  bool is_trivial() const { return free_rank() == 0 && torsion_.empty(); }

  // Number of canonical coordinates (torsion ones first, then free ones).
  Eigen::Index ncoords() const { return static_cast<Eigen::Index>(torsion_idx_.size() + free_idx_.size()); }

  // Canonical coordinates of the class of x in Z^ngens.
  ZVec canonical(const ZVec& x) const {
    if (x.size() != ngens_) throw std::invalid_argument("AbGroup::canonical: size");
    ZVec y = sf_.u * x;
    ZVec c(ncoords());
    Eigen::Index k = 0;
    for (size_t t = 0; t < torsion_idx_.size(); ++t) {
      ZInt m = torsion_[t];
      ZInt v = y(torsion_idx_[t]) % m;
      if (v < 0) v += m;
      c(k++) = v;
    }
    for (auto i : free_idx_) c(k++) = y(i);
    return c;
  }

  bool same_class(const ZVec& x, const ZVec& y) const { return canonical(x) == canonical(y); }
  bool is_zero_class(const ZVec& x) const { return is_zero(ZVec(canonical(x))); }

  // A generator-level representative for canonical coordinates c.
  ZVec lift(const ZVec& c) const {
    if (c.size() != ncoords()) throw std::invalid_argument("AbGroup::lift: size");
    ZVec y = ZVec::Zero(ngens_);
    Eigen::Index k = 0;
    for (auto i : torsion_idx_) y(i) = c(k++);
    for (auto i : free_idx_) y(i) = c(k++);
    return solve_unimodular(y);
  }

  // Matrix of the canonical-coordinate map on generators (ncoords x ngens)
  // taken over Z (torsion coordinates are understood mod their factor).
  ZMat coord_matrix() const {
    ZMat m(ncoords(), ngens_);
    Eigen::Index k = 0;
    for (auto i : torsion_idx_) m.row(k++) = sf_.u.row(i);
    for (auto i : free_idx_) m.row(k++) = sf_.u.row(i);
    return m;
  }

  // Section of coord_matrix: ngens x ncoords with coord * lift = identity.
  ZMat lift_matrix() const {
    ZMat m(ngens_, ncoords());
    for (Eigen::Index j = 0; j < ncoords(); ++j) {
      ZVec c = ZVec::Zero(ncoords());
      c(j) = 1;
      m.col(j) = lift(c);
    }
    return m;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& d : torsion_) {
      if (!s.empty()) s += " + ";
      s += "Z/" + d.str();
    }
    if (free_rank() > 0) {
      if (!s.empty()) s += " + ";
      s += "Z^" + std::to_string(free_rank());
    }
    return s.empty() ? "0" : s;
  }

  friend bool same_invariants(const AbGroup& a, const AbGroup& b) {
    return a.free_rank() == b.free_rank() && a.torsion_ == b.torsion_;
  }

 private:
  ZVec solve_unimodular(const ZVec& y) const {
    // x with U x = y; U unimodular so an exact integer solve always works.
    auto x = solve_integer(sf_.u, y);
    if (!x) throw std::logic_error("AbGroup: unimodular solve failed");
    return *x;
  }

  Eigen::Index ngens_;
  ZMat rel_;
  SmithForm sf_;
  std::vector<Eigen::Index> torsion_idx_, free_idx_;
  std::vector<ZInt> torsion_;
};

// A homomorphism between presented groups, given by a matrix on generators.
struct AbMap {
  const AbGroup* src = nullptr;
  const AbGroup* dst = nullptr;
  ZMat m;  // dst.ngens x src.ngens

  bool well_defined() const {
    if (m.rows() != dst->ngens() || m.cols() != src->ngens()) return false;
    return columns_in_span(dst->relations(), ZMat(m * src->relations()));
  }

  ZVec apply(const ZVec& x) const { return m * x; }

  bool equals(const AbMap& o) const {
    if (src != o.src || dst != o.dst) return false;
    ZMat diff = m - o.m;
    return columns_in_span(dst->relations(), diff);
  }

  bool is_injective() const {
    // kernel of the induced map: x with m x in col(rel_dst)
    ZMat aug(dst->ngens(), src->ngens() + dst->relations().cols());
    aug.leftCols(src->ngens()) = m;
    aug.rightCols(dst->relations().cols()) = dst->relations();
    ZMat k = integer_kernel(aug);
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      ZVec x = k.col(j).head(src->ngens());
      if (!solve_integer(src->relations(), x)) return false;
    }
    return true;
  }

  bool is_surjective() const {
    ZMat aug(dst->ngens(), src->ngens() + dst->relations().cols());
    aug.leftCols(src->ngens()) = m;
    aug.rightCols(dst->relations().cols()) = dst->relations();
    SmithForm sf = smith_normal_form(aug);
    if (sf.rank < dst->ngens()) return false;
    for (Eigen::Index i = 0; i < dst->ngens(); ++i)
      if (sf.diag[i] != 1) return false;
    return true;
  }

  bool is_isomorphism() const { return well_defined() && is_injective() && is_surjective(); }
};

inline AbMap compose(const AbMap& g, const AbMap& f) {
  if (f.dst != g.src) throw std::invalid_argument("AbMap compose: mismatch");
  return AbMap{f.src, g.dst, ZMat(g.m * f.m)};
}

}  // namespace equihh

#endif
