#ifndef EQUIHH_HOCHSCHILD_HPP
#define EQUIHH_HOCHSCHILD_HPP

#include "equihh/chain.hpp"

namespace equihh {

// Cyclic bar complex with coefficients: degree q is R^(x)q (x) M, with the
// bimodule in the last tensor slot and d_0 rotating the first algebra factor
// onto it through the right action.
ChainComplex hochschild_complex(const GAlgebra& r, const Bimodule& m, int n);

// Single face map in degree q (exposed for the simplicial-identity tests).
IMat hochschild_face(const GAlgebra& r, const Bimodule& m, int q, int i);

// The twisted cyclic bar complex of a C_n-algebra: degree q is R^(x)(q+1)
// with d_0 rotating and acting by the inverse generator on the rotated
// factor.
ChainComplex twisted_cyclic_complex(const GAlgebra& r, int n);

struct TwistedHH {
  ChainComplex complex;
  HomologyResult hom;
};

// Builds both the coefficient-form and the direct twisted complexes, asserts
// they agree matrix-for-matrix, and returns the homology.
TwistedHH twisted_hochschild(const GAlgebra& r, int n);

// A bimodule shadow with a left action of one algebra and a right action of
// another (possibly different) algebra over the same base.
struct BimoduleSR {
  const GAlgebra* left_over = nullptr;
  const GAlgebra* right_over = nullptr;
  int rank = 0;
  std::vector<IMat> left;   // per left_over basis element
  std::vector<IMat> right;  // per right_over basis element

  void validate() const;
};

BimoduleSR as_sr(const GAlgebra& r, const Bimodule& m);
// column/row modules of M_k(R) over R (used by the Morita/DWM tests)
BimoduleSR column_module(const GAlgebra& mat, const GAlgebra& r, int k);
BimoduleSR row_module(const GAlgebra& r, const GAlgebra& mat, int k);

// B(M; R; N): degree q is M (x) R^(x)q (x) N, using M's right and N's left
// R-action.
ChainComplex two_sided_bar(const BimoduleSR& m, const GAlgebra& r, const BimoduleSR& n, int ndeg);

// The composition map B(M;R;R) -> M (as a chain map to M concentrated in
// degree 0, zero-padded to the same length).
std::pair<ChainComplex, std::vector<IMat>> bar_augmentation(const BimoduleSR& m, const GAlgebra& r,
                                                            int ndeg);

struct DwmReport {
  bool ok = true;
  int p = -1, q = -1;  // first mismatching bidegree when !ok
  std::string detail;
};

// Verifies the transposition isomorphism between the bicomplexes of
// N^cyc(R; B(N;S;M)) and N^cyc(S; B(M;R;N)) facewise for p+q <= n.
DwmReport check_dwm(const BimoduleSR& m_sr, const BimoduleSR& n_rs, const GAlgebra& r,
                    const GAlgebra& s, int n);

struct MoritaReport {
  bool chain_map_ok = false;
  bool iso_ok = false;
  HomologyResult matrix_side, ring_side;
  bool ok() const { return chain_map_ok && iso_ok; }
};

// Generalized trace M_n(R) -> R on cyclic bar complexes; checks it is a chain
// map and induces isomorphisms on homology through degree maxdeg. The twisted
// variant uses coefficients twisted by the inverse generator on both sides.
MoritaReport morita_check(const GAlgebra& r, int n, int maxdeg, bool twisted = false);

struct AdditivityReport {
  bool chain_maps_ok = false;
  bool iso_ok = false;
  HomologyResult triangular, ring;
  bool ok() const { return chain_maps_ok && iso_ok; }
};

// H_*(UT_2(R)) vs H_*(R)^2 via the two diagonal corner embeddings.
AdditivityReport additivity_check(const GAlgebra& r, int maxdeg);

// The degree-0 Hochschild quotient R/span(...) with canonical class
// representatives (used as the Dennis trace target).
class H0Quotient {
 public:
  H0Quotient(BaseRing base, Eigen::Index rank, const std::vector<IVec>& span);

  const BaseRing& base() const { return base_; }
  ZVec class_of(const IVec& v) const;
  bool is_zero(const IVec& v) const { return class_of(v).isZero(); }
  bool same_class(const IVec& a, const IVec& b) const { return class_of(a) == class_of(b); }
  std::string to_string() const;
  Eigen::Index dim() const;  // F_p dimension or Z rank of the quotient

 private:
  BaseRing base_;
  Eigen::Index rank_;
  IMat echelon_;   // F_p: reduced row echelon of the span, as rows
  AbGroup zgroup_; // Z: presented quotient
};

H0Quotient hh0_untwisted(const GAlgebra& r);
// R / span{ r m - m sigma^{-1}(r) } for the generator sigma of a cyclic group
H0Quotient hh0_twisted(const GAlgebra& r);

}  // namespace equihh

#endif
