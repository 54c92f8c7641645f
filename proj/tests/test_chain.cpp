#include <doctest.h>

#include <random>

#include "equihh/chain.hpp"
#include "equihh/hochschild.hpp"

using namespace equihh;

TEST_CASE("homology of small complexes over Z") {
  // 0 -> Z --x2--> Z -> 0
  ChainComplex c;
  c.base = BaseRing::integers();
  c.ranks = {1, 1, 0};
  c.d.push_back(IMat());
  IMat d1(1, 1);
  d1 << 2;
  c.d.push_back(d1);
  c.d.push_back(IMat::Zero(1, 0));
  HomologyResult h = homology(c);
  CHECK(h.complete_through == 1);
  CHECK(h.free_rank[0] == 0);
  CHECK(h.torsion[0] == std::vector<ZInt>{2});  // H_0 = Z/2
  CHECK(h.free_rank[1] == 0);
  CHECK(h.torsion[1].empty());  // H_1 = 0

  ChainComplex zero;
  zero.base = BaseRing::integers();
  zero.ranks = {0, 0};
  zero.d = {IMat(), IMat::Zero(0, 0)};
  HomologyResult hz = homology(zero);
  CHECK(hz.free_rank[0] == 0);
  CHECK(hz.torsion[0].empty());
}

TEST_CASE("d squared is checked") {
  ChainComplex c;
  c.base = BaseRing::integers();
  c.ranks = {1, 1, 1};
  c.d.push_back(IMat());
  IMat one(1, 1);
  one << 1;
  c.d.push_back(one);
  c.d.push_back(one);
  CHECK_THROWS(c.validate());
}

namespace {

// independent oracle: the normalized Hochschild complex of k[x]/(x^2) with
// coefficients in itself (reduced bar filler x in every middle slot)
ChainComplex normalized_trunc_poly_complex(BaseRing base, int n) {
  // degree q has basis x^(x)q (x) {1, x}: rank 2 in every degree
  ChainComplex c;
  c.base = base;
  c.ranks.assign(n + 1, 2);
  c.d.push_back(IMat());
  for (int q = 1; q <= n; ++q) {
    IMat d = IMat::Zero(2, 2);
    // faces: d_0 sends (x,...,x,m) to (x,...,x, m*x); inner faces multiply
    // x*x = 0; d_q acts by x*m. Signs alternate.
    // m = 1: d_0 gives m' = x; d_q gives m' = x  (sign (-1)^q)
    // m = x: d_0 gives x*x = 0; d_q gives 0
    d(1, 0) += 1;                  // d_0 on m=1
    d(1, 0) += (q % 2 == 0) ? 1 : -1;  // d_q on m=1
    if (!base.is_z) reduce_mod(d, base.p);
    c.d.push_back(std::move(d));
  }
  c.validate();
  return c;
}

}  // namespace

TEST_CASE("bar homology of F_2[x]/(x^2): oracle agrees with the cyclic bar complex") {
  BaseRing f2 = BaseRing::field(2);
  ChainComplex oracle = normalized_trunc_poly_complex(f2, 5);
  HomologyResult ho = homology(oracle);
  // in characteristic 2 every differential vanishes: H_i has dimension 2
  for (int q = 0; q <= 4; ++q) CHECK(ho.free_rank[q] == 2);

  GAlgebra r = truncated_polynomials(f2);
  ChainComplex full = hochschild_complex(r, regular_bimodule(r), 5);
  HomologyResult hf = homology(full);
  for (int q = 0; q <= 4; ++q) CHECK(hf.free_rank[q] == ho.free_rank[q]);
}

TEST_CASE("homology is invariant under change of basis") {
  GAlgebra r = truncated_polynomials(BaseRing::field(3));
  ChainComplex c = hochschild_complex(r, regular_bimodule(r), 4);
  std::mt19937 rng(777);

  // random invertible mod-3 matrices via elementary operations
  std::vector<IMat> u, uinv;
  for (int q = 0; q <= c.top(); ++q) {
    IMat m = IMat::Identity(c.ranks[q], c.ranks[q]);
    IMat minv = m;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(c.ranks[q]) - 1);
    for (int step = 0; step < 3 * c.ranks[q]; ++step) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      long long f = 1 + (rng() % 2);
      m.row(i) += m.row(j) * f;
      minv.col(j) -= minv.col(i) * f;  // inverse of the row operation
    }
    reduce_mod(m, 3);
    reduce_mod(minv, 3);
    u.push_back(m);
    uinv.push_back(minv);
  }
  for (int q = 0; q <= c.top(); ++q)
    CHECK(mat_mul_mod(u[q], uinv[q], 3) == IMat::Identity(c.ranks[q], c.ranks[q]));

  ChainComplex cb = change_basis(c, u, uinv);
  CHECK(homology(cb) == homology(c));

  // same property over Z with unimodular changes
  GAlgebra zr = zc2_conjugation();
  ChainComplex zc = hochschild_complex(zr, regular_bimodule(zr), 3);
  std::vector<IMat> zu, zuinv;
  for (int q = 0; q <= zc.top(); ++q) {
    IMat m = IMat::Identity(zc.ranks[q], zc.ranks[q]);
    IMat minv = m;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(zc.ranks[q]) - 1);
    for (int step = 0; step < 2 * zc.ranks[q]; ++step) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      m.row(i) += m.row(j);
      minv.col(j) -= minv.col(i);
    }
    zu.push_back(m);
    zuinv.push_back(minv);
  }
  ChainComplex zcb = change_basis(zc, zu, zuinv);
  CHECK(homology(zcb) == homology(zc));
}
