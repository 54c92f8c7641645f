#ifndef EQUIHH_LINALG_HPP
#define EQUIHH_LINALG_HPP

#include <Eigen/Dense>

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equihh {

// Arbitrary-precision integer scalar. A value wrapper around cpp_int with a
// closed constructor set, so Eigen's scalar-promotion probes never touch the
// boost converting constructors (which choke on Eigen expression types).
class ZInt {
 public:
  using Rep = boost::multiprecision::cpp_int;

  ZInt() : v_(0) {}
  ZInt(int x) : v_(x) {}
  ZInt(long long x) : v_(x) {}
  explicit ZInt(Rep v) : v_(std::move(v)) {}

  const Rep& rep() const { return v_; }
  std::string str() const { return v_.str(); }
  long long to_ll() const { return static_cast<long long>(v_); }

  ZInt operator-() const { return ZInt(Rep(-v_)); }
  ZInt& operator+=(const ZInt& o) { v_ += o.v_; return *this; }
  ZInt& operator-=(const ZInt& o) { v_ -= o.v_; return *this; }
  ZInt& operator*=(const ZInt& o) { v_ *= o.v_; return *this; }
  ZInt& operator/=(const ZInt& o) { v_ /= o.v_; return *this; }
  ZInt& operator%=(const ZInt& o) { v_ %= o.v_; return *this; }

  friend ZInt operator+(ZInt a, const ZInt& b) { return a += b; }
  friend ZInt operator-(ZInt a, const ZInt& b) { return a -= b; }
  friend ZInt operator*(ZInt a, const ZInt& b) { return a *= b; }
  friend ZInt operator/(ZInt a, const ZInt& b) { return a /= b; }  // truncated
  friend ZInt operator%(ZInt a, const ZInt& b) { return a %= b; }
  friend bool operator==(const ZInt& a, const ZInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ZInt& a, const ZInt& b) { return a.v_ != b.v_; }
  friend bool operator<(const ZInt& a, const ZInt& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ZInt& a, const ZInt& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ZInt& a, const ZInt& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ZInt& a, const ZInt& b) { return a.v_ >= b.v_; }
  friend ZInt abs(const ZInt& a) { return ZInt(Rep(boost::multiprecision::abs(a.v_))); }
  friend std::ostream& operator<<(std::ostream& os, const ZInt& a) { return os << a.v_; }

 private:
  Rep v_;
};

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using ZMat = Mat<ZInt>;
using ZVec = Vec<ZInt>;
using IMat = Mat<long long>;
using IVec = Vec<long long>;

}  // namespace equihh

namespace Eigen {
template <>
struct NumTraits<equihh::ZInt> : GenericNumTraits<equihh::ZInt> {
  typedef equihh::ZInt Real;
  typedef equihh::ZInt NonInteger;
  typedef equihh::ZInt Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return equihh::ZInt(0); }
  static inline Real dummy_precision() { return equihh::ZInt(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace equihh {

inline bool is_zero(const ZMat& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

inline bool is_zero(const ZVec& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) return false;
  return true;
}

inline ZMat to_z(const IMat& a) {
  ZMat r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}

inline ZVec to_z(const IVec& a) {
  ZVec r(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = a(i);
  return r;
}

inline long long to_ll(const ZInt& x) { return static_cast<long long>(x); }

// ---------------------------------------------------------------------------
// Smith normal form: U * A * V = D with U, V unimodular, D diagonal with
// nonnegative entries d_0 | d_1 | ... .
// ---------------------------------------------------------------------------

struct SmithForm {
  ZMat d;                   // full m x n diagonal matrix
  ZMat u;                   // m x m
  ZMat v;                   // n x n
  Eigen::Index rank = 0;    // number of nonzero diagonal entries
  std::vector<ZInt> diag;   // the min(m,n) diagonal entries
};

namespace detail {

inline bool snf_is_lone(const ZMat& a, Eigen::Index t) {
  for (Eigen::Index i = t + 1; i < a.rows(); ++i)
    if (a(i, t) != 0) return false;
  for (Eigen::Index j = t + 1; j < a.cols(); ++j)
    if (a(t, j) != 0) return false;
  return true;
}

inline bool snf_find_pivot(const ZMat& a, Eigen::Index t, Eigen::Index& pi, Eigen::Index& pj) {
  bool found = false;
  ZInt best = 0;
  for (Eigen::Index i = t; i < a.rows(); ++i)
    for (Eigen::Index j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      ZInt v = abs(a(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace detail

inline SmithForm smith_normal_form(const ZMat& a0) {
  const Eigen::Index m = a0.rows(), n = a0.cols();
  SmithForm sf;
  sf.d = a0;
  sf.u = ZMat::Identity(m, m);
  sf.v = ZMat::Identity(n, n);
  ZMat& d = sf.d;

  const Eigen::Index nmin = std::min(m, n);
  for (Eigen::Index t = 0; t < nmin; ++t) {
    Eigen::Index pi = t, pj = t;
    if (!detail::snf_find_pivot(d, t, pi, pj)) break;
    d.row(t).swap(d.row(pi));
    sf.u.row(t).swap(sf.u.row(pi));
    d.col(t).swap(d.col(pj));
    sf.v.col(t).swap(sf.v.col(pj));

    while (true) {
      bool reduced = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        ZInt q = d(i, t) / d(t, t);
        if (q != 0) {
          d.row(i) -= d.row(t) * q;
          sf.u.row(i) -= sf.u.row(t) * q;
        }
        if (d(i, t) != 0) {  // remainder smaller than pivot; swap it up
          d.row(t).swap(d.row(i));
          sf.u.row(t).swap(sf.u.row(i));
          reduced = false;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        ZInt q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col(j) -= d.col(t) * q;
          sf.v.col(j) -= sf.v.col(t) * q;
        }
        if (d(t, j) != 0) {
          d.col(t).swap(d.col(j));
          sf.v.col(t).swap(sf.v.col(j));
          reduced = false;
        }
      }
      if (!reduced) continue;
      if (!detail::snf_is_lone(d, t)) continue;
      // enforce divisibility d_t | d_ij on the trailing block
      bool divides = true;
      for (Eigen::Index i = t + 1; i < m && divides; ++i)
        for (Eigen::Index j = t + 1; j < n && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.row(t) += d.row(i);
            sf.u.row(t) += sf.u.row(i);
            divides = false;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.row(t) *= ZInt(-1);
      sf.u.row(t) *= ZInt(-1);
    }
  }

  for (Eigen::Index t = 0; t < nmin; ++t) {
    sf.diag.push_back(d(t, t));
    if (d(t, t) != 0) ++sf.rank;
  }
  return sf;
}

// Integer kernel: columns form a basis of ker(A); the basis is saturated
// (extends to a basis of Z^n), so integer vectors in ker(A) have integer
// coordinates in it.
inline ZMat integer_kernel(const ZMat& a) {
  SmithForm sf = smith_normal_form(a);
  const Eigen::Index n = a.cols();
  ZMat k(n, n - sf.rank);
  for (Eigen::Index j = sf.rank; j < n; ++j) k.col(j - sf.rank) = sf.v.col(j);
  return k;
}

// One integer solution of A x = b, if any.
inline std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b) {
  SmithForm sf = smith_normal_form(a);
  ZVec y = sf.u * b;
  ZVec z = ZVec::Zero(a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    ZInt di = (i < static_cast<Eigen::Index>(sf.diag.size())) ? sf.diag[i] : ZInt(0);
    if (di == 0) {
      if (y(i) != 0) return std::nullopt;
    } else {
      if (y(i) % di != 0) return std::nullopt;
      if (i < a.cols()) z(i) = y(i) / di;
    }
  }
  return ZVec(sf.v * z);
}

// Columns of B generated by columns of A (as a sublattice test).
inline bool columns_in_span(const ZMat& a, const ZMat& b) {
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    if (!solve_integer(a, ZVec(b.col(j)))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Dense linear algebra over F_p on long-long storage.
// ---------------------------------------------------------------------------

inline long long mod_norm(long long x, long long p) {
  long long r = x % p;
  return r < 0 ? r + p : r;
}

inline long long mod_inv(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = mod_norm(a, p);
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("mod_inv: not invertible");
  return mod_norm(t, p);
}

inline void reduce_mod(IMat& a, long long p) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = mod_norm(a(i, j), p);
}

// Row-reduces a (entries normalized mod p), returns pivot columns.
inline std::vector<Eigen::Index> rref_mod_p(IMat& a, long long p) {
  reduce_mod(a, p);
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(row).swap(a.row(piv));
    long long inv = mod_inv(a(row, col), p);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = mod_norm(a(row, j) * inv, p);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      long long f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j)
        a(i, j) = mod_norm(a(i, j) - f * a(row, j), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline Eigen::Index rank_mod_p(IMat a, long long p) {
  return static_cast<Eigen::Index>(rref_mod_p(a, p).size());
}

// Basis of ker(A) mod p, as columns.
inline IMat kernel_mod_p(IMat a, long long p) {
  const Eigen::Index n = a.cols();
  std::vector<Eigen::Index> piv = rref_mod_p(a, p);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  IMat k = IMat::Zero(n, n - static_cast<Eigen::Index>(piv.size()));
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    k(free, out) = 1;
    for (size_t r = 0; r < piv.size(); ++r) k(piv[r], out) = mod_norm(-a(r, free), p);
    ++out;
  }
  return k;
}

// One solution of A x = b mod p, if any.
inline std::optional<IVec> solve_mod_p(const IMat& a, const IVec& b, long long p) {
  IMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Eigen::Index> piv = rref_mod_p(aug, p);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  IVec x = IVec::Zero(a.cols());
  for (size_t r = 0; r < piv.size(); ++r) x(piv[r]) = aug(r, a.cols());
  return x;
}

inline IMat mat_mul_mod(const IMat& a, const IMat& b, long long p) {
  IMat c = a * b;
  reduce_mod(c, p);
  return c;
}

}  // namespace equihh

#endif
