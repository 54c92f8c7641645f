#ifndef EQUIHH_ALGEBRA_HPP
#define EQUIHH_ALGEBRA_HPP

#include <string>

#include "equihh/group.hpp"
#include "equihh/linalg.hpp"

namespace equihh {

// Coefficients: Z or F_p. All scalar arithmetic passes through here so that
// entries stay normalized mod p in the field case.
struct BaseRing {
  bool is_z = true;
  long long p = 0;

  long long norm(long long x) const { return is_z ? x : mod_norm(x, p); }
  long long add(long long a, long long b) const { return norm(a + b); }
  long long sub(long long a, long long b) const { return norm(a - b); }
  long long mul(long long a, long long b) const { return norm(a * b); }
  bool operator==(const BaseRing& o) const { return is_z == o.is_z && p == o.p; }
  std::string name() const { return is_z ? "z" : "f" + std::to_string(p); }

  static BaseRing integers() { return BaseRing{true, 0}; }
  static BaseRing field(long long p);
};

// A finite-rank associative unital algebra over the base, free on a chosen
// basis, with a G-action by ring maps.
class GAlgebra {
 public:
  GAlgebra(GroupPtr group, BaseRing base, int rank, std::vector<long long> mu, IVec unit,
           std::vector<IMat> action);

  const GroupPtr& group() const { return group_; }
  const BaseRing& base() const { return base_; }
  int rank() const { return rank_; }
  const IVec& unit() const { return unit_; }
  const IMat& action(int g) const { return action_[g]; }

  // structure constant: coefficient of basis k in b_i * b_j
  long long mu(int i, int j, int k) const { return mu_[(i * rank_ + j) * rank_ + k]; }
  IVec multiply(const IVec& x, const IVec& y) const;
  IVec act(int g, const IVec& x) const;

  void validate() const;

 private:
  void reduce(IMat& m) const;

  GroupPtr group_;
  BaseRing base_;
  int rank_;
  std::vector<long long> mu_;
  IVec unit_;
  std::vector<IMat> action_;
};

// An (R,R)-bimodule, free over the base, with commuting left/right actions.
class Bimodule {
 public:
  Bimodule(const GAlgebra* over, int rank, std::vector<IMat> left, std::vector<IMat> right);

  const GAlgebra& over() const { return *over_; }
  int rank() const { return rank_; }
  const IMat& left(int i) const { return left_[i]; }    // action of basis b_i of R
  const IMat& right(int i) const { return right_[i]; }
  IVec left_act(const IVec& r, const IVec& m) const;
  IVec right_act(const IVec& m, const IVec& r) const;

  void validate() const;

 private:
  const GAlgebra* over_;
  int rank_;
  std::vector<IMat> left_, right_;
};

struct TwistDescriptor {
  bool right_side = true;
  int element = 0;
};

Bimodule regular_bimodule(const GAlgebra& r);
// same left action, right action m.r := m * g(r)
Bimodule twist_right(const Bimodule& m, int g);
// same right action, left action r.m := g(r) * m
Bimodule twist_left(const Bimodule& m, int g);

GAlgebra matrix_algebra(const GAlgebra& r, int n);
GAlgebra upper_triangular(const GAlgebra& r);
// R*G on basis {b_i u_g} with u_g r = g(r) u_g; the result carries the
// trivial group action.
GAlgebra skew_group_ring(const GAlgebra& r);
GAlgebra group_algebra(BaseRing base, const FiniteGroup& g);

// Presets used throughout the tests and the CLI.
GAlgebra field_algebra(BaseRing base);             // the base itself, trivial group
GAlgebra f4_with_frobenius();                      // F_4 = F_2[w]/(w^2+w+1), C_2 acting
GAlgebra f2_trivial_c2();                          // F_2 with the trivial C_2-action
GAlgebra f3_trivial_c2();                          // F_3 with the trivial C_2-action
GAlgebra truncated_polynomials(BaseRing base);     // k[x]/(x^2), trivial group
GAlgebra zc2_conjugation();                        // Z[C_2], C_2 acting by inversion

// Brute-force search for a unital ring isomorphism between two algebras over
// the same small finite base field.
bool algebras_isomorphic(const GAlgebra& a, const GAlgebra& b);

}  // namespace equihh

#endif
