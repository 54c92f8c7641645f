#include "equihh/algebra.hpp"

#include <stdexcept>

namespace equihh {

BaseRing BaseRing::field(long long p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be a prime");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("field characteristic must be a prime");
  return BaseRing{false, p};
}

GAlgebra::GAlgebra(GroupPtr group, BaseRing base, int rank, std::vector<long long> mu, IVec unit,
                   std::vector<IMat> action)
    : group_(std::move(group)),
      base_(base),
      rank_(rank),
      mu_(std::move(mu)),
      unit_(std::move(unit)),
      action_(std::move(action)) {
  if (static_cast<int>(mu_.size()) != rank_ * rank_ * rank_)
    throw std::invalid_argument("GAlgebra: structure constant size mismatch");
  if (unit_.size() != rank_) throw std::invalid_argument("GAlgebra: unit size mismatch");
  if (static_cast<int>(action_.size()) != group_->order())
    throw std::invalid_argument("GAlgebra: one action matrix per group element required");
  for (auto& x : mu_) x = base_.norm(x);
  for (Eigen::Index i = 0; i < unit_.size(); ++i) unit_(i) = base_.norm(unit_(i));
  for (auto& m : action_) reduce(m);
  validate();
}

void GAlgebra::reduce(IMat& m) const {
  if (!base_.is_z) reduce_mod(m, base_.p);
}

IVec GAlgebra::multiply(const IVec& x, const IVec& y) const {
  IVec out = IVec::Zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (y(j) == 0) continue;
      long long c = base_.mul(x(i), y(j));
      for (int k = 0; k < rank_; ++k) out(k) = base_.add(out(k), base_.mul(c, mu(i, j, k)));
    }
  }
  return out;
}

IVec GAlgebra::act(int g, const IVec& x) const {
  IVec out = action_[g] * x;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = base_.norm(out(i));
  return out;
}

void GAlgebra::validate() const {
  auto basis = [&](int i) {
    IVec e = IVec::Zero(rank_);
    e(i) = 1;
    return e;
  };
  for (int i = 0; i < rank_; ++i) {
    if (multiply(unit_, basis(i)) != basis(i) || multiply(basis(i), unit_) != basis(i))
      throw std::invalid_argument("GAlgebra: unit axiom fails");
    for (int j = 0; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k)
        if (multiply(multiply(basis(i), basis(j)), basis(k)) !=
            multiply(basis(i), multiply(basis(j), basis(k))))
          throw std::invalid_argument("GAlgebra: associativity fails");
  }
  const int n = group_->order();
  if (action_[0] != IMat::Identity(rank_, rank_))
    throw std::invalid_argument("GAlgebra: identity must act as the identity");
  for (int g = 0; g < n; ++g) {
    if (act(g, unit_) != unit_) throw std::invalid_argument("GAlgebra: action must fix the unit");
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (act(g, multiply(basis(i), basis(j))) != multiply(act(g, basis(i)), act(g, basis(j))))
          throw std::invalid_argument("GAlgebra: action is not by ring maps");
    for (int h = 0; h < n; ++h) {
      IMat hg = action_[h] * action_[g];
      if (!base_.is_z) reduce_mod(hg, base_.p);
      if (hg != action_[group_->mul(h, g)])
        throw std::invalid_argument("GAlgebra: action is not a group homomorphism");
    }
  }
}

Bimodule::Bimodule(const GAlgebra* over, int rank, std::vector<IMat> left, std::vector<IMat> right)
    : over_(over), rank_(rank), left_(std::move(left)), right_(std::move(right)) {
  if (static_cast<int>(left_.size()) != over_->rank() ||
      static_cast<int>(right_.size()) != over_->rank())
    throw std::invalid_argument("Bimodule: need one action matrix per algebra basis element");
  const BaseRing& b = over_->base();
  for (auto& m : left_)
    if (!b.is_z) reduce_mod(m, b.p);
  for (auto& m : right_)
    if (!b.is_z) reduce_mod(m, b.p);
  validate();
}

IVec Bimodule::left_act(const IVec& r, const IVec& m) const {
  const BaseRing& b = over_->base();
  IVec out = IVec::Zero(rank_);
  for (int i = 0; i < over_->rank(); ++i) {
    if (r(i) == 0) continue;
    IVec t = left_[i] * m;
    for (int k = 0; k < rank_; ++k) out(k) = b.add(out(k), b.mul(r(i), t(k)));
  }
  return out;
}

IVec Bimodule::right_act(const IVec& m, const IVec& r) const {
  const BaseRing& b = over_->base();
  IVec out = IVec::Zero(rank_);
  for (int i = 0; i < over_->rank(); ++i) {
    if (r(i) == 0) continue;
    IVec t = right_[i] * m;
    for (int k = 0; k < rank_; ++k) out(k) = b.add(out(k), b.mul(r(i), t(k)));
  }
  return out;
}

void Bimodule::validate() const {
  const GAlgebra& R = *over_;
  const BaseRing& b = R.base();
  const int r = R.rank();
  auto norm = [&](IMat m) {
    if (!b.is_z) reduce_mod(m, b.p);
    return m;
  };
  IMat lunit = IMat::Zero(rank_, rank_), runit = IMat::Zero(rank_, rank_);
  for (int i = 0; i < r; ++i) {
    lunit += left_[i] * R.unit()(i);
    runit += right_[i] * R.unit()(i);
  }
  if (norm(lunit) != IMat::Identity(rank_, rank_) || norm(runit) != IMat::Identity(rank_, rank_))
    throw std::invalid_argument("Bimodule: unit does not act as identity");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      IMat lcomp = IMat::Zero(rank_, rank_), rcomp = IMat::Zero(rank_, rank_);
      for (int k = 0; k < r; ++k) {
        lcomp += left_[k] * R.mu(i, j, k);
        rcomp += right_[k] * R.mu(i, j, k);
      }
      if (norm(IMat(left_[i] * left_[j])) != norm(lcomp))
        throw std::invalid_argument("Bimodule: left action not associative");
      if (norm(IMat(right_[j] * right_[i])) != norm(rcomp))
        throw std::invalid_argument("Bimodule: right action not associative");
      if (norm(IMat(left_[i] * right_[j])) != norm(IMat(right_[j] * left_[i])))
        throw std::invalid_argument("Bimodule: left and right actions do not commute");
    }
}

Bimodule regular_bimodule(const GAlgebra& r) {
  const int n = r.rank();
  std::vector<IMat> left(n, IMat::Zero(n, n)), right(n, IMat::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        left[i](k, j) = r.mu(i, j, k);
        right[i](k, j) = r.mu(j, i, k);
      }
  return Bimodule(&r, n, std::move(left), std::move(right));
}

Bimodule twist_right(const Bimodule& m, int g) {
  const GAlgebra& R = m.over();
  std::vector<IMat> left, right;
  for (int i = 0; i < R.rank(); ++i) left.push_back(m.left(i));
  for (int i = 0; i < R.rank(); ++i) {
    IMat t = IMat::Zero(m.rank(), m.rank());
    for (int k = 0; k < R.rank(); ++k) t += m.right(k) * R.action(g)(k, i);
    if (!R.base().is_z) reduce_mod(t, R.base().p);
    right.push_back(std::move(t));
  }
  return Bimodule(&m.over(), m.rank(), std::move(left), std::move(right));
}

Bimodule twist_left(const Bimodule& m, int g) {
  const GAlgebra& R = m.over();
  std::vector<IMat> left, right;
  for (int i = 0; i < R.rank(); ++i) {
    IMat t = IMat::Zero(m.rank(), m.rank());
    for (int k = 0; k < R.rank(); ++k) t += m.left(k) * R.action(g)(k, i);
    if (!R.base().is_z) reduce_mod(t, R.base().p);
    left.push_back(std::move(t));
  }
  for (int i = 0; i < R.rank(); ++i) right.push_back(m.right(i));
  return Bimodule(&m.over(), m.rank(), std::move(left), std::move(right));
}

GAlgebra matrix_algebra(const GAlgebra& r, int n) {
  if (n < 1) throw std::invalid_argument("matrix_algebra: n must be >= 1");
  const int rr = r.rank(), m = n * n * rr;
  auto idx = [&](int a, int b, int i) { return (a * n + b) * rr + i; };
  std::vector<long long> mu(static_cast<size_t>(m) * m * m, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (b != c) continue;
          for (int i = 0; i < rr; ++i)
            for (int j = 0; j < rr; ++j)
              for (int k = 0; k < rr; ++k)
                mu[(static_cast<size_t>(idx(a, b, i)) * m + idx(c, d, j)) * m + idx(a, d, k)] +=
                    r.mu(i, j, k);
        }
  IVec unit = IVec::Zero(m);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < rr; ++i) unit(idx(a, a, i)) = r.unit()(i);
  std::vector<IMat> action;
  for (int g = 0; g < r.group()->order(); ++g) {
    IMat am = IMat::Zero(m, m);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int i = 0; i < rr; ++i)
          for (int k = 0; k < rr; ++k) am(idx(a, b, k), idx(a, b, i)) = r.action(g)(k, i);
    action.push_back(std::move(am));
  }
  return GAlgebra(r.group(), r.base(), m, std::move(mu), std::move(unit), std::move(action));
}

GAlgebra upper_triangular(const GAlgebra& r) {
  const int rr = r.rank(), m = 3 * rr;
  // cells (0,0), (0,1), (1,1) in that order
  auto cell = [](int a, int b) { return (a == 0 && b == 0) ? 0 : (a == 0 ? 1 : 2); };
  auto idx = [&](int a, int b, int i) { return cell(a, b) * rr + i; };
  std::vector<long long> mu(static_cast<size_t>(m) * m * m, 0);
  int cells[3][2] = {{0, 0}, {0, 1}, {1, 1}};
  for (auto [a, b] : cells)
    for (auto [c, d] : cells) {
      if (b != c) continue;
      for (int i = 0; i < rr; ++i)
        for (int j = 0; j < rr; ++j)
          for (int k = 0; k < rr; ++k)
            mu[(static_cast<size_t>(idx(a, b, i)) * m + idx(c, d, j)) * m + idx(a, d, k)] +=
                r.mu(i, j, k);
    }
  IVec unit = IVec::Zero(m);
  for (int i = 0; i < rr; ++i) {
    unit(idx(0, 0, i)) = r.unit()(i);
    unit(idx(1, 1, i)) = r.unit()(i);
  }
  std::vector<IMat> action;
  for (int g = 0; g < r.group()->order(); ++g) {
    IMat am = IMat::Zero(m, m);
    for (auto [a, b] : cells)
      for (int i = 0; i < rr; ++i)
        for (int k = 0; k < rr; ++k) am(idx(a, b, k), idx(a, b, i)) = r.action(g)(k, i);
    action.push_back(std::move(am));
  }
  return GAlgebra(r.group(), r.base(), m, std::move(mu), std::move(unit), std::move(action));
}

GAlgebra skew_group_ring(const GAlgebra& r) {
  const GroupPtr& g = r.group();
  const int n = g->order(), rr = r.rank(), m = n * rr;
  auto idx = [&](int a, int i) { return a * rr + i; };
  std::vector<long long> mu(static_cast<size_t>(m) * m * m, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g->mul(a, b);
      for (int i = 0; i < rr; ++i)
        for (int j = 0; j < rr; ++j) {
          // (b_i u_a)(b_j u_b) = b_i a(b_j) u_{ab}
          IVec ej = IVec::Zero(rr);
          ej(j) = 1;
          IVec v = r.multiply(IVec::Unit(rr, i), r.act(a, ej));
          for (int k = 0; k < rr; ++k)
            mu[(static_cast<size_t>(idx(a, i)) * m + idx(b, j)) * m + idx(ab, k)] += v(k);
        }
    }
  IVec unit = IVec::Zero(m);
  for (int i = 0; i < rr; ++i) unit(idx(0, i)) = r.unit()(i);
  GroupPtr triv = make_group(FiniteGroup::cyclic(1));
  std::vector<IMat> action{IMat::Identity(m, m)};
  return GAlgebra(triv, r.base(), m, std::move(mu), std::move(unit), std::move(action));
}

GAlgebra group_algebra(BaseRing base, const FiniteGroup& g) {
  const int n = g.order();
  std::vector<long long> mu(static_cast<size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mu[(static_cast<size_t>(a) * n + b) * n + g.mul(a, b)] = 1;
  IVec unit = IVec::Zero(n);
  unit(0) = 1;
  GroupPtr triv = make_group(FiniteGroup::cyclic(1));
  return GAlgebra(triv, base, n, std::move(mu), std::move(unit), {IMat::Identity(n, n)});
}

GAlgebra field_algebra(BaseRing base) {
  GroupPtr triv = make_group(FiniteGroup::cyclic(1));
  return GAlgebra(triv, base, 1, {1}, IVec::Ones(1), {IMat::Identity(1, 1)});
}

GAlgebra f4_with_frobenius() {
  GroupPtr c2 = make_group(FiniteGroup::cyclic(2));
  std::vector<long long> mu(8, 0);
  auto set = [&](int i, int j, int k, long long v) { mu[(i * 2 + j) * 2 + k] = v; };
  set(0, 0, 0, 1);
  set(0, 1, 1, 1);
  set(1, 0, 1, 1);
  set(1, 1, 0, 1);  // w^2 = 1 + w
  set(1, 1, 1, 1);
  IVec unit(2);
  unit << 1, 0;
  IMat frob(2, 2);
  frob << 1, 1, 0, 1;  // w -> 1 + w
  return GAlgebra(c2, BaseRing::field(2), 2, std::move(mu), std::move(unit),
                  {IMat::Identity(2, 2), frob});
}

namespace {

GAlgebra field_with_trivial_c2(long long p) {
  GroupPtr c2 = make_group(FiniteGroup::cyclic(2));
  return GAlgebra(c2, BaseRing::field(p), 1, {1}, IVec::Ones(1),
                  {IMat::Identity(1, 1), IMat::Identity(1, 1)});
}

}  // namespace

GAlgebra f2_trivial_c2() { return field_with_trivial_c2(2); }
GAlgebra f3_trivial_c2() { return field_with_trivial_c2(3); }

GAlgebra truncated_polynomials(BaseRing base) {
  GroupPtr triv = make_group(FiniteGroup::cyclic(1));
  std::vector<long long> mu(8, 0);
  mu[(0 * 2 + 0) * 2 + 0] = 1;
  mu[(0 * 2 + 1) * 2 + 1] = 1;
  mu[(1 * 2 + 0) * 2 + 1] = 1;  // x^2 = 0
  IVec unit(2);
  unit << 1, 0;
  return GAlgebra(triv, base, 2, std::move(mu), std::move(unit), {IMat::Identity(2, 2)});
}

GAlgebra zc2_conjugation() {
  GroupPtr c2 = make_group(FiniteGroup::cyclic(2));
  std::vector<long long> mu(8, 0);
  mu[(0 * 2 + 0) * 2 + 0] = 1;
  mu[(0 * 2 + 1) * 2 + 1] = 1;
  mu[(1 * 2 + 0) * 2 + 1] = 1;
  mu[(1 * 2 + 1) * 2 + 0] = 1;  // t^2 = 1
  IVec unit(2);
  unit << 1, 0;
  // inversion fixes both basis elements of Z[C_2]
  return GAlgebra(c2, BaseRing::integers(), 2, std::move(mu), std::move(unit),
                  {IMat::Identity(2, 2), IMat::Identity(2, 2)});
}

bool algebras_isomorphic(const GAlgebra& a, const GAlgebra& b) {
  if (!(a.base() == b.base()) || a.base().is_z || a.rank() != b.rank()) return false;
  const int r = a.rank();
  const long long p = a.base().p;
  long long total = 1;
  for (int i = 0; i < r * r; ++i) {
    total *= p;
    if (total > 2000000) throw std::invalid_argument("algebras_isomorphic: search space too large");
  }
  IMat t = IMat::Zero(r, r);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        t(i, j) = c % p;
        c /= p;
      }
    if (rank_mod_p(t, p) != r) continue;
    IVec u = t * a.unit();
    for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = mod_norm(u(i), p);
    if (u != b.unit()) continue;
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j) {
        IVec lhs = t * a.multiply(IVec::Unit(r, i), IVec::Unit(r, j));
        for (Eigen::Index q = 0; q < lhs.size(); ++q) lhs(q) = mod_norm(lhs(q), p);
        IVec ti = t.col(i), tj = t.col(j);
        IVec rhs = b.multiply(ti, tj);
        if (lhs != rhs) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace equihh
