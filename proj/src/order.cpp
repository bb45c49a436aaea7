#include "latgb/order.hpp"

#include <utility>

#include "latgb/exact.hpp"

namespace latgb {

TermOrder::TermOrder(IntMat rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0 || rows_.cols() == 0) throw InputError("term order matrix is empty");
  if (exact::rank(exact::to_z(rows_)) != rows_.cols())
    throw InputError("term order matrix does not have full column rank");
}

TermOrder TermOrder::weight(const IntVec& c) {
  const Index n = c.size();
  if (n == 0) throw InputError("weight vector is empty");
  IntMat m = IntMat::Zero(n + 1, n);
  m.row(0) = c.transpose();
  for (Index i = 0; i < n; ++i) m(i + 1, i) = -1;
  return TermOrder(std::move(m));
}

bool TermOrder::is_global() const {
  for (Index j = 0; j < rows_.cols(); ++j) {
    Index i = 0;
    while (i < rows_.rows() && rows_(i, j) == 0) ++i;
    if (i == rows_.rows() || rows_(i, j) < 0) return false;
  }
  return true;
}

TermOrder weight_order(const IntVec& c) { return TermOrder::weight(c); }

TermOrder prepend_weights(const IntMat& top, const TermOrder& ord) {
  if (top.cols() != ord.vars()) throw InputError("weight row size mismatch");
  IntMat m(top.rows() + ord.matrix().rows(), ord.vars());
  m.topRows(top.rows()) = top;
  m.bottomRows(ord.matrix().rows()) = ord.matrix();
  return TermOrder(std::move(m));
}

Cmp vector_sign(const TermOrder& ord, const IntVec& w) {
  if (w.size() != ord.vars()) throw InputError("vector size mismatch with order");
  const IntMat& m = ord.matrix();
  for (Index i = 0; i < m.rows(); ++i) {
    const Int s = checked_dot(m.row(i).transpose(), w);
    if (s > 0) return Cmp::Greater;
    if (s < 0) return Cmp::Less;
  }
  return Cmp::Equal;
}

Cmp compare(const TermOrder& ord, const IntVec& u, const IntVec& v) {
  return vector_sign(ord, checked_sub(u, v));
}

IntVec orient(const TermOrder& ord, const IntVec& w) {
  switch (vector_sign(ord, w)) {
    case Cmp::Greater:
      return w;
    case Cmp::Less:
      return checked_neg(w);
    default:
      throw InputError("cannot orient the zero vector");
  }
}

Grading::Grading(IntMat a) : a_(std::move(a)) {
  if (a_.rows() == 0 || a_.cols() == 0) throw InputError("grading matrix is empty");
}

IntVec validate_positive_grading(Grading& g) {
  if (g.cert_) return *g.cert_;
  const IntMat& a = g.a_;
  // Feasibility of h^T A >= 1 columnwise; any solution scales to h^T A > 0.
  exact::QMat rows(static_cast<std::size_t>(a.cols()),
                   exact::QVec(static_cast<std::size_t>(a.rows())));
  exact::QVec rhs(static_cast<std::size_t>(a.cols()), mpq_class(1));
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          mpq_class(static_cast<long>(a(i, j)));
  const auto sol = exact::feasible_point(rows, rhs);
  if (!sol)
    throw TerminationError("grading is not positive: no vector h with h^T A > 0 exists");
  // Scale to an integer certificate.
  mpz_class lcm = 1;
  for (const auto& q : *sol) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  exact::ZVec hz(sol->size());
  for (std::size_t i = 0; i < sol->size(); ++i) {
    mpq_class scaled = (*sol)[i] * mpq_class(lcm);
    hz[i] = scaled.get_num();
  }
  IntVec h = exact::narrow(hz);
  for (Index j = 0; j < a.cols(); ++j)
    if (checked_dot(h, a.col(j)) <= 0) throw Error("grading certificate verification failed");
  g.cert_ = h;
  return h;
}

IntVec degree(const Grading& g, const IntVec& w) {
  if (w.size() != g.vars()) throw InputError("vector size mismatch with grading");
  const IntVec wp = pos_part(w);
  const IntVec wm = neg_part(w);
  IntVec dp(g.dim()), dm(g.dim());
  for (Index i = 0; i < g.dim(); ++i) {
    dp[i] = checked_dot(g.matrix().row(i).transpose(), wp);
    dm[i] = checked_dot(g.matrix().row(i).transpose(), wm);
  }
  if (dp != dm) throw InputError("vector is not homogeneous for the grading");
  return dp;
}

TruncatingPredicate TruncatingPredicate::all() {
  return TruncatingPredicate(Kind::All, IntVec(), 0, true);
}

TruncatingPredicate TruncatingPredicate::linear_bound(IntVec h, Int bound, bool inclusive) {
  if (h.size() == 0) throw InputError("linear bound functional is empty");
  return TruncatingPredicate(Kind::Linear, std::move(h), bound, inclusive);
}

TruncatingPredicate TruncatingPredicate::rhs_bound(Int b) {
  if (b < 0) throw InputError("right hand side bound is negative");
  return TruncatingPredicate(Kind::Rhs, IntVec(), b, true);
}

bool TruncatingPredicate::contains(const IntVec& deg) const {
  switch (kind_) {
    case Kind::All:
      return true;
    case Kind::Linear:
      if (deg.size() != h_.size()) throw InputError("degree size mismatch with bound");
      {
        const Int v = checked_dot(h_, deg);
        return inclusive_ ? v <= bound_ : v < bound_;
      }
    case Kind::Rhs:
      if (deg.size() != 1) throw InputError("rhs bound needs one-dimensional degrees");
      return deg[0] <= bound_;
  }
  return false;
}

bool omega_contains(const TruncatingPredicate& omega, const IntVec& deg) {
  return omega.contains(deg);
}

Cmp facet_compare(const WalkContext& ctx, const IntVec& u, const IntVec& v) {
  if (u.size() != v.size() || u.size() != ctx.target.vars())
    throw InputError("vector size mismatch with walk context");
  const IntMat& t = ctx.target.matrix();
  for (Index i = 0; i < t.rows(); ++i) {
    const Int tu = checked_dot(t.row(i).transpose(), u);
    const Int tv = checked_dot(t.row(i).transpose(), v);
    // Row i of T(u v^t - v u^t) is (T u)_i v - (T v)_i u.
    IntVec d(u.size());
    bool zero = true;
    for (Index j = 0; j < u.size(); ++j) {
      d[j] = checked_sub(checked_mul(tu, v[j]), checked_mul(tv, u[j]));
      if (d[j] != 0) zero = false;
    }
    if (zero) continue;
    const Cmp s = vector_sign(ctx.source, d);
    if (s != Cmp::Equal) return s;
  }
  return Cmp::Equal;
}

bool is_candidate(const WalkContext& ctx, const IntVec& w) {
  if (is_zero(w)) return false;
  return vector_sign(ctx.source, w) == Cmp::Greater && vector_sign(ctx.target, w) == Cmp::Less;
}

}  // namespace latgb
