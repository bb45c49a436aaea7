#pragma once

#include <span>
#include <vector>

#include "latgb/core.hpp"
#include "latgb/order.hpp"

/// Binomials of a lattice ideal represented as integer vectors:
/// w stands for x^{w+} - x^{w-}.  The two monomials never share support, so
/// vector addition and subtraction implement saturating reduction for free.
namespace latgb {

/// Nonzero oriented vector; the positive part is the head monomial exponent.
class Binomial {
public:
  explicit Binomial(IntVec w) : w_(std::move(w)) {
    if (is_zero(w_)) throw InputError("zero vector is not a binomial");
  }

  const IntVec& vec() const { return w_; }
  IntVec head() const { return pos_part(w_); }
  IntVec tail() const { return neg_part(w_); }
  Index size() const { return w_.size(); }

  friend bool operator==(const Binomial& a, const Binomial& b) { return a.w_ == b.w_; }

private:
  IntVec w_;
};

/// True when pos_part(g) <= pos_part(w) componentwise, i.e. the head of g
/// divides the head monomial of w.  No temporaries.
bool head_divides(const IntVec& g, const IntVec& w);

/// True when pos_part(g) <= neg_part(w): the head of g divides the tail
/// monomial of w.
bool head_divides_tail(const IntVec& g, const IntVec& w);

/// True when the heads of u and v share no variable.
bool heads_disjoint(const IntVec& u, const IntVec& v);

/// S-pair vector of two oriented binomials; the common head cancels, so the
/// result is simply u - v (may be zero when u == v).
IntVec spair(const Binomial& u, const Binomial& v);

/// Componentwise max of the heads: exponent of lcm(x^{u+}, x^{v+}).
IntVec head_lcm(const IntVec& u, const IntVec& v);

/// Full normal form of a binomial vector: repeatedly orient under ord,
/// subtract the first basis element whose head divides the head, then reduce
/// the tail to a fixpoint.  Returns the zero vector when w reduces to zero.
/// step_cap bounds the total number of reduction steps; exceeding it raises
/// TerminationError (the guard only fires when no termination certificate
/// argument applies).
IntVec normal_form(IntVec w, std::span<const Binomial> basis, const TermOrder& ord,
                   std::int64_t* steps = nullptr, std::int64_t step_cap = 1'000'000'000);

/// Normal form of the monomial x^u (u >= 0): subtract basis vectors whose
/// head divides the remaining exponent until none does.  The exponent stays
/// nonnegative throughout.  The basis orientation fixes the descent
/// direction, so no order argument is needed.
IntVec normal_form_monomial(IntVec u, std::span<const Binomial> basis,
                            std::int64_t* steps = nullptr,
                            std::int64_t step_cap = 1'000'000'000);

/// Marked reduction: like normal_form but the stored orientation of w and of
/// the basis is taken as the marking and never re-derived from an order.
/// Used on facets of Groebner cones where the marking comes from the cell,
/// not from a single term order.  Returns zero when w reduces away.
IntVec marked_reduce(IntVec w, std::span<const Binomial> basis, std::int64_t* steps = nullptr,
                     std::int64_t step_cap = 1'000'000'000);

}  // namespace latgb
