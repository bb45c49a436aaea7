#pragma once

#include <optional>

#include "latgb/core.hpp"

/// Matrix term orders, positive gradings and truncating predicates.
namespace latgb {

enum class Cmp : int { Less = -1, Equal = 0, Greater = 1 };

/// A term order given by an integer matrix whose rows are compared
/// lexicographically: u < v iff the first nonzero entry of M(u - v) is
/// negative.  The matrix must have full column rank so ties mean equality.
class TermOrder {
public:
  /// Throws InputError unless rows has rank == cols over the rationals.
  explicit TermOrder(IntMat rows);

  /// Order refining the weight vector c: the (n+1) x n matrix [c; -e1; ...;
  /// -en].  Ties under c are broken so that earlier variables win, i.e. the
  /// reverse lexicographic refinement with x1 > ... > xn reversed; see
  /// compare() for the exact semantics.
  static TermOrder weight(const IntVec& c);

  Index vars() const { return rows_.cols(); }
  const IntMat& matrix() const { return rows_; }

  /// True when every column's topmost nonzero entry is positive; such an
  /// order is a well order on monomials (1 is the unique minimum).
  bool is_global() const;

private:
  IntMat rows_;
};

/// Convenience free function mirroring TermOrder::weight.
TermOrder weight_order(const IntVec& c);

/// Stack extra weight rows on top of an existing order (refinement).
TermOrder prepend_weights(const IntMat& top, const TermOrder& ord);

/// Compares exponent vectors u, v: sign of the first nonzero entry of
/// M(u - v).
Cmp compare(const TermOrder& ord, const IntVec& u, const IntVec& v);

/// compare(ord, pos_part(w), neg_part(w)) without forming the parts; the
/// sign of the first nonzero entry of M w.
Cmp vector_sign(const TermOrder& ord, const IntVec& w);

/// Returns w or -w so that the positive part is the head monomial under ord.
/// Throws InputError for the zero vector.
IntVec orient(const TermOrder& ord, const IntVec& w);

/// A d x n grading matrix A.  Positivity (existence of h with h^T A > 0)
/// is certified on demand; degrees of lattice vectors are A w+.
class Grading {
public:
  explicit Grading(IntMat a);

  Index dim() const { return a_.rows(); }
  Index vars() const { return a_.cols(); }
  const IntMat& matrix() const { return a_; }

  /// Certificate h with h^T A componentwise positive, once validated.
  const std::optional<IntVec>& certificate() const { return cert_; }

  friend IntVec validate_positive_grading(Grading& g);

private:
  IntMat a_;
  std::optional<IntVec> cert_;
};

/// Finds an integer h with h^T A strictly positive, stores it as the
/// grading's certificate and returns it.  Throws TerminationError when the
/// grading is not positive (no certificate exists).  Uses exact rational LP,
/// so the answer is never wrong by rounding.
IntVec validate_positive_grading(Grading& g);

/// Degree A w+ of a lattice vector.  Throws InputError unless A w = 0
/// (equivalently A w+ = A w-), since only homogeneous vectors have a degree.
IntVec degree(const Grading& g, const IntVec& w);

/// A truncating set of degrees: downward closed along the grading monoid, so
/// discarding S-pairs outside it is sound.
class TruncatingPredicate {
public:
  /// No truncation; every degree belongs.
  static TruncatingPredicate all();

  /// Degrees s with h . s <= bound (inclusive) or h . s < bound (strict).
  static TruncatingPredicate linear_bound(IntVec h, Int bound, bool inclusive = true);

  /// Scalar degrees s (1-row gradings) with s <= b.
  static TruncatingPredicate rhs_bound(Int b);

  bool is_all() const { return kind_ == Kind::All; }
  bool contains(const IntVec& deg) const;

private:
  enum class Kind { All, Linear, Rhs };
  TruncatingPredicate(Kind k, IntVec h, Int bound, bool inclusive)
      : kind_(k), h_(std::move(h)), bound_(bound), inclusive_(inclusive) {}

  Kind kind_;
  IntVec h_;
  Int bound_ = 0;
  bool inclusive_ = true;
};

/// Free-function form of TruncatingPredicate::contains.
bool omega_contains(const TruncatingPredicate& omega, const IntVec& deg);

/// Source and target orders of a walk; the facet preorder lives here.
struct WalkContext {
  TermOrder source;
  TermOrder target;
};

/// Facet preorder on nonzero vectors u, v: scan the rows of
/// D = T (u v^t - v u^t) top-down; the first nonzero row d decides by the
/// sign of the first nonzero entry of S d (source-order comparison of the
/// corresponding monomials).  Equal iff u and v are parallel.
Cmp facet_compare(const WalkContext& ctx, const IntVec& u, const IntVec& v);

/// A stored-orientation vector is a candidate facet binomial when its head
/// is a head under the source order but not under the target order.
bool is_candidate(const WalkContext& ctx, const IntVec& w);

}  // namespace latgb
