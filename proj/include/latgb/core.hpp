#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

/// Core scalar/vector types and checked 64-bit arithmetic.
///
/// Every public quantity in the library is an exact integer.  All arithmetic
/// on user-scale data goes through the checked_* helpers below; an operation
/// that would wrap raises OverflowError instead of returning a wrong answer.
namespace latgb {

using Int = std::int64_t;
using Index = Eigen::Index;

/// Column vector of exact 64-bit integers.
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
/// Dense row-major view is never required; default column-major throughout.
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Base class for all library errors.  exit_code() matches the CLI contract:
/// 2 malformed input, 3 overflow, 4 termination certificate failure.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual int exit_code() const { return 2; }
};

/// Malformed input or an argument violating a documented precondition.
class InputError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 2; }
};

/// 64-bit arithmetic would wrap.
class OverflowError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

/// No termination certificate (order not global and no positive grading),
/// or a resource cap that guards against divergence was exceeded.
class TerminationError : public Error {
public:
  using Error::Error;
  int exit_code() const override { return 4; }
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// Componentwise checked u + v.
inline IntVec checked_add(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size()) throw InputError("vector size mismatch");
  IntVec r(u.size());
  for (Index i = 0; i < u.size(); ++i) r[i] = checked_add(u[i], v[i]);
  return r;
}

/// Componentwise checked u - v.
inline IntVec checked_sub(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size()) throw InputError("vector size mismatch");
  IntVec r(u.size());
  for (Index i = 0; i < u.size(); ++i) r[i] = checked_sub(u[i], v[i]);
  return r;
}

inline IntVec checked_neg(const IntVec& u) {
  IntVec r(u.size());
  for (Index i = 0; i < u.size(); ++i) r[i] = checked_neg(u[i]);
  return r;
}

/// Checked dot product.
inline Int checked_dot(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size()) throw InputError("vector size mismatch");
  Int acc = 0;
  for (Index i = 0; i < u.size(); ++i) acc = checked_add(acc, checked_mul(u[i], v[i]));
  return acc;
}

/// w+ : componentwise max(w, 0).  Exponent vector of the head monomial when w
/// is oriented.
inline IntVec pos_part(const IntVec& w) { return w.cwiseMax(Int{0}); }

/// w- : componentwise max(-w, 0), so w = pos_part(w) - neg_part(w) with
/// disjoint supports.
inline IntVec neg_part(const IntVec& w) {
  IntVec r(w.size());
  for (Index i = 0; i < w.size(); ++i) r[i] = w[i] < 0 ? checked_neg(w[i]) : 0;
  return r;
}

inline bool is_zero(const IntVec& w) { return w.isZero(); }

/// Sign (-1, 0, +1) of the first nonzero entry; 0 for the zero vector.
inline int sign_of_first_nonzero(const IntVec& w) {
  for (Index i = 0; i < w.size(); ++i) {
    if (w[i] > 0) return 1;
    if (w[i] < 0) return -1;
  }
  return 0;
}

/// Strict lexicographic comparison of raw vectors; deterministic tie-break
/// used wherever a total order on equal-size vectors is needed.
inline bool lex_less(const IntVec& u, const IntVec& v) {
  for (Index i = 0; i < u.size() && i < v.size(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i];
  }
  return u.size() < v.size();
}

/// True if every entry of u is <= the matching entry of v.  With exponent
/// vectors this is monomial divisibility x^u | x^v.
inline bool cwise_le(const IntVec& u, const IntVec& v) {
  return (u.array() <= v.array()).all();
}

}  // namespace latgb
