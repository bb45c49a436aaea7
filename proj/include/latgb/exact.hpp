#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "latgb/core.hpp"

/// Internal exact arithmetic on arbitrary-precision integers and rationals.
///
/// Intermediate quantities in basis reduction, Hermite forms and linear
/// programs outgrow 64 bits long before the answers do, so everything in
/// here runs on GMP and narrows back to Int only at the boundary.
namespace latgb::exact {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;
using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

ZMat to_z(const IntMat& m);
ZVec to_z(const IntVec& v);

/// Narrows to Int; throws OverflowError when the value does not fit.
Int narrow(const mpz_class& z);
IntVec narrow(const ZVec& v);

/// Rank over the rationals.
Index rank(ZMat m);

/// Determinant of a square matrix (fraction-free Bareiss elimination).
mpz_class det(ZMat m);

/// Canonical row-style Hermite normal form with zero rows dropped: pivots
/// positive, pivot columns strictly increasing, entries above a pivot reduced
/// into [0, pivot).  Two integer row spans are equal iff their forms match.
ZMat hnf_rows(ZMat m);

/// True when the rows of a and b generate the same lattice.
bool same_row_lattice(const ZMat& a, const ZMat& b);

/// Exact rational feasibility: finds x with rows[i] . x >= rhs[i] for all i,
/// via a phase-1 simplex with Bland's rule (termination guaranteed).
/// Returns std::nullopt when the system is infeasible.
std::optional<QVec> feasible_point(const QMat& rows, const QVec& rhs);

}  // namespace latgb::exact
