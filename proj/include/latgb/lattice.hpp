#pragma once

#include <optional>
#include <vector>

#include "latgb/buchberger.hpp"
#include "latgb/core.hpp"
#include "latgb/order.hpp"

/// Integer lattices: kernel bases, LLL reduction and the saturated Groebner
/// basis of the associated lattice ideal.
namespace latgb {

/// A list of linearly independent integer vectors spanning a lattice.
struct LatticeBasis {
  std::vector<IntVec> vectors;
};

/// Basis of the integer kernel {v : A v = 0} of a d x n matrix, computed by
/// unimodular column elimination, so the result generates the full kernel
/// lattice (it is automatically saturated).  Vectors are sign-normalized
/// (first nonzero entry positive) and lex-sorted.
LatticeBasis kernel_basis(const IntMat& a);

/// LLL reduction with parameter delta = delta_num/delta_den (default 3/4).
/// Exact rational Gram-Schmidt; size reduction rounds mu to the nearest
/// integer with ties toward zero, so coefficients with |mu| <= 1/2 are left
/// alone.  The recorded unimodular transform is determinant-checked and the
/// output spans the same lattice as the input.  Throws InputError when the
/// input vectors are dependent.
LatticeBasis lll_reduce(const LatticeBasis& basis, Int delta_num = 3, Int delta_den = 4);

/// Reduced Groebner basis over ord of the lattice ideal of the lattice
/// spanned by basis: the saturation of <bin(v) : v in basis> with respect to
/// all variables.  The saturating engine performs the saturation implicitly.
/// Termination needs a positive grading or a global order, exactly as in
/// truncated_buchberger.
GroebnerBasis saturate(const LatticeBasis& basis, const TermOrder& ord,
                       std::optional<Grading> grading = std::nullopt,
                       EngineStats* stats = nullptr, const EngineLimits& lim = {});

}  // namespace latgb
