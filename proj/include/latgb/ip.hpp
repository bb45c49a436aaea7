#pragma once

#include <optional>
#include <vector>

#include "latgb/buchberger.hpp"
#include "latgb/core.hpp"
#include "latgb/lattice.hpp"
#include "latgb/order.hpp"
#include "latgb/walk.hpp"

/// Integer programming over knapsack constraints a . x = b, x >= 0, via
/// truncated Groebner bases used as test sets.
namespace latgb {

/// A knapsack instance: positive row a, right hand side b, optional cost c
/// for maximization.
struct IPInstance {
  IntVec a;
  Int b = 0;
  std::optional<IntVec> c;
};

enum class SolveMethod { Direct, Walk };

/// Per-solve counters; engine is used by the direct method, walk by the
/// walk method, saturation by optimize's toric preprocessing.
struct IPRun {
  EngineStats engine;
  WalkStats walk;
  EngineStats saturation;
};

/// Generators of the lattice ideal encoding feasibility: vectors
/// e_{x_i} - a_i e_t in Z^{1+n}, coordinate 0 belonging to the slack
/// variable t.  Requires every a_i >= 1.
std::vector<IntVec> feasibility_ideal(const IntVec& a);

/// The 1 x (1+n) grading (1, a_1, ..., a_n); positive with certificate (1).
Grading knapsack_grading(const IntVec& a);

/// Decides whether a . x = b has a solution x in N^n and returns one if so.
/// Computes a Groebner basis of the feasibility ideal over the weight of t
/// (directly, or walking from -t) and normal-forms the monomial t^b; the
/// solution is read off when the t-exponent drops to zero.  With truncated
/// set, the basis is truncated at right hand side b, which preserves the
/// answer for this b.
std::optional<IntVec> solve_feasibility(const IntVec& a, Int b, SolveMethod method,
                                        bool truncated, IPRun* run = nullptr,
                                        const EngineLimits& lim = {});

/// Reduced Groebner basis over ord of the toric ideal of A: the lattice
/// ideal of ker(A), computed as kernel basis -> LLL -> saturation.
GroebnerBasis toric_ideal(const IntMat& a, const TermOrder& ord, EngineStats* stats = nullptr,
                          const EngineLimits& lim = {});

/// Maximizes c . x over a . x = b, x in N^n, starting from the feasible
/// point x0.  The test set is the toric basis of (a) over weight -c; the
/// normal form of x0 against it is the optimum.  With truncated set, the
/// test set is truncated at right hand side b (sound for this fiber).
IntVec optimize(const IntVec& a, Int b, const IntVec& c, const IntVec& x0,
                bool truncated, SolveMethod method = SolveMethod::Direct, IPRun* run = nullptr,
                const EngineLimits& lim = {});

}  // namespace latgb
