#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "latgb/buchberger.hpp"
#include "latgb/core.hpp"
#include "latgb/order.hpp"

/// Enumeration of the (truncated) Groebner fan of a positively graded
/// lattice ideal: cells are reduced truncated Groebner bases, facets are
/// crossed by the same wall computation the walk uses, and the whole fan is
/// discovered by breadth-first search with canonical deduplication.
namespace latgb {

/// One full-dimensional cell: its reduced basis and the element vectors
/// whose half-spaces are irredundant (the facet normals of its cone).
struct FanCell {
  GroebnerBasis basis;
  std::vector<IntVec> normals;
};

/// Cells in canonical order (lex on the sorted element vectors) and the
/// adjacency relation as index pairs i < j.
struct FanResult {
  std::vector<FanCell> cells;
  std::vector<std::pair<Index, Index>> edges;
};

struct FanStats {
  Index cells = 0;
  std::int64_t flips = 0;
  std::int64_t ms = 0;
};

struct FanLimits {
  Index max_cells = 100000;
  EngineLimits engine;
};

/// Irredundant facet normals of the Groebner cone {w : w . g >= 0 for all g}
/// of a reduced basis, decided by exact rational LP: g is kept iff some w
/// satisfies w . g <= -1 with w . u >= 0 for every other element u.
std::vector<IntVec> cone_normals(const GroebnerBasis& g);

/// Bundles a basis with its facet normals.
FanCell cone_of(const GroebnerBasis& g);

/// The reduced basis of the neighboring cell across the facet with normal v
/// (v must be one of g's elements and an irredundant facet).  The order
/// attached to the result is a weight order strictly interior to the new
/// cone, found by LP.
GroebnerBasis flip(const GroebnerBasis& g, const IntVec& v, std::int64_t* reductions = nullptr,
                   const EngineLimits& lim = {});

/// Enumerates all cells of the omega-truncated Groebner fan of the lattice
/// ideal generated by bin(w), w in gens.  The grading must be positive; the
/// start cell is the reduced basis over the weight order h^T A for the
/// certificate h.  Throws TerminationError when more than lim.max_cells
/// cells appear.
FanResult enumerate_fan(const std::vector<IntVec>& gens, Grading grading,
                        const TruncatingPredicate& omega, const FanLimits& lim = {},
                        FanStats* stats = nullptr);

/// Index of the first cell (canonical order) whose closed cone contains w.
Index locate_cell(const FanResult& fan, const IntVec& w);

}  // namespace latgb
