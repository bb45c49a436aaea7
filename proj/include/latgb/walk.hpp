#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "latgb/buchberger.hpp"
#include "latgb/core.hpp"
#include "latgb/order.hpp"

/// Generic Groebner walk between two term orders, driven entirely by facet
/// binomials.  The current basis stays minimal throughout; one facet crossing
/// replaces the facet binomial by its reversal and repairs the basis with
/// S-pairs against that single element.
namespace latgb {

struct WalkStats {
  std::int64_t facets_crossed = 0;
  Index max_basis = 0;
  std::int64_t reductions = 0;
  std::int64_t ms = 0;
};

/// Mutable state of a walk in progress.  facet_list holds exactly the
/// basis vectors that are candidate facet binomials, ascending in the facet
/// preorder with parallel ties broken lexicographically.
struct WalkState {
  WalkContext ctx;
  std::vector<Binomial> basis;
  std::vector<IntVec> facet_list;
  TruncatingPredicate omega;
  std::optional<Grading> grading;
};

/// Strict ordering used for facet_list.
bool facet_less(const WalkContext& ctx, const IntVec& u, const IntVec& v);

/// Adds the (already marked) vector w to the basis; enters it into
/// facet_list when it is a candidate facet binomial.
void insert(WalkState& state, const IntVec& w);

/// Notification hooks for basis mutations inside a facet crossing.
struct CrossHooks {
  std::function<void(const IntVec&)> on_insert;
  std::function<void(const IntVec&)> on_delete;
};

/// Crosses the wall of facet_bin (which must be an element of basis):
/// removes it, computes the wall basis from S-pairs against the reversed
/// binomial, and leaves basis minimal and marked for the far side.  Returns
/// true when the degenerate case occurred (the reversed head was divisible
/// by another head, so only a reduction-and-reinsert happened).  S-binomials
/// with degree outside omega are discarded at every insertion into the pair
/// set.
bool cross_facet(std::vector<Binomial>& basis, const IntVec& facet_bin,
                 const TruncatingPredicate& omega, const std::optional<Grading>& grading,
                 std::int64_t* reductions = nullptr, const EngineLimits& lim = {},
                 const CrossHooks* hooks = nullptr);

/// One iteration of the walk main loop: crosses the wall of the first
/// element of facet_list.  Precondition: facet_list is nonempty.
void facet_buchberger(WalkState& state, WalkStats& stats, const EngineLimits& lim = {});

/// Walks from ctx.source to ctx.target.  start must be a minimal
/// (omega-truncated) Groebner basis over ctx.source; elements with degree
/// outside omega are discarded up front.  Returns the reduced
/// omega-truncated basis over ctx.target.
GroebnerBasis generic_walk(const std::vector<IntVec>& start, const WalkContext& ctx,
                           const TruncatingPredicate& omega, std::optional<Grading> grading,
                           WalkStats* stats = nullptr, const EngineLimits& lim = {});

}  // namespace latgb
