#include "latgb/walk.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <span>

namespace latgb {

bool facet_less(const WalkContext& ctx, const IntVec& u, const IntVec& v) {
  switch (facet_compare(ctx, u, v)) {
    case Cmp::Less:
      return true;
    case Cmp::Greater:
      return false;
    default:
      return lex_less(u, v);
  }
}

void insert(WalkState& state, const IntVec& w) {
  state.basis.emplace_back(w);
  if (!is_candidate(state.ctx, w)) return;
  const auto pos =
      std::lower_bound(state.facet_list.begin(), state.facet_list.end(), w,
                       [&](const IntVec& a, const IntVec& b) { return facet_less(state.ctx, a, b); });
  state.facet_list.insert(pos, w);
}

namespace {

void erase_exact(std::vector<IntVec>& list, const IntVec& w) {
  const auto it = std::find(list.begin(), list.end(), w);
  if (it != list.end()) list.erase(it);
}

void note_insert(const CrossHooks* hooks, const IntVec& w) {
  if (hooks && hooks->on_insert) hooks->on_insert(w);
}

void note_delete(const CrossHooks* hooks, const IntVec& w) {
  if (hooks && hooks->on_delete) hooks->on_delete(w);
}

/// Degree-membership filter for S-binomials entering the pair set.
bool omega_admits(const TruncatingPredicate& omega, const std::optional<Grading>& grading,
                  const IntVec& s) {
  if (omega.is_all() || !grading) return true;
  return omega.contains(degree(*grading, s));
}

}  // namespace

bool cross_facet(std::vector<Binomial>& basis, const IntVec& facet_bin,
                 const TruncatingPredicate& omega, const std::optional<Grading>& grading,
                 std::int64_t* reductions, const EngineLimits& lim, const CrossHooks* hooks) {
  const auto self = std::find_if(basis.begin(), basis.end(),
                                 [&](const Binomial& g) { return g.vec() == facet_bin; });
  if (self == basis.end()) throw InputError("facet binomial is not a basis element");
  basis.erase(self);
  note_delete(hooks, facet_bin);

  IntVec bin = checked_neg(facet_bin);

  // Degenerate wall: the reversed head is divisible inside the remaining
  // basis, so the facet element is replaced by its reduction and no other
  // element changes.
  bool divisible = false;
  for (const Binomial& g : basis)
    if (head_divides(g.vec(), bin)) {
      divisible = true;
      break;
    }
  if (divisible) {
    bin = marked_reduce(std::move(bin), basis, reductions, lim.step_cap);
    if (is_zero(bin)) throw Error("facet binomial reduced to zero; basis was not minimal");
    const IntVec w = checked_neg(bin);
    basis.emplace_back(w);
    note_insert(hooks, w);
    return true;
  }

  std::deque<IntVec> spairs;
  for (const Binomial& g : basis) {
    if (heads_disjoint(bin, g.vec())) continue;
    IntVec s = checked_sub(g.vec(), bin);
    if (is_zero(s)) continue;
    if (!omega_admits(omega, grading, s)) continue;
    spairs.push_back(std::move(s));
  }

  for (std::size_t i = basis.size(); i-- > 0;) {
    if (head_divides(bin, basis[i].vec())) {
      note_delete(hooks, basis[i].vec());
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  std::int64_t local_steps = 0;
  const Binomial wall(bin);
  while (!spairs.empty()) {
    IntVec s = std::move(spairs.front());
    spairs.pop_front();
    // Reduce against the wall binomial alone (tail steps cannot create new
    // head divisors, so a single pass suffices).
    s = marked_reduce(std::move(s), std::span<const Binomial>(&wall, 1), &local_steps,
                      lim.step_cap);
    if (is_zero(s)) continue;
    bool covered = false;
    for (const Binomial& g : basis)
      if (head_divides(g.vec(), s)) {
        covered = true;
        break;
      }
    if (covered) continue;
    for (std::size_t i = basis.size(); i-- > 0;) {
      if (head_divides(s, basis[i].vec())) {
        note_delete(hooks, basis[i].vec());
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    basis.emplace_back(s);
    note_insert(hooks, s);
    IntVec next = checked_sub(s, bin);
    if (!is_zero(next) && omega_admits(omega, grading, next)) spairs.push_back(std::move(next));
  }
  if (reductions) *reductions += local_steps;

  basis.emplace_back(bin);
  note_insert(hooks, bin);
  return false;
}

void facet_buchberger(WalkState& state, WalkStats& stats, const EngineLimits& lim) {
  if (state.facet_list.empty()) throw InputError("facet_buchberger needs a nonempty facet list");
  const IntVec facet_bin = state.facet_list.front();
  CrossHooks hooks;
  hooks.on_insert = [&](const IntVec& w) {
    if (!is_candidate(state.ctx, w)) return;
    const auto pos = std::lower_bound(
        state.facet_list.begin(), state.facet_list.end(), w,
        [&](const IntVec& a, const IntVec& b) { return facet_less(state.ctx, a, b); });
    state.facet_list.insert(pos, w);
  };
  hooks.on_delete = [&](const IntVec& w) { erase_exact(state.facet_list, w); };
  cross_facet(state.basis, facet_bin, state.omega, state.grading, &stats.reductions, lim, &hooks);
  ++stats.facets_crossed;
  stats.max_basis = std::max<Index>(stats.max_basis, static_cast<Index>(state.basis.size()));
}

GroebnerBasis generic_walk(const std::vector<IntVec>& start, const WalkContext& ctx,
                           const TruncatingPredicate& omega, std::optional<Grading> grading,
                           WalkStats* stats, const EngineLimits& lim) {
  const auto t0 = std::chrono::steady_clock::now();
  WalkStats local;
  WalkStats& st = stats ? *stats : local;

  if (!omega.is_all() && !grading) throw InputError("truncation requires a grading");
  if (grading) {
    if (grading->vars() != ctx.source.vars()) throw InputError("grading size mismatch with order");
    validate_positive_grading(*grading);
  }
  if (ctx.source.vars() != ctx.target.vars()) throw InputError("walk orders disagree on dimension");

  WalkState state{ctx, {}, {}, omega, grading};
  for (const IntVec& w : start) {
    if (w.size() != ctx.source.vars()) throw InputError("start vector size mismatch");
    if (is_zero(w)) continue;
    if (grading) {
      const IntVec d = degree(*grading, w);
      if (!omega.contains(d)) continue;
    }
    insert(state, orient(ctx.source, w));
  }
  st.max_basis = std::max<Index>(st.max_basis, static_cast<Index>(state.basis.size()));

  while (!state.facet_list.empty()) {
    if (st.facets_crossed >= lim.crossing_cap)
      throw TerminationError("facet crossing cap exceeded");
    facet_buchberger(state, st, lim);
  }

  std::vector<Binomial> reduced = autoreduce(std::move(state.basis), lim.step_cap);
  canonicalize(reduced);
  for (const Binomial& g : reduced)
    if (vector_sign(ctx.target, g.vec()) != Cmp::Greater)
      throw Error("walk result is not marked for the target order");
  st.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                t0)
              .count();
  return GroebnerBasis{std::move(reduced), ctx.target, omega, std::move(grading), true};
}

}  // namespace latgb
