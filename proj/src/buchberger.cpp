#include "latgb/buchberger.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "latgb/exact.hpp"
#include "latgb/lattice.hpp"

namespace latgb {

IntVec monomial_degree(const Grading& g, const IntVec& exps) {
  if (exps.size() != g.vars()) throw InputError("vector size mismatch with grading");
  IntVec d(g.dim());
  for (Index i = 0; i < g.dim(); ++i) d[i] = checked_dot(g.matrix().row(i).transpose(), exps);
  return d;
}

void canonicalize(std::vector<Binomial>& elements) {
  std::sort(elements.begin(), elements.end(),
            [](const Binomial& a, const Binomial& b) { return lex_less(a.vec(), b.vec()); });
}

namespace {

struct PairEntry {
  Int key;
  std::int64_t seq;
  std::int32_t i, j;
};

struct PairLater {
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    return a.key != b.key ? a.key > b.key : a.seq > b.seq;
  }
};

using PairQueue = std::priority_queue<PairEntry, std::vector<PairEntry>, PairLater>;

GroebnerBasis buchberger_core(const std::vector<IntVec>& gens, const TermOrder& ord,
                              const TruncatingPredicate& omega, std::optional<Grading> grading,
                              EngineStats& st, const EngineLimits& lim) {
  if (!omega.is_all() && !grading) throw InputError("truncation requires a grading");
  IntVec h;
  if (grading) {
    if (grading->vars() != ord.vars()) throw InputError("grading size mismatch with order");
    h = validate_positive_grading(*grading);
  } else if (!ord.is_global()) {
    throw TerminationError("no termination certificate: order is not global and no grading given");
  }

  std::vector<Binomial> g;
  for (const IntVec& w : gens) {
    if (w.size() != ord.vars()) throw InputError("generator size mismatch with order");
    if (is_zero(w)) continue;
    if (grading) {
      const IntVec d = degree(*grading, w);  // validates homogeneity
      if (!omega.contains(d)) continue;
    }
    IntVec o = orient(ord, w);
    bool dup = false;
    for (const Binomial& e : g)
      if (e.vec() == o) {
        dup = true;
        break;
      }
    if (!dup) g.emplace_back(std::move(o));
  }

  PairQueue queue;
  std::int64_t seq = 0;
  auto push_pair = [&](std::int32_t i, std::int32_t j) {
    const IntVec& u = g[static_cast<std::size_t>(i)].vec();
    const IntVec& v = g[static_cast<std::size_t>(j)].vec();
    if (heads_disjoint(u, v)) {
      ++st.pairs_skipped;
      return;
    }
    Int key = 0;
    if (grading) {
      const IntVec pair_deg = monomial_degree(*grading, head_lcm(u, v));
      if (!omega.contains(pair_deg)) {
        ++st.pairs_discarded;
        return;
      }
      key = checked_dot(h, pair_deg);
    }
    queue.push(PairEntry{key, seq++, i, j});
    ++st.pairs_considered;
  };

  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      push_pair(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
  st.max_basis = std::max<Index>(st.max_basis, static_cast<Index>(g.size()));

  while (!queue.empty()) {
    const PairEntry e = queue.top();
    queue.pop();
    const IntVec s0 = spair(g[static_cast<std::size_t>(e.i)], g[static_cast<std::size_t>(e.j)]);
    if (is_zero(s0)) continue;
    const IntVec s = normal_form(s0, g, ord, &st.reductions, lim.step_cap);
    if (is_zero(s)) continue;
    g.emplace_back(s);
    const auto last = static_cast<std::int32_t>(g.size() - 1);
    for (std::int32_t k = 0; k < last; ++k) push_pair(k, last);
    st.max_basis = std::max<Index>(st.max_basis, static_cast<Index>(g.size()));
  }

  std::vector<Binomial> reduced = autoreduce(std::move(g), lim.step_cap);
  canonicalize(reduced);
  return GroebnerBasis{std::move(reduced), ord, omega, std::move(grading), true};
}

// A strictly positive integer weight vanishing on every generator, or nullopt
// when none exists (exactly when the generated lattice meets the nonnegative
// orthant nontrivially).  With a grading, h^T A is such a weight; otherwise
// one is sought by exact LP over the orthogonal complement of the generators.
std::optional<IntVec> saturation_weight(const std::vector<IntVec>& work,
                                        std::optional<Grading>& grading) {
  const Index n = work.front().size();
  if (grading) {
    const IntVec h = validate_positive_grading(*grading);
    const IntMat& a = grading->matrix();
    IntVec w(n);
    for (Index j = 0; j < n; ++j) w[j] = checked_dot(h, IntVec(a.col(j)));
    return w;
  }
  IntMat m(static_cast<Index>(work.size()), n);
  for (std::size_t r = 0; r < work.size(); ++r)
    m.row(static_cast<Index>(r)) = work[r].transpose();
  const LatticeBasis comp = kernel_basis(m);
  if (comp.vectors.empty()) return std::nullopt;
  exact::QMat rows(static_cast<std::size_t>(n), exact::QVec(comp.vectors.size(), mpq_class(0)));
  for (std::size_t c = 0; c < comp.vectors.size(); ++c)
    for (Index i = 0; i < n; ++i)
      rows[static_cast<std::size_t>(i)][c] = mpq_class(static_cast<long>(comp.vectors[c][i]));
  const exact::QVec rhs(static_cast<std::size_t>(n), mpq_class(1));
  const auto sol = exact::feasible_point(rows, rhs);
  if (!sol) return std::nullopt;
  mpz_class lcm = 1;
  for (const auto& q : *sol) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  exact::ZVec w(static_cast<std::size_t>(n), mpz_class(0));
  for (std::size_t c = 0; c < comp.vectors.size(); ++c) {
    const mpz_class coeff = mpq_class((*sol)[c] * lcm).get_num();
    for (Index i = 0; i < n; ++i)
      w[static_cast<std::size_t>(i)] += coeff * comp.vectors[c][i];
  }
  mpz_class g = 0;
  for (const mpz_class& z : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g > 1)
    for (mpz_class& z : w) z /= g;
  return exact::narrow(w);
}

// Global order refining the weight w under which variable i is cheapest: for
// a w-homogeneous binomial whose i-th component is nonzero, the head monomial
// never contains x_i, so the full x_i power sits on the tail.  A reduced
// basis computed under this order therefore generates an ideal that is its
// own saturation with respect to x_i.
TermOrder cheapest_variable_order(const IntVec& w, Index i) {
  const Index n = w.size();
  IntMat m = IntMat::Zero(n + 1, n);
  m.row(0) = w.transpose();
  m(1, i) = -1;
  Index r = 2;
  for (Index j = 0; j < n; ++j) {
    if (j == i) continue;
    m(r++, j) = -1;
  }
  return TermOrder(std::move(m));
}

}  // namespace

GroebnerBasis truncated_buchberger(const std::vector<IntVec>& gens, const TermOrder& ord,
                                   const TruncatingPredicate& omega,
                                   std::optional<Grading> grading, EngineStats* stats,
                                   const EngineLimits& lim) {
  EngineStats local;
  EngineStats& st = stats ? *stats : local;

  if (!omega.is_all() && !grading) throw InputError("truncation requires a grading");
  if (grading) {
    if (grading->vars() != ord.vars()) throw InputError("grading size mismatch with order");
    validate_positive_grading(*grading);
  } else if (!ord.is_global()) {
    throw TerminationError("no termination certificate: order is not global and no grading given");
  }

  std::vector<IntVec> work;
  work.reserve(gens.size());
  for (const IntVec& v : gens) {
    if (v.size() != ord.vars()) throw InputError("generator size mismatch with order");
    if (!is_zero(v)) work.push_back(v);
  }

  // Pairwise S-vector completion certifies a Groebner basis of the binomial
  // ideal generated by its input, but different generating sets of the same
  // lattice can generate different binomial ideals; the contract asks for
  // the lattice ideal, their common saturation by the product of all
  // variables.  So saturate first: one untruncated pass per variable, under
  // a compatible order making that variable cheapest, yields an ideal equal
  // to its own saturation by that variable, and the passes chain up to the
  // full lattice ideal.  This requires a strictly positive weight vanishing
  // on the lattice; when none exists (the lattice meets the nonnegative
  // orthant) the passes are skipped and the single run stands.
  if (!work.empty()) {
    if (const std::optional<IntVec> w = saturation_weight(work, grading)) {
      std::optional<Grading> pass_grading = grading;
      if (!pass_grading) pass_grading.emplace(IntMat(w->transpose()));
      for (Index i = 0; i < ord.vars(); ++i) {
        bool touched = false;
        for (const IntVec& v : work)
          if (v[i] != 0) {
            touched = true;
            break;
          }
        if (!touched) continue;  // x_i appears nowhere: already saturated in it
        const GroebnerBasis pass = buchberger_core(work, cheapest_variable_order(*w, i),
                                                   TruncatingPredicate::all(), pass_grading, st, lim);
        work.clear();
        work.reserve(pass.elements.size());
        for (const Binomial& e : pass.elements) work.push_back(e.vec());
      }
    }
  }
  return buchberger_core(work, ord, omega, std::move(grading), st, lim);
}

std::vector<Binomial> autoreduce(std::vector<Binomial> g, std::int64_t step_cap) {
  // Drop exact duplicates first.
  canonicalize(g);
  g.erase(std::unique(g.begin(), g.end()), g.end());

  std::int64_t steps = 0;
  for (;;) {
    // Minimalize: drop any element whose head another element's head strictly
    // divides; among equal heads the lex-first vector survives.
    std::vector<bool> drop(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const IntVec hi = g[i].head();
      for (std::size_t j = 0; j < g.size() && !drop[i]; ++j) {
        if (i == j || drop[j]) continue;
        const IntVec hj = g[j].head();
        if (!cwise_le(hj, hi)) continue;
        if (hj != hi || j < i) drop[i] = true;
      }
    }
    std::vector<Binomial> kept;
    kept.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!drop[i]) kept.push_back(std::move(g[i]));
    g = std::move(kept);

    // Tail-reduce every element against the other heads (marked reduction).
    bool changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      IntVec w = g[i].vec();
      bool step = true;
      while (step) {
        step = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
          if (i == j) continue;
          if (head_divides_tail(g[j].vec(), w)) {
            w = checked_add(w, g[j].vec());
            if (++steps > step_cap) throw TerminationError("autoreduction step cap exceeded");
            step = true;
            break;
          }
        }
      }
      if (w != g[i].vec()) {
        g[i] = Binomial(std::move(w));
        changed = true;
      }
    }
    if (!changed) return g;
    // Tail cancellation can shrink a head; re-minimalize until stable.
  }
}

bool is_groebner(const std::vector<Binomial>& g, const TermOrder& ord,
                 const TruncatingPredicate& omega, std::optional<Grading> grading,
                 const EngineLimits& lim) {
  if (!omega.is_all() && !grading) throw InputError("truncation requires a grading");
  for (const Binomial& e : g)
    if (vector_sign(ord, e.vec()) != Cmp::Greater) return false;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (heads_disjoint(g[i].vec(), g[j].vec())) continue;
      if (grading) {
        const IntVec pair_deg = monomial_degree(*grading, head_lcm(g[i].vec(), g[j].vec()));
        if (!omega.contains(pair_deg)) continue;
      }
      const IntVec s0 = spair(g[i], g[j]);
      if (is_zero(s0)) continue;
      if (!is_zero(normal_form(s0, g, ord, nullptr, lim.step_cap))) return false;
    }
  }
  return true;
}

std::vector<InitialForm> initial_forms(const GroebnerBasis& g, const IntVec& omega) {
  std::vector<InitialForm> r;
  r.reserve(g.elements.size());
  for (const Binomial& e : g.elements) {
    const Int s = checked_dot(omega, e.vec());
    if (s > 0)
      r.push_back(InitialForm{e.head(), false});
    else if (s < 0)
      r.push_back(InitialForm{e.tail(), false});
    else
      r.push_back(InitialForm{e.vec(), true});
  }
  return r;
}

}  // namespace latgb
