#include "latgb/fan.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <set>

#include "latgb/exact.hpp"
#include "latgb/walk.hpp"

namespace latgb {

namespace {

exact::QVec to_q(const IntVec& v) {
  exact::QVec r(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) r[static_cast<std::size_t>(i)] = mpq_class(static_cast<long>(v[i]));
  return r;
}

/// Flattened canonical form of a reduced basis, used as a dedup key.
std::vector<Int> cell_key(const GroebnerBasis& g) {
  std::vector<Int> key;
  for (const Binomial& e : g.elements) {
    key.push_back(e.vec().size());
    for (Index i = 0; i < e.vec().size(); ++i) key.push_back(e.vec()[i]);
  }
  return key;
}

/// Integer weight vector strictly inside the cone: w . g >= 1 for all g.
IntVec interior_weight(const std::vector<Binomial>& elements, Index n) {
  exact::QMat rows;
  exact::QVec rhs;
  for (const Binomial& e : elements) {
    rows.push_back(to_q(e.vec()));
    rhs.emplace_back(1);
  }
  const auto sol = exact::feasible_point(rows, rhs);
  if (!sol) throw Error("groebner cone has empty interior");
  mpz_class lcm = 1;
  for (const auto& q : *sol) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  exact::ZVec w(sol->size());
  for (std::size_t i = 0; i < sol->size(); ++i) w[i] = mpq_class((*sol)[i] * lcm).get_num();
  IntVec r = exact::narrow(w);
  if (r.size() != n) throw Error("interior weight has wrong dimension");
  return r;
}

}  // namespace

std::vector<IntVec> cone_normals(const GroebnerBasis& g) {
  std::vector<IntVec> normals;
  const std::size_t k = g.elements.size();
  for (std::size_t j = 0; j < k; ++j) {
    exact::QMat rows;
    exact::QVec rhs;
    rows.push_back(to_q(g.elements[j].vec()));
    rhs.emplace_back(-1);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j) continue;
      // Negated row encodes w . u >= 0.
      rows.push_back(to_q(g.elements[i].vec()));
      rhs.emplace_back(0);
    }
    // Want w . v <= -1: flip the first row's sense.
    for (auto& q : rows[0]) q = -q;
    rhs[0] = 1;
    if (exact::feasible_point(rows, rhs)) normals.push_back(g.elements[j].vec());
  }
  std::sort(normals.begin(), normals.end(), lex_less);
  return normals;
}

FanCell cone_of(const GroebnerBasis& g) { return FanCell{g, cone_normals(g)}; }

GroebnerBasis flip(const GroebnerBasis& g, const IntVec& v, std::int64_t* reductions,
                   const EngineLimits& lim) {
  std::vector<Binomial> basis = g.elements;
  const bool degenerate =
      cross_facet(basis, v, g.truncation, g.grading, reductions, lim, nullptr);
  if (degenerate) throw Error("flip crossed a redundant facet");
  std::vector<Binomial> reduced = autoreduce(std::move(basis), lim.step_cap);
  canonicalize(reduced);
  const TermOrder interior = weight_order(interior_weight(reduced, g.order.vars()));
  return GroebnerBasis{std::move(reduced), interior, g.truncation, g.grading, true};
}

FanResult enumerate_fan(const std::vector<IntVec>& gens, Grading grading,
                        const TruncatingPredicate& omega, const FanLimits& lim, FanStats* stats) {
  const auto t0 = std::chrono::steady_clock::now();
  FanStats local;
  FanStats& st = stats ? *stats : local;

  const IntVec h = validate_positive_grading(grading);
  IntVec c0(grading.vars());
  for (Index j = 0; j < grading.vars(); ++j)
    c0[j] = checked_dot(h, grading.matrix().col(j));
  GroebnerBasis start = truncated_buchberger(gens, weight_order(c0), omega, grading, nullptr,
                                             lim.engine);

  std::map<std::vector<Int>, Index> seen;  // insert-if-absent dedup of cells
  std::vector<FanCell> cells;
  std::set<std::pair<Index, Index>> edges;
  std::deque<Index> frontier;

  seen.emplace(cell_key(start), 0);
  cells.push_back(cone_of(start));
  frontier.push_back(0);

  while (!frontier.empty()) {
    const Index at = frontier.front();
    frontier.pop_front();
    // Copy: flips below may reallocate the cell vector.
    const std::vector<IntVec> normals = cells[static_cast<std::size_t>(at)].normals;
    for (const IntVec& v : normals) {
      GroebnerBasis nb = flip(cells[static_cast<std::size_t>(at)].basis, v, nullptr, lim.engine);
      ++st.flips;
      const auto key = cell_key(nb);
      auto [it, fresh] = seen.emplace(key, static_cast<Index>(cells.size()));
      if (fresh) {
        if (static_cast<Index>(cells.size()) >= lim.max_cells)
          throw TerminationError("fan cell cap exceeded");
        cells.push_back(cone_of(nb));
        frontier.push_back(it->second);
      }
      const Index a = std::min(at, it->second), b = std::max(at, it->second);
      edges.emplace(a, b);
    }
  }

  // Canonical order: sort cells by key; remap edges.
  std::vector<Index> order(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) order[i] = static_cast<Index>(i);
  std::vector<std::vector<Int>> keys(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) keys[i] = cell_key(cells[i].basis);
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]; });
  std::vector<Index> rank(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<Index>(i);

  FanResult out;
  out.cells.reserve(cells.size());
  for (const Index idx : order) out.cells.push_back(std::move(cells[static_cast<std::size_t>(idx)]));
  for (const auto& [a, b] : edges) {
    const Index ra = rank[static_cast<std::size_t>(a)], rb = rank[static_cast<std::size_t>(b)];
    out.edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());

  st.cells = static_cast<Index>(out.cells.size());
  st.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                t0)
              .count();
  return out;
}

Index locate_cell(const FanResult& fan, const IntVec& w) {
  for (std::size_t i = 0; i < fan.cells.size(); ++i) {
    bool inside = true;
    for (const Binomial& g : fan.cells[i].basis.elements) {
      if (checked_dot(w, g.vec()) < 0) {
        inside = false;
        break;
      }
    }
    if (inside) return static_cast<Index>(i);
  }
  throw InputError("weight vector lies in no enumerated cell");
}

}  // namespace latgb
