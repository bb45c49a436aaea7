#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "latgb/binomial.hpp"
#include "latgb/lattice.hpp"

namespace latgb::test {

IntVec vec(std::initializer_list<Int> xs) {
  IntVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (Int x : xs) v[i++] = x;
  return v;
}

IntMat mat(std::initializer_list<std::initializer_list<Int>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
    Index j = 0;
    for (Int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::optional<IntVec> dp_knapsack(const IntVec& a, Int b) {
  const Index n = a.size();
  if (b < 0) return std::nullopt;
  // choice[s] = index of the variable used to reach sum s, -1 unreachable.
  std::vector<int> choice(static_cast<std::size_t>(b) + 1, -1);
  std::vector<char> reach(static_cast<std::size_t>(b) + 1, 0);
  reach[0] = 1;
  for (Int s = 1; s <= b; ++s)
    for (Index i = 0; i < n; ++i) {
      if (a[i] > s || !reach[static_cast<std::size_t>(s - a[i])]) continue;
      reach[static_cast<std::size_t>(s)] = 1;
      choice[static_cast<std::size_t>(s)] = static_cast<int>(i);
      break;
    }
  if (!reach[static_cast<std::size_t>(b)]) return std::nullopt;
  IntVec x = IntVec::Zero(n);
  for (Int s = b; s > 0; s -= a[choice[static_cast<std::size_t>(s)]])
    x[choice[static_cast<std::size_t>(s)]] += 1;
  return x;
}

namespace {

void fiber_rec(const IntVec& a, Int rest, Index i, IntVec& cur, std::vector<IntVec>& out) {
  if (i + 1 == a.size()) {
    if (rest % a[i] == 0) {
      cur[i] = rest / a[i];
      out.push_back(cur);
    }
    return;
  }
  for (Int k = 0; k * a[i] <= rest; ++k) {
    cur[i] = k;
    fiber_rec(a, rest - k * a[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<IntVec> enumerate_fiber(const IntVec& a, Int b) {
  std::vector<IntVec> out;
  if (b < 0 || a.size() == 0) return out;
  IntVec cur = IntVec::Zero(a.size());
  fiber_rec(a, b, 0, cur, out);
  return out;
}

std::optional<Poly> make_poly(IntVec u, std::optional<IntVec> v, const TermOrder& ord) {
  if (!v) return Poly{std::move(u), std::nullopt};
  switch (compare(ord, u, *v)) {
    case Cmp::Greater:
      return Poly{std::move(u), std::move(v)};
    case Cmp::Less:
      return Poly{std::move(*v), std::move(u)};
    case Cmp::Equal:
      return std::nullopt;  // x^u - x^u = 0
  }
  return std::nullopt;
}

namespace {

bool divides(const IntVec& d, const IntVec& m) {
  for (Index i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

void spend(std::int64_t& budget) {
  if (--budget < 0) throw std::runtime_error("classical oracle exceeded its step budget");
}

/// Fully reduces p modulo basis: head first, then tail.  Nullopt when p
/// drops to zero.
std::optional<Poly> classical_reduce(std::optional<Poly> p, const std::vector<Poly>& basis,
                                     const TermOrder& ord, std::int64_t& budget) {
  while (p) {
    bool hit = false;
    for (const Poly& g : basis) {
      if (!divides(g.head, p->head)) continue;
      spend(budget);
      hit = true;
      if (!g.tail) {
        // Monomial divisor kills the head term outright.
        if (p->tail)
          p = Poly{*p->tail, std::nullopt};
        else
          p = std::nullopt;
      } else {
        IntVec repl = p->head - g.head + *g.tail;
        if (p->tail)
          p = make_poly(std::move(repl), *p->tail, ord);
        else
          p = Poly{std::move(repl), std::nullopt};
      }
      break;
    }
    if (!p || hit) continue;
    // Head irreducible; reduce the tail.
    if (!p->tail) return p;
    hit = false;
    for (const Poly& g : basis) {
      if (!divides(g.head, *p->tail)) continue;
      spend(budget);
      hit = true;
      if (!g.tail)
        p = Poly{p->head, std::nullopt};
      else
        *p->tail += *g.tail - g.head;
      break;
    }
    if (!hit) return p;
  }
  return std::nullopt;
}

std::optional<Poly> classical_spoly(const Poly& f, const Poly& g, const TermOrder& ord) {
  IntVec l = f.head.cwiseMax(g.head);
  if (f.tail && g.tail) return make_poly(l - g.head + *g.tail, l - f.head + *f.tail, ord);
  if (f.tail) return Poly{l - f.head + *f.tail, std::nullopt};
  if (g.tail) return Poly{l - g.head + *g.tail, std::nullopt};
  return std::nullopt;  // monomial pair
}

bool same_poly(const Poly& a, const Poly& b) {
  if (a.head != b.head) return false;
  if (a.tail.has_value() != b.tail.has_value()) return false;
  return !a.tail || *a.tail == *b.tail;
}

std::vector<Poly> classical_autoreduce(std::vector<Poly> g, std::int64_t& budget) {
  for (int guard = 0;; ++guard) {
    if (guard > 1000) throw std::runtime_error("classical autoreduce did not stabilize");
    // Dedupe.
    std::vector<Poly> uniq;
    for (const Poly& p : g) {
      bool dup = false;
      for (const Poly& q : uniq) dup = dup || same_poly(p, q);
      if (!dup) uniq.push_back(p);
    }
    // Minimal heads; among equal heads the first survives.
    std::vector<char> drop(uniq.size(), 0);
    for (std::size_t i = 0; i < uniq.size(); ++i)
      for (std::size_t j = 0; j < uniq.size(); ++j) {
        if (i == j || drop[j] || !divides(uniq[j].head, uniq[i].head)) continue;
        if (uniq[j].head == uniq[i].head && j > i) continue;
        drop[i] = 1;
        break;
      }
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < uniq.size(); ++i)
      if (!drop[i]) kept.push_back(uniq[i]);
    // Tail reduction against all kept heads.
    bool changed = kept.size() != g.size();
    for (Poly& p : kept) {
      while (p.tail) {
        const Poly* div = nullptr;
        for (const Poly& q : kept)
          if (divides(q.head, *p.tail) && !same_poly(p, q)) {
            div = &q;
            break;
          }
        if (!div) break;
        spend(budget);
        changed = true;
        if (!div->tail)
          p.tail.reset();
        else
          *p.tail += *div->tail - div->head;
      }
    }
    g = std::move(kept);
    if (!changed) return g;
  }
}

}  // namespace

std::vector<Poly> classical_buchberger(const std::vector<Poly>& gens, const TermOrder& ord,
                                       std::int64_t step_cap) {
  std::int64_t budget = step_cap;
  std::vector<Poly> g;
  for (const Poly& p : gens) {
    auto q = p.tail ? make_poly(p.head, *p.tail, ord) : std::optional<Poly>(p);
    if (q) g.push_back(std::move(*q));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  for (std::size_t next = 0; next < pairs.size(); ++next) {
    auto [i, j] = pairs[next];
    // Buchberger's first criterion: coprime leading monomials.
    if ((g[i].head.cwiseMin(g[j].head).array() == 0).all()) continue;
    auto s = classical_spoly(g[i], g[j], ord);
    auto r = classical_reduce(std::move(s), g, ord, budget);
    if (!r) continue;
    g.push_back(std::move(*r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  return classical_autoreduce(std::move(g), budget);
}

std::vector<IntVec> minimal_head_set(const std::vector<Poly>& gb) {
  std::vector<IntVec> heads;
  heads.reserve(gb.size());
  for (const Poly& p : gb) heads.push_back(p.head);
  std::sort(heads.begin(), heads.end(), lex_less);
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
  return heads;
}

namespace {

/// Scales so the first nonzero coefficient is +-1; used to dedupe rows.
void fm_normalize(std::vector<mpq_class>& row, mpq_class& rhs) {
  for (const mpq_class& c : row) {
    if (c == 0) continue;
    mpq_class s = abs(c);
    for (mpq_class& x : row) x /= s;
    rhs /= s;
    return;
  }
}

}  // namespace

bool fm_feasible(std::vector<std::vector<mpq_class>> rows, std::vector<mpq_class> rhs) {
  if (rows.empty()) return true;
  const std::size_t nvars = rows[0].size();
  for (std::size_t k = 0; k < nvars; ++k) {
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int s = sgn(rows[i][k]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    std::vector<std::vector<mpq_class>> nr;
    std::vector<mpq_class> nb;
    std::map<std::vector<mpq_class>, mpq_class> best;  // row -> largest rhs
    auto add = [&](std::vector<mpq_class> row, mpq_class r) {
      fm_normalize(row, r);
      auto it = best.find(row);
      if (it == best.end())
        best.emplace(std::move(row), std::move(r));
      else if (r > it->second)
        it->second = std::move(r);
    };
    for (std::size_t i : zero) add(rows[i], rhs[i]);
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        const mpq_class cp = rows[p][k], cn = -rows[n][k];
        std::vector<mpq_class> row(nvars);
        for (std::size_t j = 0; j < nvars; ++j) row[j] = cn * rows[p][j] + cp * rows[n][j];
        add(std::move(row), cn * rhs[p] + cp * rhs[n]);
      }
    nr.reserve(best.size());
    nb.reserve(best.size());
    for (auto& [row, r] : best) {
      nr.push_back(row);
      nb.push_back(r);
    }
    rows = std::move(nr);
    rhs = std::move(nb);
    if (rows.size() > 100000) throw std::runtime_error("fourier-motzkin blowup");
  }
  for (const mpq_class& r : rhs)
    if (r > 0) return false;
  return true;
}

namespace {

/// Solves M y = v over Q by Gaussian elimination; nullopt if inconsistent.
/// M is given row-wise, size rows x cols, rows >= cols is allowed.
std::optional<std::vector<mpq_class>> solve_rational(std::vector<std::vector<mpq_class>> m,
                                                     std::vector<mpq_class> v) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(v[p], v[r]);
    const mpq_class inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    v[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      v[i] -= f * v[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (v[i] != 0) return std::nullopt;
  std::vector<mpq_class> y(cols, mpq_class(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = v[i];
  return y;
}

}  // namespace

bool lattice_member(const std::vector<IntVec>& basis, const IntVec& v) {
  if (basis.empty()) return v.isZero();
  const std::size_t k = basis.size();
  const std::size_t n = static_cast<std::size_t>(basis[0].size());
  // Solve B^T y = v for y, then check integrality.
  std::vector<std::vector<mpq_class>> bt(n, std::vector<mpq_class>(k));
  std::vector<mpq_class> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) bt[i][j] = static_cast<long>(basis[j][static_cast<Index>(i)]);
    rhs[i] = static_cast<long>(v[static_cast<Index>(i)]);
  }
  auto y = solve_rational(std::move(bt), std::move(rhs));
  if (!y) return false;
  for (const mpq_class& c : *y)
    if (c.get_den() != 1) return false;
  return true;
}

bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  for (const IntVec& v : a)
    if (!lattice_member(b, v)) return false;
  for (const IntVec& v : b)
    if (!lattice_member(a, v)) return false;
  return true;
}

GramSchmidt gram_schmidt(const std::vector<IntVec>& rows) {
  const std::size_t k = rows.size();
  const Index n = k == 0 ? 0 : rows[0].size();
  std::vector<std::vector<mpq_class>> star(k, std::vector<mpq_class>(static_cast<std::size_t>(n)));
  GramSchmidt gs;
  gs.mu.assign(k, {});
  gs.bstar2.assign(k, mpq_class(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (Index j = 0; j < n; ++j)
      star[i][static_cast<std::size_t>(j)] = static_cast<long>(rows[i][j]);
    gs.mu[i].assign(i, mpq_class(0));
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class dot = 0;
      for (Index t = 0; t < n; ++t)
        dot += mpq_class(static_cast<long>(rows[i][t])) * star[j][static_cast<std::size_t>(t)];
      if (gs.bstar2[j] == 0) throw std::runtime_error("gram_schmidt: dependent rows");
      gs.mu[i][j] = dot / gs.bstar2[j];
      for (Index t = 0; t < n; ++t)
        star[i][static_cast<std::size_t>(t)] -= gs.mu[i][j] * star[j][static_cast<std::size_t>(t)];
    }
    for (Index t = 0; t < n; ++t)
      gs.bstar2[i] += star[i][static_cast<std::size_t>(t)] * star[i][static_cast<std::size_t>(t)];
  }
  return gs;
}

Int rand_int(std::mt19937_64& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

IntVec random_vec(std::mt19937_64& rng, Index n, Int lo, Int hi) {
  IntVec v(n);
  for (Index i = 0; i < n; ++i) v[i] = rand_int(rng, lo, hi);
  return v;
}

RandomInstance random_instance(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    const Index n = rand_int(rng, 2, 5);
    const Index d = rand_int(rng, 1, n - 1);
    IntMat a(d, n);
    for (Index j = 0; j < n; ++j) a(0, j) = rand_int(rng, 1, 4);
    for (Index i = 1; i < d; ++i)
      for (Index j = 0; j < n; ++j) a(i, j) = rand_int(rng, -2, 2);
    LatticeBasis kern = kernel_basis(a);
    if (kern.vectors.empty()) continue;
    LatticeBasis red = lll_reduce(kern);
    bool small = true;
    for (const IntVec& v : red.vectors) small = small && v.cwiseAbs().maxCoeff() <= 4;
    if (!small) continue;
    return RandomInstance{std::move(a), std::move(red.vectors)};
  }
  throw std::runtime_error("random_instance: no small-kernel instance found");
}

namespace fixtures {

std::vector<IntVec> walk_generators() { return {vec({-2, 1, 0}), vec({-3, 0, 1})}; }

IntMat walk_grading() { return mat({{1, 2, 3}}); }

std::vector<IntVec> walk_target_basis() {
  // tx - y, t^2 - x, ty - x^2, y^2 - x^3 over (t, x, y), lex-sorted.
  std::vector<IntVec> g = {vec({1, 1, -1}), vec({2, -1, 0}), vec({1, -2, 1}), vec({0, -3, 2})};
  std::sort(g.begin(), g.end(), lex_less);
  return g;
}

IntMat octagon_matrix() {
  return mat({{1, 1, 1, 1, 1}, {0, 1, 2, 1, 0}, {0, 0, 1, 2, 1}});
}

std::vector<IntVec> octagon_generators() {
  // a^2 c - b^2 e, a^2 d - b e^2, c e - b d over (a, b, c, d, e).
  return {vec({2, -2, 1, 0, -1}), vec({2, -1, 0, 1, -2}), vec({0, -1, 1, -1, 1})};
}

namespace {

std::vector<IntVec> sorted(std::vector<IntVec> g) {
  std::sort(g.begin(), g.end(), lex_less);
  return g;
}

}  // namespace

std::vector<std::vector<IntVec>> octagon_cells() {
  const IntVec ac = vec({2, -2, 1, 0, -1});    // a^2 c - b^2 e
  const IntVec be = vec({-2, 2, -1, 0, 1});    // b^2 e - a^2 c
  const IntVec ad = vec({2, -1, 0, 1, -2});    // a^2 d - b e^2
  const IntVec be2 = vec({-2, 1, 0, -1, 2});   // b e^2 - a^2 d
  const IntVec ce = vec({0, -1, 1, -1, 1});    // c e - b d
  const IntVec bd = vec({0, 1, -1, 1, -1});    // b d - c e
  const IntVec ad2 = vec({2, 0, -1, 2, -3});   // a^2 d^2 - c e^3
  const IntVec ce3 = vec({-2, 0, 1, -2, 3});   // c e^3 - a^2 d^2
  const IntVec ac2 = vec({2, -3, 2, -1, 0});   // a^2 c^2 - b^3 d
  const IntVec b3d = vec({-2, 3, -2, 1, 0});   // b^3 d - a^2 c^2
  return {
      sorted({ad2, be, be2, bd}), sorted({ce3, be, be2, bd}), sorted({be, ad, bd}),
      sorted({ac, ad, bd}),       sorted({ac, ad, ce}),       sorted({ac, be2, ce}),
      sorted({ac2, be, be2, ce}), sorted({b3d, be, be2, ce}),
  };
}

std::vector<std::vector<IntVec>> octagon_truncated_cells() {
  const IntVec ac = vec({2, -2, 1, 0, -1});
  const IntVec be = vec({-2, 2, -1, 0, 1});
  const IntVec ad = vec({2, -1, 0, 1, -2});
  const IntVec be2 = vec({-2, 1, 0, -1, 2});
  const IntVec ce = vec({0, -1, 1, -1, 1});
  const IntVec bd = vec({0, 1, -1, 1, -1});
  return {
      sorted({be, be2, bd}), sorted({be, ad, bd}),  sorted({ac, ad, bd}),
      sorted({ac, ad, ce}),  sorted({ac, be2, ce}), sorted({be, be2, ce}),
  };
}

}  // namespace fixtures

}  // namespace latgb::test
