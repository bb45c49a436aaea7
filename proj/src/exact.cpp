#include "latgb/exact.hpp"

#include <algorithm>
#include <cstddef>

namespace latgb::exact {

ZMat to_z(const IntMat& m) {
  ZMat r(static_cast<std::size_t>(m.rows()), ZVec(static_cast<std::size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r[i][j] = static_cast<long>(m(i, j));
  return r;
}

ZVec to_z(const IntVec& v) {
  ZVec r(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) r[i] = static_cast<long>(v[i]);
  return r;
}

Int narrow(const mpz_class& z) {
  if (!z.fits_slong_p()) throw OverflowError("value exceeds 64-bit range");
  return static_cast<Int>(z.get_si());
}

IntVec narrow(const ZVec& v) {
  IntVec r(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r[static_cast<Index>(i)] = narrow(v[i]);
  return r;
}

Index rank(ZMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      // Integer-preserving cross elimination; scaling is harmless for rank.
      const mpz_class a = m[r][c], b = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = a * m[i][j] - b * m[r][j];
    }
    ++r;
  }
  return static_cast<Index>(r);
}

mpz_class det(ZMat m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InputError("determinant of non-square matrix");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination: every division below is exact.
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

ZMat hnf_rows(ZMat m) {
  if (m.empty()) return m;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Collapse entries of column c in rows >= r onto row r via gcd steps.
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[r][c].get_mpz_t(),
                 m[i][c].get_mpz_t());
      const mpz_class a = m[r][c] / g, b = m[i][c] / g;
      for (std::size_t j = 0; j < cols; ++j) {
        const mpz_class top = s * m[r][j] + t * m[i][j];
        const mpz_class bot = a * m[i][j] - b * m[r][j];
        m[r][j] = top;
        m[i][j] = bot;
      }
    }
    if (m[r][c] < 0)
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

bool same_row_lattice(const ZMat& a, const ZMat& b) { return hnf_rows(a) == hnf_rows(b); }

namespace {

/// Dense phase-1 simplex tableau over exact rationals.
class Tableau {
public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows * (cols + 1)) {}
  mpq_class& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
  mpq_class& rhs(std::size_t i) { return t_[i * (cols_ + 1) + cols_]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const mpq_class piv = at(pr, pc);
    for (std::size_t j = 0; j <= cols_; ++j) at(pr, j) /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr) continue;
      const mpq_class f = at(i, pc);
      if (f == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(pr, j);
    }
  }

private:
  std::size_t rows_, cols_;
  std::vector<mpq_class> t_;
};

}  // namespace

std::optional<QVec> feasible_point(const QMat& rows, const QVec& rhs) {
  const std::size_t k = rows.size();
  if (rhs.size() != k) throw InputError("lp dimension mismatch");
  if (k == 0) return QVec{};
  const std::size_t m = rows[0].size();
  // Variables: x = p - q with p, q >= 0 (2m), surplus s >= 0 (k),
  // artificial t >= 0 (k).  Minimize sum of artificials.
  const std::size_t np = 2 * m + k + k;
  Tableau tab(k, np);
  for (std::size_t i = 0; i < k; ++i) {
    const int sgn = rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < m; ++j) {
      tab.at(i, j) = sgn * rows[i][j];
      tab.at(i, m + j) = -sgn * rows[i][j];
    }
    tab.at(i, 2 * m + i) = -sgn;
    tab.at(i, 2 * m + k + i) = 1;
    tab.rhs(i) = sgn * rhs[i];
  }
  std::vector<std::size_t> basis(k);
  // Objective row stored separately: reduced costs for min sum(t).
  QVec cost(np, 0);
  mpq_class obj = 0;
  for (std::size_t i = 0; i < k; ++i) {
    basis[i] = 2 * m + k + i;
    for (std::size_t j = 0; j < np; ++j) cost[j] -= tab.at(i, j);
    obj -= tab.rhs(i);
  }
  for (std::size_t i = 0; i < k; ++i) cost[2 * m + k + i] += 1;

  for (;;) {
    // Bland's rule: lowest-index column with negative reduced cost.
    std::size_t enter = np;
    for (std::size_t j = 0; j < np; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == np) break;
    std::size_t leave = k;
    mpq_class best;
    for (std::size_t i = 0; i < k; ++i) {
      if (tab.at(i, enter) <= 0) continue;
      mpq_class ratio = tab.rhs(i) / tab.at(i, enter);
      if (leave == k || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == k) throw Error("phase-1 simplex unbounded");
    tab.pivot(leave, enter);
    const mpq_class f = cost[enter];
    for (std::size_t j = 0; j < np; ++j) cost[j] -= f * tab.at(leave, j);
    obj -= f * tab.rhs(leave);
    basis[leave] = enter;
  }
  if (obj != 0) return std::nullopt;
  QVec x(m, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (basis[i] < m)
      x[basis[i]] += tab.rhs(i);
    else if (basis[i] < 2 * m)
      x[basis[i] - m] -= tab.rhs(i);
  }
  return x;
}

}  // namespace latgb::exact
