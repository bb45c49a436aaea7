#include "latgb/lattice.hpp"

#include <algorithm>
#include <cstddef>

#include "latgb/exact.hpp"

namespace latgb {

namespace {

using exact::ZMat;
using exact::ZVec;

IntVec sign_normalize(IntVec v) {
  if (sign_of_first_nonzero(v) < 0) v = checked_neg(v);
  return v;
}

}  // namespace

LatticeBasis kernel_basis(const IntMat& a) {
  if (a.rows() == 0 || a.cols() == 0) throw InputError("kernel of an empty matrix");
  const std::size_t d = static_cast<std::size_t>(a.rows());
  const std::size_t n = static_cast<std::size_t>(a.cols());
  // Column-major copies: w[j] is column j of a, u[j] column j of the
  // accumulated unimodular transform.
  std::vector<ZVec> w(n, ZVec(d));
  std::vector<ZVec> u(n, ZVec(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < d; ++i) w[j][i] = static_cast<long>(a(static_cast<Index>(i), static_cast<Index>(j)));
    u[j][j] = 1;
  }
  std::size_t r = 0;  // next pivot column slot
  for (std::size_t i = 0; i < d && r < n; ++i) {
    std::size_t p = r;
    while (p < n && w[p][i] == 0) ++p;
    if (p == n) continue;
    std::swap(w[p], w[r]);
    std::swap(u[p], u[r]);
    for (std::size_t k = r + 1; k < n; ++k) {
      if (w[k][i] == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w[r][i].get_mpz_t(),
                 w[k][i].get_mpz_t());
      const mpz_class x = w[r][i] / g, y = w[k][i] / g;
      for (std::size_t row = 0; row < d; ++row) {
        const mpz_class cr = s * w[r][row] + t * w[k][row];
        const mpz_class ck = x * w[k][row] - y * w[r][row];
        w[r][row] = cr;
        w[k][row] = ck;
      }
      for (std::size_t row = 0; row < n; ++row) {
        const mpz_class cr = s * u[r][row] + t * u[k][row];
        const mpz_class ck = x * u[k][row] - y * u[r][row];
        u[r][row] = cr;
        u[k][row] = ck;
      }
    }
    ++r;
  }
  LatticeBasis out;
  for (std::size_t j = r; j < n; ++j) out.vectors.push_back(sign_normalize(exact::narrow(u[j])));
  std::sort(out.vectors.begin(), out.vectors.end(), lex_less);
  return out;
}

namespace {

/// Exact Gram-Schmidt data for the current row set b.
struct Gram {
  std::vector<std::vector<mpq_class>> mu;  // mu[i][j], j < i
  std::vector<mpq_class> bstar2;           // ||b*_i||^2

  void recompute(const std::vector<ZVec>& b) {
    const std::size_t k = b.size();
    const std::size_t n = k ? b[0].size() : 0;
    std::vector<std::vector<mpq_class>> star(k, std::vector<mpq_class>(n));
    mu.assign(k, {});
    bstar2.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<mpq_class> v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = mpq_class(b[i][c]);
      mu[i].assign(i, 0);
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class dot = 0;
        for (std::size_t c = 0; c < n; ++c) dot += mpq_class(b[i][c]) * star[j][c];
        if (bstar2[j] == 0) throw InputError("lattice basis vectors are linearly dependent");
        mu[i][j] = dot / bstar2[j];
        for (std::size_t c = 0; c < n; ++c) v[c] -= mu[i][j] * star[j][c];
      }
      for (std::size_t c = 0; c < n; ++c) bstar2[i] += v[c] * v[c];
      star[i] = std::move(v);
    }
    for (std::size_t i = 0; i < k; ++i)
      if (bstar2[i] == 0) throw InputError("lattice basis vectors are linearly dependent");
  }
};

/// Nearest integer with ties toward zero; only called when |q| > 1/2.
mpz_class round_ties_to_zero(const mpq_class& q) {
  mpz_class f, r;
  mpz_fdiv_qr(f.get_mpz_t(), r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  const mpz_class two_r = 2 * r;
  if (two_r > q.get_den()) return f + 1;
  if (two_r == q.get_den()) return q < 0 ? f + 1 : f;
  return f;
}

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& basis, Int delta_num, Int delta_den) {
  if (delta_den <= 0 || delta_num <= 0) throw InputError("delta must be positive");
  const mpq_class delta(static_cast<long>(delta_num), static_cast<long>(delta_den));
  if (!(delta > mpq_class(1, 4) && delta < 1))
    throw InputError("delta must satisfy 1/4 < delta < 1");
  const std::size_t k = basis.vectors.size();
  if (k == 0) return basis;
  const std::size_t n = static_cast<std::size_t>(basis.vectors[0].size());
  for (const IntVec& v : basis.vectors)
    if (static_cast<std::size_t>(v.size()) != n) throw InputError("lattice vector size mismatch");

  std::vector<ZVec> b(k);
  for (std::size_t i = 0; i < k; ++i) b[i] = exact::to_z(basis.vectors[i]);
  // Unimodular transform rows: current = trans * input.
  ZMat trans(k, ZVec(k, 0));
  for (std::size_t i = 0; i < k; ++i) trans[i][i] = 1;

  Gram gs;
  gs.recompute(b);
  const mpq_class half(1, 2);
  std::size_t i = 1;
  while (i < k) {
    for (std::size_t j = i; j-- > 0;) {
      const mpq_class& m = gs.mu[i][j];
      if (m > half || m < -half) {
        const mpz_class q = round_ties_to_zero(m);
        for (std::size_t c = 0; c < n; ++c) b[i][c] -= q * b[j][c];
        for (std::size_t c = 0; c < k; ++c) trans[i][c] -= q * trans[j][c];
        gs.recompute(b);
      }
    }
    if (i >= 1 &&
        gs.bstar2[i] < (delta - gs.mu[i][i - 1] * gs.mu[i][i - 1]) * gs.bstar2[i - 1]) {
      std::swap(b[i], b[i - 1]);
      std::swap(trans[i], trans[i - 1]);
      gs.recompute(b);
      i = i > 1 ? i - 1 : 1;
    } else {
      ++i;
    }
  }

  const mpz_class dt = exact::det(trans);
  if (dt != 1 && dt != -1) throw Error("lll transform lost unimodularity");
  ZMat in_rows(k), out_rows(k);
  for (std::size_t r = 0; r < k; ++r) {
    in_rows[r] = exact::to_z(basis.vectors[r]);
    out_rows[r] = b[r];
  }
  if (!exact::same_row_lattice(in_rows, out_rows)) throw Error("lll changed the lattice");

  LatticeBasis out;
  out.vectors.reserve(k);
  for (std::size_t r = 0; r < k; ++r) out.vectors.push_back(exact::narrow(b[r]));
  return out;
}

GroebnerBasis saturate(const LatticeBasis& basis, const TermOrder& ord,
                       std::optional<Grading> grading, EngineStats* stats,
                       const EngineLimits& lim) {
  return truncated_buchberger(basis.vectors, ord, TruncatingPredicate::all(), std::move(grading),
                              stats, lim);
}

}  // namespace latgb
