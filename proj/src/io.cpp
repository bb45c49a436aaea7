#include "latgb/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace latgb::io {

namespace {

/// Pulls whitespace-separated tokens and converts them strictly.
class TokenReader {
public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::optional<Int> next() {
    std::string tok;
    if (!(in_ >> tok)) return std::nullopt;
    Int value = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
      if (res.ec == std::errc::result_out_of_range)
        throw OverflowError("integer token out of 64-bit range: " + tok);
      throw InputError("malformed integer token: " + tok);
    }
    return value;
  }

  Int require(const char* what) {
    const auto v = next();
    if (!v) throw InputError(std::string("unexpected end of input reading ") + what);
    return *v;
  }

  void expect_end() {
    std::string tok;
    if (in_ >> tok) throw InputError("trailing garbage in input: " + tok);
  }

private:
  std::istream& in_;
};

}  // namespace

IntMat read_matrix(std::istream& in) {
  TokenReader r(in);
  const Int d = r.require("row count");
  const Int n = r.require("column count");
  if (d < 1 || n < 1 || d > 4096 || n > 4096) throw InputError("matrix dimensions out of range");
  IntMat m(static_cast<Index>(d), static_cast<Index>(n));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = r.require("matrix entry");
  r.expect_end();
  return m;
}

std::vector<IntVec> read_vectors(std::istream& in, Index* n_out) {
  TokenReader r(in);
  const Int n = r.require("vector size");
  if (n < 1 || n > 4096) throw InputError("vector size out of range");
  if (n_out) *n_out = static_cast<Index>(n);
  std::vector<IntVec> vs;
  for (;;) {
    const auto first = r.next();
    if (!first) break;
    IntVec v(static_cast<Index>(n));
    v[0] = *first;
    for (Index i = 1; i < v.size(); ++i) v[i] = r.require("vector entry");
    vs.push_back(std::move(v));
  }
  return vs;
}

Instance read_instance(std::istream& in) {
  TokenReader r(in);
  const Int n = r.require("variable count");
  if (n < 1 || n > 4096) throw InputError("variable count out of range");
  Instance inst;
  inst.a.resize(static_cast<Index>(n));
  for (Index i = 0; i < inst.a.size(); ++i) {
    inst.a[i] = r.require("row entry");
    if (inst.a[i] < 1) throw InputError("row entries must be positive");
  }
  inst.b = r.require("right hand side");
  const auto maybe = r.next();
  if (maybe) {
    IntVec c(static_cast<Index>(n));
    c[0] = *maybe;
    for (Index i = 1; i < c.size(); ++i) c[i] = r.require("cost entry");
    r.expect_end();
    inst.c = std::move(c);
  }
  return inst;
}

void write_matrix(std::ostream& out, const IntMat& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

void write_vectors(std::ostream& out, const std::vector<IntVec>& vs, Index n) {
  out << n << '\n';
  for (const IntVec& v : vs) {
    for (Index i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
}

IntVec parse_int_list(const std::string& text) {
  std::istringstream in(text);
  TokenReader r(in);
  std::vector<Int> vals;
  for (;;) {
    const auto v = r.next();
    if (!v) break;
    vals.push_back(*v);
  }
  if (vals.empty()) throw InputError("empty integer list");
  IntVec out(static_cast<Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) out[static_cast<Index>(i)] = vals[i];
  return out;
}

}  // namespace latgb::io
