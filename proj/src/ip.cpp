#include "latgb/ip.hpp"

namespace latgb {

namespace {

void validate_row(const IntVec& a) {
  if (a.size() == 0) throw InputError("knapsack row is empty");
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] < 1) throw InputError("knapsack row entries must be positive");
}

}  // namespace

std::vector<IntVec> feasibility_ideal(const IntVec& a) {
  validate_row(a);
  const Index n = a.size();
  std::vector<IntVec> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    IntVec v = IntVec::Zero(n + 1);
    v[0] = checked_neg(a[i]);
    v[i + 1] = 1;
    gens.push_back(std::move(v));
  }
  return gens;
}

Grading knapsack_grading(const IntVec& a) {
  validate_row(a);
  IntMat m(1, a.size() + 1);
  m(0, 0) = 1;
  for (Index i = 0; i < a.size(); ++i) m(0, i + 1) = a[i];
  return Grading(std::move(m));
}

std::optional<IntVec> solve_feasibility(const IntVec& a, Int b, SolveMethod method,
                                        bool truncated, IPRun* run, const EngineLimits& lim) {
  validate_row(a);
  if (b < 0) return std::nullopt;
  IPRun local;
  IPRun& r = run ? *run : local;

  const Index n = a.size();
  const std::vector<IntVec> gens = feasibility_ideal(a);
  Grading grading = knapsack_grading(a);
  const TruncatingPredicate omega =
      truncated ? TruncatingPredicate::rhs_bound(b) : TruncatingPredicate::all();
  IntVec tau = IntVec::Zero(n + 1);
  tau[0] = 1;

  GroebnerBasis basis = [&] {
    if (method == SolveMethod::Direct)
      return truncated_buchberger(gens, weight_order(tau), omega, grading, &r.engine, lim);
    const WalkContext ctx{weight_order(checked_neg(tau)), weight_order(tau)};
    return generic_walk(gens, ctx, omega, grading, &r.walk, lim);
  }();

  IntVec u0 = IntVec::Zero(n + 1);
  u0[0] = b;
  const IntVec u = normal_form_monomial(u0, basis.elements, &r.engine.reductions, lim.step_cap);
  if (u[0] != 0) return std::nullopt;
  IntVec x = u.tail(n);
  if (checked_dot(a, x) != b) throw Error("feasibility witness fails the constraint");
  return x;
}

GroebnerBasis toric_ideal(const IntMat& a, const TermOrder& ord, EngineStats* stats,
                          const EngineLimits& lim) {
  const LatticeBasis kb = kernel_basis(a);
  const LatticeBasis red = lll_reduce(kb);
  std::optional<Grading> grading;
  if (!ord.is_global()) grading = Grading(a);
  return saturate(red, ord, std::move(grading), stats, lim);
}

IntVec optimize(const IntVec& a, Int b, const IntVec& c, const IntVec& x0, bool truncated,
                SolveMethod method, IPRun* run, const EngineLimits& lim) {
  validate_row(a);
  const Index n = a.size();
  if (c.size() != n || x0.size() != n) throw InputError("cost or start vector size mismatch");
  for (Index i = 0; i < n; ++i)
    if (x0[i] < 0) throw InputError("start point has a negative entry");
  if (checked_dot(a, x0) != b) throw InputError("start point does not satisfy the constraint");
  IPRun local;
  IPRun& r = run ? *run : local;

  IntMat mat(1, n);
  mat.row(0) = a.transpose();
  Grading grading(mat);
  const TermOrder ordc = weight_order(checked_neg(c));
  const TruncatingPredicate omega =
      truncated ? TruncatingPredicate::rhs_bound(b) : TruncatingPredicate::all();

  GroebnerBasis test_set = [&] {
    if (method == SolveMethod::Direct) {
      const LatticeBasis red = lll_reduce(kernel_basis(mat));
      return truncated_buchberger(red.vectors, ordc, omega, grading, &r.engine, lim);
    }
    // Walk from the weight -e1 (saturating over that order first).
    IntVec sigma = IntVec::Zero(n);
    sigma[0] = -1;
    const TermOrder ord0 = weight_order(sigma);
    const LatticeBasis red = lll_reduce(kernel_basis(mat));
    const GroebnerBasis start = saturate(red, ord0, grading, &r.saturation, lim);
    std::vector<IntVec> vecs;
    vecs.reserve(start.elements.size());
    for (const Binomial& e : start.elements) vecs.push_back(e.vec());
    const WalkContext ctx{ord0, ordc};
    return generic_walk(vecs, ctx, omega, grading, &r.walk, lim);
  }();

  return normal_form_monomial(x0, test_set.elements, &r.engine.reductions, lim.step_cap);
}

}  // namespace latgb
