#include "latgb/binomial.hpp"

namespace latgb {

bool head_divides(const IntVec& g, const IntVec& w) {
  if (g.size() != w.size()) throw InputError("vector size mismatch");
  for (Index i = 0; i < g.size(); ++i)
    if (g[i] > 0 && w[i] < g[i]) return false;
  return true;
}

bool head_divides_tail(const IntVec& g, const IntVec& w) {
  if (g.size() != w.size()) throw InputError("vector size mismatch");
  for (Index i = 0; i < g.size(); ++i)
    if (g[i] > 0 && w[i] > -g[i]) return false;
  return true;
}

bool heads_disjoint(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size()) throw InputError("vector size mismatch");
  for (Index i = 0; i < u.size(); ++i)
    if (u[i] > 0 && v[i] > 0) return false;
  return true;
}

IntVec spair(const Binomial& u, const Binomial& v) { return checked_sub(u.vec(), v.vec()); }

IntVec head_lcm(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size()) throw InputError("vector size mismatch");
  IntVec r(u.size());
  for (Index i = 0; i < u.size(); ++i) r[i] = std::max({u[i], v[i], Int{0}});
  return r;
}

namespace {

void bump(std::int64_t& n, std::int64_t cap) {
  if (++n > cap) throw TerminationError("reduction step cap exceeded");
}

}  // namespace

IntVec normal_form(IntVec w, std::span<const Binomial> basis, const TermOrder& ord,
                   std::int64_t* steps, std::int64_t step_cap) {
  std::int64_t local = 0;
  if (!is_zero(w)) {
    w = orient(ord, w);
    for (;;) {
      bool head_step = false;
      for (const Binomial& g : basis) {
        if (head_divides(g.vec(), w)) {
          w = checked_sub(w, g.vec());
          bump(local, step_cap);
          head_step = true;
          break;
        }
      }
      if (head_step) {
        if (is_zero(w)) break;
        w = orient(ord, w);
        continue;
      }
      // Head is irreducible; tail steps never create new head divisors, so
      // the tail can be finished off in place.
      bool tail_step = true;
      while (tail_step) {
        tail_step = false;
        for (const Binomial& g : basis) {
          if (head_divides_tail(g.vec(), w)) {
            w = checked_add(w, g.vec());
            bump(local, step_cap);
            tail_step = true;
            break;
          }
        }
      }
      break;
    }
  }
  if (steps) *steps += local;
  return w;
}

IntVec normal_form_monomial(IntVec u, std::span<const Binomial> basis, std::int64_t* steps,
                            std::int64_t step_cap) {
  for (Index i = 0; i < u.size(); ++i)
    if (u[i] < 0) throw InputError("monomial exponent vector has a negative entry");
  std::int64_t local = 0;
  bool step = true;
  while (step) {
    step = false;
    for (const Binomial& g : basis) {
      if (head_divides(g.vec(), u)) {
        u = checked_sub(u, g.vec());
        bump(local, step_cap);
        step = true;
        break;
      }
    }
  }
  if (steps) *steps += local;
  return u;
}

IntVec marked_reduce(IntVec w, std::span<const Binomial> basis, std::int64_t* steps,
                     std::int64_t step_cap) {
  std::int64_t local = 0;
  if (!is_zero(w)) {
    bool head_step = true;
    while (head_step && !is_zero(w)) {
      head_step = false;
      for (const Binomial& g : basis) {
        if (head_divides(g.vec(), w)) {
          w = checked_sub(w, g.vec());
          bump(local, step_cap);
          head_step = true;
          break;
        }
      }
    }
    bool tail_step = !is_zero(w);
    while (tail_step) {
      tail_step = false;
      for (const Binomial& g : basis) {
        if (head_divides_tail(g.vec(), w)) {
          w = checked_add(w, g.vec());
          bump(local, step_cap);
          tail_step = true;
          break;
        }
      }
    }
  }
  if (steps) *steps += local;
  return w;
}

}  // namespace latgb
