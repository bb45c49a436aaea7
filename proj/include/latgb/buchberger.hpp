#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latgb/binomial.hpp"
#include "latgb/core.hpp"
#include "latgb/order.hpp"

/// Truncated Groebner bases of lattice ideals via the saturating Buchberger
/// engine.  Reductions subtract vectors, which silently divides out common
/// monomial factors, so the computed basis presents the saturation of the
/// input ideal with respect to all variables.
namespace latgb {

struct EngineLimits {
  /// Cap on reduction steps inside a single normal form.
  std::int64_t step_cap = 1'000'000'000;
  /// Cap on facet crossings in a walk.
  std::int64_t crossing_cap = 100'000'000;
};

struct EngineStats {
  std::int64_t pairs_considered = 0;
  std::int64_t pairs_discarded = 0;  // S-pair degree outside the truncating set
  std::int64_t pairs_skipped = 0;    // disjoint heads
  std::int64_t reductions = 0;
  Index max_basis = 0;
  std::int64_t ms = 0;
};

/// A marked (truncated) Groebner basis.  elements are stored lex-sorted by
/// raw vector, which makes equality of reduced bases plain vector equality
/// regardless of how they were computed.
struct GroebnerBasis {
  std::vector<Binomial> elements;
  TermOrder order;
  TruncatingPredicate truncation;
  std::optional<Grading> grading;
  bool reduced = false;
};

/// Degree A u of a monomial exponent vector u >= 0 (no homogeneity involved).
IntVec monomial_degree(const Grading& g, const IntVec& exps);

/// Lex-sorts elements by raw vector; the canonical storage form.
void canonicalize(std::vector<Binomial>& elements);

/// Computes the reduced Omega-truncated Groebner basis over ord of the
/// lattice ideal of the lattice spanned by gens, i.e. of the saturation of
/// <bin(w) : w in gens> by the product of all variables.
///
/// The saturation is made explicit first: when a strictly positive weight
/// vanishing on the lattice exists (always, under a positive grading), one
/// untruncated completion pass runs per occurring variable under an order
/// making that variable cheapest, after which the working set generates the
/// lattice ideal; the final pass then runs over ord.  Every generator must
/// be homogeneous when a grading is passed; elements of degree outside omega
/// are filtered from the final pass.  S-pairs are processed in ascending
/// certified degree h . deg (FIFO on ties); pairs whose lcm degree leaves
/// omega are discarded, disjoint-head pairs are skipped.
///
/// Termination requires either a positive grading (certificate found by
/// validate_positive_grading) or, with omega == all, a global order; absent
/// both, TerminationError is raised.
GroebnerBasis truncated_buchberger(const std::vector<IntVec>& gens, const TermOrder& ord,
                                   const TruncatingPredicate& omega,
                                   std::optional<Grading> grading, EngineStats* stats = nullptr,
                                   const EngineLimits& lim = {});

/// Inter-reduction without a term order: the stored orientations are the
/// markings.  Drops duplicate vectors and elements whose head another head
/// divides, then reduces tails against the remaining heads to a fixpoint.
/// For the output of a Groebner basis computation this yields the reduced
/// basis.
std::vector<Binomial> autoreduce(std::vector<Binomial> g, std::int64_t step_cap = 1'000'000'000);

/// True when every applicable S-pair of g reduces to zero modulo g over ord.
/// Elements must be oriented compatibly with ord.  Pairs with disjoint heads
/// are skipped; with a grading, pairs with lcm degree outside omega are
/// skipped as well.
bool is_groebner(const std::vector<Binomial>& g, const TermOrder& ord,
                 const TruncatingPredicate& omega, std::optional<Grading> grading,
                 const EngineLimits& lim = {});

/// Initial form of one basis element at a weight vector: the head monomial
/// when omega separates the two monomials, the whole binomial on a tie.
struct InitialForm {
  IntVec vec;     // exponent vector of the monomial, or the full binomial vector
  bool binomial;  // true when omega . w == 0
};

/// Initial forms of all elements at omega.  For omega in the closed Groebner
/// cone of g these generate the initial ideal.
std::vector<InitialForm> initial_forms(const GroebnerBasis& g, const IntVec& omega);

}  // namespace latgb
