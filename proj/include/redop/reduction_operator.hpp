#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "redop/series.hpp"

namespace redop {

/// Where a reduction operator sits in the kernel order: less means the left
/// operand lies below the right one (its kernel contains the other's).
enum class OrderRel { equal, less, greater, incomparable };

/// Reduction operator on the span of the degree-bounded monomial basis,
/// stored as its canonical inter-reduced rule table.
///
/// Every rule maps a head monomial to a tail series supported on strictly
/// ord-smaller monomials, no head occurs in any tail, and all degrees are at
/// most the truncation bound. Under these invariants the table is the
/// truncated reduced basis of the operator kernel, so structural equality of
/// tables is operator equality and the lattice operations are exact on the
/// degree-bounded space.
class ReductionOperator {
public:
  struct Rule {
    Monomial head;
    Series tail;
  };

  /// Operator with zero kernel: every monomial is its own normal form.
  static ReductionOperator identity(ContextPtr ctx, int truncation);

  /// Inverse of the kernel map on the span of the generators: Gaussian
  /// elimination by descending ord-leading monomial produces the canonical
  /// inter-reduced table. Generators are a linear (not ideal) family; each
  /// must be nonzero with precision at least the truncation.
  static ReductionOperator from_kernel(const std::vector<Series>& generators,
                                       const ContextPtr& ctx, int truncation);

  /// Assembles an operator from already canonical rules (heads distinct,
  /// tails reduced); validates the invariants.
  static ReductionOperator from_rules(ContextPtr ctx, int truncation,
                                      std::vector<Rule> rules);

  const ContextPtr& context() const { return ctx_; }
  int truncation() const { return truncation_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t rule_count() const { return rules_.size(); }
  bool is_identity() const { return rules_.empty(); }

  bool is_head(const Monomial& m) const;
  /// Tail of the rule for m, or nullptr when m is a normal form.
  const Series* tail(const Monomial& m) const;

  /// Linear idempotent application: heads are replaced by their tails, other
  /// monomials are fixed. Result precision is min(truncation, input).
  Series apply(const Series& v) const;

  /// apply(v) == 0 at the truncation. Requires precision(v) >= truncation.
  bool kernel_member(const Series& v) const;

  /// The reduced kernel basis {head - tail}, each monic with leading
  /// monomial the head, at the truncation precision.
  std::vector<Series> kernel_elements() const;

  /// Normal-form monomials (non-heads) of degree <= truncation.
  std::vector<Monomial> normal_monomials() const;

  friend bool operator==(const ReductionOperator& a, const ReductionOperator& b);

private:
  ReductionOperator(ContextPtr ctx, int truncation, std::vector<Rule> rules)
      : ctx_(std::move(ctx)), truncation_(truncation), rules_(std::move(rules)) {}

  ContextPtr ctx_;
  int truncation_ = 0;
  std::vector<Rule> rules_; // sorted by head, ord-descending
};

/// Greatest lower bound of the family: the operator whose kernel is the sum
/// of all kernels, recomputed by elimination at the shared truncation.
ReductionOperator meet(std::span<const ReductionOperator> ops);
ReductionOperator meet(const ReductionOperator& a, const ReductionOperator& b);

/// Least upper bound: kernel intersection inside the degree-bounded
/// coefficient space, then re-elimination.
ReductionOperator join(const ReductionOperator& a, const ReductionOperator& b);

/// Kernel-order comparison decided by membership of reduced kernel elements.
OrderRel compare(const ReductionOperator& a, const ReductionOperator& b);

} // namespace redop
