#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redop/monomial.hpp"
#include "redop/scalar.hpp"

namespace redop {

/// Degree bound up to which a series is known. std::nullopt means the value
/// is exact (a polynomial known on every degree).
using Precision = std::optional<int>;

Precision min_precision(Precision a, Precision b);
bool within_precision(int degree, Precision p);

/// Value of the ultrametric between two series. Every distance in the two
/// supported modes is 0 or a power 2^-e, so the exponent is stored
/// symbolically. When two truncated series agree on their whole known range
/// the distance cannot be certified to be 0; the below_resolution marker
/// carries the precision at which knowledge stops.
struct Delta {
  enum class Kind { zero, value, below_resolution };

  Kind kind = Kind::zero;
  int exponent = 0; // value: distance 2^-exponent; below_resolution: known precision

  static Delta zero() { return Delta{Kind::zero, 0}; }
  static Delta value(int exponent) { return Delta{Kind::value, exponent}; }
  static Delta below_resolution(int precision) {
    return Delta{Kind::below_resolution, precision};
  }

  bool is_zero() const { return kind == Kind::zero; }

  /// Certified upper bound as an exact rational (2^-(exponent+1) in the
  /// below_resolution case).
  Scalar upper_bound() const;

  /// True when the distance is certainly at most eps: exact zero, a known
  /// value 2^-e <= eps, or agreement up to a precision whose resolution
  /// already lies below eps.
  bool at_most(const Scalar& eps) const;

  std::string str() const;

  friend bool operator==(const Delta&, const Delta&) = default;
};

/// Finitely supported linear combination of monomials with exact rational
/// coefficients, together with the precision up to which it is known.
///
/// Terms are stored sorted by strictly descending rewriting order, so the
/// leading term is terms().front() and equality is structural. Instances are
/// immutable; all arithmetic returns new values.
class Series {
public:
  using Term = std::pair<Monomial, Scalar>;

  Series() = default;

  static Series zero(ContextPtr ctx, Precision precision = std::nullopt);
  static Series monomial(ContextPtr ctx, const Monomial& m, Scalar coeff = 1,
                         Precision precision = std::nullopt);
  static Series constant(ContextPtr ctx, Scalar coeff,
                         Precision precision = std::nullopt);
  /// Sorts, merges duplicates, drops zero coefficients and terms beyond the
  /// precision.
  static Series from_terms(ContextPtr ctx, std::vector<Term> terms,
                           Precision precision = std::nullopt);

  const ContextPtr& context() const { return ctx_; }
  Precision precision() const { return precision_; }
  bool is_exact() const { return !precision_.has_value(); }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Stored coefficient or 0. Asking beyond the precision is an error: the
  /// coefficient is unknown, not zero.
  Scalar coefficient(const Monomial& g) const;

  /// Greatest support monomial in the rewriting order (for power series this
  /// is the smallest monomial of the support). Throws on the zero series.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().first; }
  const Scalar& leading_coefficient() const { return leading_term().second; }

  /// Largest stored degree; -1 for the zero series.
  int degree() const;

  /// Same value with precision clamped to at most `precision`.
  Series truncated(Precision precision) const;

  Series operator-() const;
  Series scaled(const Scalar& c) const;
  /// this * (coeff * m); respects the setting (m multiplies on the right in
  /// the noncommutative case).
  Series times_monomial(const Monomial& m, const Scalar& coeff = 1) const;
  /// (coeff * m) * this.
  Series monomial_times(const Monomial& m, const Scalar& coeff = 1) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);

  Series pow(unsigned e) const;

  /// Structural equality: same context shape, same terms, same precision.
  bool same_series(const Series& other) const;
  /// Equality of the known coefficients only (precisions may differ).
  bool same_known_terms(const Series& other) const;

  std::string str() const;

private:
  Series(ContextPtr ctx, std::vector<Term> terms, Precision precision)
      : ctx_(std::move(ctx)), terms_(std::move(terms)), precision_(precision) {}

  void require_compatible(const Series& other) const;

  ContextPtr ctx_;
  std::vector<Term> terms_;
  Precision precision_;
};

/// Ultrametric distance max{d(g) : g in supp(u - v)} over the known range.
Delta metric_delta(const Series& u, const Series& v);

/// Support monomials with d(g) >= eps, deglex-ascending. Requires eps > 0.
std::vector<Monomial> support_above(const Series& v, const Scalar& eps);

} // namespace redop
