#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redop/error.hpp"

namespace redop {

/// Basis monomial. In a commutative context the payload is the exponent
/// vector (one entry per variable); in a noncommutative context it is the
/// word of variable indices. All interpretation lives in MonomialContext.
struct Monomial {
  std::vector<std::uint32_t> data;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Structural order so monomials can key std::map containers; this is not
  /// a monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.data < b.data;
  }
};

enum class Setting { commutative, noncommutative };
enum class Mode { discrete, adic };

class MonomialContext;
using ContextPtr = std::shared_ptr<const MonomialContext>;

/// Immutable description of the monomial basis: alphabet, commutativity,
/// the deglex precedence, and the metric mode.
///
/// Variables are listed in descending deglex precedence, i.e. variables()[0]
/// is the largest variable. The ordering used by rewriting ("ord") is deglex
/// in discrete mode and reversed deglex in adic mode, so that the leading
/// monomial of a power series is the smallest element of its support.
class MonomialContext {
public:
  static ContextPtr make(Setting setting, Mode mode,
                         std::vector<std::string> variables);

  Setting setting() const { return setting_; }
  Mode mode() const { return mode_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }

  /// Same alphabet and setting and mode.
  bool compatible(const MonomialContext& other) const;
  /// Same alphabet and setting; modes may differ. Used when pairing
  /// polynomials against series living on the completed side.
  bool same_alphabet(const MonomialContext& other) const;

  /// A copy of this context with the given mode.
  ContextPtr with_mode(Mode mode) const;

  Monomial unit() const;
  bool is_unit(const Monomial& m) const;
  Monomial variable_monomial(std::size_t index) const;
  std::optional<std::size_t> variable_index(std::string_view name) const;

  int degree(const Monomial& m) const;

  /// Degree-compatible lexicographic comparison; returns -1, 0 or 1.
  int cmp_deglex(const Monomial& a, const Monomial& b) const;
  /// The rewriting order: deglex in discrete mode, its opposite in adic mode.
  int cmp_ord(const Monomial& a, const Monomial& b) const;

  Monomial mul(const Monomial& a, const Monomial& b) const;
  Monomial pow(const Monomial& m, unsigned e) const;

  /// Commutative: componentwise divisibility. Noncommutative: d occurs as a
  /// contiguous factor of m.
  bool divides(const Monomial& d, const Monomial& m) const;
  /// Commutative only: m / d. Throws unless divides(d, m).
  Monomial quotient(const Monomial& m, const Monomial& d) const;
  /// Commutative only: least common multiple.
  Monomial lcm(const Monomial& a, const Monomial& b) const;

  /// d(m) = 2^-result; 0 in discrete mode, degree in adic mode.
  int d_exponent(const Monomial& m) const;

  /// All monomials of degree at most max_degree, sorted deglex-ascending.
  std::vector<Monomial> monomials_up_to(int max_degree) const;
  /// Commutative only: all multiples of m with degree at most max_degree,
  /// sorted deglex-ascending.
  std::vector<Monomial> multiples_up_to(const Monomial& m, int max_degree) const;

  std::string str(const Monomial& m) const;

private:
  MonomialContext(Setting setting, Mode mode, std::vector<std::string> variables);

  void check(const Monomial& m) const;

  Setting setting_;
  Mode mode_;
  std::vector<std::string> variables_;
};

} // namespace redop
