#pragma once

#include <array>
#include <iosfwd>

namespace ftopsis {

/**
 * Triangular fuzzy number (lower, modal, upper).
 *
 * Ordering is non-strict (lower <= modal <= upper) so that shoulder terms such
 * as (1,1,3) and (7,9,9) are representable. A crisp value v is the degenerate
 * number (v, v, v). Construction validates ordering and finiteness; instances
 * are immutable.
 */
class TriangularFuzzyNumber {
 public:
  constexpr TriangularFuzzyNumber() noexcept = default;

  /// Throws ValidationError when the components are not finite or not ordered.
  TriangularFuzzyNumber(double lower, double modal, double upper);

  static TriangularFuzzyNumber crisp(double value) { return {value, value, value}; }

  constexpr double lower() const noexcept { return lower_; }
  constexpr double modal() const noexcept { return modal_; }
  constexpr double upper() const noexcept { return upper_; }
  constexpr std::array<double, 3> components() const noexcept { return {lower_, modal_, upper_}; }

  friend constexpr bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;

 private:
  double lower_ = 0.0;
  double modal_ = 0.0;
  double upper_ = 0.0;
};

using Tfn = TriangularFuzzyNumber;

std::ostream& operator<<(std::ostream& os, const TriangularFuzzyNumber& t);

/// True when (lower, modal, upper) would form a valid fuzzy number.
bool is_valid_tfn(double lower, double modal, double upper) noexcept;

/// Membership grade of x. Degenerate edges take the continuity limit: the
/// grade is 1 at the modal value and 0 outside [lower, upper].
double membership(const Tfn& t, double x) noexcept;

/// Vertex-method distance: sqrt of the mean squared component difference.
double vertex_distance(const Tfn& a, const Tfn& b) noexcept;

/// Component-wise product. Both operands must be non-negative (DomainError otherwise).
Tfn multiply(const Tfn& a, const Tfn& b);

/// (l/c, m/c, u/c) for c > 0 (DomainError otherwise).
Tfn scale_divide(const Tfn& t, double divisor);

/// (n/u, n/m, n/l): the reciprocal with reversed components. Requires every
/// component of t to be strictly positive and n >= 0 (DomainError otherwise).
Tfn inverse_scale(double numerator, const Tfn& t);

}  // namespace ftopsis
