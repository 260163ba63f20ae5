#include "ftopsis/fuzzy_number.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "ftopsis/errors.hpp"

namespace ftopsis {

namespace {

std::string format_triple(double a, double b, double c) {
  std::ostringstream os;
  os << '(' << a << ", " << b << ", " << c << ')';
  return os.str();
}

}  // namespace

bool is_valid_tfn(double lower, double modal, double upper) noexcept {
  return std::isfinite(lower) && std::isfinite(modal) && std::isfinite(upper) && lower <= modal && modal <= upper;
}

TriangularFuzzyNumber::TriangularFuzzyNumber(double lower, double modal, double upper)
    : lower_(lower), modal_(modal), upper_(upper) {
  if (!is_valid_tfn(lower, modal, upper)) {
    throw ValidationError("invalid triangular fuzzy number " + format_triple(lower, modal, upper) +
                          ": components must be finite with lower <= modal <= upper");
  }
}

std::ostream& operator<<(std::ostream& os, const TriangularFuzzyNumber& t) {
  return os << '(' << t.lower() << ", " << t.modal() << ", " << t.upper() << ')';
}

double membership(const Tfn& t, double x) noexcept {
  if (x == t.modal()) return 1.0;
  if (x < t.lower() || x > t.upper()) return 0.0;
  // Here lower <= x < modal or modal < x <= upper, so the relevant side is non-degenerate.
  if (x < t.modal()) return (x - t.lower()) / (t.modal() - t.lower());
  return (t.upper() - x) / (t.upper() - t.modal());
}

double vertex_distance(const Tfn& a, const Tfn& b) noexcept {
  const double d1 = a.lower() - b.lower();
  const double d2 = a.modal() - b.modal();
  const double d3 = a.upper() - b.upper();
  return std::sqrt((d1 * d1 + d2 * d2 + d3 * d3) / 3.0);
}

Tfn multiply(const Tfn& a, const Tfn& b) {
  if (a.lower() < 0.0 || b.lower() < 0.0) {
    std::ostringstream os;
    os << "fuzzy product requires non-negative operands, got " << a << " and " << b;
    throw DomainError(os.str());
  }
  return {a.lower() * b.lower(), a.modal() * b.modal(), a.upper() * b.upper()};
}

Tfn scale_divide(const Tfn& t, double divisor) {
  if (!(divisor > 0.0) || !std::isfinite(divisor)) {
    throw DomainError("scale divisor must be positive and finite, got " + std::to_string(divisor));
  }
  return {t.lower() / divisor, t.modal() / divisor, t.upper() / divisor};
}

Tfn inverse_scale(double numerator, const Tfn& t) {
  if (!(t.lower() > 0.0)) {
    std::ostringstream os;
    os << "inverse scaling requires strictly positive components, got " << t;
    throw DomainError(os.str());
  }
  if (!(numerator >= 0.0) || !std::isfinite(numerator)) {
    throw DomainError("inverse scaling numerator must be non-negative and finite, got " + std::to_string(numerator));
  }
  return {numerator / t.upper(), numerator / t.modal(), numerator / t.lower()};
}

}  // namespace ftopsis
