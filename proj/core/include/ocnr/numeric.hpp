#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>

namespace ocnr {

// Three-valued verdicts for predicates that may be undecidable at the
// requested precision (tail certification, attainment in a unitary orbit,
// chain links that the implemented certificates do not cover).
enum class Tristate { yes, no, unknown };

inline const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    default: return "unknown";
  }
}

inline std::ostream& operator<<(std::ostream& os, Tristate t) { return os << to_string(t); }

// Eigenvalue multiplicity count extended with an explicit infinity: exact
// cluster values and approach families contribute infinitely many entries.
struct ExtendedNat {
  bool infinite = false;
  std::uint64_t value = 0;

  static ExtendedNat inf() { return {true, 0}; }
  static ExtendedNat of(std::uint64_t n) { return {false, n}; }

  bool operator==(const ExtendedNat&) const = default;

  // n >= k, with infinity dominating every finite k.
  bool at_least(std::uint64_t k) const { return infinite || value >= k; }
  bool at_least(const ExtendedNat& k) const {
    if (k.infinite) return infinite;
    return at_least(k.value);
  }
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedNat& n) {
  if (n.infinite) return os << "inf";
  return os << n.value;
}

// Comparison slack scaled to the magnitude of the operands; inputs that are
// exactly representable (integers, dyadic rationals) compare exactly because
// the closed-form sums incur no rounding for them in practice.
inline double cmp_tol(double a, double b, double rel = 1e-12) {
  double m = 1.0;
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  if (a > m) m = a;
  if (b > m) m = b;
  return rel * m;
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace ocnr
