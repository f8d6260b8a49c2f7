#pragma once

/*
 * Operator models: a finite complex block F direct-summed with a diagonal
 * tail built from finitely many entry families.  Each family either repeats
 * one cluster value exactly (infinite multiplicity) or approaches it along a
 * fixed unit direction with a harmonic (s/(n+1)) or geometric (s q^n)
 * perturbation, n >= 1.  The essential spectrum of the model is exactly the
 * set of cluster values, so essential quantities reduce to finite data while
 * eigenvalue counts near a threshold stay decidable in closed form.
 */

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "ocnr/geometry.hpp"
#include "ocnr/matrix.hpp"
#include "ocnr/numeric.hpp"

namespace ocnr {

enum class TailMode { exact, approach };
enum class TailLaw { harmonic, geometric };

struct TailEntryFamily {
  Complex value{};             // cluster value
  TailMode mode = TailMode::exact;
  Complex direction{1.0, 0.0};  // unit direction, approach mode only
  TailLaw law = TailLaw::harmonic;
  double scale = 1.0;  // s > 0
  double ratio = 0.5;  // q in (0,1), geometric law only

  // Perturbation magnitude g(n), n >= 1; strictly decreasing to 0.
  double g(std::size_t n) const;
  // Entry value: value (exact) or value + direction * g(n).
  Complex entry(std::size_t n) const;
  // sup_n |entry(n) - value|; 0 for exact families.
  double max_deviation() const;
};

struct OperatorModel {
  ComplexMatrix finite_block;          // square, possibly 0x0
  std::vector<TailEntryFamily> tail;   // at least one family for a genuine
                                       // infinite-dimensional model

  void validate() const;  // throws std::invalid_argument on a bad model

  // a + b * A as a model (tail directions renormalized).
  OperatorModel scale_shift(const Complex& a, const Complex& b) const;

  bool is_selfadjoint(double tol = 1e-12) const;

  // Upper bound on the operator norm: max of the block spectral norm and the
  // largest tail entry magnitude bound.
  double norm_bound() const;
};

// Real tail family of a selfadjoint model; direction is +1/-1.
struct RealTailFamily {
  double value = 0.0;
  TailMode mode = TailMode::exact;
  double direction = 1.0;
  TailLaw law = TailLaw::harmonic;
  double scale = 1.0;
  double ratio = 0.5;

  double g(std::size_t n) const;
  double entry(std::size_t n) const;
};

struct SelfadjointModel {
  ComplexMatrix finite_block;  // Hermitian
  std::vector<RealTailFamily> tail;
};

// Diagonal slot of an operator model: either the i-th eigenvector of the
// Hermitian part of the finite block (by descending eigenvalue), or entry n
// of tail family `index`.
struct PlacementSlot {
  enum class Kind { block, tail };
  Kind kind = Kind::block;
  std::size_t index = 0;
  std::size_t entry = 1;  // tail entries are 1-based
};

// <v, A v> for each slot; validates ranges and rejects duplicate slots.
std::vector<Complex> placement_values(const OperatorModel& a,
                                      const std::vector<PlacementSlot>& placement);

// Re(e^{-i theta} A): Hermitian part of the rotated block, entrywise rotation
// of the tail.  A family whose rotated direction degenerates to zero becomes
// an exact cluster at its rotated value.
SelfadjointModel rotate_real_part(const OperatorModel& a, double theta);

// Largest cluster value; throws std::domain_error for an empty tail.
double ess_sup(const SelfadjointModel& h);

// Number of eigenvalues >= t (block eigenvalues plus closed-form family
// counts); infinite when an exact cluster >= t or an approach family exceeds
// t infinitely often.
ExtendedNat count_at_least(const SelfadjointModel& h, double t);

// Number of eigenvalues strictly above t.
ExtendedNat count_above(const SelfadjointModel& h, double t);

// Comparison slack the counters use for block eigenvalues near threshold t.
double spectral_slack(const SelfadjointModel& h, double t);

// Entries of a single tail family at or above t (strict: above t).
ExtendedNat family_count_at_least(const RealTailFamily& f, double t, bool strict);

struct TopSpectrum {
  std::vector<double> values;  // nonincreasing, clipped at 0
  double tail_bound = 0.0;     // certified bound on every omitted value
};

// Top-n values of (H - m)_+ merged from the block and the tail families.
// Requires m >= ess_sup(h) so that the positive part is compact and the
// enumeration order exists.
TopSpectrum positive_part_spectrum(const SelfadjointModel& h, double m, std::size_t n);

// Convex hull of the cluster values (a polygon, segment or point).
ConvexPolygon ess_range(const OperatorModel& a);

double norm_bound(const SelfadjointModel& h);

}  // namespace ocnr
