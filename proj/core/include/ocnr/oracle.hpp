#pragma once

/*
 * Finite-dimensional brute-force oracles and orbit-sequence simulators.
 *
 * The oracles operate on explicit n x n instances (n small) where the orbit
 * {U diag(c) U* : U unitary} can be sampled and optimized directly; they are
 * the independent ground truth the structured machinery is tested against.
 * The sequence simulators drive diagonal orbit elements of an operator model
 * whose entries ride tail positions off to essential infinity, exhibiting the
 * two limit behaviours a bounded orbit sequence can have: trace-norm
 * convergence, or a trace gap landing in (escaping mass) * W_ess.
 */

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ocnr/geometry.hpp"
#include "ocnr/matrix.hpp"
#include "ocnr/operator_model.hpp"
#include "ocnr/spectrum.hpp"

namespace ocnr {

struct FiniteInstance {
  ComplexMatrix a;        // n x n
  std::vector<double> c;  // nonincreasing, one entry per dimension

  void validate() const;  // throws std::invalid_argument
};

// trace(U diag(c) U* A) for `samples` Haar-distributed unitaries.
// The dimension is capped at 12 (std::domain_error beyond).
std::vector<Complex> haar_orbit_cloud(const FiniteInstance& inst, std::size_t samples,
                                      std::uint64_t seed);

struct BoundaryMaximizer {
  ComplexMatrix x;    // V diag(c) V*, V the eigenbasis of Re(e^{-i theta} A)
  double value = 0.0;  // max over the orbit of Re(e^{-i theta} trace(XA))
};

BoundaryMaximizer boundary_maximizer(const FiniteInstance& inst, double theta);

// Applies `steps` random T-transforms to c; the sorted result is majorized
// by c (equal trace, flatter partial sums).
std::vector<double> random_majorized(const std::vector<double>& c, std::size_t steps,
                                     std::uint64_t seed);

struct Realization {
  ComplexMatrix u;
  Complex achieved{};
  double residual = 0.0;  // |achieved - target|
};

// Multistart local search for a unitary with trace(U diag(c) U* A) close to
// z: random Givens proposals with adaptive step plus coordinate polish,
// warm-started from the boundary maximizer toward z.
Realization realize_value(const FiniteInstance& inst, const Complex& z, std::size_t restarts,
                          std::uint64_t seed);

// One entry of an orbit sequence plan: entry i of the base spectrum either
// stays pinned on a fixed slot or escapes along tail family positions
// offset + k at step k.
struct OrbitAssignment {
  bool escaping = false;
  PlacementSlot slot{};     // pinned entries
  std::size_t family = 0;   // escaping entries
  std::size_t offset = 0;   // escaping position at step k is offset + k
};

struct OrbitSequencePlan {
  std::vector<OrbitAssignment> assignments;  // one per head entry of c
};

struct DichotomyReport {
  int branch = 1;                 // 1: trace-norm convergent, 2: essential escape
  double escaping_mass = 0.0;     // trace-norm distance of X_k to its weak limit
  Complex weak_limit_trace{};     // trace(X A) of the weak limit
  Complex gap{};                  // trace(X_k A) - trace(X A) at k = k_eval
  double gap_distance = 0.0;      // distance of gap to escaping_mass * W_ess
  std::vector<std::pair<std::uint64_t, Complex>> samples;  // (k, trace(X_k A))
};

// Simulates the orbit sequence of the plan.  Requires a finitely supported,
// fully placed c and at least one escaping assignment (std::domain_error
// otherwise); slots must stay collision-free for every step k.
DichotomyReport dichotomy_sim(const OperatorModel& a, const SpectrumSeq& c,
                              const OrbitSequencePlan& plan, std::uint64_t k_eval);

struct TailCompressionReport {
  // (k, |escaping trace - escaping trace outside the window|), k geometric
  // plus the disjointness boundary
  std::vector<std::pair<std::uint64_t, double>> differences;
  std::uint64_t disjoint_from = 0;  // first k with every escaping entry past the window
};

// Tail entries of family f occupy ambient coordinates block + (n-1)*F + f
// (round-robin over the F families).  Compressing away the first `window`
// coordinates changes the escaping trace only while some escaping entry
// still sits inside the window; from `disjoint_from` on the difference is
// exactly zero.
TailCompressionReport tail_compression_check(const OperatorModel& a, const SpectrumSeq& c,
                                             const OrbitSequencePlan& plan, std::size_t window,
                                             std::uint64_t k_max);

}  // namespace ocnr
