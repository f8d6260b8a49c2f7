#pragma once

/*
 * Trace-class spectra and (sub)majorization.
 *
 * A SpectrumSeq stores a nonincreasing, nonnegative eigenvalue sequence as a
 * finite head h_1 >= ... >= h_m plus an optional geometric tail: entry m+j is
 * a * r^j for j >= 1 with a >= 0 and 0 < r < 1.  All partial sums, the trace
 * and every tail remainder therefore have closed forms, which is what makes
 * the order predicates below decidable instead of merely sampled.
 *
 * Weak submajorization  x <=_w y  means  sum_{k<=n} x_k <= sum_{k<=n} y_k for
 * every n, applied separately to the positive and negative parts of a
 * selfadjoint spectrum; majorization adds equality of traces.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "ocnr/numeric.hpp"

namespace ocnr {

struct GeometricTail {
  double coefficient = 0.0;  // a >= 0
  double ratio = 0.5;        // r in (0,1)
};

class SpectrumSeq {
 public:
  SpectrumSeq() = default;
  explicit SpectrumSeq(std::vector<double> head,
                       std::optional<GeometricTail> tail = std::nullopt);

  static SpectrumSeq zero() { return SpectrumSeq(); }

  const std::vector<double>& head() const { return head_; }
  const std::optional<GeometricTail>& tail() const { return tail_; }

  // 0-based entry access; entries beyond the head come from the tail formula
  // (or are 0 when there is no tail).
  double entry(std::size_t i) const;

  // Sum of the first n entries, via the geometric closed form past the head.
  double partial_sum(std::size_t n) const;

  double trace() const;

  // Number of nonzero entries; infinite iff a geometric tail with a > 0 is
  // present.
  ExtendedNat rank() const;

  bool has_infinite_tail() const { return tail_ && tail_->coefficient > 0.0; }

 private:
  std::vector<double> head_;
  std::optional<GeometricTail> tail_;
};

// lambda^+ / lambda^- pair of a selfadjoint trace-class spectrum.
struct SelfadjointSpectrum {
  SpectrumSeq plus;
  SpectrumSeq minus;

  static SelfadjointSpectrum positive(SpectrumSeq p) { return {std::move(p), SpectrumSeq::zero()}; }

  double trace() const { return plus.trace() - minus.trace(); }
  ExtendedNat rank() const;
};

struct MajorizationResult {
  Tristate verdict = Tristate::unknown;
  // 1-based index of the first violated partial-sum inequality when the
  // verdict is "no"; 0 otherwise.  `negative_part` tells which component of a
  // selfadjoint pair carried the violation.
  std::size_t violation_index = 0;
  bool negative_part = false;

  explicit operator bool() const { return verdict == Tristate::yes; }
};

// Weak submajorization a <=_w b.  Partial sums are compared directly for
// n <= n_max; beyond that the geometric closed forms are analysed (the gap
// sum_b(n) - sum_a(n) is Delta + A ra^n - B rb^n, whose minimum over the
// remaining integers is attained at the boundary, at the unique interior
// critical point, or in the limit).  Inconclusive is reserved for inputs the
// analysis cannot certify; finite-head inputs always decide.
MajorizationResult is_submajorized(const SelfadjointSpectrum& a, const SelfadjointSpectrum& b,
                                   std::size_t n_max = 4096);
MajorizationResult is_submajorized(const SpectrumSeq& a, const SpectrumSeq& b,
                                   std::size_t n_max = 4096);

// Majorization a ~ b: weak submajorization plus trace equality.
MajorizationResult is_majorized(const SelfadjointSpectrum& a, const SelfadjointSpectrum& b,
                                std::size_t n_max = 4096);
MajorizationResult is_majorized(const SpectrumSeq& a, const SpectrumSeq& b,
                                std::size_t n_max = 4096);

// First m entries as a finite head; m past a finite rank returns c unchanged.
SpectrumSeq truncate(const SpectrumSeq& c, std::size_t m);

// trace(c) - partial_sum(c, m), evaluated in closed form (no cancellation of
// long prefix sums).
double tail_sum(const SpectrumSeq& c, std::size_t m);

// Keep the m_plus largest positive and m_minus largest negative entries.
// Throws std::domain_error when a count exceeds the corresponding rank.
SelfadjointSpectrum truncate_signed(const SelfadjointSpectrum& c, std::size_t m_minus,
                                    std::size_t m_plus);

// Collapse each sign component to a single entry carrying its full trace:
// diag(trace(c_+)) / diag(trace(c_-)).  The result majorizes c componentwise.
SelfadjointSpectrum rank2_reduce(const SelfadjointSpectrum& c);

struct GreedyInterpolant {
  std::size_t k = 1;  // 1-based cut index
  double t = 0.0;     // mixing weight in [0,1]
  SpectrumSeq y;      // (c_1, ..., c_{k-1}, t*c_k)
};

// Given positive x <=_w c with finitely many nonzero entries, produce the
// smallest-trace interpolant y with x majorized by y and y <=_w c:
//   k = largest index with sum_{n<k} c_n <= trace(x), capped at rank(c);
//   y = (1-t) * truncate(c, k-1) + t * truncate(c, k) elementwise.
// Convention: x = 0 gives k = 1, t = 0, y = 0.
GreedyInterpolant greedy_interpolant(const SpectrumSeq& x, const SpectrumSeq& c);

}  // namespace ocnr
