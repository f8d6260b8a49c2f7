#pragma once

/*
 * Support-function engine for the trace-norm-closed orbit range of an
 * operator model against a positive trace-class spectrum c.
 *
 * For a direction theta, let H = Re(e^{-i theta} A) and m = ess sup(H).  The
 * supremum of Re(e^{-i theta} z) over the range is
 *
 *     m * trace(c) + sum_n c_n * lambda_n((H - m)_+),
 *
 * computed by pairing c with the certified top spectrum of the positive part.
 * The supremum is attained in the closed orbit exactly when rank(c) many
 * eigenvalues of H sit at or above m (counted with the closed-form tail
 * multiplicities), and the attaining boundary point is then reconstructed
 * from the matching eigenvectors / tail positions.
 */

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "ocnr/geometry.hpp"
#include "ocnr/numeric.hpp"
#include "ocnr/operator_model.hpp"
#include "ocnr/spectrum.hpp"

namespace ocnr {

struct PairingValue {
  double value = 0.0;  // lower bound of the true supremum
  double error = 0.0;  // true supremum <= value + error
};

// sum_n c_n * top.values[n] with the certified remainder bound
// tail_sum(c, N) * top.tail_bound.
PairingValue sup_pairing(const SpectrumSeq& c, const TopSpectrum& top);

struct SupportValue {
  double theta = 0.0;
  double value = 0.0;             // certified lower bound
  double truncation_error = 0.0;  // true support in [value, value + error]
  bool attained = false;          // attained within the trace-norm closure of the orbit
  Tristate attained_in_unitary_orbit = Tristate::unknown;
  std::optional<Complex> maximizer;  // boundary point of the range when attained
  double maximizer_radius = 0.0;     // certified radius around `maximizer`
};

struct RangeOptions {
  std::size_t grid = 720;     // support directions, even
  double tol = 1e-9;          // truncation target per direction
  std::size_t n_cap = 1000000;  // hard cap on pairing length
};

SupportValue support(const OperatorModel& a, const SpectrumSeq& c, double theta,
                     const RangeOptions& opt = {});

struct ConvexRegion2D {
  std::vector<double> directions;
  std::vector<SupportValue> support_values;
  ConvexPolygon outer;  // halfplane intersection of value + error bounds
  ConvexPolygon inner;  // hull of certified boundary/interior points
  double inner_outer_gap = 0.0;  // Hausdorff(outer, inner); +inf if inner empty

  double diameter() const { return polygon_diameter(outer); }
};

ConvexRegion2D region(const OperatorModel& a, const SpectrumSeq& c,
                      const RangeOptions& opt = {});

struct SelfadjointInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_attained = false;
  bool hi_attained = false;
  Tristate lo_unitary = Tristate::unknown;
  Tristate hi_unitary = Tristate::unknown;
  double lo_error = 0.0;
  double hi_error = 0.0;
};

// Interval form for a selfadjoint model (throws std::domain_error otherwise).
SelfadjointInterval selfadjoint_interval(const OperatorModel& a, const SpectrumSeq& c,
                                         const RangeOptions& opt = {});

// c = (1, ..., 1) with k ones: the k-numerical range.
ConvexRegion2D k_range(const OperatorModel& a, std::size_t k, const RangeOptions& opt = {});

}  // namespace ocnr
