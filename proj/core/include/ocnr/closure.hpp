#pragma once

/*
 * Closure structure of the orbit range.
 *
 * The closed range equals the convex hull of the truncation ladder
 *
 *     union over m of  ( m-truncated range  +  tail_sum(c, m) * W_ess(A) ),
 *
 * where the m-truncated range uses the m largest entries of c and W_ess is
 * the essential range (hull of the tail cluster values).  This module builds
 * that ladder on a direction grid, verifies it against the directly computed
 * range, decomposes points of the closure into ladder witnesses, and decides
 * closedness through the inclusion chain of the ladder terms: a chain link
 * m -> m+1 fails exactly when some direction has only m eigenvalues at or
 * above the essential supremum but c carries more than m entries, which
 * certifies a boundary face that the closure adds to the range.
 */

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocnr/geometry.hpp"
#include "ocnr/numeric.hpp"
#include "ocnr/operator_model.hpp"
#include "ocnr/range.hpp"
#include "ocnr/spectrum.hpp"

namespace ocnr {

struct ClosureOptions {
  std::size_t grid = 720;  // even, >= 4
  double tol = 1e-9;
  std::optional<std::size_t> m_cut_override;  // ladder depth override
};

struct TruncationTerm {
  std::size_t m = 0;
  double tail_weight = 0.0;           // tail_sum(c, m)
  std::vector<double> range_bounds;   // support bounds of the m-truncated range
  std::vector<double> bounds;         // range_bounds + tail_weight * ess support
  ConvexPolygon polygon;              // halfplane intersection of `bounds`
};

struct ClosureHull {
  std::vector<double> directions;
  std::vector<TruncationTerm> terms;  // m = 0 .. m_cut
  std::size_t m_cut = 0;
  double truncation_slack = 0.0;      // bound on the omitted deeper terms
  std::vector<double> bounds;         // max over terms (+ slack) per direction
  std::vector<std::size_t> term_index;  // argmax term per direction
  ConvexPolygon outer;
  ConvexPolygon inner;                // hull of attained ladder points
  ConvexPolygon ess;                  // essential range W_ess
};

// Right-hand side of the closure characterization on a direction grid.
ClosureHull closure_rhs(const OperatorModel& a, const SpectrumSeq& c,
                        const ClosureOptions& opt = {});

struct TheoremCheck {
  bool pass = false;
  double hausdorff = 0.0;  // between the direct range hull and the ladder hull
  double tolerance = 0.0;  // certified bound the distance must stay under
  ConvexRegion2D direct;
  ClosureHull hull;
};

// Cross-validates the directly computed range against the truncation ladder.
TheoremCheck verify_main_theorem(const OperatorModel& a, const SpectrumSeq& c,
                                 const ClosureOptions& opt = {});

struct PointSetCheck {
  Complex point{};            // sum_i x_i * (slot value of A)
  double tail_weight = 0.0;   // trace(c) - trace(x)
  ConvexPolygon offset_set;   // point + tail_weight * W_ess
  bool contained = false;     // offset set inside the closed range (within tol)
  double margin = 0.0;        // min over directions of range bound - set support
};

// Places a finite x (weakly submajorized by c; throws std::domain_error
// otherwise) on distinct diagonal slots and checks that the resulting point,
// fattened by the unused trace times W_ess, stays inside the closed range.
PointSetCheck submajorized_point_set(const OperatorModel& a, const ConvexRegion2D& range,
                                     const SpectrumSeq& c, const SpectrumSeq& x,
                                     const std::vector<PlacementSlot>& placement,
                                     double tol = 1e-9);
PointSetCheck submajorized_point_set(const OperatorModel& a, const SpectrumSeq& c,
                                     const SpectrumSeq& x,
                                     const std::vector<PlacementSlot>& placement,
                                     const ClosureOptions& opt = {});

// Thrown by decompose_point when the target lies outside the closed range;
// carries a separating direction and the amount of violation.
class PointOutsideRange : public std::domain_error {
 public:
  PointOutsideRange(const std::string& what, double theta, double violation)
      : std::domain_error(what), theta_(theta), violation_(violation) {}
  double theta() const { return theta_; }
  double violation() const { return violation_; }

 private:
  double theta_;
  double violation_;
};

struct WitnessTerm {
  std::size_t m = 0;
  double weight = 0.0;
  double tail_weight = 0.0;  // tail_sum(c, m)
  Complex range_point{};     // in the m-truncated range
  Complex ess_point{};       // in W_ess

  Complex point() const { return range_point + tail_weight * ess_point; }
};

struct DecompositionWitness {
  std::vector<WitnessTerm> terms;  // at most 3, weights sum to 1
  double residual = 0.0;           // |z - sum_i weight_i * term_i.point()|
};

// Writes z as a convex combination of ladder points, preferring a single
// term with the smallest usable m.  Throws PointOutsideRange when z is
// separated from the closed range by more than opt.tol.
DecompositionWitness decompose_point(const OperatorModel& a, const SpectrumSeq& c,
                                     const Complex& z, const ClosureOptions& opt = {});

// True when strictly more than rank(c) eigenvalues of Re(e^{-i theta} A) lie
// above the essential supremum, which pins the boundary face at theta inside
// the range itself.
bool rank_condition_certificate(const OperatorModel& a, const SpectrumSeq& c, double theta);

enum class ChainVerdict { closed, not_closed, unknown };

inline const char* to_string(ChainVerdict v) {
  switch (v) {
    case ChainVerdict::closed: return "closed";
    case ChainVerdict::not_closed: return "not_closed";
    default: return "unknown";
  }
}

struct ChainLink {
  std::size_t m = 0;
  Tristate holds = Tristate::unknown;
  std::string note;
};

struct ChainFailure {
  std::size_t m = 0;       // failing link: the face needs m+1 eigenvalues, only m exist
  double theta = 0.0;      // witness direction
  Complex boundary_point{};  // attained face point the next ladder step cannot reach
};

struct ChainReport {
  ChainVerdict verdict = ChainVerdict::unknown;
  std::vector<ChainLink> links;       // m = 0 .. ladder depth - 1
  std::vector<ChainFailure> failures;
  std::vector<double> undecided;      // directions no closedness certificate covered
  std::string summary;
};

// Decides closedness of the orbit range through the ladder chain.  The range
// is not closed exactly when some direction supports fewer eigenvalues at or
// above the essential supremum than rank(c); it is certified closed for
// selfadjoint models (endpoint attainment) or when the rank condition holds
// at every grid direction.
ChainReport chain_check(const OperatorModel& a, const SpectrumSeq& c,
                        const ClosureOptions& opt = {});

}  // namespace ocnr
