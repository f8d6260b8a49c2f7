#include "ocnr/range.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "ocnr/matrix.hpp"

namespace ocnr {

PairingValue sup_pairing(const SpectrumSeq& c, const TopSpectrum& top) {
  PairingValue out;
  for (std::size_t i = 0; i < top.values.size(); ++i) {
    if (top.values[i] <= 0.0) break;  // the stream is nonincreasing, rest is zero
    out.value += c.entry(i) * top.values[i];
  }
  out.error = tail_sum(c, top.values.size()) * top.tail_bound;
  return out;
}

namespace {

/*
 * Enumeration of the eigenvalue/diagonal-value pairs of H = Re(e^{-i theta}A)
 * at or above m = ess sup(H), nonincreasing in the eigenvalue.  Sources:
 *   - block eigenpairs (lambda, <v, F v>) with lambda >= m - slack,
 *   - approach-from-above tail entries (finitely many unless the rotated
 *     cluster sits exactly at m),
 *   - exact clusters at m (infinitely many copies).
 * The counts agree with count_at_least by construction because both sides use
 * family_count_at_least and the same block slack.
 */
struct PairStream {
  // finite block entries
  std::vector<std::pair<double, Complex>> fixed;
  std::size_t fixed_i = 0;
  // tail entries
  const TailEntryFamily* orig = nullptr;
  const RealTailFamily* rot = nullptr;
  std::uint64_t n = 1;          // next entry index within the family
  bool infinite = false;
  std::uint64_t remaining = 0;  // when finite and not block-backed

  bool block_backed() const { return orig == nullptr; }
  bool exhausted() const {
    if (block_backed()) return fixed_i >= fixed.size();
    return !infinite && remaining == 0;
  }
  double head_h() const {
    if (block_backed()) return fixed[fixed_i].first;
    if (rot->mode == TailMode::exact) return rot->value;
    return rot->entry(static_cast<std::size_t>(n));
  }
  Complex head_a() const {
    if (block_backed()) return fixed[fixed_i].second;
    return orig->entry(static_cast<std::size_t>(n));
  }
  void pop() {
    if (block_backed()) {
      ++fixed_i;
      return;
    }
    ++n;
    if (!infinite) --remaining;
  }
  // Cluster value the stream converges to, and the current deviation bound.
  Complex limit_value() const { return block_backed() ? fixed.back().second : orig->value; }
  double deviation() const {
    if (block_backed() || orig->mode == TailMode::exact) return 0.0;
    return orig->g(static_cast<std::size_t>(n));
  }
};

std::vector<PairStream> maximizer_streams(const OperatorModel& a, const SelfadjointModel& h,
                                          double m) {
  std::vector<PairStream> out;
  if (!h.finite_block.empty()) {
    const double slack = spectral_slack(h, m);
    const EigenDecomposition eig = hermitian_eigen(h.finite_block);
    PairStream s;
    const std::size_t nb = h.finite_block.rows();
    for (std::size_t i = 0; i < nb; ++i) {
      if (eig.eigenvalues[i] < m - slack) break;  // nonincreasing order
      std::vector<Complex> v(nb);
      for (std::size_t r = 0; r < nb; ++r) v[r] = eig.eigenvectors(r, i);
      s.fixed.emplace_back(eig.eigenvalues[i], quadratic_form(a.finite_block, v));
    }
    if (!s.fixed.empty()) out.push_back(std::move(s));
  }
  for (std::size_t fi = 0; fi < h.tail.size(); ++fi) {
    const RealTailFamily& rot = h.tail[fi];
    const ExtendedNat cnt = family_count_at_least(rot, m, false);
    if (!cnt.infinite && cnt.value == 0) continue;
    PairStream s;
    s.orig = &a.tail[fi];
    s.rot = &rot;
    s.infinite = cnt.infinite;
    s.remaining = cnt.value;
    out.push_back(std::move(s));
  }
  return out;
}

// Index of the non-exhausted stream with the largest head eigenvalue
// (earliest stream on ties, so the merge is deterministic); -1 if none.
int best_stream(const std::vector<PairStream>& streams) {
  int best = -1;
  double best_h = 0.0;
  for (std::size_t s = 0; s < streams.size(); ++s) {
    if (streams[s].exhausted()) continue;
    const double hh = streams[s].head_h();
    if (best < 0 || hh > best_h) {
      best = static_cast<int>(s);
      best_h = hh;
    }
  }
  return best;
}

// Boundary point sum_i c_i a_i over the merged pair enumeration, with a
// certified radius.  Only called when the support is attained, i.e. the
// streams carry at least rank(c) entries.
std::pair<Complex, double> maximizer_point(const OperatorModel& a, const SelfadjointModel& h,
                                           double m, const SpectrumSeq& c, std::size_t budget) {
  std::vector<PairStream> streams = maximizer_streams(a, h, m);
  const ExtendedNat rank = c.rank();
  const std::uint64_t n_enum =
      rank.infinite ? static_cast<std::uint64_t>(budget)
                    : std::min<std::uint64_t>(rank.value, static_cast<std::uint64_t>(budget));

  Complex point = 0.0;
  std::uint64_t i = 0;
  for (; i < n_enum; ++i) {
    const int s = best_stream(streams);
    if (s < 0) break;
    point += c.entry(static_cast<std::size_t>(i)) * streams[static_cast<std::size_t>(s)].head_a();
    streams[static_cast<std::size_t>(s)].pop();
  }

  double radius = 0.0;
  const double rem = tail_sum(c, static_cast<std::size_t>(i));
  if (rem > 0.0) {
    const int s = best_stream(streams);
    if (s < 0) {
      radius = rem * a.norm_bound();  // defensive; cannot happen when attained
    } else {
      // The remaining mass lands on entries of the live streams; absorb it
      // into the nearest cluster value and bound the spread of the rest.
      const Complex anchor = streams[static_cast<std::size_t>(s)].limit_value();
      point += rem * anchor;
      for (const PairStream& t : streams) {
        if (t.exhausted()) continue;
        double spread;
        if (t.block_backed()) {
          spread = 0.0;
          for (std::size_t j = t.fixed_i; j < t.fixed.size(); ++j)
            spread = std::max(spread, std::abs(t.fixed[j].second - anchor));
        } else {
          spread = std::abs(t.limit_value() - anchor) + t.deviation();
        }
        radius = std::max(radius, rem * spread);
      }
    }
  }
  return {point, radius};
}

// True when H has spectrum strictly below m: a block eigenvalue, a cluster
// below m, or any approach family (from below always dips under its value;
// from above it descends to a value below m unless the value is m itself).
bool spectrum_below(const SelfadjointModel& h, double m) {
  if (!h.finite_block.empty()) {
    const double slack = spectral_slack(h, m);
    const std::vector<double>& w = hermitian_eigen(h.finite_block).eigenvalues;
    if (!w.empty() && w.back() < m - slack) return true;
  }
  for (const RealTailFamily& f : h.tail) {
    if (f.mode == TailMode::exact) {
      if (f.value < m) return true;
    } else if (f.direction < 0.0 || f.value < m) {
      return true;
    }
  }
  return false;
}

}  // namespace

SupportValue support(const OperatorModel& a, const SpectrumSeq& c, double theta,
                     const RangeOptions& opt) {
  a.validate();
  if (a.tail.empty()) throw std::domain_error("support: model needs a nonempty tail");

  SupportValue sv;
  sv.theta = theta;
  const SelfadjointModel h = rotate_real_part(a, theta);
  const double m = ess_sup(h);
  const ExtendedNat rank = c.rank();

  std::size_t n;
  TopSpectrum top;
  PairingValue pv;
  if (!rank.infinite) {
    n = static_cast<std::size_t>(
        std::min<std::uint64_t>(rank.value, static_cast<std::uint64_t>(opt.n_cap)));
    top = positive_part_spectrum(h, m, n);
    pv = sup_pairing(c, top);
  } else {
    n = 16;
    for (;;) {
      top = positive_part_spectrum(h, m, n);
      pv = sup_pairing(c, top);
      if (pv.error <= 0.5 * opt.tol || n >= opt.n_cap) break;
      n = std::min(opt.n_cap, n * 2);
    }
  }
  sv.value = m * c.trace() + pv.value;
  sv.truncation_error = pv.error;

  sv.attained = count_at_least(h, m).at_least(rank);
  if (!sv.attained) {
    sv.attained_in_unitary_orbit = Tristate::no;
  } else if (!rank.infinite) {
    // finitely many entries of c sit on genuine eigenvectors; padding by the
    // kernel realizes the supremum inside the unitary orbit itself
    sv.attained_in_unitary_orbit = Tristate::yes;
  } else if (spectrum_below(h, m)) {
    // an infinite-rank c would have to avoid the spectral mass below m, which
    // no unitary conjugate of C can do
    sv.attained_in_unitary_orbit = Tristate::no;
  } else {
    sv.attained_in_unitary_orbit = Tristate::unknown;
  }

  if (sv.attained) {
    const auto [pt, rad] = maximizer_point(a, h, m, c, std::max<std::size_t>(n, 16));
    sv.maximizer = pt;
    sv.maximizer_radius = rad;
  }
  return sv;
}

ConvexRegion2D region(const OperatorModel& a, const SpectrumSeq& c, const RangeOptions& opt) {
  if (opt.grid < 4 || opt.grid % 2 != 0)
    throw std::invalid_argument("region: grid size must be even and at least 4");

  ConvexRegion2D out;
  out.directions.reserve(opt.grid);
  out.support_values.reserve(opt.grid);
  std::vector<double> bounds;
  bounds.reserve(opt.grid);
  std::vector<Complex> inner_pts;
  for (std::size_t j = 0; j < opt.grid; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(opt.grid);
    SupportValue sv = support(a, c, theta, opt);
    bounds.push_back(sv.value + sv.truncation_error);
    if (sv.maximizer) inner_pts.push_back(*sv.maximizer);
    out.directions.push_back(theta);
    out.support_values.push_back(std::move(sv));
  }
  out.outer = halfplane_intersection(out.directions, bounds);
  out.inner = convex_hull(std::move(inner_pts));
  out.inner_outer_gap = hausdorff_distance(out.outer, out.inner);
  return out;
}

SelfadjointInterval selfadjoint_interval(const OperatorModel& a, const SpectrumSeq& c,
                                         const RangeOptions& opt) {
  if (!a.is_selfadjoint())
    throw std::domain_error("selfadjoint_interval: model is not selfadjoint");

  const SupportValue up = support(a, c, 0.0, opt);
  const SupportValue dn = support(a, c, std::numbers::pi, opt);
  SelfadjointInterval out;
  out.hi = up.value;
  out.hi_error = up.truncation_error;
  out.hi_attained = up.attained;
  out.hi_unitary = up.attained_in_unitary_orbit;
  out.lo = -dn.value;  // true infimum lies in [lo - lo_error, lo]
  out.lo_error = dn.truncation_error;
  out.lo_attained = dn.attained;
  out.lo_unitary = dn.attained_in_unitary_orbit;
  return out;
}

ConvexRegion2D k_range(const OperatorModel& a, std::size_t k, const RangeOptions& opt) {
  return region(a, SpectrumSeq(std::vector<double>(k, 1.0)), opt);
}

}  // namespace ocnr
