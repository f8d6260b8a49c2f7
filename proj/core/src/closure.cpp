#include "ocnr/closure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <utility>

#include "ocnr/matrix.hpp"

namespace ocnr {

namespace {

std::vector<double> grid_directions(std::size_t grid) {
  if (grid < 4 || grid % 2 != 0)
    throw std::invalid_argument("closure: grid size must be even and at least 4");
  std::vector<double> t(grid);
  for (std::size_t j = 0; j < grid; ++j)
    t[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid);
  return t;
}

// Ladder depth: every entry of a finite-rank c, otherwise deep enough that
// the omitted terms move the hull by at most tol (each omitted term differs
// from the kept ones by tail mass times the norm bound, twice for safety).
std::size_t choose_m_cut(const OperatorModel& a, const SpectrumSeq& c, const ClosureOptions& opt) {
  const ExtendedNat r = c.rank();
  if (opt.m_cut_override) {
    std::size_t m = *opt.m_cut_override;
    if (!r.infinite) m = std::min<std::size_t>(m, static_cast<std::size_t>(r.value));
    return m;
  }
  if (!r.infinite) return static_cast<std::size_t>(r.value);
  const double nb = a.norm_bound();
  std::size_t m = 0;
  while (m < 4096 && 2.0 * nb * tail_sum(c, m) > opt.tol) ++m;
  return m;
}

struct DirData {
  double theta = 0.0;
  double m_ess = 0.0;
  std::vector<double> top;  // top m_cut values of (Re(e^{-i theta}A) - m_ess)_+
  ExtendedNat count_at = ExtendedNat::of(0);
  ExtendedNat count_above = ExtendedNat::of(0);
};

struct Ladder {
  std::vector<double> thetas;
  ConvexPolygon ess;
  std::size_t m_cut = 0;
  double truncation_slack = 0.0;
  std::vector<DirData> dirs;
};

Ladder build_ladder(const OperatorModel& a, const SpectrumSeq& c, const ClosureOptions& opt) {
  a.validate();
  if (a.tail.empty()) throw std::domain_error("closure: model needs a nonempty tail");
  Ladder lad;
  lad.thetas = grid_directions(opt.grid);
  lad.ess = ess_range(a);
  lad.m_cut = choose_m_cut(a, c, opt);
  lad.truncation_slack =
      c.rank().infinite ? 2.0 * a.norm_bound() * tail_sum(c, lad.m_cut) : 0.0;
  lad.dirs.reserve(lad.thetas.size());
  for (double theta : lad.thetas) {
    const SelfadjointModel h = rotate_real_part(a, theta);
    DirData d;
    d.theta = theta;
    d.m_ess = ess_sup(h);
    d.top = positive_part_spectrum(h, d.m_ess, lad.m_cut).values;
    d.count_at = count_at_least(h, d.m_ess);
    d.count_above = count_above(h, d.m_ess);
    lad.dirs.push_back(std::move(d));
  }
  return lad;
}

}  // namespace

ClosureHull closure_rhs(const OperatorModel& a, const SpectrumSeq& c, const ClosureOptions& opt) {
  const Ladder lad = build_ladder(a, c, opt);
  const std::size_t g = lad.thetas.size();

  ClosureHull out;
  out.directions = lad.thetas;
  out.m_cut = lad.m_cut;
  out.truncation_slack = lad.truncation_slack;
  out.ess = lad.ess;

  std::vector<double> he(g);
  for (std::size_t j = 0; j < g; ++j) he[j] = polygon_support(lad.ess, lad.thetas[j]);

  out.terms.resize(lad.m_cut + 1);
  for (std::size_t m = 0; m <= lad.m_cut; ++m) {
    out.terms[m].m = m;
    out.terms[m].tail_weight = tail_sum(c, m);
    out.terms[m].range_bounds.resize(g);
    out.terms[m].bounds.resize(g);
  }
  for (std::size_t j = 0; j < g; ++j) {
    const DirData& d = lad.dirs[j];
    double prefix = 0.0;  // sum_{i<m} c_i * top_i
    double psum = 0.0;    // partial_sum(c, m)
    for (std::size_t m = 0; m <= lad.m_cut; ++m) {
      TruncationTerm& t = out.terms[m];
      t.range_bounds[j] = d.m_ess * psum + prefix;
      t.bounds[j] = t.range_bounds[j] + t.tail_weight * he[j];
      if (m < lad.m_cut) {
        const double cm = c.entry(m);
        prefix += cm * d.top[m];
        psum += cm;
      }
    }
  }
  for (TruncationTerm& t : out.terms)
    t.polygon = halfplane_intersection(lad.thetas, t.bounds);

  out.bounds.resize(g);
  out.term_index.resize(g);
  for (std::size_t j = 0; j < g; ++j) {
    double best = out.terms[0].bounds[j];
    std::size_t bi = 0;
    for (std::size_t m = 1; m <= lad.m_cut; ++m) {
      if (out.terms[m].bounds[j] > best) {
        best = out.terms[m].bounds[j];
        bi = m;
      }
    }
    out.bounds[j] = best + lad.truncation_slack;
    out.term_index[j] = bi;
  }
  out.outer = halfplane_intersection(lad.thetas, out.bounds);

  // Certified member points: the pure-tail term contributes trace(c) * W_ess,
  // every direction contributes the attained face point of its dominant term
  // shifted by the matching essential-range exposure.
  std::vector<Complex> pts;
  const ConvexPolygon tail_only = scale_translate(lad.ess, Complex{0.0, 0.0}, c.trace());
  pts.insert(pts.end(), tail_only.vertices.begin(), tail_only.vertices.end());
  const RangeOptions ropt{opt.grid, opt.tol};
  for (std::size_t j = 0; j < g; ++j) {
    const std::size_t m = out.term_index[j];
    if (m == 0) continue;
    const SupportValue sv = support(a, truncate(c, m), lad.thetas[j], ropt);
    if (sv.attained && sv.maximizer) {
      pts.push_back(*sv.maximizer +
                    out.terms[m].tail_weight * polygon_exposed_point(lad.ess, lad.thetas[j]));
    }
  }
  out.inner = convex_hull(std::move(pts));
  return out;
}

TheoremCheck verify_main_theorem(const OperatorModel& a, const SpectrumSeq& c,
                                 const ClosureOptions& opt) {
  TheoremCheck out;
  const RangeOptions ropt{opt.grid, opt.tol};
  out.direct = region(a, c, ropt);
  out.hull = closure_rhs(a, c, opt);
  out.hausdorff = hausdorff_distance(out.direct.outer, out.hull.outer);

  double e_direct = 0.0;
  double r_direct = 0.0;
  for (const SupportValue& sv : out.direct.support_values) {
    e_direct = std::max(e_direct, sv.truncation_error);
    r_direct = std::max(r_direct, sv.maximizer_radius);
  }
  const double diam =
      std::max(polygon_diameter(out.direct.outer), polygon_diameter(out.hull.outer));
  // Support bounds of the two hulls agree within the truncation budgets; a
  // bound perturbation delta moves halfplane vertices by at most
  // delta / sin(2 pi / grid).  The additive floor absorbs the keep-slack of
  // the halfplane clipper.
  const double delta = e_direct + out.hull.truncation_slack;
  out.tolerance = delta / std::sin(2.0 * std::numbers::pi / static_cast<double>(opt.grid)) +
                  1e-8 * (1.0 + diam);

  bool inner_ok = true;
  const double tol_in = out.tolerance + r_direct;
  for (const Complex& v : out.direct.inner.vertices)
    inner_ok = inner_ok && polygon_contains(out.hull.outer, v, tol_in);
  for (const Complex& v : out.hull.inner.vertices)
    inner_ok = inner_ok && polygon_contains(out.direct.outer, v, tol_in);

  out.pass = out.hausdorff <= out.tolerance && inner_ok;
  return out;
}

PointSetCheck submajorized_point_set(const OperatorModel& a, const ConvexRegion2D& range,
                                     const SpectrumSeq& c, const SpectrumSeq& x,
                                     const std::vector<PlacementSlot>& placement, double tol) {
  a.validate();
  if (x.has_infinite_tail())
    throw std::domain_error("submajorized_point_set: x must be finitely supported");
  if (is_submajorized(x, c).verdict != Tristate::yes)
    throw std::domain_error("submajorized_point_set: x is not weakly submajorized by c");
  if (placement.size() != x.head().size())
    throw std::invalid_argument("submajorized_point_set: need one slot per entry of x");

  const std::vector<Complex> vals = placement_values(a, placement);
  PointSetCheck out;
  for (std::size_t i = 0; i < vals.size(); ++i) out.point += x.head()[i] * vals[i];
  out.tail_weight = std::max(0.0, c.trace() - x.trace());
  out.offset_set = scale_translate(ess_range(a), out.point, out.tail_weight);

  double margin = kInf;
  for (std::size_t j = 0; j < range.directions.size(); ++j) {
    const SupportValue& sv = range.support_values[j];
    const double bound = sv.value + sv.truncation_error;
    margin = std::min(margin, bound - polygon_support(out.offset_set, range.directions[j]));
  }
  out.margin = margin;
  out.contained = margin >= -tol;
  return out;
}

PointSetCheck submajorized_point_set(const OperatorModel& a, const SpectrumSeq& c,
                                     const SpectrumSeq& x,
                                     const std::vector<PlacementSlot>& placement,
                                     const ClosureOptions& opt) {
  const ConvexRegion2D r = region(a, c, RangeOptions{opt.grid, opt.tol});
  return submajorized_point_set(a, r, c, x, placement, opt.tol);
}

namespace {

struct LadderCandidate {
  Complex pt;
  std::size_t m = 0;
  Complex range_pt{};
  Complex ess_pt{};
  double tail_weight = 0.0;
};

WitnessTerm to_term(const LadderCandidate& cand, double weight) {
  WitnessTerm t;
  t.m = cand.m;
  t.weight = weight;
  t.tail_weight = cand.tail_weight;
  t.range_point = cand.range_pt;
  t.ess_point = cand.ess_pt;
  return t;
}

}  // namespace

DecompositionWitness decompose_point(const OperatorModel& a, const SpectrumSeq& c,
                                     const Complex& z, const ClosureOptions& opt) {
  const ClosureHull hull = closure_rhs(a, c, opt);
  const std::size_t g = hull.directions.size();

  double worst = -kInf;
  std::size_t worst_j = 0;
  for (std::size_t j = 0; j < g; ++j) {
    const double v = (std::polar(1.0, -hull.directions[j]) * z).real() - hull.bounds[j];
    if (v > worst) {
      worst = v;
      worst_j = j;
    }
  }
  if (worst > opt.tol) {
    std::ostringstream oss;
    oss << "decompose_point: target separated from the closed range at direction theta="
        << hull.directions[worst_j] << " by " << worst;
    throw PointOutsideRange(oss.str(), hull.directions[worst_j], worst);
  }

  const double scale = 1.0 + std::abs(z) + polygon_diameter(hull.outer);

  // Single ladder term, smallest m first: split z = p + q with p in the
  // m-truncated range and q in tail_weight * W_ess by alternating projection.
  for (std::size_t m = 0; m <= hull.m_cut; ++m) {
    const TruncationTerm& t = hull.terms[m];
    if (!polygon_contains(t.polygon, z, opt.tol + 1e-12 * scale)) continue;
    const ConvexPolygon base = halfplane_intersection(hull.directions, t.range_bounds);
    const ConvexPolygon ess_t = scale_translate(hull.ess, Complex{0.0, 0.0}, t.tail_weight);
    Complex p = project_to_polygon(z, base);
    Complex q = project_to_polygon(z - p, ess_t);
    double residual = std::abs(z - p - q);
    for (int iter = 0; iter < 256 && residual > 1e-13 * scale; ++iter) {
      p = project_to_polygon(z - q, base);
      q = project_to_polygon(z - p, ess_t);
      const double next = std::abs(z - p - q);
      if (next >= residual * (1.0 - 1e-12)) {
        residual = next;
        break;  // stagnated
      }
      residual = next;
    }
    if (residual <= opt.tol + 1e-10 * scale) {
      WitnessTerm wt;
      wt.m = m;
      wt.weight = 1.0;
      wt.tail_weight = t.tail_weight;
      wt.range_point = p;
      wt.ess_point = t.tail_weight > 0.0 ? q / t.tail_weight : hull.ess.vertices.front();
      DecompositionWitness w;
      w.terms.push_back(wt);
      w.residual = residual;
      return w;
    }
  }

  // Convex combination of attained ladder points: the pure-tail vertices plus
  // the dominant attained face point of each direction.
  std::vector<LadderCandidate> cands;
  for (const Complex& v : scale_translate(hull.ess, Complex{0.0, 0.0}, c.trace()).vertices) {
    const Complex nu = c.trace() > 0.0 ? v / c.trace() : hull.ess.vertices.front();
    cands.push_back({v, 0, Complex{0.0, 0.0}, nu, c.trace()});
  }
  const RangeOptions ropt{opt.grid, opt.tol};
  for (std::size_t j = 0; j < g; ++j) {
    const std::size_t m = hull.term_index[j];
    if (m == 0) continue;
    const SupportValue sv = support(a, truncate(c, m), hull.directions[j], ropt);
    if (!sv.attained || !sv.maximizer) continue;
    const Complex nu = polygon_exposed_point(hull.ess, hull.directions[j]);
    const double tw = hull.terms[m].tail_weight;
    cands.push_back({*sv.maximizer + tw * nu, m, *sv.maximizer, nu, tw});
  }

  std::vector<Complex> pts;
  pts.reserve(cands.size());
  for (const LadderCandidate& cd : cands) pts.push_back(cd.pt);
  const ConvexPolygon ch = convex_hull(std::move(pts));

  const auto find_candidate = [&](const Complex& v) -> const LadderCandidate& {
    for (const LadderCandidate& cd : cands)
      if (cd.pt == v) return cd;
    // nearest fallback; exact match is expected since hull vertices are copies
    std::size_t best = 0;
    double bd = kInf;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const double d = std::abs(cands[i].pt - v);
      if (d < bd) {
        bd = d;
        best = i;
      }
    }
    return cands[best];
  };

  DecompositionWitness w;
  Complex target = z;
  if (!polygon_contains(ch, z, 1e-12 * scale)) target = project_to_polygon(z, ch);

  if (ch.size() == 1) {
    w.terms.push_back(to_term(find_candidate(ch.vertices[0]), 1.0));
  } else if (ch.size() == 2) {
    const Complex d = ch.vertices[1] - ch.vertices[0];
    const double len2 = std::norm(d);
    double tpar = len2 > 0.0 ? ((target - ch.vertices[0]) * std::conj(d)).real() / len2 : 0.0;
    tpar = std::clamp(tpar, 0.0, 1.0);
    if (tpar < 1.0) w.terms.push_back(to_term(find_candidate(ch.vertices[0]), 1.0 - tpar));
    if (tpar > 0.0) w.terms.push_back(to_term(find_candidate(ch.vertices[1]), tpar));
  } else {
    // fan triangulation anchored at vertex 0
    bool placed = false;
    const Complex v0 = ch.vertices[0];
    for (std::size_t i = 1; i + 1 < ch.size() && !placed; ++i) {
      const Complex e1 = ch.vertices[i] - v0;
      const Complex e2 = ch.vertices[i + 1] - v0;
      const double det = e1.real() * e2.imag() - e1.imag() * e2.real();
      if (std::abs(det) <= 1e-18 * scale * scale) continue;
      const Complex r = target - v0;
      const double u = (r.real() * e2.imag() - r.imag() * e2.real()) / det;
      const double v = (e1.real() * r.imag() - e1.imag() * r.real()) / det;
      const double w0 = 1.0 - u - v;
      if (u < -1e-9 || v < -1e-9 || w0 < -1e-9) continue;
      const double cu = std::max(u, 0.0);
      const double cv = std::max(v, 0.0);
      const double cw = std::max(w0, 0.0);
      const double total = cu + cv + cw;
      if (cw / total > 1e-9) w.terms.push_back(to_term(find_candidate(v0), cw / total));
      if (cu / total > 1e-9) w.terms.push_back(to_term(find_candidate(ch.vertices[i]), cu / total));
      if (cv / total > 1e-9)
        w.terms.push_back(to_term(find_candidate(ch.vertices[i + 1]), cv / total));
      placed = true;
    }
    if (!placed) {
      // target numerically on the hull boundary; use the nearest vertex pair
      const Complex proj = project_to_polygon(target, ch);
      std::size_t bi = 0;
      double bd = kInf;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        const double dd = std::abs(ch.vertices[i] - proj);
        if (dd < bd) {
          bd = dd;
          bi = i;
        }
      }
      w.terms.push_back(to_term(find_candidate(ch.vertices[bi]), 1.0));
    }
  }

  Complex combo = 0.0;
  for (const WitnessTerm& t : w.terms) combo += t.weight * t.point();
  w.residual = std::abs(z - combo);
  return w;
}

bool rank_condition_certificate(const OperatorModel& a, const SpectrumSeq& c, double theta) {
  const SelfadjointModel h = rotate_real_part(a, theta);
  return count_above(h, ess_sup(h)).at_least(c.rank());
}

ChainReport chain_check(const OperatorModel& a, const SpectrumSeq& c, const ClosureOptions& opt) {
  const Ladder lad = build_ladder(a, c, opt);
  const std::size_t g = lad.thetas.size();
  const ExtendedNat rank = c.rank();
  const RangeOptions ropt{opt.grid, opt.tol};

  ChainReport rep;
  std::set<std::size_t> failed_links;
  for (std::size_t j = 0; j < g; ++j) {
    const DirData& d = lad.dirs[j];
    if (d.count_at.at_least(rank)) continue;
    // Only count_at eigenvalues meet the essential supremum, yet c carries
    // more entries: the face of ladder step count_at at this direction is an
    // attained boundary point that step count_at + 1 (and the range itself)
    // misses, so the inclusion chain breaks exactly there.
    const auto m = static_cast<std::size_t>(d.count_at.value);
    failed_links.insert(m);
    if (rep.failures.size() < 16) {
      ChainFailure f;
      f.m = m;
      f.theta = d.theta;
      const SupportValue sv = support(a, truncate(c, m), d.theta, ropt);
      const Complex nu = polygon_exposed_point(lad.ess, d.theta);
      f.boundary_point = sv.maximizer.value_or(Complex{0.0, 0.0}) + tail_sum(c, m) * nu;
      rep.failures.push_back(f);
    }
  }

  // Structural sanity of the ladder: consecutive supports may never regress.
  // h_{m+1} - h_m = c_{m+1} * top_m, nonnegative by construction; a negative
  // value can only come from numerics and demotes the verdict to unknown.
  bool margin_bad = false;
  for (std::size_t j = 0; j < g && !margin_bad; ++j) {
    for (std::size_t m = 0; m < lad.m_cut; ++m) {
      const double gain = c.entry(m) * lad.dirs[j].top[m];
      if (gain < -cmp_tol(gain, 0.0)) {
        margin_bad = true;
        break;
      }
    }
  }

  bool cert_all = true;
  for (std::size_t j = 0; j < g; ++j)
    cert_all = cert_all && lad.dirs[j].count_above.at_least(rank);

  const bool selfadjoint = a.is_selfadjoint();
  if (!failed_links.empty()) {
    rep.verdict = ChainVerdict::not_closed;
  } else if (margin_bad) {
    rep.verdict = ChainVerdict::unknown;
  } else if (selfadjoint) {
    // the grid contains 0 and pi, where attainment of the interval endpoints
    // is decided exactly; attained endpoints make the interval closed
    rep.verdict = ChainVerdict::closed;
  } else if (cert_all) {
    rep.verdict = ChainVerdict::closed;
  } else {
    rep.verdict = ChainVerdict::unknown;
    for (std::size_t j = 0; j < g; ++j)
      if (!lad.dirs[j].count_above.at_least(rank)) rep.undecided.push_back(lad.thetas[j]);
  }

  const std::size_t depth = lad.m_cut;
  rep.links.reserve(depth);
  for (std::size_t m = 0; m < depth; ++m) {
    ChainLink link;
    link.m = m;
    if (failed_links.count(m)) {
      link.holds = Tristate::no;
      for (const ChainFailure& f : rep.failures) {
        if (f.m == m) {
          std::ostringstream oss;
          oss << "face at theta=" << f.theta << " is attained at step " << m
              << " but unreachable at step " << m + 1;
          link.note = oss.str();
          break;
        }
      }
    } else {
      // the per-link claim is "this step exhibits no missing boundary
      // point", checked at every grid direction
      link.holds = Tristate::yes;
      link.note = "no failing direction on the grid";
    }
    rep.links.push_back(std::move(link));
  }

  std::ostringstream oss;
  oss << "verdict=" << to_string(rep.verdict) << " grid=" << g << " ladder_depth=" << lad.m_cut;
  if (!rep.failures.empty())
    oss << " first_failure: link m=" << rep.failures.front().m
        << " theta=" << rep.failures.front().theta;
  if (!rep.undecided.empty()) oss << " undecided_directions=" << rep.undecided.size();
  if (rank.infinite && lad.truncation_slack > 0.0)
    oss << " deeper links verified within " << lad.truncation_slack;
  rep.summary = oss.str();
  return rep;
}

}  // namespace ocnr
