#include "ocnr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ocnr {

namespace {

// Deterministic sampling helpers on top of the (standardized) mt19937_64
// stream; distributions are hand-rolled so frozen test values do not depend
// on the standard library's implementation-defined ones.
struct Rng {
  std::mt19937_64 eng;
  double cached = 0.0;
  bool has_cached = false;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }  // [0, 1)

  double normal() {
    if (has_cached) {
      has_cached = false;
      return cached;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double w = 2.0 * std::numbers::pi * u2;
    cached = r * std::sin(w);
    has_cached = true;
    return r * std::cos(w);
  }

  std::size_t index(std::size_t n) {
    const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return std::min(i, n - 1);
  }
};

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = Complex{rng.normal(), rng.normal()};
  return gram_schmidt_unitary(z);
}

// trace(U diag(c) U* A) = sum_k c_k <u_k, A u_k> over the columns of U.
Complex orbit_trace(const ComplexMatrix& u, const std::vector<double>& c,
                    const ComplexMatrix& a) {
  const std::size_t n = u.rows();
  Complex total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (c[k] == 0.0) continue;
    Complex quad = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      Complex av = 0.0;
      for (std::size_t s = 0; s < n; ++s) av += a(r, s) * u(s, k);
      quad += std::conj(u(r, k)) * av;
    }
    total += c[k] * quad;
  }
  return total;
}

// Left Givens rotation on rows i and j: cos(alpha) on the diagonal,
// -e^{i psi} sin(alpha) coupling.
void apply_givens(ComplexMatrix& u, std::size_t i, std::size_t j, double alpha, double psi) {
  const double c0 = std::cos(alpha);
  const Complex s0 = std::polar(std::sin(alpha), psi);
  for (std::size_t k = 0; k < u.cols(); ++k) {
    const Complex ui = u(i, k);
    const Complex uj = u(j, k);
    u(i, k) = c0 * ui - s0 * uj;
    u(j, k) = std::conj(s0) * ui + c0 * uj;
  }
}

}  // namespace

void FiniteInstance::validate() const {
  if (a.rows() != a.cols()) throw std::invalid_argument("FiniteInstance: matrix must be square");
  if (a.rows() == 0) throw std::invalid_argument("FiniteInstance: matrix must be nonempty");
  if (c.size() != a.rows())
    throw std::invalid_argument("FiniteInstance: need one weight per dimension");
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] < c[i + 1])
      throw std::invalid_argument("FiniteInstance: weights must be nonincreasing");
}

std::vector<Complex> haar_orbit_cloud(const FiniteInstance& inst, std::size_t samples,
                                      std::uint64_t seed) {
  inst.validate();
  if (inst.a.rows() > 12)
    throw std::domain_error("haar_orbit_cloud: dimension capped at 12 for sampling");
  Rng rng(seed);
  std::vector<Complex> out;
  out.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s)
    out.push_back(orbit_trace(haar_unitary(inst.a.rows(), rng), inst.c, inst.a));
  return out;
}

BoundaryMaximizer boundary_maximizer(const FiniteInstance& inst, double theta) {
  inst.validate();
  const std::size_t n = inst.a.rows();
  const EigenDecomposition eig =
      hermitian_eigen(hermitian_part(inst.a.scaled(std::polar(1.0, -theta))));
  BoundaryMaximizer out;
  out.x = ComplexMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      Complex v = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        v += inst.c[k] * eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(s, k));
      out.x(r, s) = v;
    }
  for (std::size_t k = 0; k < n; ++k) out.value += inst.c[k] * eig.eigenvalues[k];
  return out;
}

std::vector<double> random_majorized(const std::vector<double>& c, std::size_t steps,
                                     std::uint64_t seed) {
  std::vector<double> x = c;
  if (x.size() >= 2) {
    Rng rng(seed);
    for (std::size_t s = 0; s < steps; ++s) {
      const std::size_t i = rng.index(x.size());
      std::size_t j = rng.index(x.size() - 1);
      if (j >= i) ++j;
      const double t = rng.uniform();
      const double xi = x[i];
      const double xj = x[j];
      x[i] = (1.0 - t) * xi + t * xj;
      x[j] = t * xi + (1.0 - t) * xj;
    }
  }
  std::sort(x.rbegin(), x.rend());
  return x;
}

Realization realize_value(const FiniteInstance& inst, const Complex& z, std::size_t restarts,
                          std::uint64_t seed) {
  inst.validate();
  const std::size_t n = inst.a.rows();
  Rng rng(seed);

  double csum = 0.0;
  for (double w : inst.c) csum += std::abs(w);
  const double scale = 1.0 + std::abs(z) + csum * inst.a.max_abs() * static_cast<double>(n);
  const double stop = 1e-11 * scale;

  // Haar average of the orbit trace; the warm start pushes from there toward z.
  const Complex centroid = inst.a.trace() * (csum / static_cast<double>(n));
  const double theta0 =
      std::abs(z - centroid) > 1e-14 * scale ? std::arg(z - centroid) : 0.0;

  const auto evaluate = [&](const ComplexMatrix& u) { return orbit_trace(u, inst.c, inst.a); };

  Realization best;
  best.residual = kInf;
  const std::size_t tries = std::max<std::size_t>(restarts, 1);
  for (std::size_t r = 0; r < tries && best.residual > stop; ++r) {
    ComplexMatrix u;
    if (r == 0) {
      u = hermitian_eigen(hermitian_part(inst.a.scaled(std::polar(1.0, -theta0)))).eigenvectors;
    } else {
      u = haar_unitary(n, rng);
    }
    Complex f = evaluate(u);
    double err = std::abs(f - z);

    double step = 0.5;
    for (int it = 0; it < 600 && err > stop && n >= 2; ++it) {
      const std::size_t i = rng.index(n);
      std::size_t j = rng.index(n - 1);
      if (j >= i) ++j;
      const double psi = 2.0 * std::numbers::pi * rng.uniform();
      const double alpha = step * rng.normal();
      ComplexMatrix cand = u;
      apply_givens(cand, i, j, alpha, psi);
      const Complex fc = evaluate(cand);
      const double ec = std::abs(fc - z);
      if (ec < err) {
        u = std::move(cand);
        f = fc;
        err = ec;
        step = std::min(step * 1.4, 1.5);
      } else {
        step *= 0.75;
        if (step < 1e-9) break;
      }
    }

    // coordinate polish: golden-section line search over every pair and two
    // coupling phases until a full sweep stops improving
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int sweep = 0; sweep < 40 && err > stop && n >= 2; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          for (const double psi : {0.0, 0.5 * std::numbers::pi}) {
            const auto err_at = [&](double alpha) {
              ComplexMatrix cand = u;
              apply_givens(cand, i, j, alpha, psi);
              return std::abs(evaluate(cand) - z);
            };
            double lo = -0.4, hi = 0.4;
            double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
            double e1 = err_at(m1), e2 = err_at(m2);
            for (int itr = 0; itr < 28; ++itr) {
              if (e1 <= e2) {
                hi = m2;
                m2 = m1;
                e2 = e1;
                m1 = hi - gr * (hi - lo);
                e1 = err_at(m1);
              } else {
                lo = m1;
                m1 = m2;
                e1 = e2;
                m2 = lo + gr * (hi - lo);
                e2 = err_at(m2);
              }
            }
            const double alpha = e1 <= e2 ? m1 : m2;
            const double ea = std::min(e1, e2);
            if (ea < err - 1e-15 * scale) {
              apply_givens(u, i, j, alpha, psi);
              f = evaluate(u);
              err = std::abs(f - z);
              improved = true;
            }
          }
        }
      }
      if (!improved) break;
    }

    if (err < best.residual) {
      best.u = u;
      best.achieved = f;
      best.residual = err;
    }
  }
  return best;
}

namespace {

struct ParsedPlan {
  struct Esc {
    std::size_t family;
    std::size_t offset;
    double weight;
  };
  std::vector<PlacementSlot> pinned_slots;
  std::vector<double> pinned_weights;
  std::vector<Esc> escaping;
};

ParsedPlan parse_plan(const OperatorModel& a, const SpectrumSeq& c,
                      const OrbitSequencePlan& plan) {
  a.validate();
  if (a.tail.empty()) throw std::domain_error("orbit plan: model needs a nonempty tail");
  if (c.has_infinite_tail())
    throw std::domain_error("orbit plan: base spectrum must be finitely supported");
  if (plan.assignments.size() != c.head().size())
    throw std::invalid_argument("orbit plan: need one assignment per entry of the spectrum");

  ParsedPlan out;
  for (std::size_t i = 0; i < plan.assignments.size(); ++i) {
    const OrbitAssignment& as = plan.assignments[i];
    const double w = c.head()[i];
    if (as.escaping) {
      if (as.family >= a.tail.size())
        throw std::invalid_argument("orbit plan: escaping family out of range");
      out.escaping.push_back({as.family, as.offset, w});
    } else {
      out.pinned_slots.push_back(as.slot);
      out.pinned_weights.push_back(w);
    }
  }
  if (out.escaping.empty()) throw std::domain_error("orbit plan: plan never escapes");

  for (std::size_t i = 0; i < out.escaping.size(); ++i)
    for (std::size_t j = i + 1; j < out.escaping.size(); ++j)
      if (out.escaping[i].family == out.escaping[j].family &&
          out.escaping[i].offset == out.escaping[j].offset)
        throw std::invalid_argument("orbit plan: escaping entries collide at every step");
  for (const ParsedPlan::Esc& e : out.escaping)
    for (const PlacementSlot& s : out.pinned_slots)
      if (s.kind == PlacementSlot::Kind::tail && s.index == e.family && s.entry > e.offset)
        throw std::invalid_argument("orbit plan: escaping entry crosses a pinned slot");
  return out;
}

Complex escaping_trace(const OperatorModel& a, const ParsedPlan& plan, std::uint64_t k) {
  Complex t = 0.0;
  for (const ParsedPlan::Esc& e : plan.escaping)
    t += e.weight * a.tail[e.family].entry(static_cast<std::size_t>(e.offset + k));
  return t;
}

}  // namespace

DichotomyReport dichotomy_sim(const OperatorModel& a, const SpectrumSeq& c,
                              const OrbitSequencePlan& plan, std::uint64_t k_eval) {
  if (k_eval == 0) throw std::invalid_argument("dichotomy_sim: k_eval must be positive");
  const ParsedPlan pp = parse_plan(a, c, plan);

  const std::vector<Complex> pinned_vals = placement_values(a, pp.pinned_slots);
  Complex pinned_trace = 0.0;
  for (std::size_t i = 0; i < pinned_vals.size(); ++i)
    pinned_trace += pp.pinned_weights[i] * pinned_vals[i];
  double mass = 0.0;
  for (const ParsedPlan::Esc& e : pp.escaping) mass += e.weight;

  DichotomyReport rep;
  rep.escaping_mass = mass;
  rep.branch = mass > 0.0 ? 2 : 1;
  rep.weak_limit_trace = pinned_trace;
  for (std::uint64_t k = 1; k < k_eval; k *= 2)
    rep.samples.emplace_back(k, pinned_trace + escaping_trace(a, pp, k));
  rep.samples.emplace_back(k_eval, pinned_trace + escaping_trace(a, pp, k_eval));
  rep.gap = escaping_trace(a, pp, k_eval);
  rep.gap_distance =
      distance_to_polygon(rep.gap, scale_translate(ess_range(a), Complex{0.0, 0.0}, mass));
  return rep;
}

TailCompressionReport tail_compression_check(const OperatorModel& a, const SpectrumSeq& c,
                                             const OrbitSequencePlan& plan, std::size_t window,
                                             std::uint64_t k_max) {
  if (k_max == 0) throw std::invalid_argument("tail_compression_check: k_max must be positive");
  const ParsedPlan pp = parse_plan(a, c, plan);
  const std::uint64_t nb = a.finite_block.rows();
  const std::uint64_t nf = a.tail.size();

  // ambient coordinate of (family f, entry n) is nb + (n-1)*nf + f
  const auto coordinate = [&](std::size_t family, std::uint64_t n) {
    return nb + (n - 1) * nf + static_cast<std::uint64_t>(family);
  };

  // largest step k at which some escaping entry still sits inside the window
  std::uint64_t last_inside = 0;
  for (const ParsedPlan::Esc& e : pp.escaping) {
    if (window <= nb + e.family) continue;  // outside even at n = 1
    const std::uint64_t q = (static_cast<std::uint64_t>(window) - 1 - e.family - nb) / nf;
    // coordinate < window iff offset + k - 1 <= q
    if (q + 1 > e.offset) last_inside = std::max(last_inside, q + 1 - e.offset);
  }

  TailCompressionReport rep;
  rep.disjoint_from = last_inside + 1;

  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 1; k < k_max; k *= 2) ks.push_back(k);
  ks.push_back(k_max);
  if (last_inside >= 1 && last_inside <= k_max) ks.push_back(last_inside);
  if (rep.disjoint_from <= k_max) ks.push_back(rep.disjoint_from);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  for (std::uint64_t k : ks) {
    // difference between the escaping trace and its compression = the part
    // still inside the window, summed directly (exactly zero once empty)
    Complex inside = 0.0;
    for (const ParsedPlan::Esc& e : pp.escaping) {
      const std::uint64_t n = e.offset + k;
      if (coordinate(e.family, n) < window)
        inside += e.weight * a.tail[e.family].entry(static_cast<std::size_t>(n));
    }
    rep.differences.emplace_back(k, std::abs(inside));
  }
  return rep;
}

}  // namespace ocnr
