#include "ocnr/operator_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace ocnr {

double TailEntryFamily::g(std::size_t n) const {
  if (mode == TailMode::exact) return 0.0;
  if (law == TailLaw::harmonic) return scale / static_cast<double>(n + 1);
  return scale * std::pow(ratio, static_cast<double>(n));
}

Complex TailEntryFamily::entry(std::size_t n) const {
  if (mode == TailMode::exact) return value;
  return value + direction * g(n);
}

double TailEntryFamily::max_deviation() const {
  if (mode == TailMode::exact) return 0.0;
  return g(1);
}

void OperatorModel::validate() const {
  if (finite_block.rows() != finite_block.cols())
    throw std::invalid_argument("OperatorModel: finite block must be square");
  for (const TailEntryFamily& f : tail) {
    if (!std::isfinite(f.value.real()) || !std::isfinite(f.value.imag()))
      throw std::invalid_argument("OperatorModel: cluster value must be finite");
    if (f.mode == TailMode::approach) {
      if (std::abs(std::abs(f.direction) - 1.0) > 1e-12)
        throw std::invalid_argument("OperatorModel: approach direction must be a unit complex");
      if (!(f.scale > 0.0)) throw std::invalid_argument("OperatorModel: approach scale must be positive");
      if (f.law == TailLaw::geometric && !(f.ratio > 0.0 && f.ratio < 1.0))
        throw std::invalid_argument("OperatorModel: geometric ratio must lie in (0,1)");
    }
  }
}

OperatorModel OperatorModel::scale_shift(const Complex& a, const Complex& b) const {
  OperatorModel out;
  const std::size_t n = finite_block.rows();
  out.finite_block = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.finite_block(i, j) = b * finite_block(i, j);
    out.finite_block(i, i) += a;
  }
  out.tail.reserve(tail.size());
  for (const TailEntryFamily& f : tail) {
    TailEntryFamily g = f;
    g.value = a + b * f.value;
    if (f.mode == TailMode::approach) {
      const double mag = std::abs(b);
      if (mag == 0.0) {
        g.mode = TailMode::exact;
      } else {
        g.direction = b * f.direction / mag;
        g.scale = f.scale * mag;
      }
    }
    out.tail.push_back(g);
  }
  return out;
}

bool OperatorModel::is_selfadjoint(double tol) const {
  const double scale = std::max(1.0, finite_block.max_abs());
  for (std::size_t i = 0; i < finite_block.rows(); ++i)
    for (std::size_t j = 0; j < finite_block.cols(); ++j)
      if (std::abs(finite_block(i, j) - std::conj(finite_block(j, i))) > tol * scale) return false;
  for (const TailEntryFamily& f : tail) {
    if (std::abs(f.value.imag()) > tol * std::max(1.0, std::abs(f.value))) return false;
    if (f.mode == TailMode::approach && std::abs(f.direction.imag()) > tol) return false;
  }
  return true;
}

double OperatorModel::norm_bound() const {
  double b = finite_block.empty() ? 0.0 : spectral_norm(finite_block);
  for (const TailEntryFamily& f : tail) b = std::max(b, std::abs(f.value) + f.max_deviation());
  return b;
}

double RealTailFamily::g(std::size_t n) const {
  if (mode == TailMode::exact) return 0.0;
  if (law == TailLaw::harmonic) return scale / static_cast<double>(n + 1);
  return scale * std::pow(ratio, static_cast<double>(n));
}

double RealTailFamily::entry(std::size_t n) const {
  if (mode == TailMode::exact) return value;
  return value + direction * g(n);
}

std::vector<Complex> placement_values(const OperatorModel& a,
                                      const std::vector<PlacementSlot>& placement) {
  const std::size_t nb = a.finite_block.rows();
  bool need_eig = false;
  for (const PlacementSlot& s : placement)
    need_eig = need_eig || s.kind == PlacementSlot::Kind::block;
  EigenDecomposition eig;
  if (need_eig) {
    if (nb == 0) throw std::invalid_argument("placement: block slot on an empty block");
    eig = hermitian_eigen(hermitian_part(a.finite_block));
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<Complex> vals;
  vals.reserve(placement.size());
  for (const PlacementSlot& s : placement) {
    if (s.kind == PlacementSlot::Kind::block) {
      if (s.index >= nb) throw std::invalid_argument("placement: block slot out of range");
      if (!seen.insert({0, s.index}).second)
        throw std::invalid_argument("placement: duplicate block slot");
      std::vector<Complex> v(nb);
      for (std::size_t r = 0; r < nb; ++r) v[r] = eig.eigenvectors(r, s.index);
      vals.push_back(quadratic_form(a.finite_block, v));
    } else {
      if (s.index >= a.tail.size())
        throw std::invalid_argument("placement: tail family out of range");
      if (s.entry == 0) throw std::invalid_argument("placement: tail entries are 1-based");
      if (!seen.insert({1 + s.index, s.entry}).second)
        throw std::invalid_argument("placement: duplicate tail slot");
      vals.push_back(a.tail[s.index].entry(s.entry));
    }
  }
  return vals;
}

SelfadjointModel rotate_real_part(const OperatorModel& a, double theta) {
  a.validate();
  const Complex u = std::polar(1.0, -theta);
  SelfadjointModel h;
  if (!a.finite_block.empty()) {
    h.finite_block = hermitian_part(a.finite_block.scaled(u));
  } else {
    h.finite_block = ComplexMatrix(0, 0);
  }
  h.tail.reserve(a.tail.size());
  for (const TailEntryFamily& f : a.tail) {
    RealTailFamily r;
    r.value = (u * f.value).real();
    r.law = f.law;
    r.scale = f.scale;
    r.ratio = f.ratio;
    if (f.mode == TailMode::exact) {
      r.mode = TailMode::exact;
    } else {
      const double d = (u * f.direction).real();
      if (d == 0.0) {
        r.mode = TailMode::exact;  // direction rotated out of the real axis
      } else {
        r.mode = TailMode::approach;
        r.direction = d > 0.0 ? 1.0 : -1.0;
        r.scale = f.scale * std::abs(d);
      }
    }
    h.tail.push_back(r);
  }
  return h;
}

double ess_sup(const SelfadjointModel& h) {
  if (h.tail.empty()) throw std::domain_error("ess_sup: model has no tail");
  double m = h.tail.front().value;
  for (const RealTailFamily& f : h.tail) m = std::max(m, f.value);
  return m;
}

namespace {

double block_eigen_tol(const ComplexMatrix& block, double t) {
  return 1e-11 * std::max({1.0, std::abs(t), block.frobenius_norm()});
}

// Largest n >= 1 with g(n) >= delta (or > delta when strict); 0 when none.
// g is strictly decreasing to 0, so a closed-form candidate fixed up by a
// short scan is exact.
std::uint64_t family_count(const RealTailFamily& f, double delta, bool strict) {
  if (delta <= 0.0) return 0;  // caller handles the infinite regimes
  double cand;
  if (f.law == TailLaw::harmonic) {
    cand = f.scale / delta - 1.0;
  } else {
    cand = std::log(delta / f.scale) / std::log(f.ratio);
  }
  if (!(cand > 0.0)) cand = 0.0;
  if (cand > 9e15) cand = 9e15;
  auto n = static_cast<std::uint64_t>(cand);
  const auto ok = [&](std::uint64_t k) {
    const double g = f.g(k);
    return strict ? g > delta : g >= delta;
  };
  for (int i = 0; i < 8 && ok(n + 1); ++i) ++n;
  for (int i = 0; i < 8 && n > 0 && !ok(n); ++i) --n;
  return n;
}

ExtendedNat count_block(const SelfadjointModel& h, double t, bool strict) {
  std::uint64_t c = 0;
  if (!h.finite_block.empty()) {
    const double eps = block_eigen_tol(h.finite_block, t);
    for (double w : hermitian_eigen(h.finite_block).eigenvalues) {
      if (strict ? w > t + eps : w >= t - eps) ++c;
    }
  }
  return ExtendedNat::of(c);
}

}  // namespace

double spectral_slack(const SelfadjointModel& h, double t) {
  return block_eigen_tol(h.finite_block, t);
}

ExtendedNat family_count_at_least(const RealTailFamily& f, double t, bool strict) {
  if (f.mode == TailMode::exact)
    return (strict ? f.value > t : f.value >= t) ? ExtendedNat::inf() : ExtendedNat::of(0);
  if (f.direction > 0.0) {
    // entries value + g(n): all of them exceed t once t <= value
    if (t <= f.value) return ExtendedNat::inf();
    return ExtendedNat::of(family_count(f, t - f.value, strict));
  }
  // approach from below: infinitely many entries inside (t, value) iff t < value
  return t < f.value ? ExtendedNat::inf() : ExtendedNat::of(0);
}

ExtendedNat count_at_least(const SelfadjointModel& h, double t) {
  std::uint64_t total = count_block(h, t, false).value;
  for (const RealTailFamily& f : h.tail) {
    const ExtendedNat k = family_count_at_least(f, t, false);
    if (k.infinite) return ExtendedNat::inf();
    total += k.value;
  }
  return ExtendedNat::of(total);
}

ExtendedNat count_above(const SelfadjointModel& h, double t) {
  std::uint64_t total = count_block(h, t, true).value;
  for (const RealTailFamily& f : h.tail) {
    const ExtendedNat k = family_count_at_least(f, t, true);
    if (k.infinite) return ExtendedNat::inf();
    total += k.value;
  }
  return ExtendedNat::of(total);
}

TopSpectrum positive_part_spectrum(const SelfadjointModel& h, double m, std::size_t n) {
  if (!h.tail.empty() && m < ess_sup(h))
    throw std::domain_error("positive_part_spectrum: m must dominate the essential supremum");

  // Nonincreasing value streams: block positives plus, per approach-from-
  // above family, the decreasing run g(k) - (m - value) while positive.
  std::vector<double> block_vals;
  if (!h.finite_block.empty()) {
    for (double w : hermitian_eigen(h.finite_block).eigenvalues) {
      const double v = w - m;
      if (v > 0.0) block_vals.push_back(v);
    }
  }
  std::sort(block_vals.rbegin(), block_vals.rend());

  struct Stream {
    const RealTailFamily* f;
    double offset;      // m - value >= 0
    std::size_t k = 1;  // next entry index
    double head() const {
      const double v = f->g(k) - offset;
      return v > 0.0 ? v : 0.0;
    }
  };
  std::vector<Stream> streams;
  for (const RealTailFamily& f : h.tail) {
    if (f.mode == TailMode::approach && f.direction > 0.0 && f.value + f.g(1) > m)
      streams.push_back({&f, m - f.value, 1});
  }

  TopSpectrum out;
  out.values.reserve(n);
  std::size_t block_i = 0;
  const auto next_value = [&]() {
    double best = block_i < block_vals.size() ? block_vals[block_i] : 0.0;
    int best_stream = -1;
    for (std::size_t s = 0; s < streams.size(); ++s) {
      const double v = streams[s].head();
      if (v > best) {
        best = v;
        best_stream = static_cast<int>(s);
      }
    }
    if (best <= 0.0) return 0.0;
    if (best_stream < 0) {
      ++block_i;
    } else {
      ++streams[static_cast<std::size_t>(best_stream)].k;
    }
    return best;
  };

  for (std::size_t i = 0; i < n; ++i) out.values.push_back(next_value());
  out.tail_bound = next_value();
  return out;
}

ConvexPolygon ess_range(const OperatorModel& a) {
  a.validate();
  if (a.tail.empty()) throw std::domain_error("ess_range: model has no tail");
  std::vector<Complex> pts;
  pts.reserve(a.tail.size());
  for (const TailEntryFamily& f : a.tail) pts.push_back(f.value);
  return convex_hull(std::move(pts));
}

double norm_bound(const SelfadjointModel& h) {
  double b = 0.0;
  if (!h.finite_block.empty()) b = spectral_norm(h.finite_block);
  for (const RealTailFamily& f : h.tail)
    b = std::max(b, std::abs(f.value) + (f.mode == TailMode::approach ? f.g(1) : 0.0));
  return b;
}

}  // namespace ocnr
