#include "ocnr/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ocnr {

namespace {

constexpr double kOrderSlack = 1e-12;  // tolerated inversion from rounding

void validate_head(const std::vector<double>& head) {
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (!(head[i] >= -kOrderSlack) || !std::isfinite(head[i]))
      throw std::invalid_argument("SpectrumSeq: head entries must be finite and nonnegative");
    if (i > 0 && head[i] > head[i - 1] + kOrderSlack)
      throw std::invalid_argument("SpectrumSeq: head must be nonincreasing");
  }
}

}  // namespace

SpectrumSeq::SpectrumSeq(std::vector<double> head, std::optional<GeometricTail> tail)
    : head_(std::move(head)), tail_(tail) {
  validate_head(head_);
  if (tail_) {
    if (!(tail_->coefficient >= 0.0) || !std::isfinite(tail_->coefficient))
      throw std::invalid_argument("SpectrumSeq: tail coefficient must be nonnegative");
    if (!(tail_->ratio > 0.0) || !(tail_->ratio < 1.0))
      throw std::invalid_argument("SpectrumSeq: tail ratio must lie in (0,1)");
    const double first_tail = tail_->coefficient * tail_->ratio;
    if (!head_.empty() && head_.back() + kOrderSlack < first_tail)
      throw std::invalid_argument("SpectrumSeq: head must dominate the first tail entry");
    if (tail_->coefficient == 0.0) tail_.reset();  // canonical form
  }
}

double SpectrumSeq::entry(std::size_t i) const {
  if (i < head_.size()) return head_[i];
  if (!tail_) return 0.0;
  const auto j = static_cast<double>(i - head_.size() + 1);
  return tail_->coefficient * std::pow(tail_->ratio, j);
}

double SpectrumSeq::partial_sum(std::size_t n) const {
  double s = 0.0;
  const std::size_t nh = std::min(n, head_.size());
  for (std::size_t i = 0; i < nh; ++i) s += head_[i];
  if (n > head_.size() && tail_) {
    const double r = tail_->ratio;
    const auto j = static_cast<double>(n - head_.size());
    // a r (1 - r^j) / (1 - r)
    s += tail_->coefficient * r * (1.0 - std::pow(r, j)) / (1.0 - r);
  }
  return s;
}

double SpectrumSeq::trace() const {
  double s = 0.0;
  for (double v : head_) s += v;
  if (tail_) s += tail_->coefficient * tail_->ratio / (1.0 - tail_->ratio);
  return s;
}

ExtendedNat SpectrumSeq::rank() const {
  if (has_infinite_tail()) return ExtendedNat::inf();
  std::uint64_t n = 0;
  for (double v : head_)
    if (v > 0.0) ++n;
  return ExtendedNat::of(n);
}

ExtendedNat SelfadjointSpectrum::rank() const {
  const ExtendedNat p = plus.rank();
  const ExtendedNat m = minus.rank();
  if (p.infinite || m.infinite) return ExtendedNat::inf();
  return ExtendedNat::of(p.value + m.value);
}

namespace {

// sum_{k>n} of the sequence, valid for n >= head length.
double remainder_after(const SpectrumSeq& s, std::size_t n) {
  if (!s.tail()) return 0.0;
  const double a = s.tail()->coefficient;
  const double r = s.tail()->ratio;
  const auto j = static_cast<double>(n - s.head().size() + 1);
  return a * std::pow(r, j) / (1.0 - r);
}

struct PairCheck {
  Tristate verdict = Tristate::yes;
  std::size_t violation = 0;
};

// Certify sum_a(n) <= sum_b(n) + tol for every n >= 1 (positive sequences).
PairCheck check_positive_pair(const SpectrumSeq& a, const SpectrumSeq& b, std::size_t n_max) {
  const double tol = cmp_tol(a.trace(), b.trace());

  // Direct region: far enough to cover both heads, so that the closed-form
  // analysis below only ever sees pure geometric remainders.  Past the heads
  // the inequalities for every remaining n are decided analytically, which
  // subsumes any larger n_max window.
  const std::size_t direct =
      std::min(std::max({n_max, a.head().size(), b.head().size()}),
               std::max(a.head().size(), b.head().size()) + 2);
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t n = 1; n <= direct; ++n) {
    sa += a.entry(n - 1);
    sb += b.entry(n - 1);
    if ((n & 1023u) == 0) {  // periodic resync against additive drift
      sa = a.partial_sum(n);
      sb = b.partial_sum(n);
    }
    if (sa > sb + tol) return {Tristate::no, n};
  }

  // Beyond the direct region the gap is g(n) = Delta + A ra^n - B rb^n with
  // Delta = trace(b) - trace(a) and A, B >= 0 the remainder scale factors.
  const double delta = b.trace() - a.trace();
  const bool ta = a.has_infinite_tail();
  const bool tb = b.has_infinite_tail();

  const auto gap_at = [&](std::size_t n) {
    return (delta + remainder_after(a, n)) - remainder_after(b, n);
  };

  if (!tb) {
    // g decreases (or is constant) towards Delta.
    if (delta >= -tol) return {Tristate::yes, 0};
    // Violated in the limit: first violation is where the a-remainder drops
    // below -delta; report the first index past the direct region that fails.
    std::size_t n = direct + 1;
    while (gap_at(n) >= -tol && n < direct + (1u << 22)) ++n;
    return {Tristate::no, n};
  }
  if (!ta) {
    // g increases towards Delta; the minimum sits right after the window.
    if (gap_at(direct + 1) >= -tol) return {Tristate::yes, 0};
    return {Tristate::no, direct + 1};
  }

  // Both tails present.  Check the boundary, the limit, and the unique
  // interior critical point of Delta + A ra^n - B rb^n.
  const double ra = a.tail()->ratio;
  const double rb = b.tail()->ratio;
  std::vector<std::size_t> probes = {direct + 1, direct + 2};
  if (std::abs(ra - rb) > 1e-15) {
    const double la = -std::log(ra);
    const double lb = -std::log(rb);
    const double A = remainder_after(a, direct + 1) / std::pow(ra, double(direct + 1));
    const double B = remainder_after(b, direct + 1) / std::pow(rb, double(direct + 1));
    if (A > 0.0 && B > 0.0) {
      const double nstar = std::log((B * lb) / (A * la)) / std::log(ra / rb);
      if (std::isfinite(nstar) && nstar > double(direct) && nstar < 4e9) {
        const auto lo = static_cast<std::size_t>(std::floor(nstar));
        probes.push_back(lo);
        probes.push_back(lo + 1);
      }
    }
  }
  double worst = delta;  // limit value
  std::size_t worst_at = 0;
  for (std::size_t n : probes) {
    const double g = gap_at(n);
    if (g < worst) {
      worst = g;
      worst_at = n;
    }
  }
  if (worst >= -tol) return {Tristate::yes, 0};
  if (worst_at == 0) {
    // Violation only in the limit; locate a concrete failing index.
    std::size_t n = direct + 1;
    while (gap_at(n) >= -tol && n < direct + (1u << 22)) ++n;
    worst_at = n;
  }
  return {Tristate::no, worst_at};
}

}  // namespace

MajorizationResult is_submajorized(const SelfadjointSpectrum& a, const SelfadjointSpectrum& b,
                                   std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("is_submajorized: n_max must be positive");
  const PairCheck plus = check_positive_pair(a.plus, b.plus, n_max);
  if (plus.verdict == Tristate::no) return {Tristate::no, plus.violation, false};
  const PairCheck minus = check_positive_pair(a.minus, b.minus, n_max);
  if (minus.verdict == Tristate::no) return {Tristate::no, minus.violation, true};
  if (plus.verdict == Tristate::unknown || minus.verdict == Tristate::unknown)
    return {Tristate::unknown, 0, false};
  return {Tristate::yes, 0, false};
}

MajorizationResult is_submajorized(const SpectrumSeq& a, const SpectrumSeq& b, std::size_t n_max) {
  return is_submajorized(SelfadjointSpectrum::positive(a), SelfadjointSpectrum::positive(b), n_max);
}

MajorizationResult is_majorized(const SelfadjointSpectrum& a, const SelfadjointSpectrum& b,
                                std::size_t n_max) {
  MajorizationResult r = is_submajorized(a, b, n_max);
  if (r.verdict != Tristate::yes) return r;
  const double ta = a.trace();
  const double tb = b.trace();
  if (std::abs(ta - tb) > cmp_tol(ta, tb)) return {Tristate::no, 0, false};
  return r;
}

MajorizationResult is_majorized(const SpectrumSeq& a, const SpectrumSeq& b, std::size_t n_max) {
  return is_majorized(SelfadjointSpectrum::positive(a), SelfadjointSpectrum::positive(b), n_max);
}

SpectrumSeq truncate(const SpectrumSeq& c, std::size_t m) {
  if (!c.has_infinite_tail() && m >= c.head().size()) return c;
  std::vector<double> head;
  head.reserve(m);
  for (std::size_t i = 0; i < m; ++i) head.push_back(c.entry(i));
  return SpectrumSeq(std::move(head));
}

double tail_sum(const SpectrumSeq& c, std::size_t m) {
  if (m >= c.head().size()) return remainder_after(c, m);
  double s = 0.0;
  for (std::size_t i = c.head().size(); i-- > m;) s += c.head()[i];
  if (c.tail()) s += remainder_after(c, c.head().size());
  return s;
}

SelfadjointSpectrum truncate_signed(const SelfadjointSpectrum& c, std::size_t m_minus,
                                    std::size_t m_plus) {
  if (!c.plus.rank().at_least(m_plus))
    throw std::domain_error("truncate_signed: m_plus exceeds the positive rank");
  if (!c.minus.rank().at_least(m_minus))
    throw std::domain_error("truncate_signed: m_minus exceeds the negative rank");
  return {truncate(c.plus, m_plus), truncate(c.minus, m_minus)};
}

SelfadjointSpectrum rank2_reduce(const SelfadjointSpectrum& c) {
  const auto collapse = [](const SpectrumSeq& s) {
    const double t = s.trace();
    if (t <= 0.0) return SpectrumSeq::zero();
    return SpectrumSeq({t});
  };
  return {collapse(c.plus), collapse(c.minus)};
}

GreedyInterpolant greedy_interpolant(const SpectrumSeq& x, const SpectrumSeq& c) {
  if (x.has_infinite_tail())
    throw std::domain_error("greedy_interpolant: x must have finitely many nonzero entries");
  const MajorizationResult sub = is_submajorized(x, c);
  if (sub.verdict != Tristate::yes)
    throw std::domain_error("greedy_interpolant: x is not submajorized by c");

  const double tx = x.trace();
  if (tx <= 0.0) return {1, 0.0, SpectrumSeq::zero()};

  // Largest k with sum_{n<k} c_n <= trace(x), capped at rank(c); the cap
  // keeps k finite when trace(x) = trace(c) with trailing zero entries.
  const ExtendedNat rank_c = c.rank();
  std::size_t k = 1;
  double prefix = 0.0;  // sum of the first k-1 entries of c
  while (rank_c.at_least(k + 1) && k < (1u << 20)) {
    const double ck_cur = c.entry(k - 1);
    if (ck_cur <= 0.0) break;  // underflowed tail cannot advance the cut
    const double next = prefix + ck_cur;
    if (next > tx) break;
    prefix = next;
    ++k;
  }

  const double s = tx - prefix;
  const double ck = c.entry(k - 1);
  const double t = ck > 0.0 ? std::min(1.0, s / ck) : 0.0;

  std::vector<double> head;
  head.reserve(k);
  for (std::size_t i = 0; i + 1 < k; ++i) head.push_back(c.entry(i));
  head.push_back(s);
  return {k, t, SpectrumSeq(std::move(head))};
}

}  // namespace ocnr
