#include "ocnr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ocnr {

namespace {

double cross(const Complex& o, const Complex& a, const Complex& b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void dedup_ring(std::vector<Complex>& v, double eps) {
  std::vector<Complex> out;
  for (const Complex& p : v) {
    if (out.empty() || std::abs(p - out.back()) > eps) out.push_back(p);
  }
  while (out.size() > 1 && std::abs(out.front() - out.back()) <= eps) out.pop_back();
  v = std::move(out);
}

}  // namespace

ConvexPolygon convex_hull(std::vector<Complex> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Complex& a, const Complex& b) { return a == b; }),
               points.end());
  const std::size_t n = points.size();
  if (n <= 2) return {points};

  std::vector<Complex> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && std::abs(hull[0] - hull[1]) == 0.0) hull.pop_back();
  return {hull};
}

double polygon_support(const ConvexPolygon& poly, double theta) {
  if (poly.empty()) return -std::numeric_limits<double>::infinity();
  const Complex d = std::polar(1.0, -theta);
  double best = -std::numeric_limits<double>::infinity();
  for (const Complex& v : poly.vertices) best = std::max(best, (d * v).real());
  return best;
}

Complex polygon_exposed_point(const ConvexPolygon& poly, double theta) {
  const Complex d = std::polar(1.0, -theta);
  Complex arg{};
  double best = -std::numeric_limits<double>::infinity();
  for (const Complex& v : poly.vertices) {
    const double s = (d * v).real();
    if (s > best) {
      best = s;
      arg = v;
    }
  }
  return arg;
}

ConvexPolygon halfplane_intersection(const std::vector<double>& thetas,
                                     const std::vector<double>& bounds) {
  double span = 1.0;
  for (double b : bounds) span = std::max(span, std::abs(b));
  const double w = 4.0 * span;
  std::vector<Complex> poly = {{-w, -w}, {w, -w}, {w, w}, {-w, w}};
  const double keep = 1e-11 * span;  // survive zero-width (segment) systems

  for (std::size_t j = 0; j < thetas.size() && !poly.empty(); ++j) {
    const Complex d = std::polar(1.0, -thetas[j]);
    const double b = bounds[j] + keep;
    std::vector<Complex> next;
    next.reserve(poly.size() + 2);
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Complex& p = poly[i];
      const Complex& q = poly[(i + 1) % n];
      const double fp = (d * p).real() - b;
      const double fq = (d * q).real() - b;
      if (fp <= 0.0) next.push_back(p);
      if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq <= 0.0)) {
        const double t = fp / (fp - fq);
        next.push_back(p + t * (q - p));
      }
    }
    dedup_ring(next, 1e-13 * span);
    poly = std::move(next);
  }
  return {poly};
}

namespace {

double point_segment_distance(const Complex& z, const Complex& a, const Complex& b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

Complex point_segment_nearest(const Complex& z, const Complex& a, const Complex& b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return a;
  double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return a + t * ab;
}

bool strictly_inside(const ConvexPolygon& poly, const Complex& z) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(poly.vertices[i], poly.vertices[(i + 1) % n], z) < 0.0) return false;
  }
  return true;
}

}  // namespace

double distance_to_polygon(const Complex& z, const ConvexPolygon& poly) {
  if (poly.empty()) return std::numeric_limits<double>::infinity();
  if (poly.size() == 1) return std::abs(z - poly.vertices[0]);
  if (strictly_inside(poly, z)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, point_segment_distance(z, poly.vertices[i], poly.vertices[(i + 1) % n]));
  }
  return best;
}

Complex project_to_polygon(const Complex& z, const ConvexPolygon& poly) {
  if (poly.empty()) return z;
  if (poly.size() == 1) return poly.vertices[0];
  if (strictly_inside(poly, z)) return z;
  double best = std::numeric_limits<double>::infinity();
  Complex arg = poly.vertices[0];
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex cand = point_segment_nearest(z, poly.vertices[i], poly.vertices[(i + 1) % n]);
    const double d = std::abs(z - cand);
    if (d < best) {
      best = d;
      arg = cand;
    }
  }
  return arg;
}

bool polygon_contains(const ConvexPolygon& poly, const Complex& z, double tol) {
  return distance_to_polygon(z, poly) <= tol;
}

double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  double h = 0.0;
  for (const Complex& v : a.vertices) h = std::max(h, distance_to_polygon(v, b));
  for (const Complex& v : b.vertices) h = std::max(h, distance_to_polygon(v, a));
  return h;
}

double polygon_diameter(const ConvexPolygon& poly) {
  double d = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    for (std::size_t j = i + 1; j < poly.size(); ++j)
      d = std::max(d, std::abs(poly.vertices[i] - poly.vertices[j]));
  return d;
}

ConvexPolygon scale_translate(const ConvexPolygon& poly, const Complex& a, const Complex& b) {
  ConvexPolygon out;
  out.vertices.reserve(poly.size());
  for (const Complex& v : poly.vertices) out.vertices.push_back(a + b * v);
  // A negative or rotating scale can reverse orientation; rebuild the hull to
  // restore the counterclockwise contract.
  std::vector<Complex> pts = out.vertices;
  return convex_hull(std::move(pts));
}

}  // namespace ocnr
