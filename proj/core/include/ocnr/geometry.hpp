#pragma once

/*
 * Planar convex geometry on points represented as std::complex<double>
 * (rotation by a direction angle is then a single multiplication).
 *
 * A ConvexPolygon is a counterclockwise vertex list and may be degenerate:
 * empty, a single point, or a segment.  All predicates take an explicit
 * tolerance because the polygons here come from support-function data that
 * carries certified numeric error.
 */

#include <complex>
#include <vector>

namespace ocnr {

using Complex = std::complex<double>;

struct ConvexPolygon {
  std::vector<Complex> vertices;  // counterclockwise, no duplicates

  bool empty() const { return vertices.empty(); }
  std::size_t size() const { return vertices.size(); }
};

// Monotone-chain hull of an arbitrary point cloud (collinear interior points
// dropped, degenerate clouds give point/segment polygons).
ConvexPolygon convex_hull(std::vector<Complex> points);

// sup over the polygon of Re(e^{-i theta} z); -inf for the empty polygon.
double polygon_support(const ConvexPolygon& poly, double theta);

// A vertex attaining polygon_support (lowest index on ties).
Complex polygon_exposed_point(const ConvexPolygon& poly, double theta);

// Intersection of halfplanes Re(e^{-i theta_j} z) <= bound_j.  Directions
// need not be sorted.  Degenerate systems (segments, points) survive with a
// small keep-slack so that zero-width regions are not clipped away.
ConvexPolygon halfplane_intersection(const std::vector<double>& thetas,
                                     const std::vector<double>& bounds);

// Euclidean distance from a point to a convex polygon (0 inside).
double distance_to_polygon(const Complex& z, const ConvexPolygon& poly);

// Nearest point of the polygon (z itself when inside).
Complex project_to_polygon(const Complex& z, const ConvexPolygon& poly);

bool polygon_contains(const ConvexPolygon& poly, const Complex& z, double tol);

// Hausdorff distance between convex polygons; for convex sets it is attained
// at vertices.  Empty-vs-nonempty yields +inf, empty-vs-empty 0.
double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b);

double polygon_diameter(const ConvexPolygon& poly);

// Vertexwise affine image a + b*P.
ConvexPolygon scale_translate(const ConvexPolygon& poly, const Complex& a, const Complex& b);

}  // namespace ocnr
