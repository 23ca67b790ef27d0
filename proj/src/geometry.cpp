#include "trilab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace trilab {

Point rotated(Point v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point point_on(const Circle& c, double theta) {
  return {c.center.x + c.radius * std::cos(theta),
          c.center.y + c.radius * std::sin(theta)};
}

double wrap_angle(double theta) {
  double r = theta - kTau * std::floor(theta / kTau);
  if (r >= kTau) r -= kTau;  // floor rounding at the seam
  if (r < 0.0) r = 0.0;
  return r;
}

double ccw_arc(double from, double to) { return wrap_angle(to - from); }

double wrap_signed(double theta) {
  double r = wrap_angle(theta);
  if (r > kPi) r -= kTau;
  return r;
}

double wrap_mod_pi(double theta) {
  double r = theta - kPi * std::floor(theta / kPi);
  if (r >= kPi) r -= kPi;
  if (r > kPi / 2) r -= kPi;
  return r;
}

double signed_area(Point a, Point b, Point c) {
  return 0.5 * cross(b - a, c - a);
}

AngleTriple::AngleTriple(double a, double b, double g)
    : alpha(a), beta(b), gamma(g) {
  for (double v : {a, b, g}) {
    if (!(v > 0.0) || !(v < kPi)) {
      throw std::invalid_argument("AngleTriple: angle outside (0, pi)");
    }
  }
  if (std::abs(a + b + g - kPi) > 1e-12) {
    throw std::invalid_argument("AngleTriple: angles do not sum to pi");
  }
}

LabeledTriangle::LabeledTriangle(Point a, Point b, Point c)
    : a_(a), b_(b), c_(c) {
  side_a_ = dist(b, c);
  side_b_ = dist(c, a);
  side_c_ = dist(a, b);
  const double longest = std::max({side_a_, side_b_, side_c_});
  if (longest == 0.0) {
    throw DegenerateTriangle("LabeledTriangle: coincident vertices");
  }
  const double area = signed_area(a, b, c);
  if (std::abs(area) <= kDegeneracyFactor * longest * longest) {
    throw DegenerateTriangle("LabeledTriangle: vertices are (nearly) collinear");
  }
  winding_ = area > 0.0 ? 1 : -1;
}

Circle circumcircle(const LabeledTriangle& t) {
  // Perpendicular-bisector intersection, translated to vertex A for accuracy.
  const Point u = t.vertex_b() - t.vertex_a();
  const Point v = t.vertex_c() - t.vertex_a();
  const double d = 2.0 * cross(u, v);
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  const Point rel{(v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d};
  return Circle(t.vertex_a() + rel, norm(rel));
}

double angular_position(const Circle& c, Point p, double tol_rel) {
  const Point rel = p - c.center;
  const double d = norm(rel);
  if (std::abs(d - c.radius) > tol_rel * c.radius) {
    throw OffCircle("angular_position: point does not lie on the circle");
  }
  return wrap_angle(std::atan2(rel.y, rel.x));
}

Point line_intersection(Point p1, double dir1, Point p2, double dir2) {
  const Point u1{std::cos(dir1), std::sin(dir1)};
  const Point u2{std::cos(dir2), std::sin(dir2)};
  const double den = cross(u1, u2);  // sin of the angle between the lines
  if (std::abs(den) <= kAngularSeparationMin) {
    throw ParallelLines("line_intersection: lines are parallel");
  }
  const double s = cross(p2 - p1, u2) / den;
  return p1 + u1 * s;
}

namespace {

double corner_angle(Point at, Point p, Point q) {
  const Point u = p - at;
  const Point v = q - at;
  // atan2 form stays accurate for very flat corners, unlike acos.
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace

AngleTriple angles_of(const LabeledTriangle& t) {
  return AngleTriple(corner_angle(t.vertex_a(), t.vertex_b(), t.vertex_c()),
                     corner_angle(t.vertex_b(), t.vertex_c(), t.vertex_a()),
                     corner_angle(t.vertex_c(), t.vertex_a(), t.vertex_b()));
}

}  // namespace trilab
