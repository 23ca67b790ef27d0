#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trilab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTau = 2.0 * std::numbers::pi;

// Default comparison tolerances (absolute on angles, relative on lengths).
inline constexpr double kAngleTolAbs = 1e-9;
inline constexpr double kLengthTolRel = 1e-9;

// A triangle is degenerate when |signed area| <= factor * (longest side)^2.
inline constexpr double kDegeneracyFactor = 1e-12;

// Minimum angular separation between vertices on a circle, radians.
inline constexpr double kAngularSeparationMin = 1e-12;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : Error {
  using Error::Error;
};

struct OffCircle : Error {
  using Error::Error;
};

struct ParallelLines : Error {
  using Error::Error;
};

/// Planar point, doubling as a 2-vector. Coordinates must be finite.
struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double px, double py) : x(px), y(py) {
    if (!std::isfinite(px) || !std::isfinite(py)) {
      throw std::invalid_argument("Point: non-finite coordinate");
    }
  }
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline Point operator*(double s, Point a) { return a * s; }
inline Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

/// Rotate a vector by `angle` radians (counterclockwise).
Point rotated(Point v, double angle);

struct Circle {
  Point center;
  double radius = 1.0;

  Circle(Point c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("Circle: radius must be positive and finite");
    }
  }
};

/// Point at angular position theta on a circle.
Point point_on(const Circle& c, double theta);

/// Normalize an angle to [0, 2*pi) by floor division.
double wrap_angle(double theta);

/// Counterclockwise arc angle from `from` to `to`, in [0, 2*pi).
double ccw_arc(double from, double to);

/// Signed angle in (-pi, pi].
double wrap_signed(double theta);

/// Reduce an angle mod pi into (-pi/2, pi/2] (undirected-line difference).
double wrap_mod_pi(double theta);

double signed_area(Point a, Point b, Point c);

/// Angle triple (alpha, beta, gamma): each in (0, pi), summing to pi.
struct AngleTriple {
  double alpha;
  double beta;
  double gamma;

  AngleTriple(double a, double b, double g);
};

/// Triangle with labeled vertices A, B, C. Side a is opposite vertex A
/// (that is, |BC|), and so on. Construction rejects degenerate input but
/// accepts either winding; the original winding is recorded.
class LabeledTriangle {
 public:
  LabeledTriangle(Point a, Point b, Point c);

  Point vertex_a() const { return a_; }
  Point vertex_b() const { return b_; }
  Point vertex_c() const { return c_; }

  double side_a() const { return side_a_; }
  double side_b() const { return side_b_; }
  double side_c() const { return side_c_; }

  /// +1 for counterclockwise A->B->C, -1 for clockwise.
  int winding() const { return winding_; }

 private:
  Point a_, b_, c_;
  double side_a_, side_b_, side_c_;
  int winding_;
};

/// Circle through the triangle's three vertices.
Circle circumcircle(const LabeledTriangle& t);

/// Angular position of p on circle c, in [0, 2*pi). Throws OffCircle when
/// |dist(p, center) - radius| exceeds tol_rel * radius.
double angular_position(const Circle& c, Point p, double tol_rel = kLengthTolRel);

/// Intersection of the line through p1 with direction angle dir1 and the
/// line through p2 with direction angle dir2. Throws ParallelLines.
Point line_intersection(Point p1, double dir1, Point p2, double dir2);

/// Internal angles at A, B, C.
AngleTriple angles_of(const LabeledTriangle& t);

}  // namespace trilab
