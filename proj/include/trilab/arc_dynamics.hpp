#pragma once

#include "trilab/geometry.hpp"

namespace trilab {

struct OddRank : Error {
  using Error::Error;
};

/// Opposite-arc lengths (l_a, l_b, l_c) of a triangle on its circumcircle:
/// l_a is the length of arc BC not containing A, and so on. This triple is
/// the state vector of the mid-arc iteration.
class ArcTriple {
 public:
  ArcTriple(double l_a, double l_b, double l_c);
  ArcTriple(double l_a, double l_b, double l_c, double circumference);

  double l_a() const { return l_a_; }
  double l_b() const { return l_b_; }
  double l_c() const { return l_c_; }
  double circumference() const { return circumference_; }
  double radius() const { return circumference_ / kTau; }

 private:
  double l_a_, l_b_, l_c_;
  double circumference_;
};

/// Triangle given by angular vertex positions on its circumcircle.
///
/// Stored positions are canonicalized to counterclockwise winding of
/// (theta_a, theta_b, theta_c); when the input winding is clockwise the B
/// and C labels are swapped and the swap is recorded, so conversions back
/// to Cartesian labels are lossless.
class AngularTriangle {
 public:
  AngularTriangle(Circle circle, double theta_a, double theta_b, double theta_c,
                  bool labels_swapped = false);

  /// Place a triangle with the given internal angles on `circle`, vertex A
  /// at angular position `theta_a`, counterclockwise winding.
  static AngularTriangle from_angles(const AngleTriple& angles,
                                     const Circle& circle,
                                     double theta_a = kPi / 2);

  const Circle& circle() const { return circle_; }
  double theta_a() const { return theta_a_; }
  double theta_b() const { return theta_b_; }
  double theta_c() const { return theta_c_; }
  bool labels_swapped() const { return labels_swapped_; }

  Point vertex_a() const { return point_on(circle_, theta_a_); }
  Point vertex_b() const { return point_on(circle_, theta_b_); }
  Point vertex_c() const { return point_on(circle_, theta_c_); }

 private:
  Circle circle_;
  double theta_a_, theta_b_, theta_c_;
  bool labels_swapped_;
};

/// Drift of the tracked vertex C (the vertex between sides a and b) after an
/// even number of iterations. Positive drift displaces C along the circle
/// toward the arc opposite B, i.e. clockwise for counterclockwise winding;
/// with that sign, drift_ab = (l_a - l_b)/4 * sum_{k<n/2} (1/4)^k.
struct DriftReport {
  int rank;
  double drift_ab;            // arc-length units
  double drift_limit;         // (l_a - l_b)/3
  double orientation_angle;   // drift_limit / (2R) = (alpha - beta)/3
};

AngularTriangle to_angular(const LabeledTriangle& t);

/// Materialize Cartesian vertices, undoing the recorded label swap so the
/// result carries the caller's original labels.
LabeledTriangle to_labeled(const AngularTriangle& t);

ArcTriple arcs_of(const AngularTriangle& t);

/// One mid-arc step on the arc triple:
/// (l_a, l_b, l_c) -> ((l_b+l_c)/2, (l_a+l_c)/2, (l_a+l_b)/2).
ArcTriple step_arcs(const ArcTriple& l);

/// One mid-arc step on vertex positions: each new vertex is the midpoint of
/// the arc opposite the same-labeled old vertex. The circle is unchanged and
/// arcs_of(step_angular(t)) == step_arcs(arcs_of(t)).
AngularTriangle step_angular(const AngularTriangle& t);

AngularTriangle iterate_angular(const AngularTriangle& t, int n);

/// n-th iterate in closed form. For even n the coefficients are
/// ((2^n+2)/3, (2^n-1)/3, (2^n-1)/3) / 2^n and cyclic analogues; for odd n
/// ((2^n-2)/3, (2^n+1)/3, (2^n+1)/3) / 2^n.
ArcTriple iterate_arcs(const ArcTriple& l, int n);

/// Limit of the iteration: every component equals circumference/3.
ArcTriple limit_arcs(const ArcTriple& l);

/// Convergence metric: max_i |l_i - circumference/3|.
double deviation(const ArcTriple& l);

struct LimitTriangles {
  AngularTriangle even;
  AngularTriangle odd;
};

/// The two equilateral limit triangles: even-rank iterates converge to
/// `even`, odd-rank iterates to `odd`; corresponding vertices are antipodal.
LimitTriangles limit_triangles(const AngularTriangle& t);

/// Drift report at an even rank n (n = 0 gives zero drift). Throws OddRank
/// for odd n: only even-rank iterates return labels to their original slots.
DriftReport drift(const ArcTriple& l, int rank);

/// n-th mid-arc triangle of t, with t's original vertex labels.
LabeledTriangle midarc(const LabeledTriangle& t, int n);

/// Angles recovered from arcs via l = 2 R alpha.
AngleTriple angles_from_arcs(const ArcTriple& l);

}  // namespace trilab
