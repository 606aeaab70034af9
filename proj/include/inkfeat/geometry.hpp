#ifndef INKFEAT_GEOMETRY_HPP
#define INKFEAT_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "inkfeat/ink.hpp"

namespace inkfeat::geometry {

struct BoundingBox {
  double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  Point center() const { return {(xmin + xmax) / 2.0, (ymin + ymax) / 2.0}; }
};

// vertices run counter-clockwise in the algebraic sense (positive shoelace
// area on raw coordinates), starting from the bottom-most (then left-most)
// point; no three retained vertices are collinear. Collinear input collapses
// to the two extreme points: area 0, perimeter twice the span, degenerate set.
struct ConvexHull {
  std::vector<Point> vertices;
  double area = 0.0;
  double perimeter = 0.0;
  bool degenerate = false;  // fewer than 3 distinct non-collinear points
};

// p1/p2 are orthonormal; p1 spans the longer side of the tightest
// axis-aligned box in the eigenbasis of the coordinate covariance, so
// alpha >= beta. Sign convention: p_x >= 0, ties broken by p_y >= 0.
struct PrincipalAxes {
  Point p1{1.0, 0.0};
  Point p2{0.0, 1.0};
  double alpha = 0.0;  // full extent along p1
  double beta = 0.0;   // full extent along p2
  Point box_center{0.0, 0.0};
};

// Maximal runs of low-turn samples; ranges are [first, last] flat sample
// indices, never spanning a pen-up jump.
struct StraightLineSet {
  struct Run {
    std::size_t first = 0;
    std::size_t last = 0;
    double length = 0.0;
  };
  std::vector<Run> runs;
};

// Vertical direction reversals of the resampled trajectory.
struct CupSet {
  int count = 0;
  double first_offset = 0.0;  // arc-length position / total length; 0 if none
  double last_offset = 0.0;
};

double Distance(const Point& a, const Point& b);

// Sum of segment lengths over flat indices [i, j]; includes pen-up jumps.
double PathLength(const FlatPointSequence& s, std::size_t i, std::size_t j);
double TotalLength(const FlatPointSequence& s);

// Throws kEmptyGesture on an empty sequence.
BoundingBox Bounds(const FlatPointSequence& s);
BoundingBox Bounds(const std::vector<Point>& pts);

Point Centroid(const FlatPointSequence& s);

ConvexHull ComputeConvexHull(std::vector<Point> pts);
ConvexHull ComputeConvexHull(const FlatPointSequence& s);

// Throws kInsufficientSamples for n < 2 and kDegenerateGeometry when all
// points coincide.
PrincipalAxes ComputePrincipalAxes(const FlatPointSequence& s);

// Unsigned angle at vertex i between s_{i-k} and s_{i+k}, in [0, pi].
// Throws kIndexOutOfRange for invalid i and kDegenerateGeometry when either
// arm has zero length.
double VertexAngle(const FlatPointSequence& s, std::size_t i, std::size_t k);

// Turn at vertex i from segment (i-1, i) to (i, i+1), in (-pi, pi]:
// atan2(dx_i * dy_{i-1} - dx_{i-1} * dy_i, dx_i * dx_{i-1} + dy_i * dy_{i-1}).
// Zero-length arms yield 0. Sign flips under y-mirroring.
double SignedTurnAngle(const FlatPointSequence& s, std::size_t i);

// m + 1 points at arc lengths {0, L/m, ..., L} along the flat polyline
// (pen-up jumps included in arc length). First/last points are copied
// verbatim. Throws kDegenerateGeometry when the total length is zero.
std::vector<Point> ResampleEquidistant(const FlatPointSequence& s,
                                       std::size_t m);

// Closed segments, touching counts, collinear overlap counts.
bool SegmentsIntersect(const Point& a, const Point& b, const Point& c,
                       const Point& d);

// Pairs of drawn segments that intersect: within a stroke only non-adjacent
// pairs (j >= i + 2), across strokes all pairs. Pen-up jumps are not
// segments.
int CountCrossings(const FlatPointSequence& s);

// A window of `window` consecutive same-stroke samples is straight when the
// cumulative turn (sum of 1-stride vertex angles interior to the window) is
// at most `threshold`. Runs are maximal unions of overlapping straight
// windows.
StraightLineSet DetectStraightLines(const FlatPointSequence& s,
                                    std::size_t window = 5,
                                    double threshold = 0.26);

// Resamples to `segments` equal steps and scans y for direction reversals
// with hysteresis: a reversal is recorded when y retreats from its running
// extreme by at least `prominence` * bbox height.
CupSet DetectCups(const FlatPointSequence& s, std::size_t segments = 64,
                  double prominence = 0.05);

// Strokes whose polylines come within epsilon of each other are connected
// (transitively). epsilon < 0 selects the default, 1% of the gesture
// bounding-box diagonal.
int ConnectedComponents(const Gesture& gesture, double epsilon = -1.0);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Central differences over the flat sequence. Valid i: [1, n-2] for
// Velocity/Speed, [2, n-3] for Acceleration; throws kInsufficientSamples.
Vec2 Velocity(const FlatPointSequence& s, std::size_t i);
Vec2 Acceleration(const FlatPointSequence& s, std::size_t i);
// Scalar speed (||s_{i+1}-s_i|| + ||s_i-s_{i-1}||) / (t_{i+1} - t_{i-1}).
double Speed(const FlatPointSequence& s, std::size_t i);

}  // namespace inkfeat::geometry

#endif  // INKFEAT_GEOMETRY_HPP
