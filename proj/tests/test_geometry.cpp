#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "inkfeat/error.hpp"
#include "inkfeat/geometry.hpp"
#include "inkfeat/ink.hpp"

using namespace inkfeat;
using namespace inkfeat::geometry;
using testutil::MakeGesture;
using testutil::MakeStroke;
using testutil::OneStroke;

namespace {

FlatPointSequence FlatOf(const std::vector<Point>& pts) {
  return Flatten(OneStroke("t", pts));
}

// O(n^3) hull check: a point is a hull vertex iff it is not strictly inside
// any triangle of other points and not strictly inside any edge.
std::vector<Point> BruteHull(const std::vector<Point>& pts) {
  std::vector<Point> distinct;
  for (const Point& p : pts) {
    bool dup = false;
    for (const Point& q : distinct)
      if (p.x == q.x && p.y == q.y) dup = true;
    if (!dup) distinct.push_back(p);
  }
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Point> hull;
  for (const Point& p : distinct) {
    bool inside = false;
    for (const Point& a : distinct) {
      for (const Point& b : distinct) {
        for (const Point& c : distinct) {
          double d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
          if ((d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0))
            inside = true;
        }
        // strictly interior to a segment
        if (cross(a, b, p) == 0.0) {
          double lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
          double lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
          bool between = lo_x <= p.x && p.x <= hi_x && lo_y <= p.y &&
                         p.y <= hi_y;
          bool is_end = (p.x == a.x && p.y == a.y) || (p.x == b.x && p.y == b.y);
          if (between && !is_end) inside = true;
        }
      }
    }
    if (!inside) hull.push_back(p);
  }
  return hull;
}

bool SameVertexSet(std::vector<Point> a, std::vector<Point> b) {
  auto key = [](const Point& l, const Point& r) {
    return l.x < r.x || (l.x == r.x && l.y < r.y);
  };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].x != b[i].x || a[i].y != b[i].y) return false;
  return true;
}

}  // namespace

TEST_CASE("distance basics") {
  CHECK(Distance({0, 0}, {3, 4}) == 5.0);
  CHECK(Distance({1, 1}, {1, 1}) == 0.0);
  CHECK(Distance({-1, 0}, {1, 0}) == 2.0);
}

TEST_CASE("distance satisfies symmetry and the triangle inequality") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    CHECK(Distance(a, b) == Distance(b, a));
    CHECK(Distance(a, c) <= Distance(a, b) + Distance(b, c) + 1e-12);
    double dx = u(rng), dy = u(rng);
    Point at{a.x + dx, a.y + dy}, bt{b.x + dx, b.y + dy};
    CHECK(Distance(at, bt) == doctest::Approx(Distance(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("path length over index ranges") {
  FlatPointSequence sq =
      FlatOf({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  CHECK(PathLength(sq, 0, 4) == 4.0);
  CHECK(PathLength(sq, 2, 2) == 0.0);
  FlatPointSequence line = FlatOf({{0, 0}, {1, 0}, {2, 0}});
  CHECK(PathLength(line, 0, 2) == 2.0);
  CHECK_THROWS_AS(PathLength(line, 2, 1), Error);
  CHECK_THROWS_AS(PathLength(line, 0, 3), Error);
}

TEST_CASE("path length is additive over a shared midpoint") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<Point> pts;
  for (int i = 0; i < 12; ++i) pts.push_back({u(rng), u(rng)});
  FlatPointSequence s = FlatOf(pts);
  // Same summation order: prefix sums accumulate identically.
  CHECK(PathLength(s, 0, 11) ==
        doctest::Approx(PathLength(s, 0, 5) + PathLength(s, 5, 11))
            .epsilon(1e-12));
}

TEST_CASE("bounding box basics") {
  FlatPointSequence s = FlatOf({{0, 0}, {2, 3}});
  BoundingBox b = Bounds(s);
  CHECK(b.width() == 2.0);
  CHECK(b.height() == 3.0);
  CHECK(b.width() * b.height() == 6.0);

  FlatPointSequence one = FlatOf({{4, 5}});
  BoundingBox z = Bounds(one);
  CHECK(z.width() == 0.0);
  CHECK(z.height() == 0.0);

  FlatPointSequence circle = Flatten(testutil::Circle64());
  BoundingBox c = Bounds(circle);
  CHECK(c.width() == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(c.width() * c.height() == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("convex hull drops interior points") {
  ConvexHull hull = ComputeConvexHull(
      std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
  CHECK(hull.vertices.size() == 4);
  CHECK(hull.area == 1.0);
  CHECK(hull.perimeter == 4.0);
  CHECK_FALSE(hull.degenerate);
}

TEST_CASE("collinear hull is flagged with out-and-back perimeter") {
  ConvexHull hull =
      ComputeConvexHull(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(hull.degenerate);
  CHECK(hull.area == 0.0);
  CHECK(hull.perimeter == 4.0);
  CHECK(hull.vertices.size() == 2);

  ConvexHull point = ComputeConvexHull(std::vector<Point>{{3, 3}, {3, 3}});
  CHECK(point.degenerate);
  CHECK(point.area == 0.0);
  CHECK(point.perimeter == 0.0);
}

TEST_CASE("hull matches the brute-force oracle on random sets") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  std::uniform_int_distribution<int> size(1, 20);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Point> pts;
    int n = size(rng);
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    ConvexHull hull = ComputeConvexHull(pts);
    if (hull.degenerate) continue;
    CHECK(SameVertexSet(hull.vertices, BruteHull(pts)));

    BoundingBox box = Bounds(pts);
    CHECK(hull.area <= box.width() * box.height() + 1e-12);

    // every input point inside or on the hull
    std::size_t h = hull.vertices.size();
    for (const Point& p : pts) {
      for (std::size_t i = 0; i < h; ++i) {
        const Point& a = hull.vertices[i];
        const Point& b = hull.vertices[(i + 1) % h];
        double c = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        CHECK(c >= -1e-9);
      }
    }
  }
}

TEST_CASE("centroid basics") {
  CHECK(Centroid(FlatOf({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).x == 0.5);
  CHECK(Centroid(FlatOf({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).y == 0.5);
  CHECK(Centroid(FlatOf({{7, 8}})).x == 7.0);
  CHECK(Centroid(FlatOf({{7, 8}})).y == 8.0);
  Point c = Centroid(FlatOf({{0, 0}, {2, 0}, {4, 0}}));
  CHECK(c.x == 2.0);
  CHECK(c.y == 0.0);
}

TEST_CASE("principal axes of a 1-D point set") {
  FlatPointSequence s = FlatOf({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  PrincipalAxes axes = ComputePrincipalAxes(s);
  CHECK(axes.p1.x == 1.0);
  CHECK(axes.p1.y == 0.0);
  CHECK(axes.alpha == 4.0);
  CHECK(axes.beta == 0.0);

  SUBCASE("extents are rotation invariant") {
    Gesture g = OneStroke("g", {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    Gesture r = Transformed(g, 1.0, M_PI / 6.0, 0.0, 0.0);
    PrincipalAxes ra = ComputePrincipalAxes(Flatten(r));
    CHECK(ra.alpha == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(ra.beta == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  }
}

TEST_CASE("principal axes of the unit square corners are equal") {
  PrincipalAxes axes =
      ComputePrincipalAxes(FlatOf({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(axes.alpha == axes.beta);
  CHECK(axes.alpha >= axes.beta);
}

TEST_CASE("principal axes error cases") {
  CHECK_THROWS_AS(ComputePrincipalAxes(FlatOf({{1, 1}})), Error);
  try {
    ComputePrincipalAxes(FlatOf({{2, 2}, {2, 2}, {2, 2}}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateGeometry);
  }
}

TEST_CASE("vertex angle basics") {
  FlatPointSequence collinear = FlatOf({{0, 0}, {1, 0}, {2, 0}});
  CHECK(VertexAngle(collinear, 1, 1) == 0.0);

  FlatPointSequence turn = FlatOf({{0, 0}, {1, 0}, {1, 1}});
  CHECK(VertexAngle(turn, 1, 1) == doctest::Approx(M_PI / 2).epsilon(1e-12));

  FlatPointSequence back = FlatOf({{0, 0}, {1, 0}, {0, 0}});
  CHECK(VertexAngle(back, 1, 1) == doctest::Approx(M_PI).epsilon(1e-12));

  CHECK_THROWS_AS(VertexAngle(turn, 0, 1), Error);
  CHECK_THROWS_AS(VertexAngle(turn, 1, 0), Error);
  FlatPointSequence rest = FlatOf({{0, 0}, {0, 0}, {1, 0}});
  try {
    VertexAngle(rest, 1, 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateGeometry);
  }
}

TEST_CASE("signed turn angle convention and mirror antisymmetry") {
  FlatPointSequence left = FlatOf({{0, 0}, {1, 0}, {1, 1}});
  double v = SignedTurnAngle(left, 1);
  CHECK(std::fabs(v) == doctest::Approx(M_PI / 2).epsilon(1e-12));

  FlatPointSequence mirrored = FlatOf({{0, 0}, {1, 0}, {1, -1}});
  double w = SignedTurnAngle(mirrored, 1);
  CHECK(w == doctest::Approx(-v).epsilon(1e-12));

  FlatPointSequence straight = FlatOf({{0, 0}, {1, 0}, {2, 0}});
  CHECK(SignedTurnAngle(straight, 1) == 0.0);
}

TEST_CASE("total turning of the open square traversal") {
  FlatPointSequence sq = FlatOf({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < sq.size(); ++i)
    sum += SignedTurnAngle(sq, i);
  CHECK(std::fabs(sum) == doctest::Approx(3.0 * M_PI / 2).epsilon(1e-12));
}

TEST_CASE("equidistant resampling") {
  FlatPointSequence line = FlatOf({{0, 0}, {6, 0}});
  std::vector<Point> pts = ResampleEquidistant(line, 6);
  REQUIRE(pts.size() == 7);
  for (int j = 0; j <= 6; ++j) {
    CHECK(pts[j].x == doctest::Approx(static_cast<double>(j)).epsilon(1e-12));
    CHECK(pts[j].y == 0.0);
  }

  SUBCASE("m = 1 keeps only the endpoints") {
    std::vector<Point> ends =
        ResampleEquidistant(FlatOf({{0, 0}, {1, 1}, {5, 0}}), 1);
    REQUIRE(ends.size() == 2);
    CHECK(ends[0].x == 0.0);
    CHECK(ends[1].x == 5.0);
  }

  SUBCASE("unit square at m = 4 lands on the corners") {
    std::vector<Point> corners = ResampleEquidistant(
        FlatOf({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}), 4);
    REQUIRE(corners.size() == 5);
    CHECK(corners[1].x == 1.0);
    CHECK(corners[1].y == 0.0);
    CHECK(corners[2].x == 1.0);
    CHECK(corners[2].y == 1.0);
    CHECK(corners[3].x == 0.0);
    CHECK(corners[3].y == 1.0);
    CHECK(corners[4].x == 0.0);
    CHECK(corners[4].y == 0.0);
  }

  SUBCASE("spacing equals L / m on a straight path") {
    FlatPointSequence jagged =
        FlatOf({{0, 0}, {0.3, 0}, {1.1, 0}, {4, 0}, {9, 0}});
    std::vector<Point> out = ResampleEquidistant(jagged, 10);
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      CHECK(Distance(out[i], out[i + 1]) ==
            doctest::Approx(0.9).epsilon(1e-9));
    }
  }

  SUBCASE("outputs lie on the input polyline") {
    FlatPointSequence circle = Flatten(testutil::Circle64());
    std::vector<Point> out = ResampleEquidistant(circle, 16);
    for (const Point& p : out) {
      double best = 1e300;
      for (std::size_t i = 0; i + 1 < circle.size(); ++i) {
        Point a = circle.samples[i].pos(), b = circle.samples[i + 1].pos();
        double vx = b.x - a.x, vy = b.y - a.y;
        double len2 = vx * vx + vy * vy;
        double t = len2 == 0.0
                       ? 0.0
                       : ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best,
                        Distance(p, {a.x + t * vx, a.y + t * vy}));
      }
      CHECK(best <= 1e-9);
    }
  }

  SUBCASE("zero-length paths are degenerate") {
    CHECK_THROWS_AS(ResampleEquidistant(FlatOf({{1, 1}, {1, 1}}), 4), Error);
  }
}

TEST_CASE("segment intersection includes touching and collinear overlap") {
  CHECK(SegmentsIntersect({0, 0}, {1, 1}, {0, 1}, {1, 0}));
  CHECK_FALSE(SegmentsIntersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  CHECK(SegmentsIntersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));
  CHECK(SegmentsIntersect({0, 0}, {1, 0}, {1, 0}, {2, 1}));  // endpoint touch
}

TEST_CASE("crossing counts") {
  CHECK(CountCrossings(Flatten(testutil::XCross())) == 1);
  FlatPointSequence open_square =
      FlatOf({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(CountCrossings(open_square) == 0);
  CHECK(CountCrossings(Flatten(testutil::Star())) == 5);
  CHECK(CountCrossings(Flatten(testutil::Circle64())) == 0);

  SUBCASE("count is invariant under similarity transforms") {
    Gesture star = testutil::Star();
    CHECK(CountCrossings(Flatten(Transformed(star, 1.0, 0.0, 13.0, -4.0))) ==
          5);
    CHECK(CountCrossings(Flatten(Transformed(star, 2.5, 0.0, 0.0, 0.0))) == 5);
    CHECK(CountCrossings(Flatten(Transformed(star, 1.0, 1.1, 0.0, 0.0))) == 5);
  }
}

TEST_CASE("straight line detection") {
  std::vector<Point> long_line;
  for (int j = 0; j < 20; ++j) long_line.push_back({static_cast<double>(j), 0});
  StraightLineSet lines = DetectStraightLines(FlatOf(long_line));
  REQUIRE(lines.runs.size() == 1);
  CHECK(lines.runs[0].first == 0);
  CHECK(lines.runs[0].last == 19);
  CHECK(lines.runs[0].length == 19.0);

  SUBCASE("a dense circle has no straight windows at the default threshold") {
    CHECK(DetectStraightLines(Flatten(testutil::Circle64())).runs.empty());
  }

  SUBCASE("an L splits into two runs at the corner") {
    StraightLineSet l = DetectStraightLines(Flatten(testutil::LShape()));
    REQUIRE(l.runs.size() == 2);
    CHECK(l.runs[0].length == 9.0);
    CHECK(l.runs[1].length == 9.0);
  }

  SUBCASE("short strokes yield nothing") {
    CHECK(DetectStraightLines(FlatOf({{0, 0}, {1, 0}, {2, 0}, {3, 0}}))
              .runs.empty());
  }
}

TEST_CASE("cup detection") {
  CupSet v = DetectCups(Flatten(testutil::VShape()));
  CHECK(v.count == 1);
  CHECK(v.first_offset == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(v.last_offset == v.first_offset);

  std::vector<Point> flat_line;
  for (int j = 0; j < 10; ++j) flat_line.push_back({static_cast<double>(j), 5});
  CupSet none = DetectCups(FlatOf(flat_line));
  CHECK(none.count == 0);
  CHECK(none.first_offset == 0.0);
  CHECK(none.last_offset == 0.0);

  CupSet w = DetectCups(Flatten(testutil::WShape()));
  CHECK(w.count == 3);
}

TEST_CASE("connected components") {
  CHECK(ConnectedComponents(testutil::GSquare()) == 1);
  Gesture apart = MakeGesture(
      "apart", {MakeStroke({{0, 0}, {1, 0}}, 0.0, 10.0),
                MakeStroke({{100, 100}, {101, 100}}, 30.0, 10.0)});
  CHECK(ConnectedComponents(apart) == 2);
  CHECK(ConnectedComponents(testutil::XCross()) == 1);
  CHECK(ConnectedComponents(apart, 1000.0) == 1);  // explicit tolerance
}

TEST_CASE("kinematics on uniform and accelerating motion") {
  FlatPointSequence line = FlatOf({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(Speed(line, 1) == 0.1);
  Vec2 vel = Velocity(line, 1);
  CHECK(vel.x == 0.1);
  CHECK(vel.y == 0.0);

  SUBCASE("uniform motion has exactly zero acceleration") {
    std::vector<Point> u;
    for (int j = 0; j < 8; ++j) u.push_back({static_cast<double>(j), 0});
    FlatPointSequence s = FlatOf(u);
    for (std::size_t i = 2; i + 2 < s.size(); ++i) {
      Vec2 a = Acceleration(s, i);
      CHECK(a.x == 0.0);
      CHECK(a.y == 0.0);
    }
  }

  SUBCASE("x = t*t has constant second derivative 2") {
    Gesture par = testutil::Parabola();
    FlatPointSequence s = Flatten(par);
    for (std::size_t i = 2; i + 2 < s.size(); ++i) {
      Vec2 a = Acceleration(s, i);
      CHECK(a.x == 2.0);
      CHECK(a.y == 0.0);
    }
  }

  SUBCASE("index guards throw") {
    CHECK_THROWS_AS(Speed(line, 0), Error);
    CHECK_THROWS_AS(Acceleration(line, 1), Error);
  }
}
