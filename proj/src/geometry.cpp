#include "inkfeat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "inkfeat/error.hpp"

namespace inkfeat::geometry {

namespace {

double Sq(double v) { return v * v; }

double Cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

double Distance(const Point& a, const Point& b) {
  return std::sqrt(Sq(b.x - a.x) + Sq(b.y - a.y));
}

double PathLength(const FlatPointSequence& s, std::size_t i, std::size_t j) {
  if (i >= s.size() || j >= s.size() || i > j) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "path length over [" + std::to_string(i) + ", " +
                    std::to_string(j) + "] of " + std::to_string(s.size()) +
                    " samples");
  }
  double total = 0.0;
  for (std::size_t k = i; k < j; ++k) {
    total += Distance(s.samples[k].pos(), s.samples[k + 1].pos());
  }
  return total;
}

double TotalLength(const FlatPointSequence& s) {
  if (s.size() == 0) return 0.0;
  return PathLength(s, 0, s.size() - 1);
}

BoundingBox Bounds(const FlatPointSequence& s) {
  if (s.size() == 0) {
    throw Error(ErrorCode::kEmptyGesture, "bounding box of empty sequence");
  }
  BoundingBox b{s.samples[0].x, s.samples[0].y, s.samples[0].x,
                s.samples[0].y};
  for (const Sample& q : s.samples) {
    b.xmin = std::min(b.xmin, q.x);
    b.ymin = std::min(b.ymin, q.y);
    b.xmax = std::max(b.xmax, q.x);
    b.ymax = std::max(b.ymax, q.y);
  }
  return b;
}

BoundingBox Bounds(const std::vector<Point>& pts) {
  if (pts.empty()) {
    throw Error(ErrorCode::kEmptyGesture, "bounding box of empty point set");
  }
  BoundingBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point& q : pts) {
    b.xmin = std::min(b.xmin, q.x);
    b.ymin = std::min(b.ymin, q.y);
    b.xmax = std::max(b.xmax, q.x);
    b.ymax = std::max(b.ymax, q.y);
  }
  return b;
}

Point Centroid(const FlatPointSequence& s) {
  if (s.size() == 0) {
    throw Error(ErrorCode::kEmptyGesture, "centroid of empty sequence");
  }
  double sx = 0.0, sy = 0.0;
  for (const Sample& q : s.samples) {
    sx += q.x;
    sy += q.y;
  }
  double n = static_cast<double>(s.size());
  return {sx / n, sy / n};
}

ConvexHull ComputeConvexHull(std::vector<Point> pts) {
  if (pts.empty()) {
    throw Error(ErrorCode::kEmptyGesture, "hull of empty point set");
  }
  // Exact-duplicate removal keeps the angular comparator a total order.
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point& a, const Point& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());

  ConvexHull hull;
  if (pts.size() == 1) {
    hull.vertices = pts;
    hull.degenerate = true;
    return hull;
  }

  // Graham scan around the bottom-most (then left-most) pivot, already at
  // pts[0] after the sort above.
  const Point pivot = pts[0];
  std::sort(pts.begin() + 1, pts.end(),
            [&pivot](const Point& a, const Point& b) {
              double c = Cross(pivot, a, b);
              if (c != 0.0) return c > 0.0;
              double da = Sq(a.x - pivot.x) + Sq(a.y - pivot.y);
              double db = Sq(b.x - pivot.x) + Sq(b.y - pivot.y);
              return da < db;
            });

  std::vector<Point> st;
  st.push_back(pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    while (st.size() >= 2 &&
           Cross(st[st.size() - 2], st[st.size() - 1], pts[i]) <= 0.0) {
      st.pop_back();
    }
    st.push_back(pts[i]);
  }

  hull.vertices = std::move(st);
  std::size_t h = hull.vertices.size();
  hull.degenerate = h < 3;
  double twice_area = 0.0;
  for (std::size_t i = 0; i < h; ++i) {
    const Point& a = hull.vertices[i];
    const Point& b = hull.vertices[(i + 1) % h];
    twice_area += a.x * b.y - b.x * a.y;
    if (h >= 2) hull.perimeter += Distance(a, b);
  }
  hull.area = std::fabs(twice_area) / 2.0;
  return hull;
}

ConvexHull ComputeConvexHull(const FlatPointSequence& s) {
  std::vector<Point> pts;
  pts.reserve(s.size());
  for (const Sample& q : s.samples) pts.push_back(q.pos());
  return ComputeConvexHull(std::move(pts));
}

PrincipalAxes ComputePrincipalAxes(const FlatPointSequence& s) {
  const std::size_t n = s.size();
  if (n < 2) {
    throw Error(ErrorCode::kInsufficientSamples,
                "principal axes need at least 2 samples");
  }
  double mx = 0.0, my = 0.0;
  for (const Sample& q : s.samples) {
    mx += q.x;
    my += q.y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const Sample& q : s.samples) {
    sxx += (q.x - mx) * (q.x - mx);
    syy += (q.y - my) * (q.y - my);
    sxy += (q.x - mx) * (q.y - my);
  }
  sxx /= static_cast<double>(n);
  syy /= static_cast<double>(n);
  sxy /= static_cast<double>(n);
  if (sxx + syy == 0.0) {
    throw Error(ErrorCode::kDegenerateGeometry,
                "principal axes of coincident points");
  }

  // Closed-form dominant eigenvector of [[sxx, sxy], [sxy, syy]].
  Point e1, e2;
  if (sxy == 0.0) {
    e1 = sxx >= syy ? Point{1.0, 0.0} : Point{0.0, 1.0};
  } else {
    double disc = std::sqrt(Sq(sxx - syy) + 4.0 * sxy * sxy);
    double lam1 = (sxx + syy + disc) / 2.0;
    double vx = sxy, vy = lam1 - sxx;
    double norm = std::sqrt(vx * vx + vy * vy);
    e1 = {vx / norm, vy / norm};
  }
  if (e1.x < 0.0 || (e1.x == 0.0 && e1.y < 0.0)) e1 = {-e1.x, -e1.y};
  e2 = {-e1.y, e1.x};
  if (e2.x < 0.0 || (e2.x == 0.0 && e2.y < 0.0)) e2 = {-e2.x, -e2.y};

  double lo1 = 0.0, hi1 = 0.0, lo2 = 0.0, hi2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Sample& q = s.samples[i];
    double u = e1.x * q.x + e1.y * q.y;
    double w = e2.x * q.x + e2.y * q.y;
    if (i == 0) {
      lo1 = hi1 = u;
      lo2 = hi2 = w;
    } else {
      lo1 = std::min(lo1, u);
      hi1 = std::max(hi1, u);
      lo2 = std::min(lo2, w);
      hi2 = std::max(hi2, w);
    }
  }

  PrincipalAxes axes;
  double ext1 = hi1 - lo1, ext2 = hi2 - lo2;
  // Keep the reported major axis at least as long as the minor one even when
  // the extent order disagrees with the eigenvalue order.
  if (ext2 > ext1) {
    axes.p1 = e2;
    axes.p2 = e1;
    axes.alpha = ext2;
    axes.beta = ext1;
    double uc = (lo2 + hi2) / 2.0, wc = (lo1 + hi1) / 2.0;
    axes.box_center = {axes.p1.x * uc + axes.p2.x * wc,
                       axes.p1.y * uc + axes.p2.y * wc};
  } else {
    axes.p1 = e1;
    axes.p2 = e2;
    axes.alpha = ext1;
    axes.beta = ext2;
    double uc = (lo1 + hi1) / 2.0, wc = (lo2 + hi2) / 2.0;
    axes.box_center = {axes.p1.x * uc + axes.p2.x * wc,
                       axes.p1.y * uc + axes.p2.y * wc};
  }
  return axes;
}

double VertexAngle(const FlatPointSequence& s, std::size_t i, std::size_t k) {
  const std::size_t n = s.size();
  if (k == 0 || i < k || i + k >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vertex angle at " + std::to_string(i) + " stride " +
                    std::to_string(k) + " of " + std::to_string(n));
  }
  const Sample& a = s.samples[i - k];
  const Sample& b = s.samples[i];
  const Sample& c = s.samples[i + k];
  double ux = b.x - a.x, uy = b.y - a.y;
  double vx = c.x - b.x, vy = c.y - b.y;
  double nu = std::sqrt(ux * ux + uy * uy);
  double nv = std::sqrt(vx * vx + vy * vy);
  if (nu == 0.0 || nv == 0.0) {
    throw Error(ErrorCode::kDegenerateGeometry, "zero-length vertex arm");
  }
  double c_ang = (ux * vx + uy * vy) / (nu * nv);
  if (c_ang > 1.0) c_ang = 1.0;
  if (c_ang < -1.0) c_ang = -1.0;
  return std::acos(c_ang);
}

double SignedTurnAngle(const FlatPointSequence& s, std::size_t i) {
  const std::size_t n = s.size();
  if (i < 1 || i + 1 >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "turn angle at " + std::to_string(i) + " of " +
                    std::to_string(n));
  }
  const Sample& a = s.samples[i - 1];
  const Sample& b = s.samples[i];
  const Sample& c = s.samples[i + 1];
  double dxp = b.x - a.x, dyp = b.y - a.y;  // incoming
  double dxc = c.x - b.x, dyc = c.y - b.y;  // outgoing
  double cross = dxc * dyp - dxp * dyc;
  double dot = dxc * dxp + dyc * dyp;
  if (cross == 0.0 && dot == 0.0) return 0.0;
  return std::atan2(cross, dot);
}

std::vector<Point> ResampleEquidistant(const FlatPointSequence& s,
                                       std::size_t m) {
  const std::size_t n = s.size();
  if (n < 2 || m == 0) {
    throw Error(ErrorCode::kInsufficientSamples,
                "resampling needs two samples and one segment");
  }
  const double total = TotalLength(s);
  if (total == 0.0) {
    throw Error(ErrorCode::kDegenerateGeometry,
                "resampling a zero-length path");
  }
  std::vector<Point> out;
  out.reserve(m + 1);
  out.push_back(s.samples[0].pos());
  std::size_t idx = 0;
  double cum = 0.0;
  double seg = Distance(s.samples[0].pos(), s.samples[1].pos());
  for (std::size_t j = 1; j < m; ++j) {
    double target = (total * static_cast<double>(j)) / static_cast<double>(m);
    while (idx + 2 < n && cum + seg < target) {
      cum += seg;
      ++idx;
      seg = Distance(s.samples[idx].pos(), s.samples[idx + 1].pos());
    }
    if (seg == 0.0) {
      out.push_back(s.samples[idx].pos());
    } else {
      double t = (target - cum) / seg;
      if (t > 1.0) t = 1.0;
      const Point a = s.samples[idx].pos();
      const Point b = s.samples[idx + 1].pos();
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  out.push_back(s.samples[n - 1].pos());
  return out;
}

namespace {

bool OnSegment(const Point& a, const Point& b, const Point& q) {
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

}  // namespace

bool SegmentsIntersect(const Point& a, const Point& b, const Point& c,
                       const Point& d) {
  double d1 = Cross(c, d, a);
  double d2 = Cross(c, d, b);
  double d3 = Cross(a, b, c);
  double d4 = Cross(a, b, d);
  if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
      ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
    return true;
  }
  if (d1 == 0.0 && OnSegment(c, d, a)) return true;
  if (d2 == 0.0 && OnSegment(c, d, b)) return true;
  if (d3 == 0.0 && OnSegment(a, b, c)) return true;
  if (d4 == 0.0 && OnSegment(a, b, d)) return true;
  return false;
}

int CountCrossings(const FlatPointSequence& s) {
  struct Seg {
    std::size_t stroke;
    std::size_t i;  // flat index of the segment's first sample
  };
  std::vector<Seg> segs;
  for (std::size_t k = 0; k + 1 < s.stroke_begin.size(); ++k) {
    for (std::size_t i = s.stroke_begin[k]; i + 1 < s.stroke_begin[k + 1];
         ++i) {
      segs.push_back({k, i});
    }
  }
  int count = 0;
  for (std::size_t a = 0; a < segs.size(); ++a) {
    for (std::size_t b = a + 1; b < segs.size(); ++b) {
      if (segs[a].stroke == segs[b].stroke && segs[b].i < segs[a].i + 2) {
        continue;  // shared-endpoint neighbors within a stroke
      }
      const Point& p1 = s.samples[segs[a].i].pos();
      const Point& p2 = s.samples[segs[a].i + 1].pos();
      const Point& p3 = s.samples[segs[b].i].pos();
      const Point& p4 = s.samples[segs[b].i + 1].pos();
      if (SegmentsIntersect(p1, p2, p3, p4)) ++count;
    }
  }
  return count;
}

StraightLineSet DetectStraightLines(const FlatPointSequence& s,
                                    std::size_t window, double threshold) {
  StraightLineSet set;
  if (window < 3) return set;
  for (std::size_t k = 0; k + 1 < s.stroke_begin.size(); ++k) {
    const std::size_t b = s.stroke_begin[k];
    const std::size_t e = s.stroke_begin[k + 1];
    if (e - b < window) continue;
    bool in_run = false;
    std::size_t run_first = 0, prev_window = 0;
    auto flush = [&](std::size_t last_window) {
      std::size_t run_last = last_window + window - 1;
      set.runs.push_back(
          {run_first, run_last, PathLength(s, run_first, run_last)});
    };
    for (std::size_t i = b; i + window <= e; ++i) {
      double turn = 0.0;
      for (std::size_t j = i + 1; j + 1 < i + window; ++j) {
        // Repeated points contribute no turn.
        try {
          turn += VertexAngle(s, j, 1);
        } catch (const Error&) {
        }
      }
      if (turn <= threshold) {
        if (!in_run || i != prev_window + 1) {
          if (in_run) flush(prev_window);
          in_run = true;
          run_first = i;
        }
        prev_window = i;
      }
    }
    if (in_run) flush(prev_window);
  }
  return set;
}

CupSet DetectCups(const FlatPointSequence& s, std::size_t segments,
                  double prominence) {
  CupSet cups;
  const BoundingBox box = Bounds(s);
  const double thr = prominence * box.height();
  if (thr <= 0.0) return cups;
  const double total = TotalLength(s);
  if (total == 0.0) return cups;
  const std::vector<Point> pts = ResampleEquidistant(s, segments);

  int dir = 0;
  double lo = pts[0].y, hi = pts[0].y;
  double anchor = pts[0].y;
  std::size_t anchor_idx = 0;
  std::vector<std::size_t> found;
  for (std::size_t j = 1; j < pts.size(); ++j) {
    const double y = pts[j].y;
    if (dir == 0) {
      if (y < lo) lo = y;
      if (y > hi) hi = y;
      if (y - lo >= thr) {
        dir = 1;
        anchor = y;
        anchor_idx = j;
      } else if (hi - y >= thr) {
        dir = -1;
        anchor = y;
        anchor_idx = j;
      }
    } else if (dir == 1) {
      if (y > anchor) {
        anchor = y;
        anchor_idx = j;
      } else if (anchor - y >= thr) {
        found.push_back(anchor_idx);
        dir = -1;
        anchor = y;
        anchor_idx = j;
      }
    } else {
      if (y < anchor) {
        anchor = y;
        anchor_idx = j;
      } else if (y - anchor >= thr) {
        found.push_back(anchor_idx);
        dir = 1;
        anchor = y;
        anchor_idx = j;
      }
    }
  }

  cups.count = static_cast<int>(found.size());
  if (!found.empty()) {
    const double step = total / static_cast<double>(segments);
    cups.first_offset = (static_cast<double>(found.front()) * step) / total;
    cups.last_offset = (static_cast<double>(found.back()) * step) / total;
  }
  return cups;
}

namespace {

double PointSegmentDistance(const Point& q, const Point& a, const Point& b) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return Distance(q, a);
  double t = ((q.x - a.x) * vx + (q.y - a.y) * vy) / len2;
  if (t < 0.0) t = 0.0;
  if (t > 1.0) t = 1.0;
  return Distance(q, {a.x + t * vx, a.y + t * vy});
}

double SegmentSegmentDistance(const Point& a, const Point& b, const Point& c,
                              const Point& d) {
  if (SegmentsIntersect(a, b, c, d)) return 0.0;
  double best = PointSegmentDistance(a, c, d);
  best = std::min(best, PointSegmentDistance(b, c, d));
  best = std::min(best, PointSegmentDistance(c, a, b));
  best = std::min(best, PointSegmentDistance(d, a, b));
  return best;
}

double StrokeDistance(const Stroke& s1, const Stroke& s2) {
  double best = Distance(s1.samples[0].pos(), s2.samples[0].pos());
  const std::size_t n1 = s1.samples.size(), n2 = s2.samples.size();
  for (std::size_t i = 0; i + 1 < std::max<std::size_t>(n1, 1); ++i) {
    for (std::size_t j = 0; j + 1 < std::max<std::size_t>(n2, 1); ++j) {
      best = std::min(best, SegmentSegmentDistance(
                                s1.samples[i].pos(), s1.samples[i + 1].pos(),
                                s2.samples[j].pos(), s2.samples[j + 1].pos()));
    }
  }
  // Degenerate strokes (single sample) fall back to point-polyline distance.
  if (n1 == 1) {
    for (std::size_t j = 0; j + 1 < n2; ++j) {
      best = std::min(best,
                      PointSegmentDistance(s1.samples[0].pos(),
                                           s2.samples[j].pos(),
                                           s2.samples[j + 1].pos()));
    }
  }
  if (n2 == 1) {
    for (std::size_t i = 0; i + 1 < n1; ++i) {
      best = std::min(best,
                      PointSegmentDistance(s2.samples[0].pos(),
                                           s1.samples[i].pos(),
                                           s1.samples[i + 1].pos()));
    }
  }
  return best;
}

}  // namespace

int ConnectedComponents(const Gesture& gesture, double epsilon) {
  const std::size_t m = gesture.strokes.size();
  if (m == 0) {
    throw Error(ErrorCode::kEmptyGesture, "components of empty gesture");
  }
  if (epsilon < 0.0) {
    const BoundingBox box = Bounds(Flatten(gesture));
    epsilon = 0.01 * std::sqrt(Sq(box.width()) + Sq(box.height()));
  }
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (StrokeDistance(gesture.strokes[i], gesture.strokes[j]) <= epsilon) {
        parent[find(i)] = find(j);
      }
    }
  }
  int components = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (find(i) == i) ++components;
  }
  return components;
}

Vec2 Velocity(const FlatPointSequence& s, std::size_t i) {
  const std::size_t n = s.size();
  if (n < 3 || i < 1 || i + 1 >= n) {
    throw Error(ErrorCode::kInsufficientSamples,
                "velocity at " + std::to_string(i) + " of " +
                    std::to_string(n));
  }
  const Sample& a = s.samples[i - 1];
  const Sample& c = s.samples[i + 1];
  const double dt = c.t - a.t;
  return {(c.x - a.x) / dt, (c.y - a.y) / dt};
}

Vec2 Acceleration(const FlatPointSequence& s, std::size_t i) {
  const std::size_t n = s.size();
  if (n < 5 || i < 2 || i + 2 >= n) {
    throw Error(ErrorCode::kInsufficientSamples,
                "acceleration at " + std::to_string(i) + " of " +
                    std::to_string(n));
  }
  const Vec2 v1 = Velocity(s, i - 1);
  const Vec2 v2 = Velocity(s, i + 1);
  const double dt = s.samples[i + 1].t - s.samples[i - 1].t;
  return {(v2.x - v1.x) / dt, (v2.y - v1.y) / dt};
}

double Speed(const FlatPointSequence& s, std::size_t i) {
  const std::size_t n = s.size();
  if (n < 3 || i < 1 || i + 1 >= n) {
    throw Error(ErrorCode::kInsufficientSamples,
                "speed at " + std::to_string(i) + " of " + std::to_string(n));
  }
  const Sample& a = s.samples[i - 1];
  const Sample& b = s.samples[i];
  const Sample& c = s.samples[i + 1];
  return (Distance(b.pos(), c.pos()) + Distance(a.pos(), b.pos())) /
         (c.t - a.t);
}

}  // namespace inkfeat::geometry
