#include <algorithm>
#include <cmath>

#include "sets.hpp"

namespace inkfeat::detail {

std::vector<FeatureValue> ComputeWillems(GestureContext& ctx) {
  const FlatPointSequence& s = ctx.flat();
  const std::size_t n = ctx.n();
  const double nd = static_cast<double>(n);
  const std::size_t m = ctx.strokes();
  const ExtractParams& prm = ctx.params();
  const std::size_t k = prm.k;
  std::vector<FeatureValue> out(89, Val(0.0));
  auto set = [&out](int id, FeatureValue v) { out[id - 1] = v; };

  const double length = ctx.TotalLength();
  set(1, Val(length));
  const geometry::ConvexHull& hull = ctx.Hull();
  set(2, Val(hull.area));
  set(3, hull.area == 0.0
             ? Degenerate()
             : Val(hull.perimeter * hull.perimeter / hull.area));

  // Co-ordinate axis extents: a along x, b along y, primed so a' >= b'.
  const geometry::BoundingBox& box = ctx.Box();
  const double a = box.width(), b = box.height();
  const double ap = a > b ? a : b;
  const double bp = a > b ? b : a;
  if (ap == 0.0) {
    set(4, Degenerate());
    set(5, Degenerate());
  } else {
    set(4, Val(std::sqrt(1.0 - (bp * bp) / (ap * ap))));
    set(5, Val(bp / ap));
  }

  const double vx = s.samples[n - 1].x - s.samples[0].x;
  const double vy = s.samples[n - 1].y - s.samples[0].y;
  const double vnorm = std::sqrt(vx * vx + vy * vy);
  set(6, length == 0.0 ? Degenerate() : Val(vnorm / length));  // closure

  const Point mu = ctx.Centroid();
  const double mr = ctx.MeanRadius();
  double radius_var_sum = 0.0;
  for (const Sample& q : s.samples) {
    double d = geometry::Distance(q.pos(), mu) - mr;
    radius_var_sum += d * d;
  }
  set(7, mr == 0.0 ? Degenerate()
                   : Val(radius_var_sum / (nd * (mr * mr))));

  // Curvature block over 1-stride vertex angles.
  const std::vector<double>& psi = ctx.Psi1();
  {
    double f8 = 0.0, f13 = 0.0, f62 = 0.0, f63 = 0.0;
    std::vector<double> angles, sins;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      double sp = std::sin(psi[i]);
      f8 += psi[i];
      f13 += sp * sp;
      f62 += std::fabs(psi[i]);
      f63 += psi[i] * psi[i];
      angles.push_back(psi[i]);
      sins.push_back(sp * sp);
    }
    set(8, Val(f8));
    set(13, Val(f13));
    set(62, Val(f62));
    set(63, Val(f63));
    if (angles.empty()) {
      set(9, Degenerate());
      set(10, Degenerate());
      set(14, Degenerate());
      set(15, Degenerate());
    } else {
      double f9 = f8 / (nd - 2.0);
      set(9, Val(f9));
      set(10, Val(StdDevOf(angles, f9)));
      double f14 = f13 / (nd - 2.0);
      set(14, Val(f14));
      set(15, Val(StdDevOf(sins, f14)));
    }
  }

  // f11: pen up/down time ratio.
  {
    double write = 0.0;
    for (const Stroke& st : ctx.gesture().strokes) {
      write += st.samples.back().t - st.samples.front().t;
    }
    double total = s.samples[n - 1].t - s.samples[0].t;
    set(11, write == 0.0 ? Degenerate() : Val((total - write) / write));
  }

  // f12: average direction over the flat sequence.
  if (n >= 2) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      sum += std::atan2(s.samples[i + 1].y - s.samples[i].y,
                        s.samples[i + 1].x - s.samples[i].x);
    }
    set(12, Val(sum / (nd - 1.0)));
  } else {
    set(12, Degenerate());
  }

  // Principal-axis block.
  const geometry::PrincipalAxes* axes = ctx.Axes();
  if (!axes) {
    set(16, Degenerate());
    set(17, Degenerate());
    set(18, Degenerate());
    set(19, Degenerate());
    set(20, Degenerate());
    set(67, Degenerate());
  } else {
    double ox = mu.x - axes->box_center.x;
    double oy = mu.y - axes->box_center.y;
    set(16, Val(std::fabs(axes->p2.x * ox + axes->p2.y * oy)));
    set(17, Val(axes->alpha));
    set(18, Val(axes->p1.y));
    set(19, Val(axes->p1.x));
    set(20, axes->alpha * axes->beta == 0.0
                ? Degenerate()
                : Val(hull.area / (axes->alpha * axes->beta)));
    set(67, axes->alpha == 0.0 ? Degenerate()
                               : Val(axes->beta / axes->alpha));
  }

  // f21: maximum k-stride vertex angle.
  if (n >= 2 * k + 1) {
    const std::vector<double>& pk = ctx.PsiK();
    double best = pk[k];
    for (std::size_t i = k; i + k < n; ++i) best = std::max(best, pk[i]);
    set(21, Val(best));
  } else {
    set(21, Degenerate());
  }

  // Pressure.
  {
    std::vector<double> ps;
    ps.reserve(n);
    for (const Sample& q : s.samples) ps.push_back(q.p);
    double pmean = MeanOf(ps);
    set(22, Val(pmean));
    set(23, Val(StdDevOf(ps, pmean)));
  }

  set(24, Val(s.samples[n - 1].t - s.samples[0].t));

  // Velocity stats over scalar speeds.
  if (n >= 3) {
    const std::vector<double>& spd = ctx.Speeds();
    std::vector<double> v(spd.begin() + 1, spd.end() - 1);
    double f25 = MeanOf(v);
    set(25, Val(f25));
    set(26, Val(StdDevOf(v, f25)));
    set(27, Val(*std::max_element(v.begin(), v.end())));
  } else {
    set(25, Degenerate());
    set(26, Degenerate());
    set(27, Degenerate());
  }

  // Acceleration stats: central difference of scalar speeds.
  if (n >= 5) {
    const std::vector<double>& spd = ctx.Speeds();
    std::vector<double> acc;
    for (std::size_t i = 2; i + 2 < n; ++i) {
      double dt = s.samples[i + 1].t - s.samples[i - 1].t;
      acc.push_back(std::fabs((spd[i + 1] - spd[i - 1]) / dt));
    }
    double f28 = MeanOf(acc);
    set(28, Val(f28));
    set(29, Val(StdDevOf(acc, f28)));
    set(30, Val(*std::max_element(acc.begin(), acc.end())));
    set(31, Val(*std::min_element(acc.begin(), acc.end())));
  } else {
    set(28, Degenerate());
    set(29, Degenerate());
    set(30, Degenerate());
    set(31, Degenerate());
  }

  // Cups.
  {
    const geometry::CupSet& cups = ctx.Cups();
    set(32, Val(static_cast<double>(cups.count)));
    set(33, Val(cups.last_offset));
    set(34, Val(cups.first_offset));
  }

  // Initial/final offsets inside the bounding box.
  if (a == 0.0) {
    set(35, Degenerate());
    set(36, Degenerate());
  } else {
    set(35, Val((s.samples[0].x - box.xmin) / a));
    set(36, Val((s.samples[n - 1].x - box.xmin) / a));
  }
  if (b == 0.0) {
    set(37, Degenerate());
    set(38, Degenerate());
  } else {
    set(37, Val((s.samples[0].y - box.ymin) / b));
    set(38, Val((s.samples[n - 1].y - box.ymin) / b));
  }

  // Straight lines.
  {
    const geometry::StraightLineSet& lines = ctx.StraightLines();
    set(39, Val(static_cast<double>(lines.runs.size())));
    if (lines.runs.empty()) {
      set(40, Degenerate());
      set(41, Degenerate());
    } else {
      std::vector<double> lens;
      lens.reserve(lines.runs.size());
      for (const auto& run : lines.runs) lens.push_back(run.length);
      double f40 = MeanOf(lens);
      set(40, Val(f40));
      set(41, Val(StdDevOf(lens, f40)));
    }
    if (length == 0.0) {
      set(42, Degenerate());
      set(43, Degenerate());
    } else {
      double sum = 0.0, best = 0.0;
      for (const auto& run : lines.runs) {
        sum += run.length;
        best = std::max(best, run.length);
      }
      set(42, Val(sum / length));
      set(43, Val(best / length));
    }
  }

  set(44, Val(static_cast<double>(m)));

  // Octants of sample positions relative to the bbox center.
  if (n >= 2) {
    Point c = box.center();
    double hist[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (const Sample& q : s.samples) {
      double dx = q.x - c.x, dy = q.y - c.y;
      if (dx == 0.0 && dy == 0.0) continue;  // center samples bin nowhere
      hist[Octant(FullAngle(dx, dy)) - 1] += 1.0;
    }
    for (int o = 1; o <= 8; ++o) set(44 + o, Val(hist[o - 1] / (nd - 1.0)));
  } else {
    for (int o = 1; o <= 8; ++o) set(44 + o, Degenerate());
  }

  set(53, Val(static_cast<double>(
                  geometry::ConnectedComponents(ctx.gesture(), prm.epsilon))));
  set(54, Val(static_cast<double>(geometry::CountCrossings(s))));

  // Initial angle via s0 -> s2.
  if (n >= 3) {
    double dx = s.samples[2].x - s.samples[0].x;
    double dy = s.samples[2].y - s.samples[0].y;
    double d = std::sqrt(dx * dx + dy * dy);
    if (d == 0.0) {
      set(55, Degenerate());
      set(56, Degenerate());
    } else {
      set(55, Val(dx / d));
      set(56, Val(dy / d));
    }
  } else {
    set(55, Degenerate());
    set(56, Degenerate());
  }

  set(57, Val(std::sqrt(a * a + b * b)));
  set(58, Val(std::atan2(b, a)));
  set(59, Val(vnorm));
  if (vnorm == 0.0) {
    set(60, Degenerate());
    set(61, Degenerate());
  } else {
    set(60, Val(vx / vnorm));
    set(61, Val(vy / vnorm));
  }

  // Macro perpendicularity over k-stride angles.
  if (n >= 2 * k + 1) {
    const std::vector<double>& pk = ctx.PsiK();
    double f64 = 0.0;
    std::vector<double> sins;
    for (std::size_t i = k; i + k < n; ++i) {
      double sp = std::sin(pk[i]);
      f64 += sp * sp;
      sins.push_back(sp * sp);
    }
    set(64, Val(f64));
    double f65 = f64 / (nd - 2.0 * static_cast<double>(k));
    set(65, Val(f65));
    set(66, Val(StdDevOf(sins, f65)));
  } else {
    set(64, Degenerate());
    set(65, Degenerate());
    set(66, Degenerate());
  }

  set(68, Val(mr));
  set(69, Val(std::sqrt(radius_var_sum / nd)));

  // Chain codes over drawn-segment directions.
  {
    double counts[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    double na = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!s.drawn_segment(i)) continue;
      double dx = s.samples[i + 1].x - s.samples[i].x;
      double dy = s.samples[i + 1].y - s.samples[i].y;
      counts[Octant(FullAngle(dx, dy)) - 1] += 1.0;
      na += 1.0;
    }
    for (int cs = 1; cs <= 8; ++cs) {
      double center = (static_cast<double>(cs) - 0.5) * (M_PI / 4.0);
      int sin_id = 68 + 2 * cs;
      int cos_id = 69 + 2 * cs;
      if (prm.chaincode_literal) {
        set(sin_id, Val(std::sin(center)));
        set(cos_id, Val(std::cos(center)));
      } else if (na == 0.0) {
        set(sin_id, Degenerate());
        set(cos_id, Degenerate());
      } else {
        double w = counts[cs - 1] / na;
        set(sin_id, Val(w * std::sin(center)));
        set(cos_id, Val(w * std::cos(center)));
      }
    }
  }

  // Per-stroke length and direction statistics.
  {
    const std::vector<double>& slens = ctx.StrokeLengths();
    double f86 = MeanOf(slens);
    set(86, Val(f86));
    set(87, Val(StdDevOf(slens, f86)));

    std::vector<double> dirs;
    dirs.reserve(m);
    bool undirected = false;
    for (std::size_t si = 0; si < m; ++si) {
      std::size_t first = s.stroke_begin[si];
      std::size_t last = s.stroke_begin[si + 1] - 1;
      if (last == first) {
        dirs.push_back(0.0);
        undirected = true;
        continue;
      }
      double sum = 0.0;
      for (std::size_t j = first; j < last; ++j) {
        sum += std::atan2(s.samples[j + 1].y - s.samples[j].y,
                          s.samples[j + 1].x - s.samples[j].x);
      }
      dirs.push_back(sum / static_cast<double>(last - first));
    }
    if (undirected) {
      set(88, Degenerate());
      set(89, Degenerate());
    } else {
      double f88 = MeanOf(dirs);
      set(88, Val(f88));
      set(89, Val(StdDevOf(dirs, f88)));
    }
  }

  return out;
}

}  // namespace inkfeat::detail
