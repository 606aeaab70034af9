#include <algorithm>
#include <cmath>

#include "sets.hpp"

namespace inkfeat::detail {

std::vector<FeatureValue> ComputeHbf49(GestureContext& ctx) {
  const FlatPointSequence& s = ctx.flat();
  const std::size_t n = ctx.n();
  const double nd = static_cast<double>(n);
  const std::size_t m = ctx.strokes();
  const ExtractParams& prm = ctx.params();
  const std::size_t k = prm.k;
  std::vector<FeatureValue> out(49, Val(0.0));
  auto set = [&out](int id, FeatureValue v) { out[id - 1] = v; };

  const geometry::BoundingBox& box = ctx.Box();
  const double w = box.width(), h = box.height();
  const Point c = box.center();
  const double l = h > w ? h : w;  // side of the bounding square

  if (l == 0.0) {
    for (int id = 1; id <= 4; ++id) set(id, Degenerate());
  } else {
    set(1, Val((s.samples[0].x - c.x) / l + 0.5));
    set(2, Val((s.samples[0].y - c.y) / l + 0.5));
    set(3, Val((s.samples[n - 1].x - c.x) / l + 0.5));
    set(4, Val((s.samples[n - 1].y - c.y) / l + 0.5));
  }

  const double vx = s.samples[n - 1].x - s.samples[0].x;
  const double vy = s.samples[n - 1].y - s.samples[0].y;
  const double f5 = std::sqrt(vx * vx + vy * vy);
  set(5, Val(f5));
  if (f5 == 0.0) {
    set(6, Degenerate());
    set(7, Degenerate());
  } else {
    set(6, Val(vx / f5));
    set(7, Val(vy / f5));
  }

  const double length = ctx.TotalLength();
  set(8, length == 0.0 ? Degenerate() : Val(f5 / length));

  if (n >= 3) {
    double wx = s.samples[2].x - s.samples[0].x;
    double wy = s.samples[2].y - s.samples[0].y;
    double wn = std::sqrt(wx * wx + wy * wy);
    if (wn == 0.0) {
      set(9, Degenerate());
      set(10, Degenerate());
    } else {
      set(9, Val(wx / wn));
      set(10, Val(wy / wn));
    }
  } else {
    set(9, Degenerate());
    set(10, Degenerate());
  }

  // Inflexion of the half-arc-length point against the endpoint midpoint.
  if (length > 0.0) {
    Point sm = geometry::ResampleEquidistant(s, 2)[1];
    set(11, w == 0.0
                ? Degenerate()
                : Val((sm.x - (s.samples[0].x + s.samples[n - 1].x) / 2.0) /
                      w));
    set(12, h == 0.0
                ? Degenerate()
                : Val((sm.y - (s.samples[0].y + s.samples[n - 1].y) / 2.0) /
                      h));
  } else {
    set(11, Degenerate());
    set(12, Degenerate());
  }

  // Downstroke proportion: drawn segments heading toward increasing y.
  {
    double down = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!s.drawn_segment(i)) continue;
      if (s.samples[i + 1].y - s.samples[i].y > 0.0) {
        down += geometry::Distance(s.samples[i].pos(), s.samples[i + 1].pos());
      }
    }
    if (prm.hbf13_literal) {
      set(13, Val(down));
    } else {
      set(13, length == 0.0 ? Degenerate() : Val(down / length));
    }
  }

  set(14, Val(static_cast<double>(m)));
  set(15, Val(std::atan2(h, w)));
  set(16, Val(length));
  set(17, length == 0.0 ? Degenerate() : Val((w + h) / length));
  set(18, Val(ctx.MeanRadius()));

  if (n >= 2) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      sum += std::atan2(s.samples[i + 1].y - s.samples[i].y,
                        s.samples[i + 1].x - s.samples[i].x);
    }
    set(19, Val(sum / (nd - 1.0)));
  } else {
    set(19, Degenerate());
  }

  const std::vector<double>& psi = ctx.Psi1();
  {
    double f20 = 0.0, f21 = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      double sp = std::sin(psi[i]);
      f20 += psi[i];
      f21 += sp * sp;
    }
    set(20, Val(f20));
    set(21, Val(f21));
  }

  if (n >= 2 * k + 1) {
    const std::vector<double>& pk = ctx.PsiK();
    double f22 = 0.0, best = pk[k];
    for (std::size_t i = k; i + k < n; ++i) {
      double sp = std::sin(pk[i]);
      f22 += sp * sp;
      best = std::max(best, pk[i]);
    }
    set(22, Val(f22));
    set(23, Val(best));
  } else {
    set(22, Degenerate());
    set(23, Degenerate());
  }

  // Direction histograms over drawn segments.
  double na = 0.0;
  {
    double hist[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!s.drawn_segment(i)) continue;
      double dx = s.samples[i + 1].x - s.samples[i].x;
      double dy = s.samples[i + 1].y - s.samples[i].y;
      hist[Octant(FullAngle(dx, dy)) - 1] += 1.0;
      na += 1.0;
    }
    if (na == 0.0) {
      for (int id = 24; id <= 27; ++id) set(id, Degenerate());
    } else {
      set(24, Val((hist[0] + hist[4]) / na));
      set(25, Val((hist[1] + hist[5]) / na));
      set(26, Val((hist[2] + hist[6]) / na));
      set(27, Val((hist[3] + hist[7]) / na));
    }
  }

  // Smoothed local angles in 4 bins over [0, pi]; the stride clamps at the
  // ends so every interior vertex contributes.
  if (n >= 3 && na > 0.0) {
    double hb[4] = {0, 0, 0, 0};
    for (std::size_t i = 1; i + 1 < n; ++i) {
      std::size_t kk = std::min(k, std::min(i, n - 1 - i));
      double theta = psi[i];
      double thk = VertexAngleOrZero(s, i, kk);
      double ang = 0.25 * theta + 0.75 * thk;
      for (int bin = 0; bin < 3; ++bin) {
        double lo = static_cast<double>(bin) * (M_PI / 3.0);
        double hi = static_cast<double>(bin + 1) * (M_PI / 3.0);
        if (ang <= hi || bin == 2) {
          hb[bin] += (hi - ang) / (hi - lo);
          hb[bin + 1] += (ang - lo) / (hi - lo);
          break;
        }
      }
    }
    set(28, Val(hb[0] / na));
    set(29, Val(hb[1] / na));
    set(30, Val(hb[2] / na));
    set(31, Val(hb[3] / na));
  } else {
    for (int id = 28; id <= 31; ++id) set(id, Degenerate());
  }

  // Fuzzy 3x3 zoning with cell centers at the bounding-box thirds.
  if (w == 0.0 || h == 0.0) {
    for (int id = 32; id <= 40; ++id) set(id, Degenerate());
  } else {
    double cells[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    for (const Sample& q : s.samples) {
      double gx = (q.x - box.xmin) / w * 3.0 - 0.5;
      double gy = (q.y - box.ymin) / h * 3.0 - 0.5;
      if (gx < 0.0) gx = 0.0;
      if (gx > 2.0) gx = 2.0;
      if (gy < 0.0) gy = 0.0;
      if (gy > 2.0) gy = 2.0;
      std::size_t cx = std::min(static_cast<std::size_t>(gx),
                                static_cast<std::size_t>(1));
      std::size_t cy = std::min(static_cast<std::size_t>(gy),
                                static_cast<std::size_t>(1));
      double fx = gx - static_cast<double>(cx);
      double fy = gy - static_cast<double>(cy);
      cells[cy][cx] += (1.0 - fy) * (1.0 - fx);
      cells[cy][cx + 1] += (1.0 - fy) * fx;
      cells[cy + 1][cx] += fy * (1.0 - fx);
      cells[cy + 1][cx + 1] += fy * fx;
    }
    int id = 32;
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) set(id++, Val(cells[row][col] / nd));
    }
  }

  // Hu moment invariants of the sample point set.
  {
    const Point mu = ctx.Centroid();
    double mom[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0},
                        {0, 0, 0, 0}};
    for (const Sample& q : s.samples) {
      double dx = q.x - mu.x, dy = q.y - mu.y;
      double px[4] = {1.0, dx, dx * dx, (dx * dx) * dx};
      double py[4] = {1.0, dy, dy * dy, (dy * dy) * dy};
      for (int p = 0; p < 4; ++p) {
        for (int q2 = 0; q2 < 4; ++q2) mom[p][q2] += px[p] * py[q2];
      }
    }
    auto nu = [&mom, nd](int p, int q2) {
      double gamma = 1.0 + static_cast<double>(p + q2) / 2.0;
      return mom[p][q2] / std::pow(nd, gamma);
    };
    double n20 = nu(2, 0), n02 = nu(0, 2), n11 = nu(1, 1);
    double n30 = nu(3, 0), n03 = nu(0, 3), n12 = nu(1, 2), n21 = nu(2, 1);
    set(41, Val(n02 + n20));
    set(42, Val((n20 - n02) * (n20 - n02) + 4.0 * (n11 * n11)));
    set(43, Val((n30 - 3.0 * n12) * (n30 - 3.0 * n12) +
                (3.0 * n21 - n03) * (3.0 * n21 - n03)));
    set(44, Val((n30 + n12) * (n30 + n12) + (n21 + n03) * (n21 + n03)));
    set(45, Val((n30 - 3.0 * n12) * (n30 + n12) *
                    ((n30 + n12) * (n30 + n12) -
                     3.0 * (n21 + n03) * (n21 + n03)) +
                (3.0 * n21 - n03) * (n21 + n03) *
                    (3.0 * (n30 + n12) * (n30 + n12) -
                     (n21 + n03) * (n21 + n03))));
    set(46, Val((n20 - n02) * ((n30 + n12) * (n30 + n12) -
                               (n21 + n03) * (n21 + n03)) +
                4.0 * n11 * (n30 + n12) * (n21 + n03)));
    set(47, Val((3.0 * n21 - n03) * (n30 + n12) *
                    ((n30 + n12) * (n30 + n12) -
                     3.0 * (n21 + n03) * (n21 + n03)) -
                (n30 - 3.0 * n12) * (n21 + n03) *
                    (3.0 * (n30 + n12) * (n30 + n12) -
                     (n21 + n03) * (n21 + n03))));
  }

  const geometry::ConvexHull& hull = ctx.Hull();
  set(48, w * h == 0.0 ? Degenerate() : Val(hull.area / (w * h)));
  set(49, hull.area == 0.0 ? Degenerate()
                           : Val((length * length) / hull.area));

  return out;
}

}  // namespace inkfeat::detail
