#include <cmath>

#include "sets.hpp"

namespace inkfeat::detail {

std::vector<FeatureValue> ComputeRubine(GestureContext& ctx) {
  const FlatPointSequence& s = ctx.flat();
  const std::size_t n = ctx.n();
  std::vector<FeatureValue> out(13, Val(0.0));

  // f1/f2: direction of s0 -> s2
  if (n >= 3) {
    double dx = s.samples[2].x - s.samples[0].x;
    double dy = s.samples[2].y - s.samples[0].y;
    double d = std::sqrt(dx * dx + dy * dy);
    if (d == 0.0) {
      out[0] = Degenerate();
      out[1] = Degenerate();
    } else {
      out[0] = Val(dx / d);
      out[1] = Val(dy / d);
    }
  } else {
    out[0] = Degenerate();
    out[1] = Degenerate();
  }

  const geometry::BoundingBox& box = ctx.Box();
  const double w = box.width(), h = box.height();
  out[2] = Val(std::sqrt(w * w + h * h));  // f3 bbox diagonal
  out[3] = Val(std::atan2(h, w));          // f4 diagonal angle

  double vx = s.samples[n - 1].x - s.samples[0].x;
  double vy = s.samples[n - 1].y - s.samples[0].y;
  double f5 = std::sqrt(vx * vx + vy * vy);
  out[4] = Val(f5);
  if (f5 == 0.0) {
    out[5] = Degenerate();
    out[6] = Degenerate();
  } else {
    out[5] = Val(vx / f5);
    out[6] = Val(vy / f5);
  }

  out[7] = Val(ctx.TotalLength());  // f8

  const std::vector<double>& turns = ctx.Turns();
  double f9 = 0.0, f10 = 0.0, f11 = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    f9 += turns[i];
    f10 += std::fabs(turns[i]);
    f11 += turns[i] * turns[i];
  }
  out[8] = Val(f9);
  out[9] = Val(f10);
  out[10] = Val(f11);

  // f12: max squared speed over consecutive pairs
  if (n >= 2) {
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double dx = s.samples[i + 1].x - s.samples[i].x;
      double dy = s.samples[i + 1].y - s.samples[i].y;
      double dt = s.samples[i + 1].t - s.samples[i].t;
      double v = (dx * dx + dy * dy) / (dt * dt);
      if (i == 0 || v > best) best = v;
    }
    out[11] = Val(best);
  } else {
    out[11] = Degenerate();
  }

  out[12] = Val(s.samples[n - 1].t - s.samples[0].t);  // f13 duration
  return out;
}

}  // namespace inkfeat::detail
