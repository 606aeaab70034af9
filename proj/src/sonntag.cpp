#include <cmath>

#include "sets.hpp"

namespace inkfeat::detail {

std::vector<FeatureValue> ComputeSonntag(GestureContext& ctx) {
  const FlatPointSequence& s = ctx.flat();
  const std::size_t n = ctx.n();
  const double nd = static_cast<double>(n);
  std::vector<FeatureValue> out(15, Val(0.0));

  out[0] = Val(static_cast<double>(ctx.strokes()));  // f1 strokes
  const double length = ctx.TotalLength();
  out[1] = Val(length);  // f2 length
  const geometry::ConvexHull& hull = ctx.Hull();
  out[2] = Val(hull.area);       // f3 hull area
  out[3] = Val(hull.perimeter);  // f4 hull perimeter
  out[4] = hull.area == 0.0
               ? Degenerate()
               : Val(hull.perimeter * hull.perimeter / hull.area);  // f5

  const geometry::PrincipalAxes* axes = ctx.Axes();
  const double a = axes ? axes->alpha : 0.0;
  const double b = axes ? axes->beta : 0.0;
  if (a == 0.0) {
    out[5] = Degenerate();
    out[6] = Degenerate();
  } else {
    out[5] = Val(std::sqrt(1.0 - (b * b) / (a * a)));  // f6 eccentricity
    out[6] = Val(b / a);                               // f7 axis ratio
  }

  const double mr = ctx.MeanRadius();
  if (mr == 0.0) {
    out[7] = Degenerate();
  } else {
    const Point mu = ctx.Centroid();
    double sum = 0.0;
    for (const Sample& q : s.samples) {
      double d = geometry::Distance(q.pos(), mu) - mr;
      sum += d * d;
    }
    out[7] = Val(sum / (nd * (mr * mr)));  // f8 circular variance
  }

  out[8] = a * b == 0.0 ? Degenerate()
                        : Val(hull.area / (a * b));  // f9 rectangularity

  const double ends =
      geometry::Distance(s.samples[0].pos(), s.samples[n - 1].pos());
  out[9] = hull.perimeter == 0.0 ? Degenerate()
                                 : Val(ends / hull.perimeter);  // f10 closure

  const std::vector<double>& psi = ctx.Psi1();
  double f11 = 0.0, f12 = 0.0, f13 = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    double sp = std::sin(psi[i]);
    f11 += psi[i];
    f12 += sp * sp;
    f13 += (sp * sp) * sp;
  }
  out[10] = Val(f11);  // curvature
  out[11] = Val(f12);  // perpendicularity
  out[12] = Val(f13);  // signed perpendicularity

  // f14: 6-segment equidistant resample, 5 interior turn angles
  if (n >= 2 && length > 0.0) {
    std::vector<Point> pts = geometry::ResampleEquidistant(s, 6);
    double sum_sin = 0.0, sum_cos = 0.0;
    for (std::size_t i = 1; i <= 5; ++i) {
      double alpha = TurnAngleAt(pts, i);
      sum_sin += std::sin(alpha);
      sum_cos += std::cos(alpha);
    }
    out[13] = Val(sum_sin);
    out[14] = Val(sum_cos);
  } else {
    out[13] = Degenerate();
    out[14] = Degenerate();
  }
  return out;
}

}  // namespace inkfeat::detail
