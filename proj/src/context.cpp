#include "sets.hpp"

#include <algorithm>
#include <cmath>

#include "inkfeat/error.hpp"

namespace inkfeat::detail {

double VertexAngleOrZero(const FlatPointSequence& s, std::size_t i,
                         std::size_t k) {
  const Sample& a = s.samples[i - k];
  const Sample& b = s.samples[i];
  const Sample& c = s.samples[i + k];
  double ux = b.x - a.x, uy = b.y - a.y;
  double vx = c.x - b.x, vy = c.y - b.y;
  double nu = std::sqrt(ux * ux + uy * uy);
  double nv = std::sqrt(vx * vx + vy * vy);
  if (nu == 0.0 || nv == 0.0) return 0.0;
  double c_ang = (ux * vx + uy * vy) / (nu * nv);
  if (c_ang > 1.0) c_ang = 1.0;
  if (c_ang < -1.0) c_ang = -1.0;
  return std::acos(c_ang);
}

double TurnAngleAt(const std::vector<Point>& pts, std::size_t i) {
  double dxp = pts[i].x - pts[i - 1].x;
  double dyp = pts[i].y - pts[i - 1].y;
  double dxc = pts[i + 1].x - pts[i].x;
  double dyc = pts[i + 1].y - pts[i].y;
  if ((dxp == 0.0 && dyp == 0.0) || (dxc == 0.0 && dyc == 0.0)) return 0.0;
  double cross = dxc * dyp - dxp * dyc;
  double dot = dxc * dxp + dyc * dyp;
  return std::atan2(cross, dot);
}

double FullAngle(double dx, double dy) {
  double a = std::atan2(dy, dx);
  if (a < 0.0) a += 2.0 * M_PI;
  if (a >= 2.0 * M_PI) a = 0.0;
  return a;
}

int Octant(double angle) {
  for (int o = 1; o <= 8; ++o) {
    if (angle < static_cast<double>(o) * (M_PI / 4.0)) return o;
  }
  return 8;
}

double MeanOf(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double StdDevOf(const std::vector<double>& v, double mean) {
  double sum = 0.0;
  for (double x : v) sum += (x - mean) * (x - mean);
  return std::sqrt(sum / static_cast<double>(v.size()));
}

GestureContext::GestureContext(const Gesture& gesture,
                               const ExtractParams& params)
    : gesture_(&gesture), params_(params), flat_(Flatten(gesture)) {}

double GestureContext::TotalLength() {
  if (!length_) length_ = geometry::PathLength(flat_, 0, flat_.size() - 1);
  return *length_;
}

const geometry::BoundingBox& GestureContext::Box() {
  if (!box_) box_ = geometry::Bounds(flat_);
  return *box_;
}

Point GestureContext::Centroid() {
  if (!centroid_) centroid_ = geometry::Centroid(flat_);
  return *centroid_;
}

double GestureContext::MeanRadius() {
  if (!mean_radius_) {
    Point c = Centroid();
    double sum = 0.0;
    for (const Sample& s : flat_.samples) {
      sum += geometry::Distance(s.pos(), c);
    }
    mean_radius_ = sum / static_cast<double>(flat_.size());
  }
  return *mean_radius_;
}

const geometry::ConvexHull& GestureContext::Hull() {
  if (!hull_) hull_ = geometry::ComputeConvexHull(flat_);
  return *hull_;
}

const geometry::PrincipalAxes* GestureContext::Axes() {
  if (!axes_computed_) {
    axes_computed_ = true;
    try {
      axes_ = geometry::ComputePrincipalAxes(flat_);
    } catch (const Error&) {
      axes_.reset();
    }
  }
  return axes_ ? &*axes_ : nullptr;
}

const std::vector<double>& GestureContext::Psi1() {
  if (!psi1_) {
    std::vector<double> v(flat_.size(), 0.0);
    if (flat_.size() >= 3) {
      for (std::size_t i = 1; i + 1 < flat_.size(); ++i) {
        v[i] = VertexAngleOrZero(flat_, i, 1);
      }
    }
    psi1_ = std::move(v);
  }
  return *psi1_;
}

const std::vector<double>& GestureContext::PsiK() {
  if (!psik_) {
    std::size_t k = params_.k;
    std::vector<double> v(flat_.size(), 0.0);
    if (flat_.size() >= 2 * k + 1) {
      for (std::size_t i = k; i + k < flat_.size(); ++i) {
        v[i] = VertexAngleOrZero(flat_, i, k);
      }
    }
    psik_ = std::move(v);
  }
  return *psik_;
}

const std::vector<double>& GestureContext::Turns() {
  if (!turns_) {
    std::vector<double> v(flat_.size(), 0.0);
    if (flat_.size() >= 3) {
      for (std::size_t i = 1; i + 1 < flat_.size(); ++i) {
        v[i] = geometry::SignedTurnAngle(flat_, i);
      }
    }
    turns_ = std::move(v);
  }
  return *turns_;
}

const std::vector<double>& GestureContext::Speeds() {
  if (!speeds_) {
    std::vector<double> v(flat_.size(), 0.0);
    if (flat_.size() >= 3) {
      for (std::size_t i = 1; i + 1 < flat_.size(); ++i) {
        v[i] = geometry::Speed(flat_, i);
      }
    }
    speeds_ = std::move(v);
  }
  return *speeds_;
}

const geometry::StraightLineSet& GestureContext::StraightLines() {
  if (!lines_) {
    lines_ = geometry::DetectStraightLines(flat_, params_.window,
                                           params_.threshold);
  }
  return *lines_;
}

const geometry::CupSet& GestureContext::Cups() {
  if (!cups_) cups_ = geometry::DetectCups(flat_);
  return *cups_;
}

const std::vector<double>& GestureContext::StrokeLengths() {
  if (!stroke_lengths_) {
    std::vector<double> v;
    v.reserve(gesture_->strokes.size());
    for (std::size_t k = 0; k < flat_.stroke_begin.size() - 1; ++k) {
      std::size_t first = flat_.stroke_begin[k];
      std::size_t last = flat_.stroke_begin[k + 1] - 1;
      v.push_back(geometry::PathLength(flat_, first, last));
    }
    stroke_lengths_ = std::move(v);
  }
  return *stroke_lengths_;
}

}  // namespace inkfeat::detail
