// Internal: shared per-gesture computation context for the feature sets.
#ifndef INKFEAT_SRC_SETS_HPP
#define INKFEAT_SRC_SETS_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "inkfeat/extract.hpp"
#include "inkfeat/geometry.hpp"
#include "inkfeat/ink.hpp"

namespace inkfeat::detail {

inline FeatureValue Val(double v) { return {v, false}; }
inline FeatureValue Degenerate() { return {0.0, true}; }

// Unsigned k-stride vertex angle; 0 when either arm has zero length.
double VertexAngleOrZero(const FlatPointSequence& s, std::size_t i,
                         std::size_t k);

// Signed turn angle over a bare point polyline (same formula as
// geometry::SignedTurnAngle).
double TurnAngleAt(const std::vector<Point>& pts, std::size_t i);

// Angle of (dx, dy) mapped to [0, 2*pi).
double FullAngle(double dx, double dy);

// 1-based octant of an angle in [0, 2*pi).
int Octant(double angle);

double MeanOf(const std::vector<double>& v);
// Population standard deviation about a precomputed mean.
double StdDevOf(const std::vector<double>& v, double mean);

class GestureContext {
 public:
  GestureContext(const Gesture& gesture, const ExtractParams& params);

  const Gesture& gesture() const { return *gesture_; }
  const ExtractParams& params() const { return params_; }
  const FlatPointSequence& flat() const { return flat_; }
  std::size_t n() const { return flat_.size(); }
  std::size_t strokes() const { return gesture_->strokes.size(); }

  double TotalLength();
  const geometry::BoundingBox& Box();
  Point Centroid();
  double MeanRadius();  // mean distance of samples to the centroid
  const geometry::ConvexHull& Hull();
  // nullptr when undefined (fewer than 2 samples or coincident points).
  const geometry::PrincipalAxes* Axes();
  // 1-stride vertex angles, index-aligned with samples; valid at [1, n-2].
  const std::vector<double>& Psi1();
  // k-stride vertex angles (params.k); valid at [k, n-1-k].
  const std::vector<double>& PsiK();
  // Signed turn angles, index-aligned; valid at [1, n-2].
  const std::vector<double>& Turns();
  // Scalar speeds, index-aligned; valid at [1, n-2].
  const std::vector<double>& Speeds();
  const geometry::StraightLineSet& StraightLines();
  const geometry::CupSet& Cups();
  const std::vector<double>& StrokeLengths();

 private:
  const Gesture* gesture_;
  ExtractParams params_;
  FlatPointSequence flat_;
  std::optional<double> length_;
  std::optional<geometry::BoundingBox> box_;
  std::optional<Point> centroid_;
  std::optional<double> mean_radius_;
  std::optional<geometry::ConvexHull> hull_;
  std::optional<geometry::PrincipalAxes> axes_;
  bool axes_computed_ = false;
  std::optional<std::vector<double>> psi1_;
  std::optional<std::vector<double>> psik_;
  std::optional<std::vector<double>> turns_;
  std::optional<std::vector<double>> speeds_;
  std::optional<geometry::StraightLineSet> lines_;
  std::optional<geometry::CupSet> cups_;
  std::optional<std::vector<double>> stroke_lengths_;
};

std::vector<FeatureValue> ComputeSonntag(GestureContext& ctx);
std::vector<FeatureValue> ComputeRubine(GestureContext& ctx);
std::vector<FeatureValue> ComputeWillems(GestureContext& ctx);
std::vector<FeatureValue> ComputeHbf49(GestureContext& ctx);

}  // namespace inkfeat::detail

#endif  // INKFEAT_SRC_SETS_HPP
