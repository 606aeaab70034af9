#include "inkfeat/cdt.hpp"

#include <cmath>
#include <unordered_map>

#include "inkfeat/error.hpp"
#include "inkfeat/geometry.hpp"

namespace inkfeat {

namespace {

constexpr double kDegPerRad = 180.0 / M_PI;

double NormalizeDegrees(double deg) {
  if (deg < 0.0) deg += 360.0;
  if (deg >= 360.0) deg = 0.0;
  return deg;
}

// Smaller arc between two directions, in [0, 180].
double AngularDifference(double a, double b) {
  double d = std::fabs(a - b);
  if (d > 180.0) d = 360.0 - d;
  return d;
}

const Gesture& Resolve(const InkDocument& doc, const std::string& id,
                       const char* role) {
  for (const DocumentGesture& g : doc.gestures)
    if (g.gesture.id == id) return g.gesture;
  throw Error(ErrorCode::kParseError, std::string("role '") + role +
                                          "' references unknown gesture '" +
                                          id + "'");
}

}  // namespace

ClockAnnotation AnnotationFromLabels(const InkDocument& doc) {
  ClockAnnotation ann;
  auto claim = [](std::string& slot, const std::string& id,
                  const std::string& role) {
    if (!slot.empty())
      throw Error(ErrorCode::kParseError,
                  "role '" + role + "' claimed by '" + slot + "' and '" + id + "'");
    slot = id;
  };
  for (const auto& [id, label] : doc.labels) {
    if (label == "clockface") {
      claim(ann.clockface, id, label);
    } else if (label == "hour_hand") {
      claim(ann.hour_hand, id, label);
    } else if (label == "minute_hand") {
      claim(ann.minute_hand, id, label);
    } else if (label.rfind("digit_", 0) == 0) {
      int digit = 0;
      try {
        std::size_t used = 0;
        digit = std::stoi(label.substr(6), &used);
        if (used != label.size() - 6) digit = 0;
      } catch (const std::exception&) {
        digit = 0;
      }
      if (digit < 1 || digit > 12)
        throw Error(ErrorCode::kParseError, "bad digit label '" + label + "'");
      auto [it, inserted] = ann.digits.emplace(digit, id);
      if (!inserted)
        throw Error(ErrorCode::kParseError,
                    "role '" + label + "' claimed by '" + it->second +
                        "' and '" + id + "'");
    }
  }
  auto known = [&doc](const std::string& id) {
    for (const DocumentGesture& g : doc.gestures)
      if (g.gesture.id == id) return true;
    return false;
  };
  for (const std::string& id :
       {ann.clockface, ann.hour_hand, ann.minute_hand})
    if (!id.empty() && !known(id))
      throw Error(ErrorCode::kParseError,
                  "label references unknown gesture '" + id + "'");
  for (const auto& [digit, id] : ann.digits)
    if (!known(id))
      throw Error(ErrorCode::kParseError,
                  "label references unknown gesture '" + id + "'");
  return ann;
}

CircleFit FitClockface(const Gesture& face) {
  FlatPointSequence flat = Flatten(face);
  std::size_t n = flat.size();
  if (n < 3)
    throw Error(ErrorCode::kInsufficientSamples,
                "circle fit needs at least 3 samples");

  double mx = 0.0, my = 0.0;
  for (const Sample& s : flat.samples) {
    mx += s.x;
    my += s.y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double suu = 0.0, suv = 0.0, svv = 0.0, suuu = 0.0, svvv = 0.0;
  double suvv = 0.0, svuu = 0.0;
  for (const Sample& s : flat.samples) {
    double u = s.x - mx;
    double v = s.y - my;
    suu += u * u;
    suv += u * v;
    svv += v * v;
    suuu += (u * u) * u;
    svvv += (v * v) * v;
    suvv += u * (v * v);
    svuu += v * (u * u);
  }

  double det = suu * svv - suv * suv;
  double scale = suu + svv;
  if (!(det > 1e-12 * scale * scale))
    throw Error(ErrorCode::kDegenerateGeometry, "collinear clockface samples");

  double rx = (suuu + suvv) / 2.0;
  double ry = (svvv + svuu) / 2.0;
  double uc = (rx * svv - ry * suv) / det;
  double vc = (ry * suu - rx * suv) / det;

  CircleFit fit;
  fit.center = {mx + uc, my + vc};
  fit.radius = std::sqrt(uc * uc + vc * vc + scale / static_cast<double>(n));
  return fit;
}

HandGeometry ComputeHandGeometry(const Gesture& hand, Point center) {
  FlatPointSequence flat = Flatten(hand);
  if (flat.size() < 2)
    throw Error(ErrorCode::kInsufficientSamples,
                "hand needs at least 2 samples");
  Point a = flat.samples.front().pos();
  Point b = flat.samples.back().pos();
  if (geometry::Distance(a, center) > geometry::Distance(b, center))
    std::swap(a, b);
  HandGeometry out;
  out.length = geometry::Distance(a, b);
  if (out.length == 0.0)
    throw Error(ErrorCode::kDegenerateGeometry, "zero-length hand");
  out.orientation =
      NormalizeDegrees(std::atan2(b.x - a.x, -(b.y - a.y)) * kDegPerRad);
  return out;
}

ClockFeatures ComputeClockFeatures(const InkDocument& doc,
                                   const ClockAnnotation& annotation,
                                   double digit_radius_factor) {
  if (annotation.clockface.empty())
    throw Error(ErrorCode::kMissingRole, "missing role 'clockface'");
  if (annotation.hour_hand.empty())
    throw Error(ErrorCode::kMissingRole, "missing role 'hour_hand'");
  if (annotation.minute_hand.empty())
    throw Error(ErrorCode::kMissingRole, "missing role 'minute_hand'");

  const Gesture& face = Resolve(doc, annotation.clockface, "clockface");
  const Gesture& hour = Resolve(doc, annotation.hour_hand, "hour_hand");
  const Gesture& minute = Resolve(doc, annotation.minute_hand, "minute_hand");
  std::unordered_map<int, const Gesture*> digits;
  for (const auto& [digit, id] : annotation.digits)
    digits[digit] = &Resolve(doc, id, "digit");

  ClockFeatures f;
  CircleFit fit = FitClockface(face);
  f.face_center = fit.center;
  f.face_radius = fit.radius;

  double sx = 0.0, sy = 0.0;
  std::size_t count = 0;
  auto accumulate = [&](const Gesture& g) {
    for (const Stroke& stroke : g.strokes)
      for (const Sample& s : stroke.samples) {
        sx += s.x;
        sy += s.y;
        ++count;
      }
  };
  accumulate(face);
  accumulate(hour);
  accumulate(minute);
  for (const auto& [digit, g] : digits) accumulate(*g);
  f.centroid = {sx / static_cast<double>(count),
                sy / static_cast<double>(count)};
  f.center_offset =
      geometry::Distance(f.centroid, f.face_center) / f.face_radius;

  FlatPointSequence face_flat = Flatten(face);
  f.face_gap = geometry::Distance(face_flat.samples.front().pos(),
                                  face_flat.samples.back().pos()) /
               f.face_radius;

  HandGeometry hg = ComputeHandGeometry(hour, f.face_center);
  HandGeometry mg = ComputeHandGeometry(minute, f.face_center);
  f.hand_length_hour = hg.length;
  f.hand_length_minute = mg.length;
  f.hand_ratio = hg.length / mg.length;
  f.orientation_hour = hg.orientation;
  f.orientation_minute = mg.orientation;
  f.hand_angle = AngularDifference(hg.orientation, mg.orientation);

  for (const auto& [digit, g] : digits) {
    FlatPointSequence flat = Flatten(*g);
    Point centroid = geometry::Centroid(flat);
    double angle = static_cast<double>(digit) * 30.0 / kDegPerRad;
    Point ideal = {
        f.face_center.x + digit_radius_factor * f.face_radius * std::sin(angle),
        f.face_center.y - digit_radius_factor * f.face_radius * std::cos(angle)};
    f.digit_offsets[digit] =
        geometry::Distance(centroid, ideal) / f.face_radius;
  }
  return f;
}

CdtScore ScoreCdt(const ClockFeatures& features, const CdtRubric& rubric) {
  CdtScore out;
  auto criterion = [&out](bool ok, const char* name) {
    if (ok)
      ++out.score;
    else
      out.findings.push_back(name);
  };
  bool digits_ok = true;
  for (const auto& [digit, offset] : features.digit_offsets)
    if (offset > rubric.max_digit_offset) digits_ok = false;
  criterion(features.face_gap <= rubric.max_face_gap, "face_closed");
  criterion(features.center_offset <= rubric.max_center_offset,
            "center_offset");
  criterion(digits_ok, "digit_displacement");
  criterion(features.hand_ratio < 1.0, "hand_ratio");
  criterion(AngularDifference(features.orientation_hour, rubric.hour_target) <=
                    rubric.hand_tolerance &&
                AngularDifference(features.orientation_minute,
                                  rubric.minute_target) <=
                    rubric.hand_tolerance,
            "hand_directions");
  criterion(features.hand_angle >= rubric.min_hand_angle &&
                features.hand_angle <= rubric.max_hand_angle,
            "hand_angle");
  return out;
}

std::vector<FeatureValue> SemanticFeatures(const ClockFeatures& features) {
  std::vector<FeatureValue> out;
  auto value = [&out](double v) { out.push_back({v, false}); };
  value(features.center_offset);
  value(features.hand_length_hour);
  value(features.hand_length_minute);
  value(features.hand_ratio);
  value(features.hand_angle);
  value(features.orientation_hour);
  value(features.orientation_minute);
  if (features.digit_offsets.empty()) {
    out.push_back({0.0, true});
    out.push_back({0.0, true});
  } else {
    double sum = 0.0, max = 0.0;
    for (const auto& [digit, offset] : features.digit_offsets) {
      sum += offset;
      if (offset > max) max = offset;
    }
    value(sum / static_cast<double>(features.digit_offsets.size()));
    value(max);
  }
  return out;
}

}  // namespace inkfeat
