#ifndef INKFEAT_CDT_HPP
#define INKFEAT_CDT_HPP

#include <map>
#include <string>
#include <vector>

#include "inkfeat/document.hpp"
#include "inkfeat/extract.hpp"
#include "inkfeat/ink.hpp"

namespace inkfeat {

// Role assignment for a Clock Drawing Test document. Empty id = role absent.
struct ClockAnnotation {
  std::string clockface;
  std::string hour_hand;
  std::string minute_hand;
  std::map<int, std::string> digits;  // digit value (1..12) -> gesture id
};

// Builds the annotation from document labels "clockface", "hour_hand",
// "minute_hand" and "digit_1".."digit_12". Throws Error(kParseError) when a
// role is claimed by two gestures or a label names an unknown gesture.
ClockAnnotation AnnotationFromLabels(const InkDocument& doc);

struct CircleFit {
  Point center;
  double radius = 0.0;
};

// Algebraic least-squares circle fit. Throws kInsufficientSamples for fewer
// than 3 samples and kDegenerateGeometry for collinear input.
CircleFit FitClockface(const Gesture& face);

struct HandGeometry {
  double length = 0.0;
  // Degrees in [0, 360): 0 points at twelve o'clock (negative y), clockwise.
  double orientation = 0.0;
};

// Treats the flattened endpoints as base and tip, base being the endpoint
// nearer `center`. Throws kInsufficientSamples (n < 2) or
// kDegenerateGeometry (coincident endpoints).
HandGeometry ComputeHandGeometry(const Gesture& hand, Point center);

struct ClockFeatures {
  Point centroid;        // centroid of every annotated clock gesture
  Point face_center;     // fitted circle center
  double face_radius = 0.0;
  double face_gap = 0.0;       // face endpoint distance / radius
  double center_offset = 0.0;  // |centroid - face_center| / radius
  double hand_length_hour = 0.0;
  double hand_length_minute = 0.0;
  double hand_ratio = 0.0;  // hour / minute
  double orientation_hour = 0.0;
  double orientation_minute = 0.0;
  double hand_angle = 0.0;            // between hands, degrees in [0, 180]
  std::map<int, double> digit_offsets;  // distance to ideal slot / radius
};

// Ideal digit slots sit at face_center + digit_radius_factor * radius along
// the digit's clock direction (digit d at d * 30 degrees).
ClockFeatures ComputeClockFeatures(const InkDocument& doc,
                                   const ClockAnnotation& annotation,
                                   double digit_radius_factor = 0.75);

// One point per satisfied criterion; targets default to the 11:10 task.
struct CdtRubric {
  double max_face_gap = 0.1;
  double max_center_offset = 0.1;
  double max_digit_offset = 0.25;
  double hour_target = 335.0;
  double minute_target = 60.0;
  double hand_tolerance = 15.0;
  double min_hand_angle = 70.0;
  double max_hand_angle = 100.0;
};

struct CdtScore {
  int score = 0;                      // 0..6
  std::vector<std::string> findings;  // names of failed criteria
};

CdtScore ScoreCdt(const ClockFeatures& features, const CdtRubric& rubric = {});

// The semantic.cdt.* catalog features in catalog order. The digit aggregate
// features are degenerate when no digits are annotated.
std::vector<FeatureValue> SemanticFeatures(const ClockFeatures& features);

}  // namespace inkfeat

#endif  // INKFEAT_CDT_HPP
