#include "inkfeat/ink.hpp"

#include <cmath>

#include "inkfeat/error.hpp"

namespace inkfeat {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyGesture: return "EmptyGesture";
    case ErrorCode::kNonMonotonicTime: return "NonMonotonicTime";
    case ErrorCode::kPressureOutOfRange: return "PressureOutOfRange";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::kInsufficientSamples: return "InsufficientSamples";
    case ErrorCode::kUnknownFeatureId: return "UnknownFeatureId";
    case ErrorCode::kUnknownSet: return "UnknownSet";
    case ErrorCode::kMissingRole: return "MissingRole";
    case ErrorCode::kDegenerateTrainingSet: return "DegenerateTrainingSet";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Error";
}

bool FlatPointSequence::drawn_segment(std::size_t i) const {
  // Boundaries are exactly the indices stroke_begin[k] - 1.
  for (std::size_t k = 1; k + 1 < stroke_begin.size(); ++k) {
    if (i + 1 == stroke_begin[k]) return false;
  }
  return i + 1 < samples.size();
}

namespace {

std::string Where(const Gesture& g, std::size_t stroke, std::size_t sample) {
  return "gesture '" + g.id + "' stroke " + std::to_string(stroke) +
         " sample " + std::to_string(sample);
}

}  // namespace

void Validate(const Gesture& gesture) {
  if (gesture.strokes.empty()) {
    throw Error(ErrorCode::kEmptyGesture,
                "gesture '" + gesture.id + "' has no strokes");
  }
  for (std::size_t k = 0; k < gesture.strokes.size(); ++k) {
    const auto& samples = gesture.strokes[k].samples;
    if (samples.empty()) {
      throw Error(ErrorCode::kEmptyGesture,
                  "gesture '" + gesture.id + "' stroke " + std::to_string(k) +
                      " has no samples");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Sample& s = samples[i];
      if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.p) ||
          !std::isfinite(s.t)) {
        throw Error(ErrorCode::kNonFiniteValue, Where(gesture, k, i));
      }
      if (s.p < 0.0 || s.p > 1.0) {
        throw Error(ErrorCode::kPressureOutOfRange, Where(gesture, k, i));
      }
      if (i > 0 && !(s.t > samples[i - 1].t)) {
        throw Error(ErrorCode::kNonMonotonicTime,
                    Where(gesture, k, i) + " (t=" + std::to_string(s.t) +
                        " after t=" + std::to_string(samples[i - 1].t) + ")");
      }
    }
    if (k > 0) {
      double prev_end = gesture.strokes[k - 1].samples.back().t;
      double cur_start = samples.front().t;
      if (!(cur_start > prev_end)) {
        throw Error(ErrorCode::kNonMonotonicTime,
                    "gesture '" + gesture.id + "' stroke " +
                        std::to_string(k) + " starts at t=" +
                        std::to_string(cur_start) +
                        ", not after previous stroke end t=" +
                        std::to_string(prev_end));
      }
    }
  }
}

FlatPointSequence Flatten(const Gesture& gesture) {
  FlatPointSequence flat;
  flat.stroke_begin.reserve(gesture.strokes.size() + 1);
  for (const auto& stroke : gesture.strokes) {
    flat.stroke_begin.push_back(flat.samples.size());
    flat.samples.insert(flat.samples.end(), stroke.samples.begin(),
                        stroke.samples.end());
  }
  flat.stroke_begin.push_back(flat.samples.size());
  return flat;
}

Gesture Transformed(const Gesture& gesture, double scale, double angle,
                    double dx, double dy) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Gesture out = gesture;
  for (auto& stroke : out.strokes) {
    for (auto& q : stroke.samples) {
      double x = q.x, y = q.y;
      q.x = scale * (c * x - s * y) + dx;
      q.y = scale * (s * x + c * y) + dy;
    }
  }
  return out;
}

}  // namespace inkfeat
