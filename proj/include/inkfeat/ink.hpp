#ifndef INKFEAT_INK_HPP
#define INKFEAT_INK_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace inkfeat {

// Coordinates are screen-oriented: x grows rightward, y grows downward.
// Timestamps are milliseconds; pressure is normalized to [0, 1].
struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Sample {
  double x = 0.0;
  double y = 0.0;
  double p = 0.0;
  double t = 0.0;

  Point pos() const { return {x, y}; }
};

// One pen-down trace. Timestamps must be strictly increasing within a stroke;
// coordinates may repeat (a resting pen).
struct Stroke {
  std::vector<Sample> samples;
};

// Ordered strokes with disjoint, increasing time ranges.
struct Gesture {
  std::string id;
  std::vector<Stroke> strokes;

  std::size_t sample_count() const {
    std::size_t n = 0;
    for (const auto& s : strokes) n += s.samples.size();
    return n;
  }
};

// Concatenation of all samples of a gesture in stroke order. stroke_begin[k]
// is the flat index of stroke k's first sample; stroke_begin.back() == n.
// Consecutive samples from different strokes form a pen-up jump, not a drawn
// segment; stroke-aware operations use stroke_begin to skip those.
struct FlatPointSequence {
  std::vector<Sample> samples;
  std::vector<std::size_t> stroke_begin;

  std::size_t size() const { return samples.size(); }
  std::size_t stroke_count() const {
    return stroke_begin.empty() ? 0 : stroke_begin.size() - 1;
  }
  // True when samples i and i+1 belong to the same stroke.
  bool drawn_segment(std::size_t i) const;
};

// Throws Error on the first violation found: kEmptyGesture,
// kNonFiniteValue, kPressureOutOfRange, kNonMonotonicTime. Diagnostics name
// the offending gesture/stroke/sample.
void Validate(const Gesture& gesture);

FlatPointSequence Flatten(const Gesture& gesture);

// Similarity transform applied to every sample position:
// (x, y) -> scale * R(angle) * (x, y) + (dx, dy). Pressure and time are kept.
Gesture Transformed(const Gesture& gesture, double scale, double angle,
                    double dx, double dy);

}  // namespace inkfeat

#endif  // INKFEAT_INK_HPP
