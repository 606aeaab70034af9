#ifndef INKFEAT_EXTRACT_HPP
#define INKFEAT_EXTRACT_HPP

#include <map>
#include <string>
#include <vector>

#include "inkfeat/catalog.hpp"
#include "inkfeat/ink.hpp"

namespace inkfeat {

// Degenerate inputs (too few samples, vanishing denominators, coincident
// points) yield value 0 with the flag set; values are never NaN or infinite.
struct FeatureValue {
  double value = 0.0;
  bool degenerate = false;
};

struct FeatureVector {
  std::vector<std::string> ids;  // catalog order
  std::vector<FeatureValue> values;
};

// Tunables and compatibility switches, settable by name via
// FeatureRequest::overrides:
//   "k"                 macro vertex-angle stride (default 2)
//   "window"            straight-line window in samples (default 5)
//   "threshold"         straight-line cumulative turn bound (default 0.26)
//   "epsilon"           connected-component tolerance; < 0 selects 1% of the
//                       bounding-box diagonal (default -1)
//   "willems.chaincode" "weighted" (default) or "literal"
//   "hbf49.f13"         "proportion" (default) or "literal"
struct ExtractParams {
  std::size_t k = 2;
  std::size_t window = 5;
  double threshold = 0.26;
  double epsilon = -1.0;
  bool chaincode_literal = false;
  bool hbf13_literal = false;
};

struct FeatureRequest {
  std::vector<std::string> sets;  // "sonntag"|"rubine"|"willems"|"hbf49"|"all"
  std::vector<std::string> ids;   // explicit feature ids
  std::map<std::string, std::string> overrides;

  // De-duplicated ids in catalog order. Throws kUnknownFeatureId,
  // kUnknownSet, or kParseError (bad override); semantic ids are rejected.
  std::vector<std::string> Resolve() const;
  ExtractParams Params() const;
};

// Validates the gesture, then computes the requested features.
FeatureVector Extract(const Gesture& gesture, const FeatureRequest& request);

// Same results as per-gesture Extract, in input order, computed with up to
// `threads` workers (0 or 1 means sequential). Output does not depend on the
// thread count.
std::vector<FeatureVector> ExtractBatch(const std::vector<Gesture>& gestures,
                                        const FeatureRequest& request,
                                        std::size_t threads = 1);

// Empirical check of the catalog invariance flags: every syntactic feature
// flagged invariant must match under a random translation / uniform scale /
// rotation of each probe gesture. Tolerances are relative to
// max(1, |a|, |b|).
struct InvarianceViolation {
  std::string feature;
  std::string transform;  // "translation" | "scale" | "rotation"
  std::string gesture;
  double before = 0.0;
  double after = 0.0;
};

struct InvarianceReport {
  int checks = 0;
  std::vector<InvarianceViolation> violations;
};

inline constexpr double kTranslationTolerance = 1e-9;
inline constexpr double kScaleTolerance = 1e-6;
inline constexpr double kRotationTolerance = 1e-6;

InvarianceReport AuditInvarianceFlags(const std::vector<Gesture>& probes,
                                      unsigned seed = 1u);

}  // namespace inkfeat

#endif  // INKFEAT_EXTRACT_HPP
