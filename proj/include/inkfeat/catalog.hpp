#ifndef INKFEAT_CATALOG_HPP
#define INKFEAT_CATALOG_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace inkfeat {

enum class FeatureCategory {
  kAngle,
  kSpace,
  kCentroidal,
  kTemporal,
  kPressure,
  kTrajectory,
  kMeta,
  kSemantic,
};

const char* CategoryName(FeatureCategory c);
// Throws kParseError for unknown names.
FeatureCategory ParseCategory(const std::string& name);

struct FeatureDescriptor {
  std::string id;    // e.g. "rubine.f3", "sonntag.f14.sin"
  std::string set;   // sonntag | rubine | willems | hbf49 | semantic
  FeatureCategory category = FeatureCategory::kSpace;
  bool translation_invariant = false;
  bool scale_invariant = false;
  bool rotation_invariant = false;
  // Below this flat sample count the feature is 0 with the degenerate flag.
  std::size_t min_samples = 1;
};

// Full catalog in canonical order: sonntag, rubine, willems, hbf49, semantic;
// ascending index within a set.
const std::vector<FeatureDescriptor>& Catalog();

// Index into Catalog(); throws kUnknownFeatureId.
std::size_t CatalogIndex(const std::string& id);
const FeatureDescriptor& Describe(const std::string& id);

// Ids of one set in canonical order. "all" selects the four syntactic sets
// (semantic features require document annotations and are not extractable
// from a bare gesture). Throws kUnknownSet.
std::vector<std::string> SetIds(const std::string& set_name);

}  // namespace inkfeat

#endif  // INKFEAT_CATALOG_HPP
