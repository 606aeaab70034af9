#include "inkfeat/catalog.hpp"

#include <unordered_map>

#include "inkfeat/error.hpp"

namespace inkfeat {

const char* CategoryName(FeatureCategory c) {
  switch (c) {
    case FeatureCategory::kAngle: return "angle";
    case FeatureCategory::kSpace: return "space";
    case FeatureCategory::kCentroidal: return "centroidal";
    case FeatureCategory::kTemporal: return "temporal";
    case FeatureCategory::kPressure: return "pressure";
    case FeatureCategory::kTrajectory: return "trajectory";
    case FeatureCategory::kMeta: return "meta";
    case FeatureCategory::kSemantic: return "semantic";
  }
  return "space";
}

FeatureCategory ParseCategory(const std::string& name) {
  static const std::unordered_map<std::string, FeatureCategory> kMap = {
      {"angle", FeatureCategory::kAngle},
      {"space", FeatureCategory::kSpace},
      {"centroidal", FeatureCategory::kCentroidal},
      {"temporal", FeatureCategory::kTemporal},
      {"pressure", FeatureCategory::kPressure},
      {"trajectory", FeatureCategory::kTrajectory},
      {"meta", FeatureCategory::kMeta},
      {"semantic", FeatureCategory::kSemantic},
  };
  auto it = kMap.find(name);
  if (it == kMap.end()) {
    throw Error(ErrorCode::kParseError, "unknown category '" + name + "'");
  }
  return it->second;
}

namespace {

using C = FeatureCategory;

struct Spec {
  const char* suffix;  // appended to "<set>.f"; full suffix like "1" or
                       // "14.sin"
  C category;
  bool t, s, r;
  std::size_t min;
};

constexpr std::size_t kPca = 2;

const Spec kSonntag[] = {
    {"1", C::kMeta, 1, 1, 1, 1},       {"2", C::kSpace, 1, 0, 1, 1},
    {"3", C::kSpace, 1, 0, 1, 1},      {"4", C::kSpace, 1, 0, 1, 1},
    {"5", C::kSpace, 1, 1, 1, 1},      {"6", C::kSpace, 1, 1, 1, kPca},
    {"7", C::kSpace, 1, 1, 1, kPca},   {"8", C::kAngle, 1, 1, 1, 1},
    {"9", C::kAngle, 1, 1, 1, kPca},   {"10", C::kTrajectory, 1, 1, 1, 1},
    {"11", C::kAngle, 1, 1, 1, 3},     {"12", C::kAngle, 1, 1, 1, 3},
    {"13", C::kAngle, 1, 1, 1, 3},     {"14.sin", C::kAngle, 1, 1, 1, 2},
    {"14.cos", C::kAngle, 1, 1, 1, 2},
};

const Spec kRubine[] = {
    {"1", C::kAngle, 1, 1, 0, 3},    {"2", C::kAngle, 1, 1, 0, 3},
    {"3", C::kSpace, 1, 0, 0, 1},    {"4", C::kAngle, 1, 1, 0, 1},
    {"5", C::kSpace, 1, 0, 1, 1},    {"6", C::kAngle, 1, 1, 0, 1},
    {"7", C::kAngle, 1, 1, 0, 1},    {"8", C::kSpace, 1, 0, 1, 1},
    {"9", C::kAngle, 1, 1, 1, 3},    {"10", C::kAngle, 1, 1, 1, 3},
    {"11", C::kAngle, 1, 1, 1, 3},   {"12", C::kTemporal, 1, 0, 1, 2},
    {"13", C::kTemporal, 1, 1, 1, 1},
};

const Spec kWillems[] = {
    {"1", C::kSpace, 1, 0, 1, 1},      {"2", C::kSpace, 1, 0, 1, 1},
    {"3", C::kSpace, 1, 1, 1, 1},      {"4", C::kSpace, 1, 1, 0, 1},
    {"5", C::kSpace, 1, 1, 0, 1},      {"6", C::kTrajectory, 1, 1, 1, 2},
    {"7", C::kAngle, 1, 1, 1, 1},      {"8", C::kAngle, 1, 1, 1, 3},
    {"9", C::kAngle, 1, 1, 1, 3},      {"10", C::kAngle, 1, 1, 1, 3},
    {"11", C::kTemporal, 1, 1, 1, 1},  {"12", C::kTrajectory, 1, 1, 0, 2},
    {"13", C::kAngle, 1, 1, 1, 3},     {"14", C::kAngle, 1, 1, 1, 3},
    {"15", C::kAngle, 1, 1, 1, 3},     {"16", C::kCentroidal, 1, 0, 1, kPca},
    {"17", C::kSpace, 1, 0, 1, kPca},  {"18", C::kAngle, 1, 1, 0, kPca},
    {"19", C::kAngle, 1, 1, 0, kPca},  {"20", C::kAngle, 1, 1, 1, kPca},
    {"21", C::kAngle, 1, 1, 1, 5},     {"22", C::kPressure, 1, 1, 1, 1},
    {"23", C::kPressure, 1, 1, 1, 1},  {"24", C::kTemporal, 1, 1, 1, 1},
    {"25", C::kTemporal, 1, 0, 1, 3},  {"26", C::kTemporal, 1, 0, 1, 3},
    {"27", C::kTemporal, 1, 0, 1, 3},  {"28", C::kTemporal, 1, 0, 1, 5},
    {"29", C::kTemporal, 1, 0, 1, 5},  {"30", C::kTemporal, 1, 0, 1, 5},
    {"31", C::kTemporal, 1, 0, 1, 5},  {"32", C::kTrajectory, 1, 1, 0, 2},
    {"33", C::kTrajectory, 1, 1, 0, 2},
    {"34", C::kTrajectory, 1, 1, 0, 2},
    {"35", C::kSpace, 1, 1, 0, 1},     {"36", C::kSpace, 1, 1, 0, 1},
    {"37", C::kSpace, 1, 1, 0, 1},     {"38", C::kSpace, 1, 1, 0, 1},
    {"39", C::kMeta, 1, 1, 1, 1},      {"40", C::kSpace, 1, 0, 1, 1},
    {"41", C::kMeta, 1, 0, 1, 1},      {"42", C::kMeta, 1, 1, 1, 1},
    {"43", C::kMeta, 1, 1, 1, 1},      {"44", C::kTrajectory, 1, 1, 1, 1},
    {"45", C::kSpace, 1, 1, 0, 2},     {"46", C::kSpace, 1, 1, 0, 2},
    {"47", C::kSpace, 1, 1, 0, 2},     {"48", C::kSpace, 1, 1, 0, 2},
    {"49", C::kSpace, 1, 1, 0, 2},     {"50", C::kSpace, 1, 1, 0, 2},
    {"51", C::kSpace, 1, 1, 0, 2},     {"52", C::kSpace, 1, 1, 0, 2},
    {"53", C::kMeta, 1, 1, 1, 1},      {"54", C::kMeta, 1, 1, 1, 1},
    {"55", C::kAngle, 1, 1, 0, 3},     {"56", C::kAngle, 1, 1, 0, 3},
    {"57", C::kSpace, 1, 0, 0, 1},     {"58", C::kAngle, 1, 1, 0, 1},
    {"59", C::kSpace, 1, 0, 1, 1},     {"60", C::kAngle, 1, 1, 0, 1},
    {"61", C::kAngle, 1, 1, 0, 1},     {"62", C::kAngle, 1, 1, 1, 3},
    {"63", C::kAngle, 1, 1, 1, 3},     {"64", C::kAngle, 1, 1, 1, 5},
    {"65", C::kAngle, 1, 1, 1, 5},     {"66", C::kAngle, 1, 1, 1, 5},
    {"67", C::kSpace, 1, 1, 1, kPca},  {"68", C::kCentroidal, 1, 0, 1, 1},
    {"69", C::kCentroidal, 1, 0, 1, 1},
    {"70", C::kTrajectory, 1, 1, 0, 2},
    {"71", C::kTrajectory, 1, 1, 0, 2},
    {"72", C::kTrajectory, 1, 1, 0, 2},
    {"73", C::kTrajectory, 1, 1, 0, 2},
    {"74", C::kTrajectory, 1, 1, 0, 2},
    {"75", C::kTrajectory, 1, 1, 0, 2},
    {"76", C::kTrajectory, 1, 1, 0, 2},
    {"77", C::kTrajectory, 1, 1, 0, 2},
    {"78", C::kTrajectory, 1, 1, 0, 2},
    {"79", C::kTrajectory, 1, 1, 0, 2},
    {"80", C::kTrajectory, 1, 1, 0, 2},
    {"81", C::kTrajectory, 1, 1, 0, 2},
    {"82", C::kTrajectory, 1, 1, 0, 2},
    {"83", C::kTrajectory, 1, 1, 0, 2},
    {"84", C::kTrajectory, 1, 1, 0, 2},
    {"85", C::kTrajectory, 1, 1, 0, 2},
    {"86", C::kSpace, 1, 0, 1, 1},     {"87", C::kSpace, 1, 0, 1, 1},
    {"88", C::kTrajectory, 1, 1, 0, 1},
    {"89", C::kTrajectory, 1, 1, 0, 1},
};

const Spec kHbf49[] = {
    {"1", C::kSpace, 1, 1, 0, 1},      {"2", C::kSpace, 1, 1, 0, 1},
    {"3", C::kSpace, 1, 1, 0, 1},      {"4", C::kSpace, 1, 1, 0, 1},
    {"5", C::kSpace, 1, 0, 1, 1},      {"6", C::kAngle, 1, 1, 0, 1},
    {"7", C::kAngle, 1, 1, 0, 1},      {"8", C::kTrajectory, 1, 1, 1, 2},
    {"9", C::kAngle, 1, 1, 0, 3},      {"10", C::kAngle, 1, 1, 0, 3},
    {"11", C::kTrajectory, 1, 1, 0, 2},
    {"12", C::kTrajectory, 1, 1, 0, 2},
    {"13", C::kTrajectory, 1, 1, 0, 2},
    {"14", C::kMeta, 1, 1, 1, 1},      {"15", C::kAngle, 1, 1, 0, 1},
    {"16", C::kSpace, 1, 0, 1, 1},     {"17", C::kTrajectory, 1, 1, 0, 2},
    {"18", C::kCentroidal, 1, 0, 1, 1},
    {"19", C::kTrajectory, 1, 1, 0, 2},
    {"20", C::kAngle, 1, 1, 1, 3},     {"21", C::kAngle, 1, 1, 1, 3},
    {"22", C::kAngle, 1, 1, 1, 5},     {"23", C::kAngle, 1, 1, 1, 5},
    {"24", C::kAngle, 1, 1, 0, 2},     {"25", C::kAngle, 1, 1, 0, 2},
    {"26", C::kAngle, 1, 1, 0, 2},     {"27", C::kAngle, 1, 1, 0, 2},
    {"28", C::kAngle, 1, 1, 1, 3},     {"29", C::kAngle, 1, 1, 1, 3},
    {"30", C::kAngle, 1, 1, 1, 3},     {"31", C::kAngle, 1, 1, 1, 3},
    {"32", C::kSpace, 1, 1, 0, 1},     {"33", C::kSpace, 1, 1, 0, 1},
    {"34", C::kSpace, 1, 1, 0, 1},     {"35", C::kSpace, 1, 1, 0, 1},
    {"36", C::kSpace, 1, 1, 0, 1},     {"37", C::kSpace, 1, 1, 0, 1},
    {"38", C::kSpace, 1, 1, 0, 1},     {"39", C::kSpace, 1, 1, 0, 1},
    {"40", C::kSpace, 1, 1, 0, 1},     {"41", C::kCentroidal, 1, 1, 1, 1},
    {"42", C::kCentroidal, 1, 1, 1, 1},
    {"43", C::kCentroidal, 1, 1, 1, 1},
    {"44", C::kCentroidal, 1, 1, 1, 1},
    {"45", C::kCentroidal, 1, 1, 1, 1},
    {"46", C::kCentroidal, 1, 1, 1, 1},
    {"47", C::kCentroidal, 1, 1, 1, 1},
    {"48", C::kSpace, 1, 1, 0, 1},     {"49", C::kSpace, 1, 1, 1, 2},
};

struct SemanticSpec {
  const char* name;
  bool t, s, r;
};

const SemanticSpec kSemantic[] = {
    {"center_offset", 1, 1, 1},
    {"hand_length_hour", 1, 0, 1},
    {"hand_length_minute", 1, 0, 1},
    {"hand_ratio", 1, 1, 1},
    {"hand_angle", 1, 1, 1},
    {"orientation_hour", 1, 1, 0},
    {"orientation_minute", 1, 1, 0},
    {"digit_displacement_mean", 1, 1, 0},
    {"digit_displacement_max", 1, 1, 0},
};

std::vector<FeatureDescriptor> BuildCatalog() {
  std::vector<FeatureDescriptor> out;
  auto add_set = [&out](const char* set, const Spec* specs, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const Spec& sp = specs[i];
      out.push_back({std::string(set) + ".f" + sp.suffix, set, sp.category,
                     sp.t, sp.s, sp.r, sp.min});
    }
  };
  add_set("sonntag", kSonntag, std::size(kSonntag));
  add_set("rubine", kRubine, std::size(kRubine));
  add_set("willems", kWillems, std::size(kWillems));
  add_set("hbf49", kHbf49, std::size(kHbf49));
  for (const SemanticSpec& sp : kSemantic) {
    out.push_back({std::string("semantic.cdt.") + sp.name, "semantic",
                   C::kSemantic, sp.t, sp.s, sp.r, 1});
  }
  return out;
}

const std::unordered_map<std::string, std::size_t>& IndexMap() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<std::string, std::size_t>();
    const auto& cat = Catalog();
    for (std::size_t i = 0; i < cat.size(); ++i) (*m)[cat[i].id] = i;
    return m;
  }();
  return *map;
}

}  // namespace

const std::vector<FeatureDescriptor>& Catalog() {
  static const auto* catalog = new std::vector<FeatureDescriptor>(
      BuildCatalog());
  return *catalog;
}

std::size_t CatalogIndex(const std::string& id) {
  const auto& map = IndexMap();
  auto it = map.find(id);
  if (it == map.end()) {
    throw Error(ErrorCode::kUnknownFeatureId, "'" + id + "'");
  }
  return it->second;
}

const FeatureDescriptor& Describe(const std::string& id) {
  return Catalog()[CatalogIndex(id)];
}

std::vector<std::string> SetIds(const std::string& set_name) {
  bool all = set_name == "all";
  if (!all && set_name != "sonntag" && set_name != "rubine" &&
      set_name != "willems" && set_name != "hbf49" &&
      set_name != "semantic") {
    throw Error(ErrorCode::kUnknownSet, "'" + set_name + "'");
  }
  std::vector<std::string> ids;
  for (const auto& d : Catalog()) {
    if (all ? d.set != "semantic" : d.set == set_name) ids.push_back(d.id);
  }
  return ids;
}

}  // namespace inkfeat
