#ifndef INKFEAT_DOCUMENT_HPP
#define INKFEAT_DOCUMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inkfeat/geometry.hpp"
#include "inkfeat/ink.hpp"

namespace inkfeat {

// Named rectangular area of the capture surface (a form field, a prompt box).
struct Region {
  std::string id;
  std::string role;
  geometry::BoundingBox bbox;
};

// A gesture plus the region it was drawn in, if any.
struct DocumentGesture {
  Gesture gesture;
  std::optional<std::string> region;
};

// One captured test document: regions, gestures, and optional class labels
// keyed by gesture id. Region ids and gesture ids are unique; every gesture
// region reference resolves to a declared region.
struct InkDocument {
  std::int64_t version = 1;
  std::string test;
  std::vector<Region> regions;
  std::vector<DocumentGesture> gestures;
  std::map<std::string, std::string> labels;
};

// Parses a JSON document. Throws Error(kParseError) on malformed JSON,
// schema violations, duplicate ids, or unresolved region references; gesture
// validation failures are rethrown with the gesture id prepended.
InkDocument ParseDocument(const std::string& text);

// Serializes with stable key order and lossless numeric round-trip, so
// serialize(parse(serialize(doc))) is byte-identical to serialize(doc).
std::string SerializeDocument(const InkDocument& doc);

// File wrappers; throw Error(kIoError) when the file cannot be read/written.
InkDocument LoadDocument(const std::string& path);
void SaveDocument(const InkDocument& doc, const std::string& path);

}  // namespace inkfeat

#endif  // INKFEAT_DOCUMENT_HPP
