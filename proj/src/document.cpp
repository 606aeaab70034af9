#include "inkfeat/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "inkfeat/error.hpp"

namespace inkfeat {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

const Json& Member(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where + ": missing key '" + key + "'");
  return *it;
}

std::string AsString(const Json& j, const std::string& where) {
  if (!j.is_string()) Fail(where + ": expected a string");
  return j.get<std::string>();
}

double AsNumber(const Json& j, const std::string& where) {
  if (!j.is_number()) Fail(where + ": expected a number");
  return j.get<double>();
}

Region ParseRegion(const Json& j, std::size_t index) {
  std::string where = "regions[" + std::to_string(index) + "]";
  if (!j.is_object()) Fail(where + ": expected an object");
  Region r;
  r.id = AsString(Member(j, "id", where), where + ".id");
  r.role = AsString(Member(j, "role", where), where + ".role");
  const Json& b = Member(j, "bbox", where);
  if (!b.is_array() || b.size() != 4)
    Fail(where + ".bbox: expected [xmin, ymin, xmax, ymax]");
  r.bbox.xmin = AsNumber(b[0], where + ".bbox[0]");
  r.bbox.ymin = AsNumber(b[1], where + ".bbox[1]");
  r.bbox.xmax = AsNumber(b[2], where + ".bbox[2]");
  r.bbox.ymax = AsNumber(b[3], where + ".bbox[3]");
  if (r.bbox.xmin > r.bbox.xmax || r.bbox.ymin > r.bbox.ymax)
    Fail(where + ".bbox: min exceeds max");
  return r;
}

DocumentGesture ParseGesture(const Json& j, std::size_t index) {
  std::string where = "gestures[" + std::to_string(index) + "]";
  if (!j.is_object()) Fail(where + ": expected an object");
  DocumentGesture g;
  g.gesture.id = AsString(Member(j, "id", where), where + ".id");
  auto region = j.find("region");
  if (region != j.end() && !region->is_null())
    g.region = AsString(*region, where + ".region");
  const Json& strokes = Member(j, "strokes", where);
  if (!strokes.is_array()) Fail(where + ".strokes: expected an array");
  for (std::size_t s = 0; s < strokes.size(); ++s) {
    std::string sw = where + ".strokes[" + std::to_string(s) + "]";
    const Json& js = strokes[s];
    if (!js.is_array()) Fail(sw + ": expected an array of samples");
    Stroke stroke;
    for (std::size_t i = 0; i < js.size(); ++i) {
      std::string pw = sw + "[" + std::to_string(i) + "]";
      const Json& jp = js[i];
      if (!jp.is_array() || jp.size() != 4) Fail(pw + ": expected [x, y, p, t]");
      Sample sample;
      sample.x = AsNumber(jp[0], pw + "[0]");
      sample.y = AsNumber(jp[1], pw + "[1]");
      sample.p = AsNumber(jp[2], pw + "[2]");
      sample.t = AsNumber(jp[3], pw + "[3]");
      stroke.samples.push_back(sample);
    }
    g.gesture.strokes.push_back(std::move(stroke));
  }
  return g;
}

}  // namespace

InkDocument ParseDocument(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    Fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) Fail("document: expected a JSON object");

  InkDocument doc;
  const Json& version = Member(j, "version", "document");
  if (!version.is_number_integer()) Fail("version: expected an integer");
  doc.version = version.get<std::int64_t>();
  doc.test = AsString(Member(j, "test", "document"), "test");

  const Json& regions = Member(j, "regions", "document");
  if (!regions.is_array()) Fail("regions: expected an array");
  std::set<std::string> region_ids;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    Region r = ParseRegion(regions[i], i);
    if (!region_ids.insert(r.id).second) Fail("duplicate region id '" + r.id + "'");
    doc.regions.push_back(std::move(r));
  }

  const Json& gestures = Member(j, "gestures", "document");
  if (!gestures.is_array()) Fail("gestures: expected an array");
  std::set<std::string> gesture_ids;
  for (std::size_t i = 0; i < gestures.size(); ++i) {
    DocumentGesture g = ParseGesture(gestures[i], i);
    if (!gesture_ids.insert(g.gesture.id).second)
      Fail("duplicate gesture id '" + g.gesture.id + "'");
    if (g.region && !region_ids.count(*g.region))
      Fail("gesture '" + g.gesture.id + "' references unknown region '" +
           *g.region + "'");
    try {
      Validate(g.gesture);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "gesture '" + g.gesture.id + "': " + std::string(e.what()));
    }
    doc.gestures.push_back(std::move(g));
  }

  auto labels = j.find("labels");
  if (labels != j.end()) {
    if (!labels->is_object()) Fail("labels: expected an object");
    for (auto it = labels->begin(); it != labels->end(); ++it)
      doc.labels[it.key()] = AsString(it.value(), "labels['" + it.key() + "']");
  }
  return doc;
}

std::string SerializeDocument(const InkDocument& doc) {
  Json j = Json::object();
  j["version"] = doc.version;
  j["test"] = doc.test;
  j["regions"] = Json::array();
  for (const Region& r : doc.regions) {
    Json jr = Json::object();
    jr["id"] = r.id;
    jr["role"] = r.role;
    jr["bbox"] = {r.bbox.xmin, r.bbox.ymin, r.bbox.xmax, r.bbox.ymax};
    j["regions"].push_back(std::move(jr));
  }
  j["gestures"] = Json::array();
  for (const DocumentGesture& g : doc.gestures) {
    Json jg = Json::object();
    jg["id"] = g.gesture.id;
    if (g.region)
      jg["region"] = *g.region;
    else
      jg["region"] = nullptr;
    Json strokes = Json::array();
    for (const Stroke& s : g.gesture.strokes) {
      Json js = Json::array();
      for (const Sample& p : s.samples) js.push_back({p.x, p.y, p.p, p.t});
      strokes.push_back(std::move(js));
    }
    jg["strokes"] = std::move(strokes);
    j["gestures"].push_back(std::move(jg));
  }
  j["labels"] = Json::object();
  for (const auto& [id, label] : doc.labels) j["labels"][id] = label;
  return j.dump(2);
}

InkDocument LoadDocument(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read '" + path + "'");
  return ParseDocument(buf.str());
}

void SaveDocument(const InkDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  out << SerializeDocument(doc);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
}

}  // namespace inkfeat
