#include "inkfeat/table.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "inkfeat/error.hpp"

namespace inkfeat {

namespace {

using Json = nlohmann::ordered_json;

std::string FormatValue(double v) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

std::vector<bool> DegenerateColumns(const FeatureTable& table) {
  std::vector<bool> flagged(table.ids.size(), false);
  for (const auto& row : table.rows) {
    if (row.values.size() != table.ids.size())
      throw Error(ErrorCode::kIoError,
                  "row '" + row.gesture_id + "' does not match the header");
    for (std::size_t j = 0; j < row.values.size(); ++j)
      if (row.values[j].degenerate) flagged[j] = true;
  }
  return flagged;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

std::string WriteCsv(const FeatureTable& table) {
  std::vector<bool> flagged = DegenerateColumns(table);
  std::string out = "gesture_id";
  for (std::size_t j = 0; j < table.ids.size(); ++j) {
    out += ',' + table.ids[j];
    if (flagged[j]) out += ',' + table.ids[j] + ".degenerate";
  }
  for (const auto& row : table.rows) {
    out += '\n';
    out += row.gesture_id;
    for (std::size_t j = 0; j < row.values.size(); ++j) {
      out += ',' + FormatValue(row.values[j].value);
      if (flagged[j]) out += row.values[j].degenerate ? ",true" : ",false";
    }
  }
  return out;
}

std::string WriteJson(const FeatureTable& table) {
  DegenerateColumns(table);  // validates row widths
  Json j = Json::object();
  j["ids"] = table.ids;
  j["rows"] = Json::array();
  for (const auto& row : table.rows) {
    Json jr = Json::object();
    jr["gesture_id"] = row.gesture_id;
    Json values = Json::array();
    Json degenerate = Json::array();
    for (const FeatureValue& v : row.values) {
      values.push_back(v.value == 0.0 ? 0.0 : v.value);
      degenerate.push_back(v.degenerate);
    }
    jr["values"] = std::move(values);
    jr["degenerate"] = std::move(degenerate);
    j["rows"].push_back(std::move(jr));
  }
  return j.dump(2);
}

FeatureTable ReadCsv(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "empty CSV");

  std::vector<std::string> header = SplitCsvLine(lines[0]);
  if (header.empty() || header[0] != "gesture_id")
    throw Error(ErrorCode::kParseError, "CSV header must start with gesture_id");

  FeatureTable table;
  std::vector<bool> has_flag_column;
  for (std::size_t c = 1; c < header.size(); ++c) {
    table.ids.push_back(header[c]);
    bool flagged = c + 1 < header.size() &&
                   header[c + 1] == header[c] + ".degenerate";
    has_flag_column.push_back(flagged);
    if (flagged) ++c;
  }

  for (std::size_t r = 1; r < lines.size(); ++r) {
    std::vector<std::string> cells = SplitCsvLine(lines[r]);
    FeatureTable::Row row;
    if (cells.empty()) throw Error(ErrorCode::kParseError, "empty CSV row");
    row.gesture_id = cells[0];
    std::size_t c = 1;
    for (std::size_t j = 0; j < table.ids.size(); ++j) {
      if (c >= cells.size())
        throw Error(ErrorCode::kParseError, "short CSV row '" + row.gesture_id + "'");
      FeatureValue v;
      v.value = std::stod(cells[c++]);
      if (has_flag_column[j]) {
        if (c >= cells.size())
          throw Error(ErrorCode::kParseError, "short CSV row '" + row.gesture_id + "'");
        v.degenerate = cells[c++] == "true";
      }
      row.values.push_back(v);
    }
    if (c != cells.size())
      throw Error(ErrorCode::kParseError, "long CSV row '" + row.gesture_id + "'");
    table.rows.push_back(std::move(row));
  }
  return table;
}

FeatureTable ReadJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  FeatureTable table;
  for (const auto& id : j.at("ids")) table.ids.push_back(id.get<std::string>());
  for (const auto& jr : j.at("rows")) {
    FeatureTable::Row row;
    row.gesture_id = jr.at("gesture_id").get<std::string>();
    const Json& values = jr.at("values");
    const Json& degenerate = jr.at("degenerate");
    for (std::size_t i = 0; i < values.size(); ++i) {
      FeatureValue v;
      v.value = values[i].get<double>();
      v.degenerate = degenerate[i].get<bool>();
      row.values.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace inkfeat
