#ifndef INKFEAT_TABLE_HPP
#define INKFEAT_TABLE_HPP

#include <string>
#include <vector>

#include "inkfeat/extract.hpp"

namespace inkfeat {

// Rectangular result of a batch extraction: one row per gesture, one value
// column per feature id, all rows aligned with `ids`.
struct FeatureTable {
  std::vector<std::string> ids;

  struct Row {
    std::string gesture_id;
    std::vector<FeatureValue> values;
  };
  std::vector<Row> rows;
};

// Renders values with 12 fractional digits (round-half-even, negative zero
// normalized to zero), lines joined by '\n' with no trailing newline. A
// feature that is degenerate in any row gets a companion boolean column
// "<id>.degenerate" directly after its value column.
std::string WriteCsv(const FeatureTable& table);

// Lossless rendering: one object per row with exact numeric round-trip.
std::string WriteJson(const FeatureTable& table);

// Inverses for round-trip checks. ReadCsv recovers the printed precision;
// ReadJson recovers values exactly.
FeatureTable ReadCsv(const std::string& text);
FeatureTable ReadJson(const std::string& text);

}  // namespace inkfeat

#endif  // INKFEAT_TABLE_HPP
