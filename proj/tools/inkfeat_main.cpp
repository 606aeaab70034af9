#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "inkfeat/catalog.hpp"
#include "inkfeat/cdt.hpp"
#include "inkfeat/classifier.hpp"
#include "inkfeat/document.hpp"
#include "inkfeat/error.hpp"
#include "inkfeat/extract.hpp"
#include "inkfeat/synth.hpp"
#include "inkfeat/table.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace inkfeat;

std::size_t ThreadBudget() {
  std::size_t threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("INKFEAT_THREADS")) {
    try {
      std::size_t cap = std::stoul(env);
      if (cap > 0 && cap < threads) threads = cap;
      if (cap > 0 && threads == 0) threads = cap;
    } catch (const std::exception&) {
      // Ignore malformed values; keep the hardware default.
    }
  }
  return threads;
}

void EmitOutput(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + out_path + "'");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + out_path + "'");
}

// Bare gesture ids for a single input file, "<file>#<id>" across several.
std::string RowId(const std::string& path, const std::string& gesture_id,
                  bool multi_file) {
  return multi_file ? path + "#" + gesture_id : gesture_id;
}

struct LoadedGestures {
  std::vector<Gesture> gestures;
  std::vector<std::string> row_ids;
  std::vector<std::string> labels;  // empty string when unlabeled
};

LoadedGestures LoadGestures(const std::vector<std::string>& paths) {
  LoadedGestures out;
  bool multi = paths.size() > 1;
  for (const std::string& path : paths) {
    InkDocument doc = LoadDocument(path);
    for (const DocumentGesture& g : doc.gestures) {
      out.gestures.push_back(g.gesture);
      out.row_ids.push_back(RowId(path, g.gesture.id, multi));
      auto it = doc.labels.find(g.gesture.id);
      out.labels.push_back(it == doc.labels.end() ? "" : it->second);
    }
  }
  return out;
}

int CmdValidate(const std::vector<std::string>& paths) {
  int failures = 0;
  for (const std::string& path : paths) {
    try {
      LoadDocument(path);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kIoError) throw;
      std::cerr << path << ": " << e.what() << '\n';
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

int CmdExtract(const std::vector<std::string>& paths, const FeatureRequest& request,
               const std::string& format, const std::string& out_path) {
  LoadedGestures input = LoadGestures(paths);
  std::vector<FeatureVector> vectors =
      ExtractBatch(input.gestures, request, ThreadBudget());

  FeatureTable table;
  if (!vectors.empty()) table.ids = vectors.front().ids;
  if (vectors.empty()) table.ids = request.Resolve();
  for (std::size_t i = 0; i < vectors.size(); ++i)
    table.rows.push_back({input.row_ids[i], vectors[i].values});

  if (format == "csv")
    EmitOutput(WriteCsv(table), out_path);
  else
    EmitOutput(WriteJson(table), out_path);
  return 0;
}

int CmdCatalog(const std::string& category) {
  bool filtered = !category.empty();
  FeatureCategory wanted = FeatureCategory::kSpace;
  if (filtered) wanted = ParseCategory(category);
  for (const FeatureDescriptor& d : Catalog()) {
    if (filtered && d.category != wanted) continue;
    std::printf("%-32s %-9s %-10s %c%c%c min=%zu\n", d.id.c_str(),
                d.set.c_str(), CategoryName(d.category),
                d.translation_invariant ? 'T' : '-',
                d.scale_invariant ? 'S' : '-',
                d.rotation_invariant ? 'R' : '-', d.min_samples);
  }
  return 0;
}

int CmdTrain(const std::vector<std::string>& paths, const FeatureRequest& request,
             bool request_given, const std::string& model_path) {
  LoadedGestures input = LoadGestures(paths);
  std::vector<std::pair<Gesture, std::string>> samples;
  for (std::size_t i = 0; i < input.gestures.size(); ++i)
    if (!input.labels[i].empty())
      samples.emplace_back(input.gestures[i], input.labels[i]);
  std::vector<std::string> ids =
      request_given ? request.Resolve() : DefaultClassifierFeatures();
  ClassifierModel model = TrainClassifier(samples, ids);
  SaveModel(model, model_path);
  return 0;
}

int CmdPredict(const std::vector<std::string>& paths,
               const std::string& model_path, const std::string& out_path) {
  ClassifierModel model = LoadModel(model_path);
  LoadedGestures input = LoadGestures(paths);
  Json report = Json::object();
  for (std::size_t i = 0; i < input.gestures.size(); ++i) {
    Prediction p = Predict(model, input.gestures[i]);
    Json entry = Json::object();
    entry["label"] = p.label;
    entry["margin"] = p.margin;
    entry["rejected"] = p.rejected;
    report[input.row_ids[i]] = std::move(entry);
  }
  EmitOutput(report.dump(2), out_path);
  return 0;
}

ClockAnnotation AnnotationFromFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("invalid annotations: ") + e.what());
  }
  ClockAnnotation ann;
  try {
    if (j.contains("clockface")) ann.clockface = j["clockface"].get<std::string>();
    if (j.contains("hour_hand")) ann.hour_hand = j["hour_hand"].get<std::string>();
    if (j.contains("minute_hand"))
      ann.minute_hand = j["minute_hand"].get<std::string>();
    if (j.contains("digits"))
      for (auto it = j["digits"].begin(); it != j["digits"].end(); ++it) {
        int digit = std::stoi(it.key());
        if (digit < 1 || digit > 12)
          throw Error(ErrorCode::kParseError,
                      "bad digit key '" + it.key() + "'");
        ann.digits[digit] = it.value().get<std::string>();
      }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("invalid annotations: ") + e.what());
  }
  return ann;
}

int CmdCdt(const std::string& path, const std::string& annotations_path,
           const std::string& out_path) {
  InkDocument doc = LoadDocument(path);
  ClockAnnotation ann = annotations_path.empty()
                            ? AnnotationFromLabels(doc)
                            : AnnotationFromFile(annotations_path);
  ClockFeatures features = ComputeClockFeatures(doc, ann);
  CdtScore score = ScoreCdt(features);

  Json report = Json::object();
  report["score"] = score.score;
  report["findings"] = score.findings;
  Json jf = Json::object();
  std::vector<FeatureValue> values = SemanticFeatures(features);
  std::vector<std::string> ids = SetIds("semantic");
  Json degenerate = Json::array();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    jf[ids[i]] = values[i].value;
    if (values[i].degenerate) degenerate.push_back(ids[i]);
  }
  report["features"] = std::move(jf);
  report["degenerate"] = std::move(degenerate);
  Json jd = Json::object();
  for (const auto& [digit, offset] : features.digit_offsets)
    jd[std::to_string(digit)] = offset;
  report["digit_offsets"] = std::move(jd);
  EmitOutput(report.dump(2), out_path);
  return 0;
}

int CmdSynth(const std::string& symbol_class, std::size_t n, std::uint64_t seed,
             double jitter, const std::string& out_path) {
  InkDocument doc;
  doc.version = 1;
  doc.test = "synthetic";
  for (std::size_t i = 0; i < n; ++i) {
    Gesture g = Synthesize(symbol_class, seed + i, jitter);
    doc.labels[g.id] = symbol_class;
    doc.gestures.push_back({std::move(g), std::nullopt});
  }
  EmitOutput(SerializeDocument(doc), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digital-ink feature extraction toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> paths;
  std::vector<std::string> sets;
  std::vector<std::string> features;
  std::vector<std::string> options;
  std::string format = "csv";
  std::string out_path;
  std::string category;
  std::string model_path;
  std::string annotations_path;
  std::string symbol_class;
  std::size_t synth_n = 1;
  std::uint64_t synth_seed = 0;
  double synth_jitter = 0.0;

  CLI::App* validate = app.add_subcommand("validate", "Parse and validate documents");
  validate->add_option("paths", paths, "Input documents")->required();

  CLI::App* extract = app.add_subcommand("extract", "Extract feature tables");
  extract->add_option("paths", paths, "Input documents")->required();
  extract->add_option("--set", sets, "Feature set (sonntag|rubine|willems|hbf49|all)")
      ->delimiter(',');
  extract->add_option("--features", features, "Explicit feature ids")->delimiter(',');
  extract->add_option("--format", format, "Output format (csv|json)")
      ->check(CLI::IsMember({"csv", "json"}));
  extract->add_option("--out", out_path, "Output file (default stdout)");
  extract->add_option("--option", options, "Extraction override key=value")
      ->delimiter(',');

  CLI::App* catalog = app.add_subcommand("catalog", "List the feature catalog");
  catalog->add_option("--category", category, "Filter by category");

  CLI::App* train = app.add_subcommand("train", "Train a linear classifier");
  train->add_option("paths", paths, "Labeled documents")->required();
  train->add_option("--model", model_path, "Model output file")->required();
  train->add_option("--set", sets, "Feature set")->delimiter(',');
  train->add_option("--features", features, "Explicit feature ids")->delimiter(',');

  CLI::App* predict = app.add_subcommand("predict", "Classify gestures");
  predict->add_option("paths", paths, "Input documents")->required();
  predict->add_option("--model", model_path, "Model file")->required();
  predict->add_option("--out", out_path, "Output file (default stdout)");

  CLI::App* cdt = app.add_subcommand("cdt", "Score a Clock Drawing Test document");
  cdt->add_option("path", paths, "Input document")->required()->expected(1);
  cdt->add_option("--annotations", annotations_path, "Role annotation file");
  cdt->add_option("--out", out_path, "Output file (default stdout)");

  CLI::App* synth = app.add_subcommand("synth", "Generate synthetic symbol documents");
  synth->add_option("--class", symbol_class, "Symbol class")->required();
  synth->add_option("--n", synth_n, "Gesture count");
  synth->add_option("--seed", synth_seed, "Base seed");
  synth->add_option("--jitter", synth_jitter, "Coordinate noise fraction");
  synth->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    FeatureRequest request;
    request.sets = sets;
    request.ids = features;
    for (const std::string& option : options) {
      std::size_t eq = option.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::kParseError,
                    "option '" + option + "' is not key=value");
      request.overrides[option.substr(0, eq)] = option.substr(eq + 1);
    }
    if (extract->parsed() && sets.empty() && features.empty())
      request.sets = {"all"};

    if (validate->parsed()) return CmdValidate(paths);
    if (extract->parsed()) return CmdExtract(paths, request, format, out_path);
    if (catalog->parsed()) return CmdCatalog(category);
    if (train->parsed())
      return CmdTrain(paths, request, !sets.empty() || !features.empty(),
                      model_path);
    if (predict->parsed()) return CmdPredict(paths, model_path, out_path);
    if (cdt->parsed()) return CmdCdt(paths[0], annotations_path, out_path);
    if (synth->parsed())
      return CmdSynth(symbol_class, synth_n, synth_seed, synth_jitter, out_path);
  } catch (const Error& e) {
    std::cerr << "inkfeat: " << e.what() << '\n';
    return e.code() == ErrorCode::kIoError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "inkfeat: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
