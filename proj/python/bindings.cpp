#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "inkfeat/catalog.hpp"
#include "inkfeat/cdt.hpp"
#include "inkfeat/classifier.hpp"
#include "inkfeat/document.hpp"
#include "inkfeat/error.hpp"
#include "inkfeat/extract.hpp"
#include "inkfeat/synth.hpp"
#include "inkfeat/table.hpp"

namespace py = pybind11;
using namespace inkfeat;

namespace {

Gesture MakeGesture(
    const std::string& id,
    const std::vector<std::vector<std::array<double, 4>>>& strokes) {
  Gesture g;
  g.id = id;
  for (const auto& stroke : strokes) {
    Stroke s;
    for (const auto& p : stroke) s.samples.push_back({p[0], p[1], p[2], p[3]});
    g.strokes.push_back(std::move(s));
  }
  return g;
}

FeatureRequest MakeRequest(const std::vector<std::string>& sets,
                           const std::vector<std::string>& features,
                           const std::map<std::string, std::string>& options) {
  FeatureRequest request;
  request.sets = sets;
  request.ids = features;
  request.overrides = options;
  if (request.sets.empty() && request.ids.empty()) request.sets = {"all"};
  return request;
}

}  // namespace

PYBIND11_MODULE(_inkfeat, m) {
  m.doc() = "Digital-ink feature extraction core";

  py::register_exception<Error>(m, "InkError");

  py::class_<Sample>(m, "Sample")
      .def(py::init<>())
      .def(py::init([](double x, double y, double p, double t) {
             return Sample{x, y, p, t};
           }),
           py::arg("x"), py::arg("y"), py::arg("p") = 0.5, py::arg("t") = 0.0)
      .def_readwrite("x", &Sample::x)
      .def_readwrite("y", &Sample::y)
      .def_readwrite("p", &Sample::p)
      .def_readwrite("t", &Sample::t);

  py::class_<Stroke>(m, "Stroke")
      .def(py::init<>())
      .def_readwrite("samples", &Stroke::samples);

  py::class_<Gesture>(m, "Gesture")
      .def(py::init<>())
      .def_readwrite("id", &Gesture::id)
      .def_readwrite("strokes", &Gesture::strokes)
      .def("sample_count", &Gesture::sample_count);

  py::class_<FeatureValue>(m, "FeatureValue")
      .def_readonly("value", &FeatureValue::value)
      .def_readonly("degenerate", &FeatureValue::degenerate)
      .def("__repr__", [](const FeatureValue& v) {
        return "FeatureValue(" + std::to_string(v.value) +
               (v.degenerate ? ", degenerate)" : ")");
      });

  m.def("gesture", &MakeGesture, py::arg("id"), py::arg("strokes"),
        "Build a gesture from nested [x, y, p, t] lists");

  m.def("validate", &Validate, py::arg("gesture"));

  m.def(
      "catalog",
      [] {
        py::list out;
        for (const FeatureDescriptor& d : Catalog()) {
          py::dict row;
          row["id"] = d.id;
          row["set"] = d.set;
          row["category"] = CategoryName(d.category);
          row["translation_invariant"] = d.translation_invariant;
          row["scale_invariant"] = d.scale_invariant;
          row["rotation_invariant"] = d.rotation_invariant;
          row["min_samples"] = d.min_samples;
          out.append(std::move(row));
        }
        return out;
      },
      "Full feature catalog in canonical order");

  m.def(
      "extract",
      [](const Gesture& g, const std::vector<std::string>& sets,
         const std::vector<std::string>& features,
         const std::map<std::string, std::string>& options) {
        FeatureVector fv = Extract(g, MakeRequest(sets, features, options));
        py::dict out;
        for (std::size_t i = 0; i < fv.ids.size(); ++i)
          out[py::str(fv.ids[i])] = fv.values[i];
        return out;
      },
      py::arg("gesture"), py::arg("sets") = std::vector<std::string>{},
      py::arg("features") = std::vector<std::string>{},
      py::arg("options") = std::map<std::string, std::string>{},
      "Extract features; defaults to all syntactic sets");

  m.def(
      "extract_csv",
      [](const std::string& document_text, const std::vector<std::string>& sets,
         const std::vector<std::string>& features,
         const std::map<std::string, std::string>& options) {
        InkDocument doc = ParseDocument(document_text);
        FeatureRequest request = MakeRequest(sets, features, options);
        std::vector<Gesture> gestures;
        for (const DocumentGesture& g : doc.gestures)
          gestures.push_back(g.gesture);
        std::vector<FeatureVector> vectors = ExtractBatch(gestures, request, 1);
        FeatureTable table;
        if (!vectors.empty()) table.ids = vectors.front().ids;
        for (std::size_t i = 0; i < vectors.size(); ++i)
          table.rows.push_back({gestures[i].id, vectors[i].values});
        return WriteCsv(table);
      },
      py::arg("document_text"), py::arg("sets") = std::vector<std::string>{},
      py::arg("features") = std::vector<std::string>{},
      py::arg("options") = std::map<std::string, std::string>{},
      "Extract a CSV feature table from a serialized document");

  py::class_<Region>(m, "Region")
      .def_readonly("id", &Region::id)
      .def_readonly("role", &Region::role);

  py::class_<DocumentGesture>(m, "DocumentGesture")
      .def_readonly("gesture", &DocumentGesture::gesture)
      .def_readonly("region", &DocumentGesture::region);

  py::class_<InkDocument>(m, "InkDocument")
      .def(py::init<>())
      .def_readwrite("version", &InkDocument::version)
      .def_readwrite("test", &InkDocument::test)
      .def_readonly("regions", &InkDocument::regions)
      .def_readwrite("gestures", &InkDocument::gestures)
      .def_readwrite("labels", &InkDocument::labels);

  m.def("parse_document", &ParseDocument, py::arg("text"));
  m.def("serialize_document", &SerializeDocument, py::arg("document"));

  m.def("symbol_classes", [] { return SymbolClasses(); });
  m.def("synthesize", &Synthesize, py::arg("symbol_class"), py::arg("seed"),
        py::arg("jitter") = 0.0);

  py::class_<ClassifierModel>(m, "ClassifierModel")
      .def_readonly("features", &ClassifierModel::features)
      .def_readonly("reject_threshold", &ClassifierModel::reject_threshold);

  m.def(
      "train",
      [](const std::vector<std::pair<Gesture, std::string>>& samples,
         const std::vector<std::string>& features) {
        return TrainClassifier(
            samples, features.empty() ? DefaultClassifierFeatures() : features);
      },
      py::arg("samples"), py::arg("features") = std::vector<std::string>{});

  m.def(
      "predict",
      [](const ClassifierModel& model, const Gesture& g) {
        Prediction p = Predict(model, g);
        return py::make_tuple(p.label, p.margin, p.rejected);
      },
      py::arg("model"), py::arg("gesture"),
      "Returns (label, margin, rejected)");

  m.def("serialize_model", &SerializeModel, py::arg("model"));
  m.def("parse_model", &ParseModel, py::arg("text"));

  m.def(
      "cdt_report",
      [](const std::string& document_text) {
        InkDocument doc = ParseDocument(document_text);
        ClockFeatures features = ComputeClockFeatures(doc, AnnotationFromLabels(doc));
        CdtScore score = ScoreCdt(features);
        py::dict out;
        out["score"] = score.score;
        out["findings"] = score.findings;
        py::dict jf;
        std::vector<FeatureValue> values = SemanticFeatures(features);
        std::vector<std::string> ids = SetIds("semantic");
        for (std::size_t i = 0; i < ids.size(); ++i)
          jf[py::str(ids[i])] = values[i];
        out["features"] = std::move(jf);
        return out;
      },
      py::arg("document_text"),
      "Clock Drawing Test score and semantic features for a labeled document");
}
