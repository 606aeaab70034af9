#include <doctest.h>

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "inkfeat/classifier.hpp"
#include "inkfeat/error.hpp"
#include "inkfeat/geometry.hpp"
#include "inkfeat/synth.hpp"

using namespace inkfeat;

namespace {

std::vector<std::pair<Gesture, std::string>> LinesAndCircles(int per_class) {
  std::vector<std::pair<Gesture, std::string>> out;
  for (int i = 0; i < per_class; ++i) {
    Gesture line = Synthesize("checkmark", static_cast<std::uint64_t>(i), 0.05);
    line.id = "line" + std::to_string(i);
    out.emplace_back(line, "check");
    Gesture circle =
        Synthesize("circle", static_cast<std::uint64_t>(i), 0.05);
    circle.id = "circle" + std::to_string(i);
    out.emplace_back(circle, "round");
  }
  return out;
}

}  // namespace

TEST_CASE("symbol class roster") {
  const std::vector<std::string>& classes = SymbolClasses();
  REQUIRE(classes.size() == 11);
  CHECK(classes.front() == "arrow");
  CHECK(classes[1] == "circle");
  CHECK(classes.back() == "send-symbol");
}

TEST_CASE("synthesis is deterministic") {
  Gesture a = Synthesize("circle", 42, 0.0);
  Gesture b = Synthesize("circle", 42, 0.0);
  REQUIRE(a.strokes.size() == b.strokes.size());
  REQUIRE(a.strokes[0].samples.size() == b.strokes[0].samples.size());
  for (std::size_t i = 0; i < a.strokes[0].samples.size(); ++i) {
    CHECK(a.strokes[0].samples[i].x == b.strokes[0].samples[i].x);
    CHECK(a.strokes[0].samples[i].y == b.strokes[0].samples[i].y);
    CHECK(a.strokes[0].samples[i].t == b.strokes[0].samples[i].t);
  }

  Gesture c = Synthesize("circle", 43, 0.05);
  Gesture d = Synthesize("circle", 42, 0.05);
  bool differs = false;
  for (std::size_t i = 0; i < d.strokes[0].samples.size(); ++i) {
    if (c.strokes[0].samples[i].x != d.strokes[0].samples[i].x) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("jitter-free circle template") {
  Gesture g = Synthesize("circle", 42, 0.0);
  REQUIRE(g.strokes.size() == 1);
  CHECK(g.strokes[0].samples.size() == 60);
  CHECK(geometry::CountCrossings(Flatten(g)) == 0);
  CHECK(g.id == "circle_42");

  SUBCASE("the star has at least five crossings") {
    Gesture star = Synthesize("pentagrams", 7, 0.0);
    CHECK(geometry::CountCrossings(Flatten(star)) >= 5);
    Gesture noisy = Synthesize("pentagrams", 7, 0.05);
    CHECK(geometry::CountCrossings(Flatten(noisy)) >= 5);
  }

  SUBCASE("the cube is multi-stroke") {
    CHECK(Synthesize("cube", 1, 0.0).strokes.size() > 1);
  }
}

TEST_CASE("synthesis argument validation") {
  try {
    Synthesize("blob", 1, 0.0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
  }
  CHECK_THROWS_AS(Synthesize("circle", 1, 0.5), Error);
  CHECK_THROWS_AS(Synthesize("circle", 1, -0.01), Error);
}

TEST_CASE("training separable classes reaches training accuracy 1") {
  std::vector<std::pair<Gesture, std::string>> samples = LinesAndCircles(50);
  ClassifierModel model =
      TrainClassifier(samples, DefaultClassifierFeatures());
  REQUIRE(model.classes.size() == 2);
  CHECK(model.classes[0].label == "check");  // sorted by label
  CHECK(model.classes[1].label == "round");

  int correct = 0;
  for (const auto& [g, label] : samples) {
    Prediction p = Predict(model, g);
    if (p.label == label) ++correct;
    CHECK_FALSE(p.rejected);
    CHECK(p.margin >= 0.0);
  }
  CHECK(correct == static_cast<int>(samples.size()));
}

TEST_CASE("degenerate training sets are rejected") {
  std::vector<std::pair<Gesture, std::string>> one_class;
  for (int i = 0; i < 5; ++i)
    one_class.emplace_back(Synthesize("circle", i, 0.05), "round");
  try {
    TrainClassifier(one_class, DefaultClassifierFeatures());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateTrainingSet);
  }

  SUBCASE("a single sample per class is insufficient") {
    std::vector<std::pair<Gesture, std::string>> tiny = {
        {Synthesize("circle", 1, 0.05), "round"},
        {Synthesize("checkmark", 1, 0.05), "check"},
    };
    CHECK_THROWS_AS(TrainClassifier(tiny, DefaultClassifierFeatures()), Error);
  }

  SUBCASE("identical samples across classes stay singular") {
    Gesture same = Synthesize("circle", 3, 0.0);
    std::vector<std::pair<Gesture, std::string>> clash = {
        {same, "a"}, {same, "a"}, {same, "b"}, {same, "b"}};
    CHECK_THROWS_AS(TrainClassifier(clash, DefaultClassifierFeatures()),
                    Error);
  }
}

TEST_CASE("constant features are dropped, not fatal") {
  // rubine.f13 (duration) is constant across synthetic gestures of one size;
  // pressure features are constant 0.5 by construction.
  std::vector<std::pair<Gesture, std::string>> samples = LinesAndCircles(10);
  std::vector<std::string> ids = {"willems.f22", "willems.f23", "rubine.f8",
                                  "hbf49.f8", "hbf49.f15"};
  ClassifierModel model = TrainClassifier(samples, ids);
  CHECK(model.features.size() < ids.size());  // constants removed
  for (const std::string& id : model.features) {
    CHECK(id != "willems.f22");
    CHECK(id != "willems.f23");
  }
  Prediction p = Predict(model, samples[0].first);
  CHECK_FALSE(p.label.empty());
}

TEST_CASE("outliers are rejected by distance") {
  std::vector<std::pair<Gesture, std::string>> samples = LinesAndCircles(40);
  ClassifierModel model =
      TrainClassifier(samples, DefaultClassifierFeatures());
  Gesture dot = testutil::OneStroke("dot", {{0, 0}, {0.001, 0}});
  Prediction p = Predict(model, dot);
  CHECK(p.rejected);
}

TEST_CASE("model serialization round-trips") {
  std::vector<std::pair<Gesture, std::string>> samples = LinesAndCircles(10);
  ClassifierModel model =
      TrainClassifier(samples, DefaultClassifierFeatures());
  std::string text = SerializeModel(model);
  ClassifierModel back = ParseModel(text);
  CHECK(back.features == model.features);
  REQUIRE(back.classes.size() == model.classes.size());
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    CHECK(back.classes[c].label == model.classes[c].label);
    CHECK(back.classes[c].bias == model.classes[c].bias);
    CHECK(back.classes[c].weights == model.classes[c].weights);
  }
  CHECK(back.reject_threshold == model.reject_threshold);
  CHECK(SerializeModel(back) == text);

  SUBCASE("prediction agrees after the round-trip") {
    for (int i = 0; i < 5; ++i) {
      Prediction a = Predict(model, samples[i].first);
      Prediction b = Predict(back, samples[i].first);
      CHECK(a.label == b.label);
      CHECK(a.rejected == b.rejected);
    }
  }

  SUBCASE("file wrappers") {
    std::string path = "test_model_roundtrip.json";
    SaveModel(model, path);
    ClassifierModel loaded = LoadModel(path);
    CHECK(SerializeModel(loaded) == text);
    std::remove(path.c_str());
    CHECK_THROWS_AS(LoadModel("/nonexistent/model.json"), Error);
  }
}

TEST_CASE("malformed models fail to parse") {
  CHECK_THROWS_AS(ParseModel("{"), Error);
  CHECK_THROWS_AS(ParseModel("{}"), Error);
  // weights shorter than the feature list
  std::string bad = R"({
    "features": ["rubine.f8", "rubine.f13"],
    "classes": [
      {"label": "a", "weights": [1.0], "bias": 0.0, "mean": [0.0, 0.0]},
      {"label": "b", "weights": [1.0, 2.0], "bias": 0.0, "mean": [0.0, 0.0]}
    ],
    "standardizer": {"mean": [0.0, 0.0], "sd": [1.0, 1.0]},
    "reject_threshold": 9.0
  })";
  try {
    ParseModel(bad);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
  }
}

TEST_CASE("ties break toward the lexicographically smallest label") {
  ClassifierModel model;
  model.features = {"rubine.f8"};
  model.standardizer_mean = {0.0};
  model.standardizer_sd = {1.0};
  model.reject_threshold = 1e12;
  model.classes.push_back({"alpha", {0.0}, 0.0, {0.0}});
  model.classes.push_back({"beta", {0.0}, 0.0, {0.0}});
  Prediction p = Predict(model, testutil::GLine());
  CHECK(p.label == "alpha");
  CHECK(p.margin == 0.0);
}

TEST_CASE("training is deterministic") {
  std::vector<std::pair<Gesture, std::string>> samples = LinesAndCircles(15);
  ClassifierModel a = TrainClassifier(samples, DefaultClassifierFeatures());
  ClassifierModel b = TrainClassifier(samples, DefaultClassifierFeatures());
  CHECK(SerializeModel(a) == SerializeModel(b));
}
