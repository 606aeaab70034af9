#ifndef INKFEAT_CLASSIFIER_HPP
#define INKFEAT_CLASSIFIER_HPP

#include <string>
#include <utility>
#include <vector>

#include "inkfeat/ink.hpp"

namespace inkfeat {

// Linear discriminant model over standardized feature vectors. Constant
// features are dropped at training time; `features` lists only the kept ids.
struct ClassifierModel {
  struct ClassDiscriminant {
    std::string label;
    std::vector<double> weights;
    double bias = 0.0;
    std::vector<double> mean;  // standardized class mean
  };

  std::vector<std::string> features;
  std::vector<ClassDiscriminant> classes;  // sorted by label
  std::vector<double> standardizer_mean;
  std::vector<double> standardizer_sd;
  double reject_threshold = 0.0;  // squared-distance cutoff
};

struct Prediction {
  std::string label;
  double margin = 0.0;  // best minus second-best discriminant score
  bool rejected = false;
};

// Default classification features: the rubine and hbf49 sets.
std::vector<std::string> DefaultClassifierFeatures();

// Gaussian LDA with pooled, ridge-regularized covariance. Requires at least
// two classes and two samples per class; throws kDegenerateTrainingSet
// otherwise or when the pooled covariance stays singular after the ridge.
ClassifierModel TrainClassifier(
    const std::vector<std::pair<Gesture, std::string>>& samples,
    const std::vector<std::string>& feature_ids);

// Argmax of the discriminants, ties broken toward the lexicographically
// smallest label. `rejected` is set when the squared distance to the winning
// class mean (standardized space) exceeds the model threshold.
Prediction Predict(const ClassifierModel& model, const Gesture& gesture);

std::string SerializeModel(const ClassifierModel& model);
ClassifierModel ParseModel(const std::string& text);
ClassifierModel LoadModel(const std::string& path);
void SaveModel(const ClassifierModel& model, const std::string& path);

}  // namespace inkfeat

#endif  // INKFEAT_CLASSIFIER_HPP
