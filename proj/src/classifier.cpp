#include "inkfeat/classifier.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

#include "inkfeat/error.hpp"
#include "inkfeat/extract.hpp"

namespace inkfeat {

namespace {

using Json = nlohmann::ordered_json;

// 99th-percentile chi-square quantile, Wilson-Hilferty approximation.
double ChiSquare99(std::size_t dim) {
  double d = static_cast<double>(dim);
  double z = 2.3263478740408408;
  double x = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
  return d * (x * x) * x;
}

std::vector<double> RawFeatures(const Gesture& gesture,
                                const std::vector<std::string>& ids) {
  FeatureRequest request;
  request.ids = ids;
  FeatureVector fv = Extract(gesture, request);
  std::vector<double> out;
  out.reserve(fv.values.size());
  for (const FeatureValue& v : fv.values) out.push_back(v.value);
  return out;
}

}  // namespace

std::vector<std::string> DefaultClassifierFeatures() {
  FeatureRequest request;
  request.sets = {"rubine", "hbf49"};
  return request.Resolve();
}

ClassifierModel TrainClassifier(
    const std::vector<std::pair<Gesture, std::string>>& samples,
    const std::vector<std::string>& feature_ids) {
  FeatureRequest request;
  request.ids = feature_ids;
  std::vector<std::string> resolved = request.Resolve();

  std::map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < samples.size(); ++i)
    by_label[samples[i].second].push_back(i);
  if (by_label.size() < 2)
    throw Error(ErrorCode::kDegenerateTrainingSet,
                "need at least 2 classes, got " +
                    std::to_string(by_label.size()));
  for (const auto& [label, rows] : by_label)
    if (rows.size() < 2)
      throw Error(ErrorCode::kDegenerateTrainingSet,
                  "class '" + label + "' has fewer than 2 samples");

  std::vector<std::vector<double>> raw;
  raw.reserve(samples.size());
  for (const auto& [gesture, label] : samples)
    raw.push_back(RawFeatures(gesture, resolved));

  std::size_t n = raw.size();
  std::size_t all_dim = resolved.size();
  std::vector<double> mean(all_dim, 0.0), sd(all_dim, 0.0);
  for (const auto& row : raw)
    for (std::size_t j = 0; j < all_dim; ++j) mean[j] += row[j];
  for (std::size_t j = 0; j < all_dim; ++j) mean[j] /= static_cast<double>(n);
  for (const auto& row : raw)
    for (std::size_t j = 0; j < all_dim; ++j) {
      double d = row[j] - mean[j];
      sd[j] += d * d;
    }
  for (std::size_t j = 0; j < all_dim; ++j)
    sd[j] = std::sqrt(sd[j] / static_cast<double>(n));

  ClassifierModel model;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < all_dim; ++j)
    if (sd[j] > 0.0) {
      kept.push_back(j);
      model.features.push_back(resolved[j]);
      model.standardizer_mean.push_back(mean[j]);
      model.standardizer_sd.push_back(sd[j]);
    }
  std::size_t dim = kept.size();
  if (dim == 0)
    throw Error(ErrorCode::kDegenerateTrainingSet, "all features constant");

  Eigen::MatrixXd z(n, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      z(i, j) = (raw[i][kept[j]] - model.standardizer_mean[j]) /
                model.standardizer_sd[j];

  std::size_t n_classes = by_label.size();
  Eigen::MatrixXd pooled = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<Eigen::VectorXd> class_means;
  for (const auto& [label, rows] : by_label) {
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(dim);
    for (std::size_t i : rows) mu += z.row(i).transpose();
    mu /= static_cast<double>(rows.size());
    for (std::size_t i : rows) {
      Eigen::VectorXd d = z.row(i).transpose() - mu;
      pooled += d * d.transpose();
    }
    class_means.push_back(std::move(mu));
  }
  pooled /= static_cast<double>(n - n_classes);
  double ridge = 1e-6 * pooled.trace() / static_cast<double>(dim);
  pooled += ridge * Eigen::MatrixXd::Identity(dim, dim);

  Eigen::LLT<Eigen::MatrixXd> llt(pooled);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::kDegenerateTrainingSet,
                "pooled covariance is singular");

  std::size_t c = 0;
  for (const auto& [label, rows] : by_label) {
    const Eigen::VectorXd& mu = class_means[c++];
    Eigen::VectorXd w = llt.solve(mu);
    ClassifierModel::ClassDiscriminant disc;
    disc.label = label;
    disc.weights.assign(w.data(), w.data() + dim);
    disc.bias = -0.5 * mu.dot(w);
    disc.mean.assign(mu.data(), mu.data() + dim);
    model.classes.push_back(std::move(disc));
  }
  model.reject_threshold = ChiSquare99(dim);
  return model;
}

Prediction Predict(const ClassifierModel& model, const Gesture& gesture) {
  std::vector<double> raw = RawFeatures(gesture, model.features);
  std::size_t dim = model.features.size();
  std::vector<double> z(dim);
  for (std::size_t j = 0; j < dim; ++j)
    z[j] = (raw[j] - model.standardizer_mean[j]) / model.standardizer_sd[j];

  std::size_t best = 0;
  double best_score = 0.0, second_score = 0.0;
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    const auto& disc = model.classes[c];
    double score = disc.bias;
    for (std::size_t j = 0; j < dim; ++j) score += disc.weights[j] * z[j];
    if (c == 0 || score > best_score) {
      if (c != 0) second_score = best_score;
      best = c;
      best_score = score;
    } else if (c == 1 || score > second_score) {
      second_score = score;
    }
  }

  double dist = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    double d = z[j] - model.classes[best].mean[j];
    dist += d * d;
  }

  Prediction out;
  out.label = model.classes[best].label;
  out.margin = best_score - second_score;
  out.rejected = dist > model.reject_threshold;
  return out;
}

std::string SerializeModel(const ClassifierModel& model) {
  Json j = Json::object();
  j["features"] = model.features;
  j["classes"] = Json::array();
  for (const auto& disc : model.classes) {
    Json jc = Json::object();
    jc["label"] = disc.label;
    jc["weights"] = disc.weights;
    jc["bias"] = disc.bias;
    jc["mean"] = disc.mean;
    j["classes"].push_back(std::move(jc));
  }
  j["standardizer"] = Json::object();
  j["standardizer"]["mean"] = model.standardizer_mean;
  j["standardizer"]["sd"] = model.standardizer_sd;
  j["reject_threshold"] = model.reject_threshold;
  return j.dump(2);
}

ClassifierModel ParseModel(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  ClassifierModel model;
  try {
    model.features = j.at("features").get<std::vector<std::string>>();
    for (const auto& jc : j.at("classes")) {
      ClassifierModel::ClassDiscriminant disc;
      disc.label = jc.at("label").get<std::string>();
      disc.weights = jc.at("weights").get<std::vector<double>>();
      disc.bias = jc.at("bias").get<double>();
      disc.mean = jc.at("mean").get<std::vector<double>>();
      model.classes.push_back(std::move(disc));
    }
    model.standardizer_mean =
        j.at("standardizer").at("mean").get<std::vector<double>>();
    model.standardizer_sd =
        j.at("standardizer").at("sd").get<std::vector<double>>();
    model.reject_threshold = j.at("reject_threshold").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad model: ") + e.what());
  }
  std::size_t dim = model.features.size();
  if (model.classes.size() < 2 || model.standardizer_mean.size() != dim ||
      model.standardizer_sd.size() != dim)
    throw Error(ErrorCode::kParseError, "bad model: inconsistent dimensions");
  for (const auto& disc : model.classes)
    if (disc.weights.size() != dim || disc.mean.size() != dim)
      throw Error(ErrorCode::kParseError, "bad model: inconsistent dimensions");
  return model;
}

ClassifierModel LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read '" + path + "'");
  return ParseModel(buf.str());
}

void SaveModel(const ClassifierModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  out << SerializeModel(model);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
}

}  // namespace inkfeat
