#include "inkfeat/extract.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "inkfeat/error.hpp"
#include "sets.hpp"

namespace inkfeat {

namespace {

std::size_t ParseSizeOverride(const std::string& key, const std::string& value,
                              std::size_t minimum) {
  std::size_t pos = 0;
  unsigned long parsed = 0;
  try {
    parsed = std::stoul(value, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError,
                "override " + key + "=" + value + " is not an integer");
  }
  if (pos != value.size() || parsed < minimum) {
    throw Error(ErrorCode::kParseError, "override " + key + "=" + value +
                                            " must be an integer >= " +
                                            std::to_string(minimum));
  }
  return static_cast<std::size_t>(parsed);
}

double ParseDoubleOverride(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError,
                "override " + key + "=" + value + " is not a number");
  }
  if (pos != value.size() || !std::isfinite(parsed)) {
    throw Error(ErrorCode::kParseError,
                "override " + key + "=" + value + " is not a finite number");
  }
  return parsed;
}

const std::size_t& SetOffset(const std::string& set) {
  static const auto* offsets = [] {
    auto* m = new std::map<std::string, std::size_t>();
    const auto& cat = Catalog();
    for (std::size_t i = 0; i < cat.size(); ++i) m->emplace(cat[i].set, i);
    return m;
  }();
  return offsets->at(set);
}

}  // namespace

std::vector<std::string> FeatureRequest::Resolve() const {
  const auto& cat = Catalog();
  std::vector<bool> selected(cat.size(), false);
  for (const std::string& set_name : sets) {
    if (set_name == "semantic") {
      throw Error(ErrorCode::kUnknownSet,
                  "semantic features require document annotations and are "
                  "not extractable from a bare gesture");
    }
    for (const std::string& id : SetIds(set_name)) {
      selected[CatalogIndex(id)] = true;
    }
  }
  for (const std::string& id : ids) {
    std::size_t idx = CatalogIndex(id);
    if (cat[idx].set == "semantic") {
      throw Error(ErrorCode::kUnknownFeatureId,
                  "'" + id + "' requires document annotations");
    }
    selected[idx] = true;
  }
  std::vector<std::string> resolved;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (selected[i]) resolved.push_back(cat[i].id);
  }
  return resolved;
}

ExtractParams FeatureRequest::Params() const {
  ExtractParams p;
  for (const auto& [key, value] : overrides) {
    if (key == "k") {
      p.k = ParseSizeOverride(key, value, 1);
    } else if (key == "window") {
      p.window = ParseSizeOverride(key, value, 3);
    } else if (key == "threshold") {
      double v = ParseDoubleOverride(key, value);
      if (v < 0.0) {
        throw Error(ErrorCode::kParseError,
                    "override threshold must be non-negative");
      }
      p.threshold = v;
    } else if (key == "epsilon") {
      p.epsilon = ParseDoubleOverride(key, value);
    } else if (key == "willems.chaincode") {
      if (value == "literal") {
        p.chaincode_literal = true;
      } else if (value == "weighted") {
        p.chaincode_literal = false;
      } else {
        throw Error(ErrorCode::kParseError,
                    "override willems.chaincode must be weighted or literal");
      }
    } else if (key == "hbf49.f13") {
      if (value == "literal") {
        p.hbf13_literal = true;
      } else if (value == "proportion") {
        p.hbf13_literal = false;
      } else {
        throw Error(ErrorCode::kParseError,
                    "override hbf49.f13 must be proportion or literal");
      }
    } else {
      throw Error(ErrorCode::kParseError, "unknown override '" + key + "'");
    }
  }
  return p;
}

FeatureVector Extract(const Gesture& gesture, const FeatureRequest& request) {
  Validate(gesture);
  std::vector<std::string> ids = request.Resolve();
  ExtractParams params = request.Params();
  detail::GestureContext ctx(gesture, params);
  const auto& cat = Catalog();

  std::map<std::string, std::vector<FeatureValue>> computed;
  auto values_for =
      [&](const std::string& set) -> const std::vector<FeatureValue>& {
    auto it = computed.find(set);
    if (it == computed.end()) {
      std::vector<FeatureValue> v;
      if (set == "sonntag") {
        v = detail::ComputeSonntag(ctx);
      } else if (set == "rubine") {
        v = detail::ComputeRubine(ctx);
      } else if (set == "willems") {
        v = detail::ComputeWillems(ctx);
      } else {
        v = detail::ComputeHbf49(ctx);
      }
      it = computed.emplace(set, std::move(v)).first;
    }
    return it->second;
  };

  FeatureVector out;
  out.ids = std::move(ids);
  out.values.reserve(out.ids.size());
  const std::size_t n = ctx.n();
  for (const std::string& id : out.ids) {
    std::size_t idx = CatalogIndex(id);
    const FeatureDescriptor& d = cat[idx];
    if (n < d.min_samples) {
      out.values.push_back({0.0, true});
      continue;
    }
    out.values.push_back(values_for(d.set)[idx - SetOffset(d.set)]);
  }
  return out;
}

std::vector<FeatureVector> ExtractBatch(const std::vector<Gesture>& gestures,
                                        const FeatureRequest& request,
                                        std::size_t threads) {
  std::vector<FeatureVector> results(gestures.size());
  if (gestures.empty()) return results;
  std::size_t workers = std::min(threads, gestures.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < gestures.size(); ++i) {
      results[i] = Extract(gestures[i], request);
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < gestures.size();
             i = next.fetch_add(1)) {
          results[i] = Extract(gestures[i], request);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

InvarianceReport AuditInvarianceFlags(const std::vector<Gesture>& probes,
                                      unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> offset_dist(-100.0, 100.0);
  std::uniform_real_distribution<double> scale_dist(0.1, 10.0);
  std::uniform_real_distribution<double> angle_dist(0.0, 2.0 * M_PI);

  FeatureRequest request;
  request.sets = {"all"};

  InvarianceReport report;
  for (const Gesture& g : probes) {
    FeatureVector base = Extract(g, request);
    double dx = offset_dist(rng);
    double dy = offset_dist(rng);
    double scale = scale_dist(rng);
    double angle = angle_dist(rng);

    struct Variant {
      const char* name;
      Gesture gesture;
      double tolerance;
    };
    Variant variants[3] = {
        {"translation", Transformed(g, 1.0, 0.0, dx, dy),
         kTranslationTolerance},
        {"scale", Transformed(g, scale, 0.0, 0.0, 0.0), kScaleTolerance},
        {"rotation", Transformed(g, 1.0, angle, 0.0, 0.0),
         kRotationTolerance},
    };
    for (const Variant& variant : variants) {
      FeatureVector after = Extract(variant.gesture, request);
      for (std::size_t i = 0; i < base.ids.size(); ++i) {
        const FeatureDescriptor& d = Describe(base.ids[i]);
        bool flagged = variant.name[0] == 't'   ? d.translation_invariant
                       : variant.name[0] == 's' ? d.scale_invariant
                                                : d.rotation_invariant;
        if (!flagged) continue;
        double a = base.values[i].value;
        double b = after.values[i].value;
        double bound =
            variant.tolerance * std::max({1.0, std::fabs(a), std::fabs(b)});
        ++report.checks;
        if (std::fabs(a - b) > bound) {
          report.violations.push_back({base.ids[i], variant.name, g.id, a, b});
        }
      }
    }
  }
  return report;
}

}  // namespace inkfeat
