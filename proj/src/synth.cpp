#include "inkfeat/synth.hpp"

#include <cmath>
#include <random>

#include "inkfeat/error.hpp"

namespace inkfeat {

namespace {

using Polyline = std::vector<Point>;

struct Template {
  const char* name;
  std::vector<Polyline> strokes;
};

std::vector<Point> Circle(Point c, double r, int segments, double start) {
  std::vector<Point> out;
  for (int i = 0; i <= segments; ++i) {
    // Stop a hair short of full closure so the closing segment never touches
    // the opening one (touching counts as a crossing).
    double f = i == segments ? static_cast<double>(segments) - 0.01
                             : static_cast<double>(i);
    double a = start + 2.0 * M_PI * f / segments;
    out.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return out;
}

std::vector<Point> Star(Point c, double r) {
  std::vector<Point> out;
  for (int k = 0; k <= 5; ++k) {
    double a = -M_PI / 2.0 + k * (4.0 * M_PI / 5.0);
    out.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return out;
}

const std::vector<Template>& Templates() {
  static const std::vector<Template>* templates = [] {
    auto* t = new std::vector<Template>{
        {"arrow",
         {{{10, 70}, {80, 20}}, {{58, 14}, {80, 20}, {74, 42}}}},
        {"circle", {Circle({50, 50}, 40, 48, -M_PI / 2.0)}},
        {"rectangle",
         {{{15, 30}, {85, 30}, {85, 75}, {15, 75}, {15, 30}}}},
        {"triangle", {{{50, 15}, {85, 80}, {15, 80}, {50, 15}}}},
        {"diamond",
         {{{50, 10}, {88, 50}, {50, 90}, {12, 50}, {50, 10}}}},
        {"overlapping-rectangles",
         {{{15, 25}, {60, 25}, {60, 65}, {15, 65}, {15, 25}},
          {{40, 40}, {85, 40}, {85, 80}, {40, 80}, {40, 40}}}},
        {"cube",
         {{{20, 35}, {65, 35}, {65, 80}, {20, 80}, {20, 35}},
          {{35, 20}, {80, 20}, {80, 65}, {35, 65}, {35, 20}},
          {{20, 35}, {35, 20}},
          {{65, 35}, {80, 20}},
          {{65, 80}, {80, 65}},
          {{20, 80}, {35, 65}}}},
        {"pentagrams", {Star({50, 50}, 40)}},
        {"checkmark", {{{20, 55}, {40, 80}, {85, 20}}}},
        {"checkmarks",
         {{{10, 50}, {25, 70}, {45, 25}}, {{55, 50}, {70, 70}, {90, 25}}}},
        {"send-symbol",
         {{{10, 20}, {90, 50}, {10, 80}, {28, 50}, {10, 20}}}},
    };
    return t;
  }();
  return *templates;
}

double PolylineLength(const Polyline& pts) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double dx = pts[i + 1].x - pts[i].x;
    double dy = pts[i + 1].y - pts[i].y;
    total += std::sqrt(dx * dx + dy * dy);
  }
  return total;
}

Polyline ResamplePolyline(const Polyline& pts, std::size_t m) {
  double total = PolylineLength(pts);
  Polyline out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    double target = total * static_cast<double>(i) / static_cast<double>(m - 1);
    double walked = 0.0;
    Point p = pts.back();
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      double dx = pts[s + 1].x - pts[s].x;
      double dy = pts[s + 1].y - pts[s].y;
      double len = std::sqrt(dx * dx + dy * dy);
      if (walked + len >= target || s + 2 == pts.size()) {
        double f = len > 0.0 ? (target - walked) / len : 0.0;
        if (f < 0.0) f = 0.0;
        if (f > 1.0) f = 1.0;
        p = {pts[s].x + f * dx, pts[s].y + f * dy};
        break;
      }
      walked += len;
    }
    out.push_back(p);
  }
  return out;
}

// 53-bit uniforms feeding a Box-Muller pair, platform-stable.
class Gaussian {
 public:
  explicit Gaussian(std::mt19937_64& rng) : rng_(rng) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = (static_cast<double>(rng_() >> 11) + 1.0) *
                (1.0 / 9007199254740992.0);
    double u2 = static_cast<double>(rng_() >> 11) * (1.0 / 9007199254740992.0);
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64& rng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

const std::vector<std::string>& SymbolClasses() {
  static const std::vector<std::string>* names = [] {
    auto* v = new std::vector<std::string>();
    for (const Template& t : Templates()) v->push_back(t.name);
    return v;
  }();
  return *names;
}

Gesture Synthesize(const std::string& symbol_class, std::uint64_t seed,
                   double jitter) {
  if (!(jitter >= 0.0 && jitter <= 0.2))
    throw Error(ErrorCode::kParseError, "jitter must be in [0, 0.2]");
  const std::vector<Template>& templates = Templates();
  std::size_t index = templates.size();
  for (std::size_t i = 0; i < templates.size(); ++i)
    if (symbol_class == templates[i].name) index = i;
  if (index == templates.size())
    throw Error(ErrorCode::kParseError, "unknown class '" + symbol_class + "'");
  const Template& tpl = templates[index];

  double xmin = tpl.strokes[0][0].x, xmax = xmin;
  double ymin = tpl.strokes[0][0].y, ymax = ymin;
  double total = 0.0;
  for (const Polyline& s : tpl.strokes) {
    total += PolylineLength(s);
    for (const Point& p : s) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  double diag = std::sqrt((xmax - xmin) * (xmax - xmin) +
                          (ymax - ymin) * (ymax - ymin));
  double sigma = jitter * diag;

  std::seed_seq seq{static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  Gaussian gauss(rng);

  Gesture g;
  g.id = symbol_class + "_" + std::to_string(seed);
  std::size_t tick = 0;
  for (const Polyline& stroke_template : tpl.strokes) {
    std::size_t m = 2;
    if (total > 0.0) {
      double share = 60.0 * PolylineLength(stroke_template) / total;
      m = std::max<std::size_t>(2, static_cast<std::size_t>(share + 0.5));
    }
    Polyline pts = ResamplePolyline(stroke_template, m);
    Stroke stroke;
    for (const Point& p : pts) {
      Sample s;
      s.x = p.x + sigma * gauss();
      s.y = p.y + sigma * gauss();
      s.p = 0.5;
      s.t = 5.0 * static_cast<double>(tick++);
      stroke.samples.push_back(s);
    }
    g.strokes.push_back(std::move(stroke));
  }
  return g;
}

}  // namespace inkfeat
