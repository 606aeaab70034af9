// Shared fixture builders and file utilities for the test suites.
#ifndef INKFEAT_TESTS_HELPERS_HPP
#define INKFEAT_TESTS_HELPERS_HPP

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "inkfeat/extract.hpp"
#include "inkfeat/ink.hpp"

namespace testutil {

inline inkfeat::Stroke MakeStroke(const std::vector<inkfeat::Point>& pts,
                                  double t0 = 0.0, double dt = 10.0,
                                  double p = 0.5) {
  inkfeat::Stroke s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s.samples.push_back(
        {pts[i].x, pts[i].y, p, t0 + dt * static_cast<double>(i)});
  }
  return s;
}

inline inkfeat::Gesture MakeGesture(std::string id,
                                    std::vector<inkfeat::Stroke> strokes) {
  inkfeat::Gesture g;
  g.id = std::move(id);
  g.strokes = std::move(strokes);
  return g;
}

inline inkfeat::Gesture OneStroke(std::string id,
                                  const std::vector<inkfeat::Point>& pts,
                                  double t0 = 0.0, double dt = 10.0,
                                  double p = 0.5) {
  return MakeGesture(std::move(id), {MakeStroke(pts, t0, dt, p)});
}

// The documented fixtures; must stay in sync with the committed shape file.
inline inkfeat::Gesture GSquare() {
  return OneStroke("g_square", {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
}

inline inkfeat::Gesture GLine() {
  return OneStroke("g_line", {{0, 0}, {1.5, 2}, {3, 4}}, 0.0, 50.0);
}

inline inkfeat::Gesture Circle64() {
  std::vector<inkfeat::Point> pts;
  for (int j = 0; j < 64; ++j) {
    double a = 2.0 * M_PI * static_cast<double>(j) / 64.0;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  return OneStroke("circle", pts);
}

inline inkfeat::Gesture XCross() {
  return MakeGesture("x_cross",
                     {MakeStroke({{0, 0}, {2, 2}}, 0.0, 20.0),
                      MakeStroke({{2, 0}, {0, 2}}, 30.0, 20.0)});
}

inline inkfeat::Gesture Zigzag() {
  return OneStroke("zigzag",
                   {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 0}, {3, 0}, {3, 1}});
}

inline inkfeat::Gesture LShape() {
  std::vector<inkfeat::Point> pts;
  for (int j = 0; j <= 9; ++j) pts.push_back({0.0, static_cast<double>(j)});
  for (int i = 1; i <= 9; ++i) pts.push_back({static_cast<double>(i), 9.0});
  return OneStroke("l_shape", pts);
}

inline inkfeat::Gesture VShape() {
  return OneStroke("v_shape", {{0, 0}, {0.5, 1}, {1, 2}, {1.5, 3}, {2, 4},
                               {2.5, 3}, {3, 2}, {3.5, 1}, {4, 0}});
}

inline inkfeat::Gesture WShape() {
  return OneStroke("w_shape", {{0, 0}, {0.5, 2}, {1, 4}, {1.5, 3}, {2, 2},
                               {2.5, 3}, {3, 4}, {3.5, 2}, {4, 0}});
}

inline inkfeat::Gesture Semicircle() {
  std::vector<inkfeat::Point> pts;
  for (int j = 0; j <= 32; ++j) {
    double a = M_PI * static_cast<double>(j) / 32.0;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  return OneStroke("semicircle", pts);
}

inline inkfeat::Gesture Parabola() {
  inkfeat::Stroke s;
  for (int j = 0; j <= 50; ++j) {
    double x = static_cast<double>(j) * static_cast<double>(j);
    s.samples.push_back({x, 0.0, 0.5, static_cast<double>(j)});
  }
  return MakeGesture("parabola", {s});
}

inline inkfeat::Gesture UniformLine() {
  std::vector<inkfeat::Point> pts;
  for (int j = 0; j <= 20; ++j) pts.push_back({static_cast<double>(j), 0.0});
  return OneStroke("uniform_line", pts);
}

inline inkfeat::Gesture UnitSquareCorners() {
  return OneStroke("unit_square_corners", {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline inkfeat::Gesture RightwardLine() {
  return OneStroke("rightward_line", {{0, 0}, {1, 0}, {2, 0}});
}

inline inkfeat::Gesture Collinear7() {
  std::vector<inkfeat::Point> pts;
  for (int j = 0; j <= 6; ++j) pts.push_back({static_cast<double>(j), 0.0});
  return OneStroke("collinear7", pts);
}

inline inkfeat::Gesture Star() {
  std::vector<inkfeat::Point> pts;
  for (int k = 0; k < 5; ++k) {
    double a = -M_PI / 2.0 + static_cast<double>(k) * (4.0 * M_PI / 5.0);
    pts.push_back({50.0 + 40.0 * std::cos(a), 50.0 + 40.0 * std::sin(a)});
  }
  pts.push_back({pts[4].x + 0.99 * (pts[0].x - pts[4].x),
                 pts[4].y + 0.99 * (pts[0].y - pts[4].y)});
  return OneStroke("star", pts);
}

inline std::string SourcePath(const std::string& rel) {
  return std::string(INKFEAT_SOURCE_DIR) + "/" + rel;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline inkfeat::FeatureValue ExtractOne(const inkfeat::Gesture& g,
                                        const std::string& id) {
  inkfeat::FeatureRequest req;
  req.ids = {id};
  inkfeat::FeatureVector v = inkfeat::Extract(g, req);
  return v.values.at(0);
}

inline double Value(const inkfeat::Gesture& g, const std::string& id) {
  return ExtractOne(g, id).value;
}

}  // namespace testutil

#endif  // INKFEAT_TESTS_HELPERS_HPP
