#include "vaacb/hypervolume.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vaacb {

namespace {

double slice_volume(std::vector<Point> pts, const Point& ref, std::size_t dims) {
  if (pts.empty()) return 0.0;
  if (dims == 1) {
    double best = ref[0];
    for (const Point& p : pts) best = std::min(best, p[0]);
    return ref[0] - best;
  }
  const std::size_t last = dims - 1;
  std::sort(pts.begin(), pts.end(), [last](const Point& a, const Point& b) { return a[last] < b[last]; });
  double volume = 0.0;
  std::vector<Point> active;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    active.push_back(pts[i]);
    const double upper = i + 1 < pts.size() ? pts[i + 1][last] : ref[last];
    const double depth = upper - pts[i][last];
    if (depth > 0.0) volume += depth * slice_volume(active, ref, last);
  }
  return volume;
}

}  // namespace

double hypervolume(std::span<const Point> front, const Point& ref) {
  for (const Point& p : front) {
    if (p.size() != ref.size()) throw std::invalid_argument("hypervolume point and reference differ in dimension");
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (!(p[m] <= ref[m])) throw std::invalid_argument("hypervolume point lies outside the reference box");
    }
  }
  if (ref.empty()) return 0.0;
  return slice_volume({front.begin(), front.end()}, ref, ref.size());
}

ObjectiveRange objective_range(std::span<const std::vector<Point>> fronts) {
  ObjectiveRange r;
  for (const auto& front : fronts) {
    for (const Point& p : front) {
      if (r.ideal.empty()) {
        r.ideal = p;
        r.nadir = p;
        continue;
      }
      for (std::size_t m = 0; m < p.size(); ++m) {
        r.ideal[m] = std::min(r.ideal[m], p[m]);
        r.nadir[m] = std::max(r.nadir[m], p[m]);
      }
    }
  }
  return r;
}

double normalized_hypervolume(std::span<const Point> front, const ObjectiveRange& range) {
  if (front.empty()) return 0.0;
  const std::size_t dims = range.ideal.size();
  std::vector<Point> scaled;
  for (const Point& p : front) {
    Point q(dims);
    for (std::size_t m = 0; m < dims; ++m) {
      const double span = range.nadir[m] - range.ideal[m];
      q[m] = span > 0.0 ? (p[m] - range.ideal[m]) / span : 0.0;
    }
    scaled.push_back(std::move(q));
  }
  return hypervolume(scaled, Point(dims, 1.1));
}

}  // namespace vaacb
