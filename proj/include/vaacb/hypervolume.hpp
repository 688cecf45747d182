#pragma once

#include <span>
#include <vector>

namespace vaacb {

using Point = std::vector<double>;

/// Lebesgue measure of the region dominated by `front` and bounded by `ref`
/// (minimization), computed exactly by slicing along the last objective.
/// Throws std::invalid_argument when a point exceeds the reference point in
/// any coordinate or dimensions disagree.
double hypervolume(std::span<const Point> front, const Point& ref);

/// Per-objective ideal (minimum) and nadir (maximum) over several fronts.
struct ObjectiveRange {
  Point ideal;
  Point nadir;
};
ObjectiveRange objective_range(std::span<const std::vector<Point>> fronts);

/// Hypervolume after mapping each objective to [0,1] over `range`, with the
/// reference point at 1.1 in every coordinate.
double normalized_hypervolume(std::span<const Point> front, const ObjectiveRange& range);

}  // namespace vaacb
