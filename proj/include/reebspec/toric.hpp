#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reebspec/exact_scalar.hpp"

namespace reebspec {

struct ExactPoint {
  ExactScalar x, y;
};

bool operator==(const ExactPoint& p, const ExactPoint& q);

/// Moment-map polygon in the closed first quadrant, stored with
/// counterclockwise orientation. Models the star-shaped boundary of a
/// toric domain through its edge normal data: the boundary runs from the
/// origin along the x-axis to (a, 0), over the upper edges to (0, b), and
/// back down the y-axis.
class ToricPolygon {
 public:
  explicit ToricPolygon(std::vector<ExactPoint> vertices);

  const std::vector<ExactPoint>& vertices() const { return vertices_; }
  bool is_convex() const { return convex_; }

 private:
  std::vector<ExactPoint> vertices_;
  bool convex_ = false;
};

struct ToricOrbit {
  enum class Kind { CornerX, CornerY, EdgeFamily };
  Kind kind;
  std::string descriptor;
  ExactPoint at;       // the moment-map point (an edge endpoint for families)
  ExactScalar action;  // m*x + n*y, constant along the edge
  Int m, n;            // primitive outward normal
};

/// Simple Reeb orbit data of the boundary modeled by P, filtered to
/// action <= bound: the two axis corner orbits of action a and b, and one
/// entry per upper edge with primitive integer outward normal (m, n).
/// Throws NotStarShapedModel if the axis corners are missing or an upper
/// normal has a negative component, NonIntegerEdgeNormal if an upper edge
/// has irrational slope.
std::vector<ToricOrbit> toric_reeb_actions(const ToricPolygon& P,
                                           const ExactScalar& bound);

}  // namespace reebspec
