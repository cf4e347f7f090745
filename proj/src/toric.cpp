#include "reebspec/toric.hpp"

#include <algorithm>
#include <optional>

namespace reebspec {

namespace {

ExactScalar cross(const ExactPoint& o, const ExactPoint& u,
                  const ExactPoint& v) {
  return (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x);
}

}  // namespace

bool operator==(const ExactPoint& p, const ExactPoint& q) {
  return p.x == q.x && p.y == q.y;
}

ToricPolygon::ToricPolygon(std::vector<ExactPoint> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3)
    throw ContractViolation("polygon needs at least 3 vertices");
  for (const auto& v : vertices_) {
    if (v.x.sign() < 0 || v.y.sign() < 0)
      throw ContractViolation("vertex (" + v.x.str() + "," + v.y.str() +
                              ") leaves the closed first quadrant");
  }

  // Doubled signed area; orient counterclockwise.
  ExactScalar area2 = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = vertices_[i];
    const auto& v = vertices_[(i + 1) % n];
    area2 += u.x * v.y - u.y * v.x;
  }
  if (area2.is_zero()) throw DegenerateTriangle("polygon has zero area");
  if (area2.sign() < 0) std::reverse(vertices_.begin(), vertices_.end());

  convex_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    const auto& c = vertices_[(i + 2) % n];
    if (cross(a, b, c).sign() < 0) {
      convex_ = false;
      break;
    }
  }
}

namespace {

// Primitive integer vector positively proportional to the exact outward
// normal (dy, -dx) of a CCW edge, or nullopt when the slope is irrational.
std::optional<std::pair<Int, Int>> primitive_normal(const ExactPoint& from,
                                                    const ExactPoint& to) {
  const ExactScalar dx = to.x - from.x;
  const ExactScalar dy = to.y - from.y;
  if (dy.is_zero()) return std::make_pair(Int(0), Int(dx.sign() > 0 ? -1 : 1));
  if (dx.is_zero()) return std::make_pair(Int(dy.sign() > 0 ? 1 : -1), Int(0));
  const ExactScalar slope = dy / dx;  // = N/D in lowest terms, D > 0
  if (!slope.is_rational()) return std::nullopt;
  Int m = slope.rational_num();
  Int d = slope.denom();
  // (dy, -dx) = (dx / D) * (N, -D)
  if (dx.sign() < 0) {
    m = -m;
  } else {
    d = -d;
  }
  return std::make_pair(m, d);
}

}  // namespace

std::vector<ToricOrbit> toric_reeb_actions(const ToricPolygon& P,
                                           const ExactScalar& bound) {
  const auto& vs = P.vertices();
  const std::size_t n = vs.size();

  std::optional<std::size_t> origin, corner_x, corner_y;
  for (std::size_t i = 0; i < n; ++i) {
    const bool x0 = vs[i].x.is_zero();
    const bool y0 = vs[i].y.is_zero();
    if (x0 && y0) {
      if (origin) throw NotStarShapedModel("duplicate origin vertex");
      origin = i;
    } else if (y0) {
      if (corner_x) throw NotStarShapedModel("multiple x-axis endpoints");
      corner_x = i;
    } else if (x0) {
      if (corner_y) throw NotStarShapedModel("multiple y-axis endpoints");
      corner_y = i;
    }
  }
  if (!origin || !corner_x || !corner_y)
    throw NotStarShapedModel(
        "boundary model needs vertices (0,0), (a,0), and (0,b)");

  std::vector<ToricOrbit> out;
  const ExactScalar& a = vs[*corner_x].x;
  const ExactScalar& b = vs[*corner_y].y;
  if (a <= bound)
    out.push_back({ToricOrbit::Kind::CornerX, "corner (" + a.str() + ",0)",
                   vs[*corner_x], a, 1, 0});
  if (b <= bound)
    out.push_back({ToricOrbit::Kind::CornerY, "corner (0," + b.str() + ")",
                   vs[*corner_y], b, 0, 1});

  // Upper edges: everything not incident to the origin, walked CCW from
  // (a, 0) to (0, b).
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (i == *origin || j == *origin) continue;
    const auto& from = vs[i];
    const auto& to = vs[j];
    const auto normal = primitive_normal(from, to);
    if (!normal)
      throw NonIntegerEdgeNormal("edge (" + from.x.str() + "," +
                                 from.y.str() + ")-(" + to.x.str() + "," +
                                 to.y.str() + ") has irrational slope");
    const auto& [m, nn] = *normal;
    if (m < 0 || nn < 0)
      throw NotStarShapedModel("outward normal (" + m.str() + "," + nn.str() +
                               ") has a negative component on the upper "
                               "boundary");
    const ExactScalar action = m * from.x + nn * from.y;
    const ExactScalar at_to = m * to.x + nn * to.y;
    if (action != at_to)
      throw Error("internal: action not constant along edge");
    if (action <= bound) {
      out.push_back({ToricOrbit::Kind::EdgeFamily,
                     "edge (" + from.x.str() + "," + from.y.str() + ")-(" +
                         to.x.str() + "," + to.y.str() + ")",
                     from, action, m, nn});
    }
  }
  return out;
}

}  // namespace reebspec
