#include "reebspec/lattice.hpp"

#include <utility>

namespace reebspec {

ExactScalar doubled_signed_area(const LatticeTriangle& t) {
  return (t.v1.x - t.v0.x) * (t.v2.y - t.v0.y) -
         (t.v1.y - t.v0.y) * (t.v2.x - t.v0.x);
}

namespace {

struct IntPoint {
  Int x, y;
};

IntPoint as_int_point(const ExactPoint& p) {
  if (!p.x.is_integer() || !p.y.is_integer())
    throw ContractViolation("lattice_count requires integer vertices, got (" +
                            p.x.str() + "," + p.y.str() + ")");
  return {p.x.rational_num(), p.y.rational_num()};
}

Int cross(const IntPoint& o, const IntPoint& u, const IntPoint& v) {
  return (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x);
}

}  // namespace

LatticeCount lattice_count(const LatticeTriangle& t) {
  IntPoint a = as_int_point(t.v0);
  IntPoint b = as_int_point(t.v1);
  IntPoint c = as_int_point(t.v2);

  Int area2 = cross(a, b, c);
  if (area2 == 0) throw DegenerateTriangle("triangle has zero area");
  if (area2 < 0) {
    std::swap(b, c);
    area2 = -area2;
  }

  const Int xmin = std::min({a.x, b.x, c.x});
  const Int xmax = std::max({a.x, b.x, c.x});
  const Int ymin = std::min({a.y, b.y, c.y});
  const Int ymax = std::max({a.y, b.y, c.y});

  LatticeCount count{0, 0};
  for (Int x = xmin; x <= xmax; ++x) {
    for (Int y = ymin; y <= ymax; ++y) {
      const IntPoint p{x, y};
      const int s0 = cross(a, b, p).sign();
      const int s1 = cross(b, c, p).sign();
      const int s2 = cross(c, a, p).sign();
      if (s0 > 0 && s1 > 0 && s2 > 0)
        ++count.interior;
      else if (s0 >= 0 && s1 >= 0 && s2 >= 0)
        ++count.boundary;
    }
  }

  if (area2 != 2 * count.interior + count.boundary - 2)
    throw Error("internal: Pick's identity failed for doubled area " +
                area2.str());
  return count;
}

UnimodularAffineMap::UnimodularAffineMap(std::array<Int, 4> matrix,
                                         ExactPoint translation)
    : m_(std::move(matrix)), t_(std::move(translation)) {
  const Int d = det();
  if (d != 1 && d != -1)
    throw NonUnimodularMatrix("matrix determinant is " + d.str() +
                              ", expected +-1");
}

Int UnimodularAffineMap::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

ExactPoint UnimodularAffineMap::apply(const ExactPoint& p) const {
  return {m_[0] * p.x + m_[1] * p.y + t_.x, m_[2] * p.x + m_[3] * p.y + t_.y};
}

LatticeTriangle UnimodularAffineMap::apply(const LatticeTriangle& t) const {
  return {apply(t.v0), apply(t.v1), apply(t.v2)};
}

UnimodularAffineMap UnimodularAffineMap::compose(
    const UnimodularAffineMap& inner) const {
  // (M, t) o (N, u): x -> M(Nx + u) + t
  std::array<Int, 4> m{
      m_[0] * inner.m_[0] + m_[1] * inner.m_[2],
      m_[0] * inner.m_[1] + m_[1] * inner.m_[3],
      m_[2] * inner.m_[0] + m_[3] * inner.m_[2],
      m_[2] * inner.m_[1] + m_[3] * inner.m_[3],
  };
  return UnimodularAffineMap(std::move(m), apply(inner.t_));
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
  const Int d = det();  // +-1
  std::array<Int, 4> inv{m_[3] * d, -m_[1] * d, -m_[2] * d, m_[0] * d};
  const ExactPoint minus_t{-(inv[0] * t_.x + inv[1] * t_.y),
                           -(inv[2] * t_.x + inv[3] * t_.y)};
  return UnimodularAffineMap(std::move(inv), minus_t);
}

}  // namespace reebspec
