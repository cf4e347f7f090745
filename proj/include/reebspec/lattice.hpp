#pragma once

#include <array>

#include "reebspec/toric.hpp"

namespace reebspec {

/// Planar triangle with exact coordinates. "Lattice" refers to the
/// integer-vertex case, for which interior/boundary lattice points can be
/// counted and Pick's identity checked.
struct LatticeTriangle {
  ExactPoint v0, v1, v2;
};

/// Twice the signed area (exact).
ExactScalar doubled_signed_area(const LatticeTriangle& t);

struct LatticeCount {
  Int interior, boundary;
};

/// Exact lattice-point counts of a nondegenerate integer-vertex triangle,
/// by bounding-box scan with half-plane sign tests. Asserts Pick's
/// identity 2*Area = 2*interior + boundary - 2 against the doubled area.
LatticeCount lattice_count(const LatticeTriangle& t);

/// x -> M x + t with M an integer matrix of determinant +-1. Closed under
/// composition and inverse; preserves doubled areas up to sign.
class UnimodularAffineMap {
 public:
  UnimodularAffineMap(std::array<Int, 4> matrix, ExactPoint translation);

  ExactPoint apply(const ExactPoint& p) const;
  LatticeTriangle apply(const LatticeTriangle& t) const;
  UnimodularAffineMap compose(const UnimodularAffineMap& inner) const;
  UnimodularAffineMap inverse() const;

  Int det() const;
  const std::array<Int, 4>& matrix() const { return m_; }
  const ExactPoint& translation() const { return t_; }

 private:
  std::array<Int, 4> m_;  // row major: [m00, m01, m10, m11]
  ExactPoint t_;
};

}  // namespace reebspec
