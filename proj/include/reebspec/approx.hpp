#pragma once

#include "reebspec/lattice.hpp"

namespace reebspec {

enum class Side { Minus, Plus };

/// The constrained best-approximation quadruple flanking an irrational
/// a > 1 at action cutoff L:
///
///   n-/m- maximal with   n-/m- < a  and  a*m- <= L,
///   n+/m+ minimal with   n+/m+ > a  and  n+   <= L,
///
/// both fractions in lowest terms. The optima are automatically
/// unimodular: m-*n+ - m+*n- = 1.
struct BestApprox {
  Int m_minus, n_minus, m_plus, n_plus;
  ExactScalar a, L;

  /// Rechecks every invariant (coprimality, strict flanking, the action
  /// constraints, the determinant identity); throws ContractViolation.
  void validate() const;

  Int det() const { return m_minus * n_plus - m_plus * n_minus; }
};

/// Stern-Brocot mediant descent toward a, retaining the last admissible
/// fraction on each side. Throws RationalInput, NotGreaterThanOne, or
/// LTooSmall (also when no upper pair satisfies n <= L).
BestApprox best_approx(const ExactScalar& a, const ExactScalar& L);

/// Oracle with the same contract, by exhaustive scan of all coprime pairs
/// in range.
BestApprox brute_best_approx(const ExactScalar& a, const ExactScalar& L);

/// The triangle (0,0), (m-,n-), (m+,n+); its interior is lattice-free.
LatticeTriangle witness_lattice_triangle(const BestApprox& ba);

/// The deformation triangle T with vertices (0,1), (a,0), and
/// p = (n+(a m- - n-), m-(n+ - a m+)), the intersection of the two
/// flanking lines. Exact line membership of p is asserted.
LatticeTriangle triangle_T(const BestApprox& ba);

struct NormalizedTriangle {
  UnimodularAffineMap map;   // matrix [[-m-,-n-],[-m+,-n+]], shift (a m-, n+)
  LatticeTriangle image;     // (0,0), (a m- - n-, 0), (0, n+ - a m+)
};

/// The SL2(Z)-plus-translation normalization of T; asserts that the map
/// sends T's vertices exactly onto the image vertices (p to the origin).
NormalizedTriangle normalize_T(const BestApprox& ba);

struct WidthLegs {
  ExactScalar minus_leg;  // a m- - n-
  ExactScalar plus_leg;   // n+ - a m+
};

WidthLegs width_legs(const BestApprox& ba);

/// min(a m- - n-, n+ - a m+): the ball size embeddable in X_T.
ExactScalar traynor_width(const BestApprox& ba);

/// Which leg attains the width (never a tie for irrational a).
Side traynor_width_side(const BestApprox& ba);

}  // namespace reebspec
