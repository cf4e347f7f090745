#include "reebspec/approx.hpp"

#include <optional>
#include <utility>

namespace reebspec {

namespace {

using boost::multiprecision::gcd;

void require_hypotheses(const ExactScalar& a, const ExactScalar& L) {
  if (a.is_rational())
    throw RationalInput("a must be irrational, got " + a.str());
  if (a <= 1) throw NotGreaterThanOne("a must exceed 1, got " + a.str());
  if (L < a)
    throw LTooSmall("L = " + L.str() + " is below a = " + a.str());
}

}  // namespace

void BestApprox::validate() const {
  if (m_minus <= 0 || m_plus <= 0 || n_minus <= 0 || n_plus <= 0)
    throw ContractViolation("approximation pairs must be positive");
  if (gcd(m_minus, n_minus) != 1 || gcd(m_plus, n_plus) != 1)
    throw ContractViolation("approximation pairs must be coprime");
  if (!(ExactScalar(n_minus) < a * m_minus))
    throw ContractViolation("n-/m- does not lie below a");
  if (!(ExactScalar(n_plus) > a * m_plus))
    throw ContractViolation("n+/m+ does not lie above a");
  if (!(a * m_minus <= L))
    throw ContractViolation("a*m- exceeds L");
  if (!(ExactScalar(n_plus) <= L))
    throw ContractViolation("n+ exceeds L");
  if (det() != 1)
    throw ContractViolation("determinant m-*n+ - m+*n- is " + det().str() +
                            ", expected 1");
}

BestApprox best_approx(const ExactScalar& a, const ExactScalar& L) {
  require_hypotheses(a, L);

  const Int m_cap = floor_ratio(L, a);  // a*m <= L  <=>  m <= m_cap
  const Int n_cap = L.floor();          // n <= L    <=>  n <= n_cap

  // Mediant walk from (0/1, 1/0). Every left endpoint is a best lower
  // approximation, every right endpoint a best upper one; keep the last
  // admissible fraction on each side and stop once future mediants can
  // satisfy neither constraint.
  Int ml = 1, nl = 0;  // left  n/m, value below a
  Int mr = 0, nr = 1;  // right n/m, value above a
  std::optional<std::pair<Int, Int>> best_minus, best_plus;
  while (ml + mr <= m_cap || nl + nr <= n_cap) {
    const Int mm = ml + mr, nm = nl + nr;
    if (ExactScalar(nm) < a * mm) {
      ml = mm;
      nl = nm;
      if (ml <= m_cap) best_minus = {ml, nl};
    } else {
      mr = mm;
      nr = nm;
      if (nr <= n_cap) best_plus = {mr, nr};
    }
  }

  if (!best_minus)
    throw Error("internal: lower pair missing despite L >= a");
  if (!best_plus)
    throw LTooSmall("no coprime n/m > " + a.str() + " has n <= " + L.str());

  BestApprox out{best_minus->first, best_minus->second, best_plus->first,
                 best_plus->second, a, L};
  out.validate();
  return out;
}

BestApprox brute_best_approx(const ExactScalar& a, const ExactScalar& L) {
  require_hypotheses(a, L);

  const Int m_cap = floor_ratio(L, a);
  const Int n_cap = L.floor();

  // Any admissible pair on either side has m <= m_cap and n <= n_cap
  // (upper pairs satisfy m < n/a <= L/a). Scan them all.
  std::optional<std::pair<Int, Int>> lo, hi;
  for (Int m = 1; m <= m_cap; ++m) {
    const ExactScalar am = a * m;
    for (Int n = 1; n <= n_cap; ++n) {
      if (gcd(m, n) != 1) continue;
      if (ExactScalar(n) < am) {
        if (!lo || n * lo->first > lo->second * m) lo = {m, n};
      } else {
        if (!hi || n * hi->first < hi->second * m) hi = {m, n};
      }
    }
  }

  if (!lo) throw Error("internal: lower pair missing despite L >= a");
  if (!hi)
    throw LTooSmall("no coprime n/m > " + a.str() + " has n <= " + L.str());

  BestApprox out{lo->first, lo->second, hi->first, hi->second, a, L};
  out.validate();
  return out;
}

LatticeTriangle witness_lattice_triangle(const BestApprox& ba) {
  ba.validate();
  return {{0, 0},
          {ExactScalar(ba.m_minus), ExactScalar(ba.n_minus)},
          {ExactScalar(ba.m_plus), ExactScalar(ba.n_plus)}};
}

LatticeTriangle triangle_T(const BestApprox& ba) {
  ba.validate();
  const ExactScalar& a = ba.a;
  const ExactPoint p{ba.n_plus * (a * ba.m_minus - ba.n_minus),
                     ba.m_minus * (ExactScalar(ba.n_plus) - a * ba.m_plus)};

  // p must lie on L1 through (0,1) with slope -m+/n+ and on L2 through
  // (a,0) with slope -m-/n-.
  const ExactScalar on_l1 = ba.m_plus * p.x + ba.n_plus * (p.y - 1);
  const ExactScalar on_l2 = ba.m_minus * (p.x - a) + ba.n_minus * p.y;
  if (!on_l1.is_zero() || !on_l2.is_zero())
    throw Error("internal: vertex p left its defining lines");

  return {{0, 1}, {a, 0}, p};
}

NormalizedTriangle normalize_T(const BestApprox& ba) {
  const LatticeTriangle t = triangle_T(ba);
  const ExactScalar& a = ba.a;

  UnimodularAffineMap map({-ba.m_minus, -ba.n_minus, -ba.m_plus, -ba.n_plus},
                          {a * ba.m_minus, ExactScalar(ba.n_plus)});

  const ExactPoint leg_x{a * ba.m_minus - ba.n_minus, 0};
  const ExactPoint leg_y{0, ExactScalar(ba.n_plus) - a * ba.m_plus};
  const ExactPoint origin{0, 0};

  if (!(map.apply(t.v0) == leg_x) || !(map.apply(t.v1) == leg_y) ||
      !(map.apply(t.v2) == origin))
    throw Error("internal: normalization did not produce the model triangle");

  return {std::move(map), LatticeTriangle{origin, leg_x, leg_y}};
}

WidthLegs width_legs(const BestApprox& ba) {
  ba.validate();
  return {ba.a * ba.m_minus - ba.n_minus,
          ExactScalar(ba.n_plus) - ba.a * ba.m_plus};
}

ExactScalar traynor_width(const BestApprox& ba) {
  const WidthLegs legs = width_legs(ba);
  return min(legs.minus_leg, legs.plus_leg);
}

Side traynor_width_side(const BestApprox& ba) {
  const WidthLegs legs = width_legs(ba);
  switch (ExactScalar::cmp(legs.minus_leg, legs.plus_leg)) {
    case Ordering::LT:
      return Side::Minus;
    case Ordering::GT:
      return Side::Plus;
    case Ordering::EQ:
      break;
  }
  // Equal legs would force a = (n- + n+)/(m- + m+), a rational.
  throw Error("internal: equal width legs for irrational a");
}

}  // namespace reebspec
