#include "reebspec/closing.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace reebspec {

GapReport gap(const ActionSpectrum& S, const ExactScalar& L) {
  if (!(S.terms().back().value > L))
    throw SpectrumTooShort("spectrum '" + S.domain_tag() +
                           "' ends at " + S.terms().back().value.str() +
                           " which does not exceed L = " + L.str());

  GapReport out;
  out.L = L;
  for (std::size_t k = 1; k < S.size(); ++k) {
    const ExactScalar& ck = S.value(k);
    if (ck > L) break;
    const ExactScalar diff = ck - S.value(k - 1);
    if (!out.gap || diff < *out.gap) {
      out.gap = diff;
      out.k_star = k;
      out.c_k_star = ck;
      out.c_k_star_minus_1 = S.value(k - 1);
    }
  }
  return out;
}

GapReport ellipsoid_gap(const ExactScalar& a, const ExactScalar& b,
                        const ExactScalar& L) {
  // The largest value <= bound plus min(a,b) exceeds the bound, so this
  // prefix always satisfies gap()'s completeness requirement.
  const ExactScalar bound = (L.sign() > 0 ? L : ExactScalar(0)) + min(a, b);
  return gap(ellipsoid_spectrum_upto(a, b, bound), L);
}

ExactScalar ball_close_bound(const ExactScalar& a, const ExactScalar& L) {
  if (a.sign() <= 0) throw NonpositiveRadius("a must be positive");
  if (L.sign() <= 0) throw ContractViolation("L must be positive");
  return (2 * a) / ExactScalar(floor_ratio(L, a) + 3);
}

BoundCheck gap_bound_chain(const ExactScalar& a, const ExactScalar& b,
                           const ExactScalar& L) {
  const ExactScalar M = max(a, b);
  if (L < M)
    throw LTooSmall("L = " + L.str() + " is below max(a,b) = " + M.str());
  const GapReport g = ellipsoid_gap(a, b, L);
  const ExactScalar rhs = ball_close_bound(M, L);
  // L >= M >= min(a,b) = c_1, so the gap is finite.
  const ExactScalar& lhs = *g.gap;
  return {lhs, rhs, lhs <= rhs};
}

CloseReport close_ellipsoid(const ExactScalar& a, const ExactScalar& L) {
  if (a <= 1) throw NotGreaterThanOne("a must exceed 1, got " + a.str());
  if (L < a)
    throw LTooSmall("L = " + L.str() + " is below a = " + a.str() +
                    "; Close below the minimum action is not modeled");

  if (a.is_rational()) {
    // Every point of the rational ellipsoid boundary lies on a Reeb orbit
    // of action <= a <= L.
    return {a, L, ExactScalar(0), std::nullopt, std::nullopt};
  }

  BestApprox ba = best_approx(a, L);
  const WidthLegs legs = width_legs(ba);
  const Side side = traynor_width_side(ba);
  ExactScalar value = side == Side::Minus ? legs.minus_leg : legs.plus_leg;
  return {a, L, std::move(value), side, std::move(ba)};
}

bool close_gap_crosscheck(const ExactScalar& a, const ExactScalar& L) {
  if (a.is_rational())
    throw RationalInput("crosscheck requires irrational a, got " + a.str());
  const CloseReport close = close_ellipsoid(a, L);
  const GapReport g = ellipsoid_gap(a, 1, L);
  return g.gap.has_value() && *g.gap == close.value;
}

AsymptoticRatio asymptotic_ratio_from(const ExactScalar& ck,
                                      const ExactScalar& a,
                                      const ExactScalar& b, std::size_t k) {
  if (k == 0) throw ContractViolation("k must be >= 1");
  const double c = ck.to_double();
  const double vol = ellipsoid_volume(a, b).to_double();
  const double kk = static_cast<double>(k);
  return {c * c / (2.0 * kk * vol), 3.0 / std::sqrt(2.0 * kk)};
}

AsymptoticRatio asymptotic_ratio(const ExactScalar& a, const ExactScalar& b,
                                 std::size_t k) {
  if (k == 0) throw ContractViolation("k must be >= 1");
  return asymptotic_ratio_from(ellipsoid_ck(a, b, k), a, b, k);
}

BoundCheck gap_average_bound(const ExactScalar& a, const ExactScalar& b,
                             std::size_t m, std::size_t n) {
  if (n == 0 || n > m) throw ContractViolation("need 0 < n <= m");
  const ActionSpectrum S = ellipsoid_spectrum_first(a, b, m + 1);
  const ExactScalar& cm = S.value(m);
  const ExactScalar rhs = (cm - S.value(m - n)) / ExactScalar(Int(n));
  const GapReport g = ellipsoid_gap(a, b, cm);
  const ExactScalar& lhs = *g.gap;  // finite: c_m <= L = c_m
  return {lhs, rhs, lhs <= rhs};
}

std::vector<SweepRow> sweep_close_gap(const ExactScalar& a,
                                      const ExactScalar& from,
                                      const ExactScalar& to,
                                      const ExactScalar& step) {
  if (step.sign() <= 0)
    throw ContractViolation("sweep step must be positive");
  if (from < a)
    throw LTooSmall("sweep start " + from.str() + " is below a = " + a.str());

  std::vector<ExactScalar> cutoffs;
  for (ExactScalar L = from; L <= to; L += step) cutoffs.push_back(L);

  // One shared spectrum prefix covers every row.
  const ActionSpectrum S =
      cutoffs.empty()
          ? ellipsoid_spectrum_upto(a, 1, a + 1)
          : ellipsoid_spectrum_upto(a, 1, cutoffs.back() + 1);

  std::vector<SweepRow> rows(cutoffs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    GapReport g = gap(S, cutoffs[i]);
    CloseReport c = close_ellipsoid(a, cutoffs[i]);
    const double lg = g.gap ? cutoffs[i].to_double() * g.gap->to_double()
                            : std::numeric_limits<double>::infinity();
    rows[i] = {cutoffs[i], std::move(g), std::move(c), lg};
  }
  return rows;
}

}  // namespace reebspec
