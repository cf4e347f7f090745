#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "reebspec/approx.hpp"
#include "reebspec/spectrum.hpp"

namespace reebspec {

/// Spectral gap at cutoff L: the minimum of c_k - c_{k-1} over k > 0 with
/// c_k <= L. An empty index set is the +infinity case, encoded as an
/// absent gap.
struct GapReport {
  ExactScalar L;
  std::optional<ExactScalar> gap;  // nullopt encodes +infinity
  std::size_t k_star = 0;          // earliest attaining index (when finite)
  std::optional<ExactScalar> c_k_star, c_k_star_minus_1;

  bool infinite() const { return !gap.has_value(); }
};

/// Exact gap of a spectrum prefix. Requires terms.back() > L so the index
/// set is certified complete; throws SpectrumTooShort otherwise.
GapReport gap(const ActionSpectrum& S, const ExactScalar& L);

/// Gap of N(a, b) at cutoff L, generating just enough spectrum.
GapReport ellipsoid_gap(const ExactScalar& a, const ExactScalar& b,
                        const ExactScalar& L);

/// Star-shaped closing bound 2a/(floor(L/a) + 3) for Y inside B^4(a).
ExactScalar ball_close_bound(const ExactScalar& a, const ExactScalar& L);

struct BoundCheck {
  ExactScalar lhs, rhs;
  bool ok;  // lhs <= rhs, exact
};

/// gap(N(a,b), L) against the ball bound with M = max(a,b); the
/// computable instantiation of the star-shaped bound via monotonicity.
BoundCheck gap_bound_chain(const ExactScalar& a, const ExactScalar& b,
                           const ExactScalar& L);

struct CloseReport {
  ExactScalar a, L;
  ExactScalar value;
  std::optional<Side> side;        // which min argument; absent for rational a
  std::optional<BestApprox> approx;
};

/// Close^L of the ellipsoid boundary E(a,1): the exact min of the two
/// approximation legs for irrational a > 1, and 0 for rational a > 1.
/// Requires L >= a (LTooSmall below).
CloseReport close_ellipsoid(const ExactScalar& a, const ExactScalar& L);

/// The squeeze check: gap(N(a,1), L) must equal close_ellipsoid(a, L)
/// exactly. Two unrelated algorithms, one value.
bool close_gap_crosscheck(const ExactScalar& a, const ExactScalar& L);

struct AsymptoticRatio {
  double ratio;        // N_k(a,b)^2 / (2k * vol)
  double error_bound;  // 3/sqrt(2k); exact for the ball, heuristic else
};

AsymptoticRatio asymptotic_ratio(const ExactScalar& a, const ExactScalar& b,
                                 std::size_t k);

/// Same, for an already-computed c_k = N_k(a, b).
AsymptoticRatio asymptotic_ratio_from(const ExactScalar& ck,
                                      const ExactScalar& a,
                                      const ExactScalar& b, std::size_t k);

/// The min-vs-average step: gap at L = c_m against (c_m - c_{m-n})/n.
BoundCheck gap_average_bound(const ExactScalar& a, const ExactScalar& b,
                             std::size_t m, std::size_t n);

struct SweepRow {
  ExactScalar L;
  GapReport gap;
  CloseReport close;
  double l_times_gap;
};

/// Gap and Close of E(a,1) over L = from, from+step, ..., <= to.
/// Rows are computed in parallel and returned in input order.
std::vector<SweepRow> sweep_close_gap(const ExactScalar& a,
                                      const ExactScalar& from,
                                      const ExactScalar& to,
                                      const ExactScalar& step);

}  // namespace reebspec
