#include "reebspec/spectrum.hpp"

#include <algorithm>
#include <utility>

#include "reebspec/parallel.hpp"

namespace reebspec {

namespace {

void require_positive(const ExactScalar& v, const char* name) {
  if (v.sign() <= 0)
    throw NonpositiveRadius(std::string(name) + " must be positive, got " +
                            v.str());
}

bool term_less(const SpectrumTerm& x, const SpectrumTerm& y) {
  switch (ExactScalar::cmp(x.value, y.value)) {
    case Ordering::LT:
      return true;
    case Ordering::GT:
      return false;
    case Ordering::EQ:
      break;
  }
  if (x.witness.has_value() != y.witness.has_value())
    return y.witness.has_value();
  if (!x.witness) return false;
  if (x.witness->m != y.witness->m) return x.witness->m < y.witness->m;
  return x.witness->n < y.witness->n;
}

std::string ellipsoid_tag(const ExactScalar& a, const ExactScalar& b) {
  return "ellipsoid(a=" + a.str() + ",b=" + b.str() + ")";
}

}  // namespace

ActionSpectrum::ActionSpectrum(std::vector<SpectrumTerm> terms,
                               std::string domain_tag)
    : terms_(std::move(terms)), tag_(std::move(domain_tag)) {
  if (terms_.empty())
    throw ContractViolation("spectrum must contain at least c_0");
  if (!terms_.front().value.is_zero())
    throw ContractViolation("spectrum must start at 0, got " +
                            terms_.front().value.str());
  for (std::size_t k = 1; k < terms_.size(); ++k) {
    if (terms_[k].value < terms_[k - 1].value)
      throw ContractViolation("spectrum is decreasing at index " +
                              std::to_string(k));
  }
  if (terms_.size() > 1 && terms_[1].value.sign() <= 0)
    throw ContractViolation("c_1 must be strictly positive");
}

ExactScalar ball_ck(const Int& k, const ExactScalar& a) {
  require_positive(a, "a");
  if (k < 0) throw ContractViolation("k must be nonnegative");
  const Int twok = 2 * k;
  Int d = boost::multiprecision::sqrt(twok);
  while (d > 0 && d * d + d > twok) --d;
  // d^2 + d <= 2k always holds now; the upper bound is a theorem of the
  // index bracketing, asserted here.
  if (twok > d * d + 3 * d)
    throw Error("internal: no d with d^2+d <= 2k <= d^2+3d for k=" + k.str());
  return d * a;
}

ActionSpectrum ball_spectrum_first(const ExactScalar& a, std::size_t count) {
  require_positive(a, "a");
  if (count == 0) throw ContractViolation("count must be >= 1");
  std::vector<SpectrumTerm> terms;
  terms.reserve(count);
  // c_k = d*a on the index block (d^2+d)/2 <= k <= (d^2+3d)/2.
  Int d = 0;
  std::size_t k = 0;
  while (k < count) {
    Int hi2 = d * d + 3 * d;  // 2k upper bound for this d
    while (k < count && Int(2 * k) <= hi2) {
      terms.push_back({d * a, std::nullopt});
      ++k;
    }
    ++d;
  }
  return ActionSpectrum(std::move(terms), "ball(a=" + a.str() + ")");
}

ActionSpectrum ellipsoid_spectrum_upto_serial(const ExactScalar& a,
                                              const ExactScalar& b,
                                              const ExactScalar& bound) {
  require_positive(a, "a");
  require_positive(b, "b");
  if (bound.sign() < 0)
    throw ContractViolation("bound must be nonnegative, got " + bound.str());

  const Int m_max = floor_ratio(bound, a);
  std::vector<SpectrumTerm> terms;
  for (Int m = 0; m <= m_max; ++m) {
    const ExactScalar ma = m * a;
    const Int n_max = floor_ratio(bound - ma, b);
    for (Int n = 0; n <= n_max; ++n) {
      terms.push_back({ma + n * b, Witness{m, n}});
    }
  }
  std::sort(terms.begin(), terms.end(), term_less);
  return ActionSpectrum(std::move(terms), ellipsoid_tag(a, b));
}

ActionSpectrum ellipsoid_spectrum_upto(const ExactScalar& a,
                                       const ExactScalar& b,
                                       const ExactScalar& bound) {
  require_positive(a, "a");
  require_positive(b, "b");
  if (bound.sign() < 0)
    throw ContractViolation("bound must be nonnegative, got " + bound.str());

  const Int m_max_int = floor_ratio(bound, a);
  const std::size_t rows = static_cast<std::size_t>(m_max_int) + 1;

  // Row m holds n = 0..n_max(m); lay rows out at fixed offsets so the
  // fill order cannot depend on the thread schedule.
  std::vector<std::size_t> row_len(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::size_t m = 0; m < rows; ++m) {
    const ExactScalar ma = Int(m) * a;
    row_len[m] = static_cast<std::size_t>(floor_ratio(bound - ma, b)) + 1;
  }

  std::vector<std::size_t> offset(rows + 1, 0);
  for (std::size_t m = 0; m < rows; ++m) offset[m + 1] = offset[m] + row_len[m];

  std::vector<SpectrumTerm> terms(offset[rows]);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::size_t m = 0; m < rows; ++m) {
    const ExactScalar ma = Int(m) * a;
    for (std::size_t j = 0; j < row_len[m]; ++j) {
      terms[offset[m] + j] = {ma + Int(j) * b, Witness{Int(m), Int(j)}};
    }
  }

  parallel_sort(terms.begin(), terms.end(), term_less);
  return ActionSpectrum(std::move(terms), ellipsoid_tag(a, b));
}

ActionSpectrum ellipsoid_spectrum_first(const ExactScalar& a,
                                        const ExactScalar& b,
                                        std::size_t count) {
  if (count == 0) throw ContractViolation("count must be >= 1");
  ExactScalar bound = a + b;
  for (;;) {
    ActionSpectrum s = ellipsoid_spectrum_upto(a, b, bound);
    if (s.size() >= count) {
      std::vector<SpectrumTerm> prefix(s.terms().begin(),
                                       s.terms().begin() + count);
      return ActionSpectrum(std::move(prefix), s.domain_tag());
    }
    bound = bound * 2;
  }
}

ExactScalar ellipsoid_ck(const ExactScalar& a, const ExactScalar& b,
                         std::size_t k) {
  return ellipsoid_spectrum_first(a, b, k + 1).value(k);
}

std::vector<ExactScalar> combine_disjoint_prefix(
    const std::vector<ActionSpectrum>& spectra, std::size_t k) {
  if (spectra.empty())
    throw InsufficientTerms("disjoint union of zero spectra");
  for (const auto& s : spectra) {
    if (s.size() < k + 1)
      throw InsufficientTerms("spectrum '" + s.domain_tag() + "' has " +
                              std::to_string(s.size()) + " terms, need " +
                              std::to_string(k + 1));
  }

  std::vector<ExactScalar> acc(k + 1);
  for (std::size_t j = 0; j <= k; ++j) acc[j] = spectra[0].value(j);

  // Pairwise max-plus folds over prefixes.
  for (std::size_t s = 1; s < spectra.size(); ++s) {
    std::vector<ExactScalar> next(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      ExactScalar best = acc[0] + spectra[s].value(j);
      for (std::size_t i = 1; i <= j; ++i) {
        const ExactScalar cand = acc[i] + spectra[s].value(j - i);
        if (cand > best) best = cand;
      }
      next[j] = std::move(best);
    }
    acc = std::move(next);
  }
  return acc;
}

ExactScalar combine_disjoint(const std::vector<ActionSpectrum>& spectra,
                             std::size_t k) {
  return combine_disjoint_prefix(spectra, k).back();
}

ExactScalar ellipsoid_volume(const ExactScalar& a, const ExactScalar& b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return a * b;
}

}  // namespace reebspec
