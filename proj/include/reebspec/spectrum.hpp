#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reebspec/exact_scalar.hpp"

namespace reebspec {

/// The (m, n) in value = m*a + n*b.
struct Witness {
  Int m, n;
};

struct SpectrumTerm {
  ExactScalar value;
  std::optional<Witness> witness;
};

/// A finite prefix of an action spectrum: nondecreasing, starts at 0, and
/// (when longer than one term) strictly positive from index 1 on. Equal
/// actions are ordered by lexicographic (m, n) witness, which makes every
/// generated sequence deterministic.
class ActionSpectrum {
 public:
  ActionSpectrum(std::vector<SpectrumTerm> terms, std::string domain_tag);

  const std::vector<SpectrumTerm>& terms() const { return terms_; }
  const std::string& domain_tag() const { return tag_; }
  std::size_t size() const { return terms_.size(); }
  const ExactScalar& value(std::size_t k) const { return terms_.at(k).value; }

 private:
  std::vector<SpectrumTerm> terms_;
  std::string tag_;
};

/// c_k of the sphere boundary of B^4(a): d*a where d is the unique
/// nonnegative integer with d^2 + d <= 2k <= d^2 + 3d.
ExactScalar ball_ck(const Int& k, const ExactScalar& a);

/// First `count` sphere invariants as a spectrum (closed form, no
/// enumeration).
ActionSpectrum ball_spectrum_first(const ExactScalar& a, std::size_t count);

/// All values m*a + n*b <= bound (m, n >= 0), sorted nondecreasing with
/// repetitions and (m, n) witnesses. OpenMP-parallel enumeration and sort;
/// output is identical to the serial reference.
ActionSpectrum ellipsoid_spectrum_upto(const ExactScalar& a,
                                       const ExactScalar& b,
                                       const ExactScalar& bound);

/// Serial reference: naive double loop plus std::sort. Kept for testing
/// and benchmarking against the parallel path.
ActionSpectrum ellipsoid_spectrum_upto_serial(const ExactScalar& a,
                                              const ExactScalar& b,
                                              const ExactScalar& bound);

/// First `count` terms, found by doubling the bound until the prefix is
/// long enough.
ActionSpectrum ellipsoid_spectrum_first(const ExactScalar& a,
                                        const ExactScalar& b,
                                        std::size_t count);

/// The k-th term (0-indexed) of the full N(a, b) sequence.
ExactScalar ellipsoid_ck(const ExactScalar& a, const ExactScalar& b,
                         std::size_t k);

/// Max-plus combination over all compositions k_1 + ... + k_m = k of
/// sum_i terms[k_i]; prefix version returns indices 0..k.
std::vector<ExactScalar> combine_disjoint_prefix(
    const std::vector<ActionSpectrum>& spectra, std::size_t k);
ExactScalar combine_disjoint(const std::vector<ActionSpectrum>& spectra,
                             std::size_t k);

/// Contact volume of the ellipsoid boundary: a*b.
ExactScalar ellipsoid_volume(const ExactScalar& a, const ExactScalar& b);

}  // namespace reebspec
