#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "reebspec/errors.hpp"

namespace reebspec {

using Int = boost::multiprecision::cpp_int;

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// An element of Q or of a real quadratic field Q(sqrt(d)), held in the
/// canonical form (p + q*sqrt(d))/r with
///
///   r > 0,  gcd(p, q, r) = 1,  d squarefree,  q = 0  <=>  d = 0.
///
/// The canonical form is unique, so value equality is field equality.
/// Comparison is exact: the sign of p + q*sqrt(d) is decided by integer
/// squaring, never by floating point. All integers are arbitrary
/// precision. Operands must share a radicand (or be rational); mixing two
/// distinct irrational radicands throws MixedRadicand.
class ExactScalar {
 public:
  ExactScalar() : p_(0), q_(0), r_(1), d_(0) {}
  ExactScalar(long long value) : p_(value), q_(0), r_(1), d_(0) {}
  ExactScalar(Int value) : p_(std::move(value)), q_(0), r_(1), d_(0) {}

  /// num/den. Throws DivisionByZero if den = 0.
  static ExactScalar ratio(Int num, Int den);

  /// sqrt(radicand) for radicand >= 0; square factors are pulled out,
  /// so sqrt_of(8) = 2*sqrt(2) and sqrt_of(9) = 3.
  static ExactScalar sqrt_of(Int radicand);

  /// (p + q*sqrt(d))/r, canonicalized. Throws on r = 0 or d < 0.
  static ExactScalar surd(Int p, Int q, Int r, Int d);

  /// Accepts the grammar
  ///   INT | INT/INT | sqrt(INT) | (INT+INT*sqrt(INT))/INT
  /// with '-' allowed both as a sign and as the middle separator, plus
  /// decimal literals like "0.5" (exactly converted to rationals) for
  /// command-line convenience. Throws ParseError with the byte offset.
  static ExactScalar parse(std::string_view text);

  /// Canonical text form; parse(str()) is the identity.
  std::string str() const;

  /// Nearest IEEE double (computed through 50-digit floating point).
  double to_double() const;

  const Int& rational_num() const { return p_; }
  const Int& surd_num() const { return q_; }
  const Int& denom() const { return r_; }
  const Int& radicand() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  bool is_integer() const { return q_ == 0 && r_ == 1; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  /// -1, 0, or +1.
  int sign() const;

  /// Exact three-way comparison of x - y.
  static Ordering cmp(const ExactScalar& x, const ExactScalar& y);

  /// Largest integer n with n <= *this.
  Int floor() const;

  ExactScalar operator-() const;
  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }
  ExactScalar& operator/=(const ExactScalar& y) { return *this = *this / y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return cmp(x, y) == Ordering::EQ;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) {
    return cmp(x, y) != Ordering::EQ;
  }
  friend bool operator<(const ExactScalar& x, const ExactScalar& y) {
    return cmp(x, y) == Ordering::LT;
  }
  friend bool operator>(const ExactScalar& x, const ExactScalar& y) {
    return cmp(x, y) == Ordering::GT;
  }
  friend bool operator<=(const ExactScalar& x, const ExactScalar& y) {
    return cmp(x, y) != Ordering::GT;
  }
  friend bool operator>=(const ExactScalar& x, const ExactScalar& y) {
    return cmp(x, y) != Ordering::LT;
  }

 private:
  ExactScalar(Int p, Int q, Int r, Int d);  // canonicalizing
  void canonicalize();

  Int p_, q_, r_, d_;
};

/// Sign of a + b*sqrt(d) by integer squaring.
int sign_of_surd(const Int& a, const Int& b, const Int& d);

/// floor(x / y) for y > 0; throws NonpositiveDivisor otherwise.
Int floor_ratio(const ExactScalar& x, const ExactScalar& y);

ExactScalar min(const ExactScalar& x, const ExactScalar& y);
ExactScalar max(const ExactScalar& x, const ExactScalar& y);
ExactScalar abs(const ExactScalar& x);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace reebspec
