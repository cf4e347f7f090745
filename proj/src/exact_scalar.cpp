#include "reebspec/exact_scalar.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <ostream>
#include <utility>

namespace reebspec {

namespace {

using boost::multiprecision::gcd;

// Floor division with b > 0.
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// d = s^2 * rest with rest squarefree (trial division; inputs are
// desk-scale radicands).
std::pair<Int, Int> extract_square(const Int& d) {
  Int s = 1, rest = 1, n = d;
  for (Int f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      int count = 0;
      while (n % f == 0) {
        n /= f;
        ++count;
      }
      for (int i = 0; i < count / 2; ++i) s *= f;
      if (count % 2) rest *= f;
    }
  }
  rest *= n;
  return {s, rest};
}

Int merged_radicand(const ExactScalar& x, const ExactScalar& y) {
  if (x.surd_num() == 0) return y.radicand();
  if (y.surd_num() == 0) return x.radicand();
  if (x.radicand() == y.radicand()) return x.radicand();
  throw MixedRadicand("cannot combine sqrt(" + x.radicand().str() +
                      ") with sqrt(" + y.radicand().str() + ")");
}

}  // namespace

int sign_of_surd(const Int& a, const Int& b, const Int& d) {
  if (b == 0 || d == 0) return a.sign();
  if (a == 0) return b.sign();
  if (a > 0 && b > 0) return 1;
  if (a < 0 && b < 0) return -1;
  // Opposite signs: |a| vs |b|*sqrt(d), settled by squaring.
  const Int lhs = a * a;
  const Int rhs = b * b * d;
  if (lhs == rhs) return 0;
  if (a > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

ExactScalar::ExactScalar(Int p, Int q, Int r, Int d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  canonicalize();
}

void ExactScalar::canonicalize() {
  if (r_ == 0) throw DivisionByZero("denominator is zero");
  if (d_ < 0) throw ContractViolation("negative radicand " + d_.str());
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_ == 0) {
    d_ = 0;
  } else if (d_ == 0) {
    q_ = 0;
  } else {
    auto [s, rest] = extract_square(d_);
    if (s != 1) {
      q_ *= s;
      d_ = rest;
    }
    if (d_ == 1) {  // the radicand was a perfect square
      p_ += q_;
      q_ = 0;
      d_ = 0;
    }
  }
  const Int ap = abs(p_);
  const Int aq = abs(q_);
  const Int g = gcd(gcd(ap, aq), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

ExactScalar ExactScalar::ratio(Int num, Int den) {
  return ExactScalar(std::move(num), 0, std::move(den), 0);
}

ExactScalar ExactScalar::sqrt_of(Int radicand) {
  return ExactScalar(0, 1, 1, std::move(radicand));
}

ExactScalar ExactScalar::surd(Int p, Int q, Int r, Int d) {
  return ExactScalar(std::move(p), std::move(q), std::move(r), std::move(d));
}

int ExactScalar::sign() const { return sign_of_surd(p_, q_, d_); }

Ordering ExactScalar::cmp(const ExactScalar& x, const ExactScalar& y) {
  const Int d = merged_radicand(x, y);
  const Int a = x.p_ * y.r_ - y.p_ * x.r_;
  const Int b = x.q_ * y.r_ - y.q_ * x.r_;
  const int s = sign_of_surd(a, b, d);
  return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

Int ExactScalar::floor() const {
  if (q_ == 0) return floor_div(p_, r_);
  const Int qsq = q_ * q_ * d_;
  const Int s = boost::multiprecision::sqrt(qsq);
  // q*sqrt(d) lies strictly between consecutive integers (d is squarefree
  // and > 1 here), so p + q*sqrt(d) is in the open unit interval above low.
  const Int low = (q_ > 0) ? p_ + s : p_ - s - 1;
  Int f = floor_div(low, r_);
  if (sign_of_surd(p_ - r_ * (f + 1), q_, d_) >= 0) ++f;
  return f;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.p_ = -out.p_;
  out.q_ = -out.q_;
  return out;
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
  const Int d = merged_radicand(x, y);
  return ExactScalar(x.p_ * y.r_ + y.p_ * x.r_, x.q_ * y.r_ + y.q_ * x.r_,
                     x.r_ * y.r_, d);
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
  return x + (-y);
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  const Int d = merged_radicand(x, y);
  return ExactScalar(x.p_ * y.p_ + x.q_ * y.q_ * d,
                     x.p_ * y.q_ + x.q_ * y.p_, x.r_ * y.r_, d);
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
  if (y.is_zero()) throw DivisionByZero("division by zero");
  // 1/((p+q*sqrt(d))/r) = r(p - q*sqrt(d))/(p^2 - q^2 d); the conjugate
  // norm is nonzero because sqrt(d) is irrational whenever q != 0.
  const Int norm = y.p_ * y.p_ - y.q_ * y.q_ * y.d_;
  const ExactScalar inv(y.r_ * y.p_, -(y.r_ * y.q_), norm, y.d_);
  return x * inv;
}

Int floor_ratio(const ExactScalar& x, const ExactScalar& y) {
  if (y.sign() <= 0)
    throw NonpositiveDivisor("floor_ratio divisor must be positive, got " +
                             y.str());
  return (x / y).floor();
}

ExactScalar min(const ExactScalar& x, const ExactScalar& y) {
  return y < x ? y : x;
}

ExactScalar max(const ExactScalar& x, const ExactScalar& y) {
  return x < y ? y : x;
}

ExactScalar abs(const ExactScalar& x) { return x.sign() < 0 ? -x : x; }

double ExactScalar::to_double() const {
  using BigFloat = boost::multiprecision::cpp_bin_float_50;
  BigFloat v = BigFloat(p_);
  if (q_ != 0) v += BigFloat(q_) * sqrt(BigFloat(d_));
  v /= BigFloat(r_);
  return v.convert_to<double>();
}

std::string ExactScalar::str() const {
  if (q_ == 0) {
    if (r_ == 1) return p_.str();
    return p_.str() + "/" + r_.str();
  }
  const std::string sep = q_ > 0 ? "+" : "-";
  return "(" + p_.str() + sep + abs(q_).str() + "*sqrt(" + d_.str() + "))/" +
         r_.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  return os << x.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_end() {
    skip_ws();
    return i == s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  }
  bool try_eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool try_keyword(std::string_view kw) {
    skip_ws();
    if (s.substr(i, kw.size()) == kw) {
      i += kw.size();
      return true;
    }
    return false;
  }
  Int parse_int() {
    skip_ws();
    std::size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_start) throw ParseError("expected integer", start);
    Int v(std::string(s.substr(digits_start, i - digits_start)));
    return neg ? Int(-v) : v;
  }
  // Digits after a decimal point; returns (value, count).
  std::pair<Int, int> parse_fraction_digits() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected digits after '.'", start);
    return {Int(std::string(s.substr(start, i - start))),
            static_cast<int>(i - start)};
  }
};

Int parse_radicand(Cursor& cur) {
  cur.expect('(');
  std::size_t at = cur.i;
  Int d = cur.parse_int();
  if (d < 0) throw ParseError("radicand must be nonnegative", at);
  cur.expect(')');
  return d;
}

}  // namespace

ExactScalar ExactScalar::parse(std::string_view text) {
  Cursor cur{text};
  ExactScalar out;

  if (cur.peek() == '(') {
    cur.expect('(');
    Int p = cur.parse_int();
    char sep = cur.peek();
    if (sep != '+' && sep != '-')
      throw ParseError("expected '+' or '-'", cur.i);
    ++cur.i;
    Int q = cur.parse_int();
    if (sep == '-') q = -q;
    cur.expect('*');
    if (!cur.try_keyword("sqrt")) throw ParseError("expected 'sqrt'", cur.i);
    Int d = parse_radicand(cur);
    cur.expect(')');
    cur.expect('/');
    Int r = cur.parse_int();
    out = ExactScalar(std::move(p), std::move(q), std::move(r), std::move(d));
  } else if (cur.try_keyword("sqrt")) {
    out = sqrt_of(parse_radicand(cur));
  } else {
    Int num = cur.parse_int();
    if (cur.try_eat('/')) {
      Int den = cur.parse_int();
      if (den == 0) throw ParseError("denominator is zero", cur.i);
      out = ratio(std::move(num), std::move(den));
    } else if (cur.try_eat('.')) {
      auto [frac, count] = cur.parse_fraction_digits();
      Int scale = 1;
      for (int k = 0; k < count; ++k) scale *= 10;
      const bool neg = num < 0;
      Int total = abs(num) * scale + frac;
      out = ratio(neg ? Int(-total) : total, scale);
    } else {
      out = ExactScalar(std::move(num));
    }
  }

  if (!cur.at_end()) throw ParseError("trailing characters", cur.i);
  return out;
}

}  // namespace reebspec
