#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homgd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, polynomials, documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses `p`, `-p`, `+p` or `p/q` (q != 0). Surrounding blanks are ignored.
  static Scalar parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  /// Value as a machine integer; throws when not an integer or out of range.
  std::int64_t to_int64() const;

  std::string str() const;

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// Integer power; negative exponents require a nonzero base.
Scalar pow(const Scalar& base, long exponent);

/// n! as a scalar.
Scalar factorial(unsigned n);

/// Binomial coefficient C(n, k) for 0 <= k <= n, zero otherwise.
Scalar binomial(long n, long k);

/// Falling factorial n (n-1) ... (n-k+1); 1 for k = 0.
Scalar falling_factorial(long n, unsigned k);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace homgd
