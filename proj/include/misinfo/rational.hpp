#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace misinfo {

// Exact rational number, always stored in lowest terms with a positive
// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "-p" or "p/q" in base 10. Throws Error(Parse) otherwise,
  // including for a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;
  double to_double() const { return v_.get_d(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }
  const mpq_class& raw() const { return v_; }
  std::size_t hash() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A value that is exact when every input was exact, numeric otherwise.
class Number {
 public:
  Number(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Number(double d) : v_(d) {}                // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& exact() const;
  double to_double() const;
  std::string str() const;

 private:
  std::variant<Rational, double> v_;
};

std::ostream& operator<<(std::ostream& os, const Number& n);

}  // namespace misinfo
