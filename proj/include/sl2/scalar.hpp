#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace sl2 {

/// Which exact field user-facing input is drawn from. Arithmetic always
/// happens in Q(i); the rational field is the subfield with zero imaginary
/// part, which every operation preserves.
enum class Field { rational, gaussian };

/// Exact element of Q(i): re + im*i with rational parts.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(long num, long den);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  /// True when the value is a rational integer.
  bool is_integer() const;
  bool in_field(Field f) const { return f == Field::gaussian || is_real(); }

  /// Throws PreconditionError on zero.
  Scalar inverse() const;
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "3", "-1/2", "i", "1/2-3*i".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Integer power; negative exponents invert. pow(0, 0) = 1.
Scalar pow(const Scalar& base, long exponent);

/// Exact square root in Q(i) when one exists.
std::optional<Scalar> exact_sqrt(const Scalar& z);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace sl2
