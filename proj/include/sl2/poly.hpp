#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "sl2/scalar.hpp"

namespace sl2 {

/// Polynomial degree; the zero polynomial has degree kMinusInfinity.
using Degree = int;
inline constexpr Degree kMinusInfinity = INT_MIN;

/// Univariate polynomial in h over Q(i). coeffs()[k] is the coefficient of h^k;
/// trailing zeros are never stored, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(Scalar c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly h() { return monomial(Scalar(1), 1); }
  static Poly monomial(const Scalar& c, int power);

  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const;
  Degree degree() const { return c_.empty() ? kMinusInfinity : static_cast<Degree>(c_.size()) - 1; }
  /// Zero for the zero polynomial.
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  bool is_zero() const { return c_.empty(); }
  /// True for zero and for nonzero constants.
  bool is_constant() const { return c_.size() <= 1; }
  bool is_real() const;
  bool in_field(Field f) const;

  Scalar operator()(const Scalar& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(long s, Poly a) { return a *= Scalar(s); }
  friend Poly operator*(Poly a, long s) { return a *= Scalar(s); }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Descending powers, explicit signs: "-h^4-2*h", "1/2*h^2+3", "(1+i)*h".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Scalar> c_;
};

struct DivResult {
  Poly quotient;
  Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws PreconditionError when b = 0.
DivResult euclid_div(const Poly& a, const Poly& b);

/// p(h+m). sigma(p) = shift(p,-1), sigma^{-1}(p) = shift(p,1).
Poly shift(const Poly& p, long m);
inline Poly sigma(const Poly& p) { return shift(p, -1); }
inline Poly sigma_inv(const Poly& p) { return shift(p, 1); }

/// binomial(h, k) as a polynomial.
Poly binomial_poly(int k);

/// Coordinates in the basis binomial(h,k), k = 0..deg p. Empty for p = 0.
std::vector<Scalar> to_binomial_basis(const Poly& p);
Poly from_binomial_basis(const std::vector<Scalar>& coords);

/// w with a*w(h+1) - b*w(h) = target. When a = b the kernel (constants) is
/// fixed by making the binomial e_0 coordinate of w zero.
Poly solve_T(const Scalar& a, const Scalar& b, const Poly& target);

/// u(h+1) - c*u(h).
Poly apply_T1c(const Scalar& c, const Poly& u);

struct TImage {
  Poly value;       // T_{1,c}(u), never zero for nonconstant u
  bool constant;    // value is a nonzero constant
  Scalar beta;      // that constant when `constant`
};

/// Requires c != 0 and u nonconstant.
TImage classify_T_image(const Scalar& c, const Poly& u);

}  // namespace sl2
