#include "sl2/scalar.hpp"

#include <ostream>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

std::string rational_text(const mpq_class& q) { return q.get_str(); }

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

bool Scalar::is_integer() const { return is_real() && re_.get_den() == 1; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero scalar");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_real() && is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  return *this;
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_text(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = rational_text(im_) + "*i";
  if (sgn(re_) == 0) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return rational_text(re_) + imag;
}

Scalar pow(const Scalar& base, long exponent) {
  Scalar b = exponent < 0 ? base.inverse() : base;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  Scalar r(1);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::optional<Scalar> exact_sqrt(const Scalar& z) {
  if (z.is_zero()) return Scalar(0);
  // (x+iy)^2 = a+ib  =>  x^2 = (a+|z|)/2, y^2 = (|z|-a)/2, sign(xy) = sign(b)
  mpq_class norm2 = z.re() * z.re() + z.im() * z.im();
  auto modulus = rational_sqrt(norm2);
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt(mpq_class((z.re() + *modulus) / 2));
  auto y = rational_sqrt(mpq_class((*modulus - z.re()) / 2));
  if (!x || !y) return std::nullopt;
  mpq_class yy = sgn(z.im()) < 0 ? mpq_class(-*y) : *y;
  Scalar r(*x, yy);
  if (!(r * r == z)) return std::nullopt;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace sl2
