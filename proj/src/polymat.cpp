#include "sl2/polymat.hpp"

#include "sl2/errors.hpp"

namespace sl2 {

Poly PolyMat2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

bool PolyMat2::is_unit() const { return det().degree() == 0; }

bool PolyMat2::is_constant() const {
  for (const auto& p : e_)
    if (!p.is_constant()) return false;
  return true;
}

bool PolyMat2::in_field(Field f) const {
  for (const auto& p : e_)
    if (!p.in_field(f)) return false;
  return true;
}

PolyMat2 PolyMat2::inverse() const {
  Poly d = det();
  if (d.degree() != 0) throw NotInvertibleError("matrix is not invertible over the polynomial ring");
  Scalar inv = d.leading().inverse();
  return {inv * e_[3], inv * -e_[1], inv * -e_[2], inv * e_[0]};
}

PolyMat2 operator*(const PolyMat2& A, const PolyMat2& B) {
  return {A.e_[0] * B.e_[0] + A.e_[1] * B.e_[2], A.e_[0] * B.e_[1] + A.e_[1] * B.e_[3],
          A.e_[2] * B.e_[0] + A.e_[3] * B.e_[2], A.e_[2] * B.e_[1] + A.e_[3] * B.e_[3]};
}

PolyMat2 operator+(const PolyMat2& A, const PolyMat2& B) {
  return {A.e_[0] + B.e_[0], A.e_[1] + B.e_[1], A.e_[2] + B.e_[2], A.e_[3] + B.e_[3]};
}

PolyMat2 operator-(const PolyMat2& A, const PolyMat2& B) {
  return {A.e_[0] - B.e_[0], A.e_[1] - B.e_[1], A.e_[2] - B.e_[2], A.e_[3] - B.e_[3]};
}

PolyMat2 operator*(const Scalar& s, const PolyMat2& A) {
  return {s * A.e_[0], s * A.e_[1], s * A.e_[2], s * A.e_[3]};
}

std::string PolyMat2::to_string() const {
  return "[[" + e_[0].to_string() + "," + e_[1].to_string() + "],[" + e_[2].to_string() + "," +
         e_[3].to_string() + "]]";
}

PolyMat2 shift(const PolyMat2& A, long m) {
  return {shift(A(0, 0), m), shift(A(0, 1), m), shift(A(1, 0), m), shift(A(1, 1), m)};
}

void require_unit(const PolyMat2& A, const char* what) {
  if (!A.is_unit())
    throw NotInvertibleError(std::string(what) + ": determinant is not a nonzero constant");
}

PolyMat2 expand_factors(const std::vector<Poly>& u) {
  PolyMat2 r = PolyMat2::identity();
  for (const auto& p : u) r = r * PolyMat2::E(p);
  return r;
}

PolyMat2 expand(const EWord& w) { return w.front.matrix() * expand_factors(w.factors); }

std::string to_string(const EWord& w) {
  std::string s = "diag(" + w.front.d1.to_string() + "," + w.front.d2.to_string() + ")";
  for (const auto& u : w.factors) s += " E(" + u.to_string() + ")";
  return s;
}

PolyMat2 twisted_conjugate(const PolyMat2& A, const PolyMat2& P) {
  require_unit(P, "conjugator");
  return P.inverse() * A * shift(P, 1);
}

PolyMat2 cocycle(const PolyMat2& K, long m) {
  require_unit(K, "cocycle");
  PolyMat2 r = PolyMat2::identity();
  if (m > 0) {
    for (long i = 0; i < m; ++i) r = r * shift(K, i);
  } else if (m < 0) {
    PolyMat2 Kinv = K.inverse();
    for (long i = 1; i <= -m; ++i) r = r * shift(Kinv, -i);
  }
  return r;
}

}  // namespace sl2
