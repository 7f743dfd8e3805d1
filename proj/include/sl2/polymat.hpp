#pragma once

#include <array>
#include <string>
#include <vector>

#include "sl2/poly.hpp"

namespace sl2 {

/// 2x2 matrix over Q(i)[h], row-major.
class PolyMat2 {
 public:
  PolyMat2() = default;
  PolyMat2(Poly a, Poly b, Poly c, Poly d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static PolyMat2 identity() { return {1, 0, 0, 1}; }
  static PolyMat2 diag(const Scalar& d1, const Scalar& d2) { return {d1, 0, 0, d2}; }
  /// E(u) = [[u,1],[-1,0]].
  static PolyMat2 E(const Poly& u) { return {u, 1, -1, 0}; }

  const Poly& operator()(int i, int j) const { return e_[2 * i + j]; }
  Poly& operator()(int i, int j) { return e_[2 * i + j]; }

  Poly det() const;
  /// det is a nonzero constant.
  bool is_unit() const;
  bool is_constant() const;
  bool in_field(Field f) const;
  PolyMat2 transpose() const { return {e_[0], e_[2], e_[1], e_[3]}; }
  /// Adjugate divided by the constant determinant; NotInvertibleError otherwise.
  PolyMat2 inverse() const;

  friend PolyMat2 operator*(const PolyMat2& A, const PolyMat2& B);
  friend PolyMat2 operator+(const PolyMat2& A, const PolyMat2& B);
  friend PolyMat2 operator-(const PolyMat2& A, const PolyMat2& B);
  friend PolyMat2 operator*(const Scalar& s, const PolyMat2& A);
  PolyMat2 operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const PolyMat2& A, const PolyMat2& B) { return A.e_ == B.e_; }

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  std::array<Poly, 4> e_;
};

/// Entrywise p(h+m).
PolyMat2 shift(const PolyMat2& A, long m);

/// Throws NotInvertibleError unless det A is a nonzero constant.
void require_unit(const PolyMat2& A, const char* what);

struct DiagPair {
  Scalar d1{1};
  Scalar d2{1};

  /// diag(a,b) for k even, diag(b,a) for k odd.
  DiagPair swapped_if(long k) const { return (k % 2 == 0) ? *this : DiagPair{d2, d1}; }
  PolyMat2 matrix() const { return PolyMat2::diag(d1, d2); }
  friend bool operator==(const DiagPair&, const DiagPair&) = default;
};

/// diag(d1,d2) E(u_1) ... E(u_k), unexpanded.
struct EWord {
  DiagPair front;
  std::vector<Poly> factors;
  friend bool operator==(const EWord&, const EWord&) = default;
};

PolyMat2 expand(const EWord& w);
/// E(u_1) ... E(u_k) without the diagonal.
PolyMat2 expand_factors(const std::vector<Poly>& u);

/// "diag(d1,d2) E(u1) E(u2)".
std::string to_string(const EWord& w);

/// P(h)^{-1} A(h) P(h+1). P must be a unit.
PolyMat2 twisted_conjugate(const PolyMat2& A, const PolyMat2& P);

/// c_K(m): K(h)K(h+1)...K(h+m-1) for m > 0, K(h-1)^{-1}...K(h-m)^{-1} for m < 0.
PolyMat2 cocycle(const PolyMat2& K, long m);

}  // namespace sl2
