#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2/errors.hpp"
#include "sl2/polymat.hpp"
#include "support/random.hpp"

using namespace sl2;
using sl2::testing::Rng;

namespace {
const Poly h = Poly::h();
Poly pw(int n) { return Poly::monomial(1, n); }
Scalar q(long n, long d) { return Scalar::rational(n, d); }
}  // namespace

TEST_CASE("matrix examples") {
  CHECK(PolyMat2::E(0) * PolyMat2::E(0) == -PolyMat2::identity());
  CHECK(PolyMat2::E(h * h - 3).det() == Poly(1));
  CHECK(PolyMat2::diag(q(2, 3), 5).det() == Poly(q(10, 3)));
  PolyMat2 v = PolyMat2::E(h * h);
  CHECK(v.inverse() == PolyMat2::E(0) * PolyMat2::E(-h * h) * PolyMat2::E(0));
  CHECK(PolyMat2::diag(2, 3).inverse() == PolyMat2::diag(q(1, 2), q(1, 3)));
  CHECK(PolyMat2(1, 0, h * h, 1).inverse() == PolyMat2(1, 0, -h * h, 1));
  CHECK_THROWS_AS(PolyMat2(h, 0, 0, 1).inverse(), NotInvertibleError);
  CHECK(PolyMat2(h, 1, -1, 0).to_string() == "[[h,1],[-1,0]]");
  CHECK(PolyMat2(1, h, 2, 3).transpose() == PolyMat2(1, 2, h, 3));
}

TEST_CASE("expand examples") {
  CHECK(expand(EWord{}) == PolyMat2::identity());
  EWord k1{{-1, -1}, {0, pw(2), h, -pw(2), h}};
  CHECK(expand(k1) == PolyMat2(-pw(4) - 2 * h, -pw(3) - 1, -pw(6) - pw(3) + 1, -pw(5)));
  EWord k2{{-6, -1}, {Poly(q(-1, 3)), h - 3, -pw(2) - 1, 0}};
  CHECK(expand(k2) == PolyMat2(-2 * h, -2 * pw(3) - 2 * h - 2, -h + 3, -pw(3) + 3 * pw(2) - h + 2));
  CHECK(to_string(k2) == "diag(-6,-1) E(-1/3) E(h-3) E(-h^2-1) E(0)");
}

TEST_CASE("twisted conjugation examples") {
  PolyMat2 A = PolyMat2::E(h) * PolyMat2::diag(2, 5);
  CHECK(twisted_conjugate(A, PolyMat2::identity()) == A);
  Scalar a = q(3, 2), b = -4;
  Poly v = h * h - h + 7;
  CHECK(twisted_conjugate(PolyMat2::diag(a, b), PolyMat2(1, v, 0, 1)) ==
        PolyMat2(a, a * shift(v, 1) - b * v, 0, b));
  // round trip through the inverse conjugator
  PolyMat2 P = PolyMat2::E(h) * PolyMat2::E(2);
  PolyMat2 B = twisted_conjugate(A, P);
  CHECK(B != A);
  CHECK(twisted_conjugate(B, P.inverse()) == A);
}

TEST_CASE("cocycle examples") {
  PolyMat2 K = PolyMat2::E(h);
  CHECK(cocycle(K, 0) == PolyMat2::identity());
  CHECK(cocycle(PolyMat2::diag(2, 3), 3) == PolyMat2::diag(8, 27));
  CHECK(cocycle(K, 2) == PolyMat2(h * h + h - 1, h, -h - 1, -1));
  CHECK(cocycle(K, -1) == shift(K, -1).inverse());
  CHECK_THROWS_AS(cocycle(PolyMat2(h, 0, 0, 1), 1), NotInvertibleError);
}

TEST_CASE("property: unit group and twisted conjugacy") {
  Rng rng(201);
  for (int t = 0; t < 100; ++t) {
    Field f = t % 2 ? Field::gaussian : Field::rational;
    PolyMat2 A = rng.unit(4, 3, f), B = rng.unit(4, 3, f), P = rng.unit(3, 2, f), Q = rng.unit(3, 2, f);
    CHECK((A * B).det() == A.det() * B.det());
    CHECK(A * A.inverse() == PolyMat2::identity());
    CHECK(A.is_unit());
    CHECK(shift(A * B, 3) == shift(A, 3) * shift(B, 3));
    // equivalence relation: composition and inverse of conjugators
    CHECK(twisted_conjugate(twisted_conjugate(A, P), Q) == twisted_conjugate(A, P * Q));
    CHECK(twisted_conjugate(twisted_conjugate(A, P), P.inverse()) == A);
    CHECK(twisted_conjugate(A, P).det() == A.det());
  }
}

TEST_CASE("property: cocycle identity") {
  Rng rng(202);
  for (int t = 0; t < 60; ++t) {
    PolyMat2 K = rng.unit(3, 2);
    long m = rng.integer(-3, 3), n = rng.integer(-3, 3);
    CHECK(cocycle(K, m + n) == cocycle(K, m) * shift(cocycle(K, n), m));
  }
}
