#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2/errors.hpp"
#include "sl2/factorization.hpp"
#include "support/random.hpp"

using namespace sl2;
using sl2::testing::Rng;

namespace {
const Poly h = Poly::h();
Poly pw(int n) { return Poly::monomial(1, n); }
Scalar q(long n, long d) { return Scalar::rational(n, d); }
PolyMat2 E(const Poly& u) { return PolyMat2::E(u); }

const PolyMat2 K1(-pw(4) - 2 * h, -pw(3) - 1, -pw(6) - pw(3) + 1, -pw(5));
const PolyMat2 K2(-2 * h, -2 * pw(3) - 2 * h - 2, -h + 3, -pw(3) + 3 * pw(2) - h + 2);
}  // namespace

TEST_CASE("LQ forms of K1 and K2") {
  LQForm f1 = lq_form(K1);
  CHECK(f1.front() == PolyMat2(1, 0, pw(2), 1));
  CHECK(f1.quotients == std::vector<Poly>{h, -pw(2), h});
  CHECK(f1.matrix() == K1);
  CHECK(to_string(f1) == "[[1,0],[h^2,1]] E(h) E(-h^2) E(h)");
  LQForm f2 = lq_form(K2);
  CHECK(f2.front() == PolyMat2(2, 0, 1, 3));
  CHECK(f2.quotients == std::vector<Poly>{0, -pw(2) - 1, h});
  CHECK(f2.matrix() == K2);
  CHECK(is_valid(f1));
  CHECK(is_valid(f2));
  LQForm d = lq_form(PolyMat2::diag(2, 7));
  CHECK(d.front() == PolyMat2::diag(2, 7));
  CHECK(d.quotients.empty());
}

TEST_CASE("the printed K1 with +h^5 is not a unit") {
  PolyMat2 printed(-pw(4) - 2 * h, -pw(3) - 1, -pw(6) - pw(3) + 1, pw(5));
  CHECK_FALSE(printed.is_unit());
  CHECK_THROWS_AS(lq_form(printed), NotInvertibleError);
  CHECK_THROWS_AS(standard_form(printed), PreconditionError);
}

TEST_CASE("standard forms of K1 and K2") {
  StandardForm s1 = standard_form(K1);
  CHECK(to_string(s1.word()) == "diag(-1,-1) E(0) E(h^2) E(h) E(-h^2) E(h)");
  CHECK(s1.length() == 5);
  StandardForm s2 = standard_form(K2);
  CHECK(to_string(s2.word()) == "diag(-6,-1) E(-1/3) E(h-3) E(-h^2-1) E(0)");
  CHECK(s2.length() == 4);
  CHECK(length(PolyMat2::diag(2, 3)) == 0);
  CHECK(standard_form(PolyMat2::diag(2, 3)).word() == EWord{{2, 3}, {}});
  CHECK(length(K1) == 5);
  CHECK(length(K2) == 4);
}

TEST_CASE("reduce_word examples") {
  Poly u = pw(3) - h, v = 2 * h + 1;
  CHECK(reduce_word(EWord{{1, 1}, {u, 0, v}}) == StandardForm{{-1, -1}, {u + v}});
  CHECK(reduce_word(EWord{{1, 1}, {2, Poly(q(1, 2)), 2}}) == StandardForm{{-2, q(-1, 2)}, {}});
  // E(h)E(3)E(h^2): rule (vi) then the diagonal moves to the front
  StandardForm r = reduce_word(EWord{{1, 1}, {h, 3, pw(2)}});
  CHECK(r == StandardForm{{q(1, 3), 3}, {9 * h - 3, pw(2) - Poly(q(1, 3))}});
  CHECK(r.matrix() == E(h) * E(3) * E(pw(2)));
  CHECK(reduce_word(EWord{{1, 1}, {0, 0}}) == StandardForm{{-1, -1}, {}});
}

TEST_CASE("is_standard") {
  CHECK(is_standard(EWord{{1, 1}, {0, h, 3}}));
  CHECK_FALSE(is_standard(EWord{{1, 1}, {h, 3, h}}));
  CHECK_FALSE(is_standard(EWord{{1, 1}, {0, 0}}));
  CHECK(is_standard(EWord{{1, 1}, {0}}));
  CHECK(is_standard(EWord{{1, 1}, {2, 3}}));
}

TEST_CASE("property: shortening identities") {
  Rng rng(301);
  for (int t = 0; t < 100; ++t) {
    Poly u = rng.poly(5), v = rng.poly(5), w = rng.poly(5);
    Scalar b1 = rng.nonzero(), b2 = rng.nonzero();
    CHECK(E(u) * E(0) * E(v) == -E(u + v));
    CHECK(E(b1) * E(b1.inverse()) * E(b1) == -PolyMat2::diag(b1, b1.inverse()));
    CHECK(E(u) * PolyMat2::diag(b1, b2) == PolyMat2::diag(b2, b1) * E((b1 / b2) * u));
    CHECK(E(u) * E(v).inverse() == E(u - v) * E(0).inverse());
    CHECK(E(u) * E(v).inverse() == -(E(u - v) * E(0)));
    CHECK(E(u) * E(v).inverse() * E(w) == E(u - v + w));
    CHECK(E(u) * E(b1) * E(v) ==
          E(u - Poly(b1.inverse())) * PolyMat2::diag(b1, b1.inverse()) * E(v - Poly(b1.inverse())));
  }
}

TEST_CASE("property: reduced words are fixed points") {
  Rng rng(302);
  for (int t = 0; t < 200; ++t) {
    Field f = t % 3 == 0 ? Field::gaussian : Field::rational;
    EWord w = rng.standard_word(static_cast<int>(rng.integer(0, 6)), 4, f);
    REQUIRE(is_standard(w));
    StandardForm s = reduce_word(w);
    CHECK(s.word() == w);
    CHECK(standard_form(expand(w)).word() == w);
  }
}

TEST_CASE("property: LQ route and rewriting route agree") {
  Rng rng(303);
  for (int t = 0; t < 200; ++t) {
    Field f = t % 3 == 0 ? Field::gaussian : Field::rational;
    EWord w = rng.word(7, 3, f);
    PolyMat2 K = expand(w);
    StandardForm a = reduce_word(w), b = standard_form(K);
    CHECK(a == b);
    CHECK(is_standard(a.word()));
    CHECK(a.matrix() == K);
    LQForm l = lq_form(K);
    CHECK(l.matrix() == K);
    CHECK(is_valid(l));
    CHECK(reduce_word(lq_word(l)) == b);
  }
}
