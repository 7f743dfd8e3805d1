#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2/errors.hpp"
#include "sl2/text.hpp"
#include "support/random.hpp"

using namespace sl2;
using sl2::testing::Rng;

namespace {
const Poly h = Poly::h();
Poly pw(int n) { return Poly::monomial(1, n); }
Scalar q(long n, long d) { return Scalar::rational(n, d); }

void expect_error(std::string_view text, const std::string& what, int column, Field f = Field::rational) {
  CAPTURE(text);
  try {
    parse_poly(text, f);
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(what) != std::string::npos);
    CHECK(e.line() == 1);
    CHECK(e.column() == column);
  }
}
}  // namespace

TEST_CASE("polynomial examples") {
  CHECK(parse_poly("-h^4 - 2*h") == -pw(4) - 2 * h);
  CHECK(parse_poly("3h^2 - h/2") == 3 * pw(2) - q(1, 2) * h);
  CHECK(parse_poly("(h+1)^3") == (h + 1) * (h + 1) * (h + 1));
  CHECK(parse_poly("2(h-1)(h+1)") == 2 * (pw(2) - 1));
  CHECK(parse_poly("-(-h)") == h);
  CHECK(parse_poly("1/3") == Poly(q(1, 3)));
  CHECK(parse_poly("h^0") == Poly(1));
  CHECK(parse_poly("  h \n + 1") == h + 1);
  CHECK(parse_poly("i*h + (1-i)/2", Field::gaussian) ==
        Scalar::imaginary_unit() * h + (Scalar(1) - Scalar::imaginary_unit()) * q(1, 2));
  CHECK(parse_scalar("-7/21") == q(-1, 3));
  CHECK_THROWS_AS(parse_scalar("h"), ParseError);
}

TEST_CASE("matrices and words") {
  CHECK(parse_mat("[[1, h], [0, 1]]") == PolyMat2(1, h, 0, 1));
  CHECK(parse_mat("[[-h^4-2*h,-h^3-1],[-h^6-h^3+1,-h^5]]") ==
        PolyMat2(-pw(4) - 2 * h, -pw(3) - 1, -pw(6) - pw(3) + 1, -pw(5)));
  CHECK(parse_eword("diag(2,1/2) E(h) E(0)") == EWord{{2, q(1, 2)}, {h, 0}});
  CHECK(parse_eword("E(h)E(h^2)") == EWord{{1, 1}, {h, pw(2)}});
  CHECK(parse_eword("") == EWord{});
  CHECK(parse_matrix_like("E(h)") == PolyMat2::E(h));
  CHECK(parse_matrix_like("[[2,0],[0,3]]") == PolyMat2::diag(2, 3));
  CHECK(detect_kind("E(h) E(0)") == ExprKind::eword);
  CHECK(detect_kind("diag(1,2)") == ExprKind::eword);
  CHECK(detect_kind(" [[1,0],[0,1]]") == ExprKind::matrix);
  CHECK(detect_kind("h^2+1") == ExprKind::poly);
  CHECK_THROWS_AS(parse_eword("diag(0,1) E(h)"), ParseError);
  CHECK_THROWS_AS(parse_eword("diag(h,1)"), ParseError);
}

TEST_CASE("triples and fields") {
  CHECK(parse_triple("2,0,0") == TripleA{2, 0, 0});
  CHECK(parse_triple(" 0, -2, 0 ") == TripleA{0, -2, 0});
  CHECK_THROWS_AS(parse_triple("1,0,0"), PreconditionError);
  CHECK_THROWS_AS(parse_triple("-1,2,1"), PreconditionError);
  CHECK_THROWS_AS(parse_triple("2,0"), ParseError);
  CHECK(parse_field("rational") == Field::rational);
  CHECK(parse_field("gaussian") == Field::gaussian);
  CHECK_THROWS_AS(parse_field("real"), ParseError);
}

TEST_CASE("error positions") {
  expect_error("2*h^2 + (3h", "expected ')'", 12);
  expect_error("h/(h+1)", "division by a nonconstant", 2);
  expect_error("h/0", "division by a nonconstant", 2);
  expect_error("i*h", "gaussian field", 1);
  expect_error("h^", "exponent", 3);
  expect_error("h^12345", "exponent too large", 3);
  expect_error("2**h", "unexpected character '*'", 3);
  expect_error("", "unexpected end of input", 1);
  expect_error("h + 1)", "unexpected", 6);
  try {
    parse_mat("[[1,h],\n[0]]");
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("property: print then parse is the identity") {
  Rng rng(701);
  for (int t = 0; t < 300; ++t) {
    Field f = t % 2 ? Field::gaussian : Field::rational;
    Poly p = rng.poly(6, f);
    CHECK(parse_poly(p.to_string(), f) == p);
    PolyMat2 A = rng.unit(3, 2, f);
    CHECK(parse_mat(A.to_string(), f) == A);
    EWord w = rng.word(5, 3, f);
    CHECK(parse_eword(to_string(w), f) == w);
    Scalar s = rng.scalar(f);
    CHECK(parse_scalar(s.to_string(), f) == s);
  }
}
