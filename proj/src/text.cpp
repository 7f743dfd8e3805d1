#include "sl2/text.hpp"

#include <cctype>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

class Parser {
 public:
  Parser(std::string_view s, Field f) : s_(s), field_(f) {}

  Poly poly() {
    Poly p = expr();
    return p;
  }

  PolyMat2 matrix() {
    expect('[');
    expect('[');
    Poly a = expr();
    expect(',');
    Poly b = expr();
    expect(']');
    expect(',');
    expect('[');
    Poly c = expr();
    expect(',');
    Poly d = expr();
    expect(']');
    expect(']');
    return {a, b, c, d};
  }

  EWord eword() {
    EWord w;
    skip_ws();
    if (peek_word() == "diag") {
      std::size_t at = pos_;
      word();
      expect('(');
      Poly a = expr();
      expect(',');
      Poly b = expr();
      expect(')');
      if (!a.is_constant() || !b.is_constant() || a.is_zero() || b.is_zero())
        fail("diagonal entries must be nonzero constants", at);
      w.front = {a.leading(), b.leading()};
    }
    while (true) {
      skip_ws();
      if (at_end()) break;
      std::size_t at = pos_;
      if (word() != "E") fail("expected E(...)", at);
      expect('(');
      w.factors.push_back(expr());
      expect(')');
    }
    return w;
  }

  void finish() {
    skip_ws();
    if (!at_end()) fail("unexpected trailing input", pos_);
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return at_end() ? '\0' : s_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view peek_word() {
    std::size_t e = pos_;
    while (e < s_.size() && std::isalpha(static_cast<unsigned char>(s_[e]))) ++e;
    return s_.substr(pos_, e - pos_);
  }

  std::string_view word() {
    auto w = peek_word();
    pos_ += w.size();
    return w;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        std::size_t at = pos_++;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a nonconstant or zero expression", at);
        acc *= d.leading().inverse();
      } else if (c == 'h' || c == 'i' || c == '(') {
        acc *= unary();  // implicit product, e.g. 3h
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      std::size_t e = pos_;
      while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
      if (e == pos_) fail("expected a nonnegative integer exponent", at);
      if (e - pos_ > 4) fail("exponent too large", at);
      int n = std::stoi(std::string(s_.substr(pos_, e - pos_)));
      pos_ = e;
      Poly r(1);
      for (int i = 0; i < n; ++i) r *= base;
      return r;
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = pos_;
      while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
      mpz_class n(std::string(s_.substr(pos_, e - pos_)));
      pos_ = e;
      return Poly(Scalar(mpq_class(n)));
    }
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      expect(')');
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto w = word();
      if (w == "h") return Poly::h();
      if (w == "i") {
        if (field_ != Field::gaussian) fail("the imaginary unit needs the gaussian field", at);
        return Poly(Scalar::imaginary_unit());
      }
      fail("unknown symbol '" + std::string(w) + "'", at);
    }
    if (at_end()) fail("unexpected end of input", at);
    fail(std::string("unexpected character '") + c + "'", at);
  }

  std::string_view s_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, Field field) {
  Parser p(text, field);
  Poly r = p.poly();
  p.finish();
  return r;
}

Scalar parse_scalar(std::string_view text, Field field) {
  Parser p(text, field);
  Poly r = p.poly();
  p.finish();
  if (!r.is_constant()) p.fail("expected a constant", 0);
  return r.coeff(0);
}

PolyMat2 parse_mat(std::string_view text, Field field) {
  Parser p(text, field);
  PolyMat2 m = p.matrix();
  p.finish();
  return m;
}

EWord parse_eword(std::string_view text, Field field) {
  Parser p(text, field);
  EWord w = p.eword();
  p.finish();
  return w;
}

ExprKind detect_kind(std::string_view text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string_view::npos && text[i] == '[') return ExprKind::matrix;
  if (text.find("E(") != std::string_view::npos || text.find("diag") != std::string_view::npos)
    return ExprKind::eword;
  // E with whitespace before the parenthesis
  for (std::size_t j = 0; j < text.size(); ++j)
    if (text[j] == 'E') return ExprKind::eword;
  return ExprKind::poly;
}

PolyMat2 parse_matrix_like(std::string_view text, Field field) {
  if (detect_kind(text) == ExprKind::matrix) return parse_mat(text, field);
  return expand(parse_eword(text, field));
}

TripleA parse_triple(std::string_view text) {
  std::string s(text);
  int v[3];
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    std::size_t used = 0;
    try {
      v[k] = std::stoi(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer in triple", 1, static_cast<int>(pos) + 1);
    }
    pos += used;
    if (k < 2) {
      while (pos < s.size() && s[pos] == ' ') ++pos;
      if (pos >= s.size() || s[pos] != ',') throw ParseError("expected ',' in triple", 1, static_cast<int>(pos) + 1);
      ++pos;
    }
  }
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos != s.size()) throw ParseError("unexpected trailing input in triple", 1, static_cast<int>(pos) + 1);
  TripleA t{v[0], v[1], v[2]};
  if (!t.valid()) throw PreconditionError("triple " + t.to_string() + " does not satisfy a- + |a0| + a+ = 2");
  return t;
}

Field parse_field(std::string_view text) {
  if (text == "rational") return Field::rational;
  if (text == "gaussian") return Field::gaussian;
  throw ParseError("unknown field '" + std::string(text) + "'", 1, 1);
}

}  // namespace sl2
