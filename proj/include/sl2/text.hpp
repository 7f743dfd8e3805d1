#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sl2/modules.hpp"

namespace sl2 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// Grammar (whitespace-insensitive):
//   poly   := sum of terms with + - * / ^ and parentheses over h, integers
//             and (gaussian field only) i; "3h" is read as 3*h
//   matrix := "[[" poly "," poly "],[" poly "," poly "]]"
//   eword  := ("diag(" poly "," poly ")")? ("E(" poly ")")*
// Division is by nonzero constants only.

Scalar parse_scalar(std::string_view text, Field field = Field::rational);
Poly parse_poly(std::string_view text, Field field = Field::rational);
PolyMat2 parse_mat(std::string_view text, Field field = Field::rational);
EWord parse_eword(std::string_view text, Field field = Field::rational);

/// A matrix literal or an E-word (expanded).
PolyMat2 parse_matrix_like(std::string_view text, Field field = Field::rational);

enum class ExprKind { poly, matrix, eword };
ExprKind detect_kind(std::string_view text);

/// "a-,a0,a+"
TripleA parse_triple(std::string_view text);

Field parse_field(std::string_view text);

}  // namespace sl2
