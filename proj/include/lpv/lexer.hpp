#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lpv {

enum class Tok {
  End,
  Name,      // lowercase-led identifier
  Var,       // uppercase- or underscore-led identifier
  Int,       // nonnegative integer literal
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Bar,
  Dot,       // clause terminator
  If,        // :-
  Define,    // :=
  Semi,
  NafNot,    // \+
  EqEq,      // ==
  NotEq,     // \==
  LessEq,    // =<
  Less,
  Greater,
  GreaterEq, // >=
  Assign,    // =
  Plus,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::uint64_t value = 0;  // for Int
  int line = 1;
  int column = 1;
};

/// Tokenizer for the clause, specification, and level-mapping syntax.
/// `%` starts a line comment. A `.` terminates a clause only when followed
/// by whitespace, a comment, or end of input.
class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek() const { return current_; }
  Token next();  // returns current token and advances

  [[noreturn]] void fail(const std::string& msg) const;

 private:
  void advance();
  char look(std::size_t off = 0) const;

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

}  // namespace lpv
