#include "lpv/lexer.hpp"

#include <cctype>

#include "lpv/errors.hpp"

namespace lpv {

Lexer::Lexer(std::string_view text) : text_(text) { advance(); }

char Lexer::look(std::size_t off) const {
  return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
}

void Lexer::fail(const std::string& msg) const {
  throw ParseError(current_.line, current_.column, msg);
}

Token Lexer::next() {
  Token t = current_;
  advance();
  return t;
}

void Lexer::advance() {
  // skip whitespace and % comments
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '%') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      continue;
    }
    if (c == '\n') {
      ++pos_;
      ++line_;
      column_ = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
      ++column_;
      continue;
    }
    break;
  }

  current_ = Token{};
  current_.line = line_;
  current_.column = column_;
  if (pos_ >= text_.size()) {
    current_.kind = Tok::End;
    return;
  }

  auto take = [&](std::size_t n, Tok k, const char* text) {
    pos_ += n;
    column_ += static_cast<int>(n);
    current_.kind = k;
    current_.text = text;
  };

  char c = text_[pos_];
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::uint64_t v = 0;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(look()))) {
      char d = text_[pos_++];
      ++column_;
      digits += d;
      if (v > (UINT64_MAX - 9) / 10)
        throw ParseError(line_, column_, "integer literal too large");
      v = v * 10 + static_cast<std::uint64_t>(d - '0');
    }
    current_.kind = Tok::Int;
    current_.text = digits;
    current_.value = v;
    return;
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::string id;
    while (std::isalnum(static_cast<unsigned char>(look())) || look() == '_') {
      id += text_[pos_++];
      ++column_;
    }
    current_.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_')
                        ? Tok::Var
                        : Tok::Name;
    current_.text = std::move(id);
    return;
  }

  switch (c) {
    case '(': take(1, Tok::LParen, "("); return;
    case ')': take(1, Tok::RParen, ")"); return;
    case '[': take(1, Tok::LBracket, "["); return;
    case ']': take(1, Tok::RBracket, "]"); return;
    case ',': take(1, Tok::Comma, ","); return;
    case '|': take(1, Tok::Bar, "|"); return;
    case ';': take(1, Tok::Semi, ";"); return;
    case '+': take(1, Tok::Plus, "+"); return;
    case ':':
      if (look(1) == '-') { take(2, Tok::If, ":-"); return; }
      if (look(1) == '=') { take(2, Tok::Define, ":="); return; }
      break;
    case '\\':
      if (look(1) == '=' && look(2) == '=') { take(3, Tok::NotEq, "\\=="); return; }
      if (look(1) == '+') { take(2, Tok::NafNot, "\\+"); return; }
      break;
    case '=':
      if (look(1) == '=') { take(2, Tok::EqEq, "=="); return; }
      if (look(1) == '<') { take(2, Tok::LessEq, "=<"); return; }
      take(1, Tok::Assign, "=");
      return;
    case '<': take(1, Tok::Less, "<"); return;
    case '>':
      if (look(1) == '=') { take(2, Tok::GreaterEq, ">="); return; }
      take(1, Tok::Greater, ">");
      return;
    case '.': {
      char after = look(1);
      bool terminator = after == '\0' || after == '%' ||
                        std::isspace(static_cast<unsigned char>(after));
      if (terminator) { take(1, Tok::Dot, "."); return; }
      break;
    }
    default:
      break;
  }
  throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
}

}  // namespace lpv
