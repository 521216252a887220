// A small infix expression reader shared by every text grammar.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'|'/'] factor)*      juxtaposition multiplies
//   factor  := primary ['^' exponent]
//   primary := number | name | name '(' expr ')' | '(' expr ')'
//   exponent:= ['-'] number | '(' raw text up to the matching ')' ')'
//
// Values are built through an Atoms policy; exponents are handed over as raw
// text so each domain can read its own exponent syntax (integers, tuples,
// dyadic fractions).
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fieldunits {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class V, class Atoms>
class ExpressionReader {
 public:
  ExpressionReader(std::string_view text, Atoms& atoms) : text_(text), atoms_(atoms) {}

  V read() {
    V value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool starts_primary() {
    const char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  V expr() {
    V value = [&] {
      if (accept('-')) return atoms_.neg(term());
      accept('+');
      return term();
    }();
    for (;;) {
      if (accept('+'))
        value = atoms_.add(value, term());
      else if (accept('-'))
        value = atoms_.sub(value, term());
      else
        return value;
    }
  }

  V term() {
    V value = factor();
    for (;;) {
      if (accept('*'))
        value = atoms_.mul(value, factor());
      else if (accept('/'))
        value = atoms_.div(value, factor());
      else if (starts_primary())
        value = atoms_.mul(value, factor());
      else
        return value;
    }
  }

  V factor() {
    // `name^e` goes straight to the atoms so that exponents a value type
    // cannot express (x^(1/2), x^(1,-2)) never need the bare name.
    const std::size_t start = pos_;
    if (std::string id = identifier(); !id.empty() && !atoms_.is_function(id)) {
      if (accept('^')) return atoms_.power_of_name(id, read_exponent());
    }
    pos_ = start;
    V base = primary();
    if (!accept('^')) return base;
    return atoms_.pow(base, read_exponent());
  }

  std::string identifier() {
    const char c = peek();
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return {};
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::string read_exponent() {
    if (accept('(')) {
      const std::size_t begin = pos_;
      int depth = 1;
      while (pos_ < text_.size()) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')' && --depth == 0) break;
        ++pos_;
      }
      if (pos_ >= text_.size()) fail("unbalanced parentheses in exponent");
      std::string raw(text_.substr(begin, pos_ - begin));
      ++pos_;
      return raw;
    }
    skip_space();
    const std::size_t begin = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == begin || text_.substr(begin, pos_ - begin) == "-") fail("expected an exponent");
    return std::string(text_.substr(begin, pos_ - begin));
  }

  V primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      V value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return atoms_.number(text_.substr(begin, pos_ - begin));
    }
    if (std::string id = identifier(); !id.empty()) {
      if (atoms_.is_function(id)) {
        if (!accept('(')) fail("expected '(' after " + id);
        V arg = expr();
        if (!accept(')')) fail("expected ')'");
        return atoms_.call(id, arg);
      }
      return atoms_.name(id);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Atoms& atoms_;
  std::size_t pos_ = 0;
};

template <class V, class Atoms>
V read_expression(std::string_view text, Atoms& atoms) {
  return ExpressionReader<V, Atoms>(text, atoms).read();
}

/// Reads a signed decimal integer occupying all of `text` (spaces allowed).
long long parse_integer(std::string_view text);

}  // namespace fieldunits
