#pragma once

#include <padic_lattes/upoly.hpp>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace padic_lattes {

/// Syntax error with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace parse_detail {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | atom ('^' digits)?
// atom   := digits ('/' digits)? | 't' | 'z' | 'u' | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  UPoly parse() {
    UPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
    if (!saw_var_) p.set_var('t');
    return p;
  }

 private:
  UPoly expr() {
    UPoly acc = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  UPoly term() {
    UPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  UPoly factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    UPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      BigInt e = digits();
      if (e > 4096) throw ParseError("exponent too large", at);
      return base.pow(e.convert_to<unsigned long>());
    }
    return base;
  }

  UPoly atom() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = digits();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        BigInt den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
        return UPoly(Rat(num, den), var_);
      }
      return UPoly(Rat(num), var_);
    }
    if (c == 't' || c == 'z' || c == 'u') {
      if (saw_var_ && var_ != c)
        throw ParseError("mixed variables", pos_);
      saw_var_ = true;
      var_ = c;
      ++pos_;
      return UPoly::variable(var_);
    }
    if (c == '(') {
      ++pos_;
      UPoly p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    throw ParseError("expected number, variable or '('", pos_);
  }

  BigInt digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError("expected digits", start);
    return BigInt(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  const std::string& s_;
  std::size_t pos_ = 0;
  char var_ = 't';
  bool saw_var_ = false;
};

}  // namespace parse_detail

inline UPoly parse_poly(const std::string& text) {
  return parse_detail::PolyParser(text).parse();
}

inline Rat parse_rat(const std::string& text) {
  UPoly p = parse_poly(text);
  if (p.degree() > 0) throw ParseError("expected a rational constant", 0);
  return p.coeff(0);
}

}  // namespace padic_lattes
