#include <cctype>
#include <string>

#include "dseq/errors.hpp"
#include "dseq/fp.hpp"
#include "dseq/polynomial.hpp"

namespace dseq {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := integer | variable ['^' integer]
class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial result = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("polynomial syntax error at position " + std::to_string(pos_) + ": " +
                      what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // digits reduced mod p on the fly, so arbitrarily long integer literals work
  std::int64_t parse_integer_mod_p() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    const std::int64_t p = ring_->characteristic();
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = (v * 10 + (text_[pos_] - '0')) % p;
      ++pos_;
    }
    return v;
  }

  int parse_small_exponent() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an exponent");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 100000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  std::string parse_identifier() {
    skip_ws();
    auto alpha = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (pos_ >= text_.size() || !alpha(text_[pos_])) fail("expected a variable name");
    std::size_t start = pos_;
    while (pos_ < text_.size() && alnum(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial parse_factor() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(ring_, parse_integer_mod_p());
    const std::size_t at = pos_;
    const std::string name = parse_identifier();
    const int idx = ring_->variable_index(name);
    if (idx < 0) {
      pos_ = at;
      fail("unknown variable '" + name + "'");
    }
    Polynomial v = Polynomial::variable(ring_, idx);
    if (eat('^')) return v.pow(parse_small_exponent());
    return v;
  }

  Polynomial parse_term() {
    Polynomial f = parse_factor();
    while (eat('*')) f = f * parse_factor();
    return f;
  }

  Polynomial parse_expr() {
    Polynomial acc = Polynomial::zero(ring_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    while (true) {
      Polynomial t = parse_term();
      acc = negate ? acc - t : acc + t;
      if (eat('-'))
        negate = true;
      else if (eat('+'))
        negate = false;
      else
        break;
    }
    return acc;
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return Parser(text, ring).run();
}

}  // namespace dseq
