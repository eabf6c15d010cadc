#include "twistor/expr.hpp"

#include <cctype>

#include "twistor/errors.hpp"

namespace twistor {

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      current_ = {Token::End, "", start};
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      current_ = {Token::Number, src_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_'))
        ++pos_;
      current_ = {Token::Ident, src_.substr(start, pos_ - start), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Token::Plus, "+", start}; return;
      case '-': current_ = {Token::Minus, "-", start}; return;
      case '*': current_ = {Token::Star, "*", start}; return;
      case '^': current_ = {Token::Caret, "^", start}; return;
      case '/': current_ = {Token::Slash, "/", start}; return;
      case '(': current_ = {Token::LParen, "(", start}; return;
      case ')': current_ = {Token::RParen, ")", start}; return;
      default:
        fail(ErrorKind::SyntaxError,
             "unexpected character '" + std::string(1, c) + "' at position " +
                 std::to_string(start));
    }
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(const std::string& src, std::string var) : lex_(src), var_(std::move(var)) {}

  MultiPoly parse() {
    MultiPoly p = expression();
    if (lex_.current().kind != Token::End)
      fail(ErrorKind::SyntaxError, "unexpected token '" + lex_.current().text + "' at position " +
                                       std::to_string(lex_.current().pos));
    return p;
  }

 private:
  Lexer lex_;
  std::string var_;

  MultiPoly expression() {
    MultiPoly total = term();
    while (lex_.current().kind == Token::Plus || lex_.current().kind == Token::Minus) {
      bool minus = lex_.current().kind == Token::Minus;
      lex_.advance();
      MultiPoly t = term();
      if (minus)
        total -= t;
      else
        total += t;
    }
    return total;
  }

  MultiPoly term() {
    MultiPoly total = factor();
    while (lex_.current().kind == Token::Star) {
      lex_.advance();
      total = total * factor();
    }
    return total;
  }

  MultiPoly factor() {
    bool negate = false;
    while (lex_.current().kind == Token::Plus || lex_.current().kind == Token::Minus) {
      if (lex_.current().kind == Token::Minus) negate = !negate;
      lex_.advance();
    }
    MultiPoly base = primary();
    while (lex_.current().kind == Token::Caret) {
      lex_.advance();
      if (lex_.current().kind != Token::Number)
        fail(ErrorKind::SyntaxError, "exponent must be a nonnegative integer at position " +
                                         std::to_string(lex_.current().pos));
      unsigned long e = std::stoul(lex_.current().text);
      lex_.advance();
      base = pow(base, static_cast<std::uint32_t>(e));
    }
    return negate ? -base : base;
  }

  MultiPoly primary() {
    const Token tok = lex_.current();
    switch (tok.kind) {
      case Token::Number: {
        lex_.advance();
        if (lex_.current().kind == Token::Slash) {
          lex_.advance();
          if (lex_.current().kind != Token::Number)
            fail(ErrorKind::SyntaxError, "expected integer denominator at position " +
                                             std::to_string(lex_.current().pos));
          Rational q = parse_rational(tok.text + "/" + lex_.current().text);
          lex_.advance();
          return MultiPoly::constant(GaussianRational(std::move(q)));
        }
        return MultiPoly::constant(GaussianRational(parse_rational(tok.text)));
      }
      case Token::Ident: {
        lex_.advance();
        if (tok.text == "i") return MultiPoly::constant(GaussianRational::unit_i());
        if (!var_.empty() && tok.text == var_) return MultiPoly::variable(var_);
        fail(ErrorKind::WrongVariable, "undeclared identifier '" + tok.text + "' at position " +
                                           std::to_string(tok.pos));
      }
      case Token::LParen: {
        lex_.advance();
        MultiPoly inner = expression();
        if (lex_.current().kind != Token::RParen)
          fail(ErrorKind::SyntaxError,
               "expected ')' at position " + std::to_string(lex_.current().pos));
        lex_.advance();
        return inner;
      }
      default:
        fail(ErrorKind::SyntaxError, "unexpected token '" + tok.text + "' at position " +
                                         std::to_string(tok.pos));
    }
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& src, const std::string& var) {
  return Parser(src, var).parse();
}

GaussianRational parse_complex_constant(const std::string& src) {
  MultiPoly p = parse_poly(src, "");
  return p.constant_value();
}

std::string render_poly(const MultiPoly& p) { return p.to_string(); }

}  // namespace twistor
