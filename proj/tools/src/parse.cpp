#include <disres/cli/parse.hpp>

#include <cctype>
#include <string>

namespace disres::cli {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

constexpr long kMaxExponent = 1 << 16;

class Parser {
 public:
  Parser(std::string_view src, std::string_view var) : src_(src), var_(var) { advance(); }

  RatFun parse() {
    RatFun r = expr();
    if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, tok_.offset); }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_.offset = pos_;
    if (pos_ >= src_.size()) {
      tok_ = {Tok::End, pos_, "end of input"};
      return;
    }
    const auto rest = src_.substr(pos_);
    // U+2212 minus sign, U+00B7 middle dot, U+00D7 multiplication sign
    if (rest.starts_with("\xE2\x88\x92")) {
      tok_ = {Tok::Minus, pos_, "\xE2\x88\x92"};
      pos_ += 3;
      return;
    }
    if (rest.starts_with("\xC2\xB7") || rest.starts_with("\xC3\x97")) {
      tok_ = {Tok::Star, pos_, std::string(rest.substr(0, 2))};
      pos_ += 2;
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      tok_ = {Tok::Number, pos_, std::string(src_.substr(pos_, end - pos_))};
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
      tok_ = {Tok::Ident, pos_, std::string(src_.substr(pos_, end - pos_))};
      pos_ = end;
      return;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
    tok_ = {k, pos_, std::string(1, c)};
    ++pos_;
  }

  RatFun expr() {
    RatFun acc = term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const bool minus = tok_.kind == Tok::Minus;
      advance();
      RatFun rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  RatFun term() {
    RatFun acc = unary();
    for (;;) {
      if (tok_.kind == Tok::Star) {
        advance();
        acc *= unary();
      } else if (tok_.kind == Tok::Slash) {
        const std::size_t at = tok_.offset;
        advance();
        RatFun rhs = unary();
        if (rhs.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero at offset " + std::to_string(at));
        acc /= rhs;
      } else if (tok_.kind == Tok::LParen || tok_.kind == Tok::Ident || tok_.kind == Tok::Number) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RatFun unary() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return -unary();
    }
    if (tok_.kind == Tok::Plus) {
      advance();
      return unary();
    }
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (tok_.kind != Tok::Caret) return base;
    advance();
    const long e = exponent();
    if (e < 0 && base.is_zero()) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
    if (tok_.kind == Tok::Caret) fail("chained exponents need parentheses");
    return base.pow(e);
  }

  long exponent() {
    bool paren = false;
    if (tok_.kind == Tok::LParen) {
      paren = true;
      advance();
    }
    bool negative = false;
    while (tok_.kind == Tok::Minus || tok_.kind == Tok::Plus) {
      negative ^= tok_.kind == Tok::Minus;
      advance();
    }
    if (tok_.kind != Tok::Number) fail("exponent must be an integer literal");
    if (tok_.text.size() > 6 || std::stol(tok_.text) > kMaxExponent) fail("exponent too large");
    long e = std::stol(tok_.text);
    advance();
    if (paren) {
      if (tok_.kind != Tok::RParen) fail("expected ')'");
      advance();
    }
    return negative ? -e : e;
  }

  RatFun atom() {
    switch (tok_.kind) {
      case Tok::Number: {
        RatFun r = RatFun::constant(Rat(Int(tok_.text)));
        advance();
        return r;
      }
      case Tok::Ident: {
        if (tok_.text != var_) {
          throw Error(ErrorCode::UnknownVariable,
                      "unknown variable '" + tok_.text + "' at offset " + std::to_string(tok_.offset));
        }
        advance();
        return RatFun::x();
      }
      case Tok::LParen: {
        advance();
        RatFun r = expr();
        if (tok_.kind != Tok::RParen) fail("expected ')'");
        advance();
        return r;
      }
      default:
        fail("unexpected '" + tok_.text + "'");
    }
  }

  std::string_view src_;
  std::string_view var_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, 0, {}};
};

}  // namespace

RatFun parse_ratfun(std::string_view text, std::string_view var) { return Parser(text, var).parse(); }

}  // namespace disres::cli
