#include <cctype>

#include "goedel/errors.hpp"
#include "goedel/expr.hpp"

namespace goedel {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr top() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) throw SyntaxError("expected a symbol", start);
    return s_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Nat number() {
    skip_ws();
    std::size_t start = pos_;
    std::string_view w = word();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(w[i])))
        throw SyntaxError("expected a natural number", start + i);
    return Nat(std::string(w), 10);
  }

  Expr expr() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    if (s_[pos_] != '(') {
      std::size_t start = pos_;
      std::string_view w = word();
      if (w == "0") return Expr::zero();
      if (w == "1") return Expr::one();
      throw SyntaxError("unknown atom '" + std::string(w) + "'", start);
    }
    ++pos_;
    std::size_t head_at = pos_;
    std::string_view head = word();
    Expr out;
    if (head == "v") {
      Nat n = number();
      if (!n.fits_ulong_p()) throw SyntaxError("variable index too large", head_at);
      out = Expr::variable(n.get_ui());
    } else if (head == "num") {
      out = Expr::numeral(number());
    } else if (head == "S") {
      out = Expr::succ(expr());
    } else if (head == "p") {
      out = Expr::prime(expr());
    } else if (head == "not") {
      out = Expr::neg(expr());
    } else if (head == "+" || head == "*" || head == "=" || head == "and" || head == "forall" ||
               head == "imp" || head == "or") {
      Expr a = expr();
      Expr b = expr();
      if (head == "+") out = Expr::add(a, b);
      else if (head == "*") out = Expr::mul(a, b);
      else if (head == "=") out = Expr::eq(a, b);
      else if (head == "and") out = Expr::conj(a, b);
      else if (head == "forall") out = Expr::forall(a, b);
      else if (head == "imp") out = Expr::neg(Expr::conj(a, Expr::neg(b)));
      else out = Expr::neg(Expr::conj(Expr::neg(a), Expr::neg(b)));
    } else {
      throw SyntaxError("unknown constructor '" + std::string(head) + "'", head_at);
    }
    expect(')');
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).top(); }

}  // namespace goedel
