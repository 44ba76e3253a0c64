#include "freealg/expr.hpp"

#include "freealg/bracketed.hpp"

#include <cctype>
#include <sstream>

namespace freealg {

namespace {

struct Token {
  enum class Type { Number, X, Y, Comm, Box, T, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };
  Type type;
  Rational number;
  bool number_is_integer = false;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      bump();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.type = Token::Type::End;
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = read_digits();
      tok_.number_is_integer = true;
      if (pos_ < src_.size() && src_[pos_] == '/') {
        bump();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
          throw ParseError("expected digits after '/'", line_, col_);
        digits += "/" + read_digits();
        tok_.number_is_integer = false;
      }
      tok_.type = Token::Type::Number;
      tok_.number = Rational::from_string(digits);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() &&
             std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
        name += src_[pos_];
        bump();
      }
      if (name == "X") tok_.type = Token::Type::X;
      else if (name == "Y") tok_.type = Token::Type::Y;
      else if (name == "T") tok_.type = Token::Type::T;
      else if (name == "comm") tok_.type = Token::Type::Comm;
      else if (name == "box") tok_.type = Token::Type::Box;
      else throw ParseError("unknown name '" + name + "'", tok_.line, tok_.col);
      return;
    }
    bump();
    switch (c) {
      case '+': tok_.type = Token::Type::Plus; return;
      case '-': tok_.type = Token::Type::Minus; return;
      case '*': tok_.type = Token::Type::Star; return;
      case '^': tok_.type = Token::Type::Caret; return;
      case '(': tok_.type = Token::Type::LParen; return;
      case ')': tok_.type = Token::Type::RParen; return;
      case ',': tok_.type = Token::Type::Comma; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tok_.line,
                         tok_.col);
    }
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      out += src_[pos_];
      bump();
    }
    return out;
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

class Parser {
public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    const Token& t = lex_.peek();
    if (t.type != Token::Type::End)
      throw ParseError("unexpected trailing input", t.line, t.col);
    return e;
  }

private:
  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      const Token& t = lex_.peek();
      if (t.type == Token::Type::Plus) {
        lex_.take();
        e = make({Expr::Kind::Add, {}, e, term()});
      } else if (t.type == Token::Type::Minus) {
        lex_.take();
        e = make({Expr::Kind::Sub, {}, e, term()});
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (lex_.peek().type == Token::Type::Star) {
      lex_.take();
      e = make({Expr::Kind::Mul, {}, e, factor()});
    }
    return e;
  }

  ExprPtr factor() {
    if (lex_.peek().type == Token::Type::Minus) {
      lex_.take();
      return make({Expr::Kind::Neg, {}, factor(), nullptr});
    }
    ExprPtr base = primary();
    if (lex_.peek().type == Token::Type::Caret) {
      lex_.take();
      Token t = lex_.take();
      if (t.type != Token::Type::Number || !t.number_is_integer || t.number.sign() < 0)
        throw ParseError("exponent must be a nonnegative integer", t.line, t.col);
      Expr p{Expr::Kind::Pow, {}, base, nullptr};
      p.exponent = static_cast<int>(t.number.numerator().get_si());
      return make(std::move(p));
    }
    return base;
  }

  ExprPtr primary() {
    Token t = lex_.take();
    switch (t.type) {
      case Token::Type::Number:
        return make({Expr::Kind::Number, t.number, nullptr, nullptr});
      case Token::Type::X:
        return make({Expr::Kind::SymX, {}, nullptr, nullptr});
      case Token::Type::Y:
        return make({Expr::Kind::SymY, {}, nullptr, nullptr});
      case Token::Type::LParen: {
        ExprPtr e = expr();
        expect(Token::Type::RParen, "')'");
        return e;
      }
      case Token::Type::Comm: {
        expect(Token::Type::LParen, "'('");
        ExprPtr a = expr();
        expect(Token::Type::Comma, "','");
        ExprPtr b = expr();
        expect(Token::Type::RParen, "')'");
        return make({Expr::Kind::Comm, {}, a, b});
      }
      case Token::Type::Box: {
        expect(Token::Type::LParen, "'('");
        ExprPtr a = expr();
        expect(Token::Type::RParen, "')'");
        return make({Expr::Kind::Box, {}, a, nullptr});
      }
      case Token::Type::T: {
        expect(Token::Type::LParen, "'('");
        Token idx = lex_.take();
        if (idx.type != Token::Type::Number || !idx.number_is_integer ||
            idx.number.sign() < 1)
          throw ParseError("T index must be a positive integer", idx.line, idx.col);
        expect(Token::Type::RParen, "')'");
        Expr e{Expr::Kind::TSeq, {}, nullptr, nullptr};
        e.index = static_cast<int>(idx.number.numerator().get_si());
        return make(std::move(e));
      }
      default:
        throw ParseError("expected an expression", t.line, t.col);
    }
  }

  void expect(Token::Type type, const char* what) {
    Token t = lex_.take();
    if (t.type != type) throw ParseError(std::string("expected ") + what, t.line, t.col);
  }

  Lexer lex_;
};

enum Precedence { kAdd = 1, kMul = 2, kUnary = 3, kPow = 4, kAtom = 5 };

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return kAdd;
    case Expr::Kind::Mul: return kMul;
    case Expr::Kind::Neg: return kUnary;
    case Expr::Kind::Pow: return kPow;
    default: return kAtom;
  }
}

void print_rec(const Expr& e, std::ostream& out) {
  auto wrapped = [&](const ExprPtr& child, int min_prec) {
    if (precedence(*child) < min_prec) {
      out << "(";
      print_rec(*child, out);
      out << ")";
    } else {
      print_rec(*child, out);
    }
  };
  switch (e.kind) {
    case Expr::Kind::Number: out << e.number.str(); return;
    case Expr::Kind::SymX: out << "X"; return;
    case Expr::Kind::SymY: out << "Y"; return;
    case Expr::Kind::Add:
      print_rec(*e.lhs, out);
      out << " + ";
      wrapped(e.rhs, kMul);  // right operand of +/- binds one level tighter
      return;
    case Expr::Kind::Sub:
      print_rec(*e.lhs, out);
      out << " - ";
      wrapped(e.rhs, kMul);
      return;
    case Expr::Kind::Mul:
      wrapped(e.lhs, kMul);
      out << "*";
      wrapped(e.rhs, kUnary);  // '*' is left-associative
      return;
    case Expr::Kind::Neg:
      out << "-";
      wrapped(e.lhs, kUnary);
      return;
    case Expr::Kind::Pow:
      wrapped(e.lhs, kAtom);
      out << "^" << e.exponent;
      return;
    case Expr::Kind::Comm:
      out << "comm(";
      print_rec(*e.lhs, out);
      out << ", ";
      print_rec(*e.rhs, out);
      out << ")";
      return;
    case Expr::Kind::Box:
      out << "box(";
      print_rec(*e.lhs, out);
      out << ")";
      return;
    case Expr::Kind::TSeq: out << "T(" << e.index << ")"; return;
  }
}

}  // namespace

ExprPtr parse_expr(const std::string& src) { return Parser(src).parse(); }

std::string print_expr(const ExprPtr& e) {
  std::ostringstream out;
  print_rec(*e, out);
  return out.str();
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Number: return a->number == b->number;
    case Expr::Kind::SymX:
    case Expr::Kind::SymY: return true;
    case Expr::Kind::Pow:
      return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
    case Expr::Kind::TSeq: return a->index == b->index;
    case Expr::Kind::Neg:
    case Expr::Kind::Box: return expr_equal(a->lhs, b->lhs);
    default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
}

NCPoly eval_expr(const ExprPtr& e, const EvalContext& ctx) {
  auto need_f = [&]() -> const NCPoly& {
    if (!ctx.f)
      throw std::domain_error("box/T require an ambient F; pass --f");
    return *ctx.f;
  };
  switch (e->kind) {
    case Expr::Kind::Number: return NCPoly(e->number);
    case Expr::Kind::SymX: return NCPoly::x();
    case Expr::Kind::SymY: return NCPoly::y();
    case Expr::Kind::Add: return eval_expr(e->lhs, ctx) + eval_expr(e->rhs, ctx);
    case Expr::Kind::Sub: return eval_expr(e->lhs, ctx) - eval_expr(e->rhs, ctx);
    case Expr::Kind::Mul: return eval_expr(e->lhs, ctx) * eval_expr(e->rhs, ctx);
    case Expr::Kind::Neg: return -eval_expr(e->lhs, ctx);
    case Expr::Kind::Pow: return pow(eval_expr(e->lhs, ctx), e->exponent);
    case Expr::Kind::Comm:
      return commutator(eval_expr(e->lhs, ctx), eval_expr(e->rhs, ctx));
    case Expr::Kind::Box: return box(eval_expr(e->lhs, ctx), need_f());
    case Expr::Kind::TSeq: return t_sequence(e->index, need_f());
  }
  throw std::logic_error("eval_expr: unreachable");
}

}  // namespace freealg
