#include <genfourier/expr.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace genfourier::funcmodel {

ExprPtr Expr::number(double v) { return ExprPtr(new Expr(Kind::Number, v, nullptr, nullptr)); }

ExprPtr Expr::variable() { return ExprPtr(new Expr(Kind::Variable, 0.0, nullptr, nullptr)); }

ExprPtr Expr::unary(Kind k, ExprPtr a) {
  return ExprPtr(new Expr(k, 0.0, std::move(a), nullptr));
}

ExprPtr Expr::binary(Kind k, ExprPtr a, ExprPtr b) {
  return ExprPtr(new Expr(k, 0.0, std::move(a), std::move(b)));
}

double Expr::eval(double u) const {
  switch (kind_) {
    case Kind::Number: return value_;
    case Kind::Variable: return u;
    case Kind::Negate: return -a_->eval(u);
    case Kind::Add: return a_->eval(u) + b_->eval(u);
    case Kind::Sub: return a_->eval(u) - b_->eval(u);
    case Kind::Mul: return a_->eval(u) * b_->eval(u);
    case Kind::Div: return a_->eval(u) / b_->eval(u);
    case Kind::Pow: return std::pow(a_->eval(u), b_->eval(u));
    case Kind::Sin: return std::sin(a_->eval(u));
    case Kind::Cos: return std::cos(a_->eval(u));
    case Kind::Exp: return std::exp(a_->eval(u));
    case Kind::Floor: return std::floor(a_->eval(u));
    case Kind::Abs: return std::fabs(a_->eval(u));
  }
  return 0.0;
}

bool Expr::is_constant() const {
  switch (kind_) {
    case Kind::Number: return true;
    case Kind::Variable: return false;
    case Kind::Negate:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp:
    case Kind::Floor:
    case Kind::Abs: return a_->is_constant();
    default: return a_->is_constant() && b_->is_constant();
  }
}

namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Negate: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;  // atoms and calls
  }
}

void print(const Expr& e, std::string& out) {
  auto paren = [&](const Expr& sub, bool strict) {
    bool need = strict ? precedence(sub.kind()) <= precedence(e.kind())
                       : precedence(sub.kind()) < precedence(e.kind());
    if (need) out += '(';
    print(sub, out);
    if (need) out += ')';
  };
  switch (e.kind()) {
    case Expr::Kind::Number: {
      double v = e.number_value();
      if (v < 0 || (v == 0 && std::signbit(v))) {
        out += '(';
        out += format_number(v);
        out += ')';
      } else {
        out += format_number(v);
      }
      return;
    }
    case Expr::Kind::Variable: out += 'u'; return;
    case Expr::Kind::Negate:
      out += '-';
      paren(*e.child(), false);
      return;
    case Expr::Kind::Add:
      paren(*e.lhs(), false);
      out += " + ";
      paren(*e.rhs(), true);
      return;
    case Expr::Kind::Sub:
      paren(*e.lhs(), false);
      out += " - ";
      paren(*e.rhs(), true);
      return;
    case Expr::Kind::Mul:
      paren(*e.lhs(), false);
      out += " * ";
      paren(*e.rhs(), true);
      return;
    case Expr::Kind::Div:
      paren(*e.lhs(), false);
      out += " / ";
      paren(*e.rhs(), true);
      return;
    case Expr::Kind::Pow:
      paren(*e.lhs(), true);
      out += '^';
      paren(*e.rhs(), false);
      return;
    case Expr::Kind::Sin: out += "sin("; break;
    case Expr::Kind::Cos: out += "cos("; break;
    case Expr::Kind::Exp: out += "exp("; break;
    case Expr::Kind::Floor: out += "floor("; break;
    case Expr::Kind::Abs: out += "abs("; break;
  }
  print(*e.child(), out);
  out += ')';
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing input in expression at offset " + std::to_string(pos_) + ": '" +
                       std::string(text_.substr(pos_)) + "'");
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (consume('+'))
        e = Expr::binary(Expr::Kind::Add, e, term());
      else if (consume('-'))
        e = Expr::binary(Expr::Kind::Sub, e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (consume('*'))
        e = Expr::binary(Expr::Kind::Mul, e, factor());
      else if (consume('/'))
        e = Expr::binary(Expr::Kind::Div, e, factor());
      else
        return e;
    }
  }

  ExprPtr factor() {
    if (consume('-')) return Expr::unary(Expr::Kind::Negate, factor());
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (consume('^')) return Expr::binary(Expr::Kind::Pow, base, factor());
    return base;
  }

  ExprPtr primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!consume(')')) throw ParseError("expected ')' in expression");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    throw ParseError(std::string("unexpected character '") + c + "' in expression");
  }

  ExprPtr number() {
    skip_ws();
    const char* start = text_.data() + pos_;
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start) throw ParseError("bad numeric literal in expression");
    pos_ += static_cast<size_t>(end - start);
    return Expr::number(v);
  }

  ExprPtr name() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view id = text_.substr(start, pos_ - start);
    if (id == "u") return Expr::variable();
    Expr::Kind k;
    if (id == "sin")
      k = Expr::Kind::Sin;
    else if (id == "cos")
      k = Expr::Kind::Cos;
    else if (id == "exp")
      k = Expr::Kind::Exp;
    else if (id == "floor")
      k = Expr::Kind::Floor;
    else if (id == "abs")
      k = Expr::Kind::Abs;
    else
      throw ParseError("unknown identifier '" + std::string(id) + "' in expression");
    if (!consume('(')) throw ParseError("expected '(' after '" + std::string(id) + "'");
    ExprPtr arg = expr();
    if (!consume(')')) throw ParseError("expected ')' after call argument");
    return Expr::unary(k, arg);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

using Poly = std::vector<double>;

std::optional<Poly> poly_of(const Expr& e, int max_degree) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Number: return Poly{e.number_value()};
    case K::Variable: return Poly{0.0, 1.0};
    case K::Negate: {
      auto p = poly_of(*e.child(), max_degree);
      if (!p) return std::nullopt;
      for (double& c : *p) c = -c;
      return p;
    }
    case K::Add:
    case K::Sub: {
      auto pa = poly_of(*e.lhs(), max_degree);
      auto pb = poly_of(*e.rhs(), max_degree);
      if (!pa || !pb) return std::nullopt;
      if (pb->size() > pa->size()) pa->resize(pb->size(), 0.0);
      double sign = e.kind() == K::Add ? 1.0 : -1.0;
      for (size_t i = 0; i < pb->size(); ++i) (*pa)[i] += sign * (*pb)[i];
      return pa;
    }
    case K::Mul: {
      auto pa = poly_of(*e.lhs(), max_degree);
      auto pb = poly_of(*e.rhs(), max_degree);
      if (!pa || !pb) return std::nullopt;
      if (static_cast<int>(pa->size() + pb->size()) - 2 > max_degree) return std::nullopt;
      Poly out(pa->size() + pb->size() - 1, 0.0);
      for (size_t i = 0; i < pa->size(); ++i)
        for (size_t j = 0; j < pb->size(); ++j) out[i + j] += (*pa)[i] * (*pb)[j];
      return out;
    }
    case K::Div: {
      if (!e.rhs()->is_constant()) return std::nullopt;
      auto pa = poly_of(*e.lhs(), max_degree);
      if (!pa) return std::nullopt;
      double d = e.rhs()->eval(0.0);
      for (double& c : *pa) c /= d;
      return pa;
    }
    case K::Pow: {
      if (!e.rhs()->is_constant()) return std::nullopt;
      double xv = e.rhs()->eval(0.0);
      if (xv < 0 || xv != std::floor(xv) || xv > max_degree) return std::nullopt;
      int n = static_cast<int>(xv);
      auto pa = poly_of(*e.lhs(), max_degree);
      if (!pa) return std::nullopt;
      if ((static_cast<int>(pa->size()) - 1) * n > max_degree) return std::nullopt;
      Poly out{1.0};
      for (int k = 0; k < n; ++k) {
        Poly next(out.size() + pa->size() - 1, 0.0);
        for (size_t i = 0; i < out.size(); ++i)
          for (size_t j = 0; j < pa->size(); ++j) next[i + j] += out[i] * (*pa)[j];
        out = std::move(next);
      }
      return out;
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

ExprPtr parse_expression(std::string_view text) { return Parser(text).run(); }

std::optional<std::vector<double>> as_polynomial(const ExprPtr& e, int max_degree) {
  if (!e) return std::nullopt;
  auto p = poly_of(*e, max_degree);
  if (!p) return std::nullopt;
  while (p->size() > 1 && p->back() == 0.0) p->pop_back();
  return p;
}

ExprPtr operator+(ExprPtr a, ExprPtr b) {
  return Expr::binary(Expr::Kind::Add, std::move(a), std::move(b));
}
ExprPtr operator-(ExprPtr a, ExprPtr b) {
  return Expr::binary(Expr::Kind::Sub, std::move(a), std::move(b));
}
ExprPtr operator*(ExprPtr a, ExprPtr b) {
  return Expr::binary(Expr::Kind::Mul, std::move(a), std::move(b));
}
ExprPtr operator-(ExprPtr a) { return Expr::unary(Expr::Kind::Negate, std::move(a)); }

}  // namespace genfourier::funcmodel
