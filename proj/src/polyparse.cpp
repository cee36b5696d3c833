#include "igusa/polyparse.hpp"

#include <cctype>

namespace igusa {

namespace {

// shared recursive-descent scaffolding
struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, pos); }

  long read_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected an integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000000L) fail("integer literal too large");
      ++pos;
    }
    return v;
  }
};

// ---- T-polynomial grammar ----
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := uint | 'T' uint | '(' expr ')' 

ThetaPolynomial parse_expr(Cursor& c, int dg);

ThetaPolynomial parse_atom(Cursor& c, int dg) {
  char ch = c.peek();
  if (ch == '(') {
    c.eat('(');
    ThetaPolynomial inner = parse_expr(c, dg);
    if (!c.eat(')')) c.fail("expected ')'");
    return inner;
  }
  if (ch == 'T') {
    c.eat('T');
    long idx = c.read_uint();
    if (idx < 1 || idx > dg) throw IndexOutOfRange("T" + std::to_string(idx) + " with d_g = " +
                                                   std::to_string(dg));
    return ThetaPolynomial::variable(dg, static_cast<int>(idx));
  }
  if (std::isdigit(static_cast<unsigned char>(ch)))
    return ThetaPolynomial::constant(dg, Rat(c.read_uint()));
  c.fail("expected a literal, variable or '('");
}

ThetaPolynomial parse_factor(Cursor& c, int dg) {
  if (c.peek() == '-') {
    c.eat('-');
    return ThetaPolynomial(dg) - parse_factor(c, dg);
  }
  ThetaPolynomial base = parse_atom(c, dg);
  if (c.eat('^')) {
    long e = c.read_uint();
    if (e > 64) c.fail("exponent too large");
    ThetaPolynomial acc = ThetaPolynomial::constant(dg, Rat(1));
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
  }
  return base;
}

ThetaPolynomial parse_term(Cursor& c, int dg) {
  ThetaPolynomial acc = parse_factor(c, dg);
  while (c.peek() == '*') {
    c.eat('*');
    acc = acc * parse_factor(c, dg);
  }
  return acc;
}

ThetaPolynomial parse_expr(Cursor& c, int dg) {
  ThetaPolynomial acc = parse_term(c, dg);
  while (true) {
    char ch = c.peek();
    if (ch == '+') {
      c.eat('+');
      acc = acc + parse_term(c, dg);
    } else if (ch == '-') {
      c.eat('-');
      acc = acc - parse_term(c, dg);
    } else {
      break;
    }
  }
  return acc;
}

// ---- one-variable q-expressions ----
//   qexpr := qterm (('+'|'-') qterm)*
//   qterm := rat ('*'? qpow)? | qpow ('/' uint)?
//   qpow  := 'q' ('^' ratexp)?
//   rat   := uint ('/' uint)?
//   ratexp:= uint ('/' uint)? | '(' rat ')'

Rat parse_ratlit(Cursor& c) {
  long num = c.read_uint();
  if (c.peek() == '/') {
    size_t save = c.pos;
    c.eat('/');
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      long den = c.read_uint();
      if (den == 0) c.fail("zero denominator");
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    c.pos = save;
  }
  return Rat(num);
}

Rat parse_exponent(Cursor& c) {
  if (c.eat('(')) {
    Rat r = parse_ratlit(c);
    if (!c.eat(')')) c.fail("expected ')'");
    return r;
  }
  return parse_ratlit(c);
}

}  // namespace

ThetaPolynomial parse_poly(const std::string& src, int dg) {
  Cursor c{src};
  ThetaPolynomial p = parse_expr(c, dg);
  c.skip_ws();
  if (c.pos != src.size()) c.fail("trailing input");
  p.dg = dg;
  return p;
}

QSeries1 parse_qexpr1(const std::string& src, const PadicContext& ctx, const Rat& trunc) {
  QSeries1 out(ctx, trunc);
  Cursor c{src};
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.pos == src.size()) {
      if (first) c.fail("empty q-expression");
      break;
    }
    Rat sign(1);
    if (c.eat('-'))
      sign = -1;
    else if (!first && !c.eat('+'))
      c.fail("expected '+' or '-'");
    first = false;

    Rat coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_ratlit(c);
      have_coeff = true;
      c.eat('*');
    }
    Rat expo(0);
    if (c.peek() == 'q') {
      c.eat('q');
      expo = c.eat('^') ? parse_exponent(c) : Rat(1);
    } else if (!have_coeff) {
      c.fail("expected a coefficient or 'q'");
    }
    out.add_term(expo, sign * coeff);
  }
  return out;
}

}  // namespace igusa
