#include "hypertoric/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hypertoric {

namespace {

std::string exponent_text(const Rational& e) {
  if (is_integer(e)) return e.get_str();
  return "(" + e.get_str() + ")";
}

std::string term_text(const CharLattice& lat, const ExpVec& e, const Rational& abs_coeff) {
  std::vector<std::string> factors;
  if (abs_coeff != 1 || is_zero(e)) factors.push_back(abs_coeff.get_str());
  for (int i = 0; i < lat.rank(); ++i) {
    Rational x = lat.exponent_of(e, i);
    if (is_zero(x)) continue;
    if (x == 1)
      factors.push_back(lat.label(i));
    else
      factors.push_back(lat.label(i) + "^" + exponent_text(x));
  }
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    out += term_text(p.lattice(), e, a);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
};

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

Rational parse_number(Cursor& c) {
  size_t start = c.i;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) ++c.i;
  while (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '/')) ++c.i;
  if (c.i == start) throw std::invalid_argument("expected number");
  return parse_rational(c.s.substr(start, c.i - start));
}

Rational parse_exponent(Cursor& c) {
  c.skip_ws();
  if (!c.done() && c.peek() == '(') {
    ++c.i;
    Rational e = parse_number(c);
    c.skip_ws();
    if (c.done() || c.peek() != ')') throw std::invalid_argument("unclosed exponent");
    ++c.i;
    return e;
  }
  return parse_number(c);
}

}  // namespace

LaurentPoly parse_laurent(const CharLattice& lat, const std::string& text) {
  LaurentPoly out(lat);
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw std::invalid_argument("empty polynomial text");
  if (text == "0") return out;
  int sign = 1;
  if (c.peek() == '-') {
    sign = -1;
    ++c.i;
  } else if (c.peek() == '+') {
    ++c.i;
  }
  for (;;) {
    c.skip_ws();
    Rational coeff(sign);
    ExpVec e = lat.zero();
    bool more_factors = true;
    while (more_factors) {
      c.skip_ws();
      if (c.done()) break;
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff *= parse_number(c);
      } else if (label_char(c.peek())) {
        size_t start = c.i;
        while (!c.done() && label_char(c.peek())) ++c.i;
        std::string name = c.s.substr(start, c.i - start);
        Rational ex(1);
        if (!c.done() && c.peek() == '^') {
          ++c.i;
          ex = parse_exponent(c);
        }
        int axis = lat.axis(name);
        Rational scaled = ex * rat(lat.scale());
        if (!is_integer(scaled))
          throw std::invalid_argument("exponent outside lattice scale: " + name);
        e[static_cast<size_t>(axis)] += static_cast<Int>(scaled.get_num().get_si());
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + c.peek() + "'");
      }
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.i;
        continue;
      }
      more_factors = false;
    }
    out.add_term(e, coeff);
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() == '+')
      sign = 1;
    else if (c.peek() == '-')
      sign = -1;
    else
      throw std::invalid_argument("expected '+' or '-' between terms");
    ++c.i;
  }
  return out;
}

}  // namespace hypertoric
