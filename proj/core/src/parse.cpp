#include "homres/parse.hpp"

#include <cctype>
#include <sstream>

namespace homres {

namespace {

struct Parser {
  const std::string& s;
  const Ring& ring;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg + " at position " + std::to_string(pos), pos); }

  bool peek_factor() {
    skip_ws();
    return pos < s.size() && (s[pos] == 'x' || std::isdigit(static_cast<unsigned char>(s[pos])));
  }

  bigint integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return bigint(s.substr(start, pos - start));
  }

  // coefficient literal: int or int/int
  Scalar coefficient() {
    bigint num = integer();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      bigint den = integer();
      if (den == 0) fail("zero denominator");
      return Scalar(bigrat(num, den), ring.field);
    }
    return Scalar(bigrat(num), ring.field);
  }

  // variable with optional power: xK or xK^e
  Polynomial variable_factor() {
    ++pos;  // past 'x'
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected variable index");
    int idx = std::stoi(s.substr(start, pos - start));
    if (idx < 1 || idx > ring.n) fail("variable index out of range 1.." + std::to_string(ring.n));
    Polynomial v = Polynomial::variable(ring, idx - 1);
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      if (!ring.commutative) fail("'^' powers are commutative-only");
      ++pos;
      bigint e = integer();
      if (e < 0 || e > 64) fail("unreasonable exponent");
      Polynomial p = Polynomial::constant(ring, Scalar(1, ring.field));
      for (bigint i = 0; i < e; ++i) p = p * v;
      return p;
    }
    return v;
  }

  // term := factor (('*')? factor)*, where juxtaposition multiplies
  Polynomial term() {
    Polynomial p = Polynomial::constant(ring, Scalar(1, ring.field));
    bool any = false;
    while (true) {
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      } else if (!peek_factor()) {
        break;
      }
      if (pos >= s.size()) fail("expected factor");
      if (s[pos] == 'x')
        p = p * variable_factor();
      else
        p = p.scale(coefficient());
      any = true;
    }
    if (!any) fail("expected term");
    return p;
  }

  Polynomial parse() {
    Polynomial p(ring);
    skip_ws();
    bool negate = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negate = s[pos] == '-';
      ++pos;
    }
    while (true) {
      Polynomial t = term();
      p = negate ? p - t : p + t;
      skip_ws();
      if (pos >= s.size()) break;
      if (s[pos] == '+')
        negate = false;
      else if (s[pos] == '-')
        negate = true;
      else
        fail("unexpected character '" + std::string(1, s[pos]) + "'");
      ++pos;
    }
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
  Parser p{text, ring};
  return p.parse();
}

std::vector<Polynomial> parse_polynomial_lines(const std::string& text, const Ring& ring) {
  std::vector<Polynomial> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(parse_polynomial(line, ring));
  }
  return out;
}

}  // namespace homres
