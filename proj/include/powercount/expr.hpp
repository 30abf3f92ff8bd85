#pragma once

// Recursive-descent parser for the restricted polynomial expression grammar
// accepted on the command line: sums/differences of integer-coefficient
// monomials in x, e.g. "x^26-1", "x^4+3x^3+3x+1", "2*x^2 + 1".

#include <cctype>

#include "polyring.hpp"

namespace powercount {

namespace exprdetail {

struct Scanner {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
  u64 integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected integer at position " + std::to_string(pos));
    u64 v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<u64>(s[pos] - '0');
      if (v > (u64(1) << 62)) throw ParseError("integer literal too large");
      ++pos;
    }
    return v;
  }
};

}  // namespace exprdetail

inline Poly parse_poly_expr(const Field& k, const std::string& text) {
  exprdetail::Scanner sc{text};
  std::map<u64, u64> terms;  // exponent -> coefficient (mod q)
  bool first = true;
  while (!sc.eof()) {
    bool negative = false;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      negative = (c == '-');
      sc.take();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms");
    }
    first = false;
    // term := int ['*'] ['x' ['^' int]] | 'x' ['^' int]
    u64 coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff = sc.integer();
      have_coeff = true;
      if (sc.peek() == '*') sc.take();
    }
    u64 expo = 0;
    if (sc.peek() == 'x' || sc.peek() == 'X') {
      sc.take();
      expo = 1;
      if (sc.peek() == '^') {
        sc.take();
        expo = sc.integer();
      }
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or 'x'");
    }
    if (expo > (u64(1) << 24)) throw BoundExceeded("polynomial degree too large");
    u64 cm = coeff % k->q;
    u64 val = negative ? k->neg(cm) : cm;
    terms[expo] = k->add(terms.count(expo) ? terms[expo] : 0, val);
  }
  if (terms.empty()) throw ParseError("empty polynomial expression");
  u64 maxdeg = terms.rbegin()->first;
  std::vector<u64> coeffs(maxdeg + 1, 0);
  for (auto [e, v] : terms) coeffs[e] = v;
  Poly f{k, std::move(coeffs)};
  f.trim();
  return f;
}

// Accepts either the coefficient wire format ("q=5:1,3,0,3,1") or the
// expression grammar; the q argument governs the expression reading.
inline Poly parse_poly_input(const Field& k, const std::string& text) {
  if (text.rfind("q=", 0) == 0) {
    Poly f = poly_from_text(text);
    if (!f.k->same(*k)) throw CtxMismatch("polynomial text is over a different field");
    return f;
  }
  return parse_poly_expr(k, text);
}

}  // namespace powercount
