// Copyright 2026 The sfcanon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "sfc/error.hpp"
#include "sfc/matrix.hpp"
#include "sfc/ncpoly.hpp"
#include "sfc/ncrewrite.hpp"
#include "sfc/scalar.hpp"

namespace sfc {

// ---------------------------------------------------------------------------
// Parsing
//
//   expr    := ['+' | '-'] term (('+' | '-') term)*
//   term    := unary (('*' | '/' | juxtaposition) unary)*
//   unary   := '-' unary | factor
//   factor  := primary ['^' integer]
//   primary := integer | letter | 'sqrt' '(' expr ')' | '(' expr ')'
//
// Juxtaposition applies before a letter, 'sqrt' or '('. Division is by
// nonzero constants only.

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  NCPoly parse_all() {
    NCPoly p = expr();
    skip();
    if (i_ < s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg, ErrorKind kind = ErrorKind::Syntax) const {
    throw SyntaxError(kind, msg, i_);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  bool starts_primary() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  NCPoly expr() {
    NCPoly out;
    bool neg = false;
    if (peek('+')) {
      ++i_;
    } else if (peek('-')) {
      ++i_;
      neg = true;
    }
    out = term();
    if (neg) out = -out;
    for (;;) {
      if (peek('+')) {
        ++i_;
        out += term();
      } else if (peek('-')) {
        ++i_;
        out -= term();
      } else {
        return out;
      }
    }
  }

  NCPoly term() {
    NCPoly out = unary();
    for (;;) {
      if (peek('*')) {
        ++i_;
        out = out * unary();
      } else if (peek('/')) {
        ++i_;
        const std::size_t at = i_;
        NCPoly d = unary();
        if (!d.is_constant()) {
          i_ = at;
          error("division by a non-constant");
        }
        if (d.is_zero()) {
          i_ = at;
          error("division by zero", ErrorKind::DivisionByZero);
        }
        out = d.constant_value().inverse() * out;
      } else if (starts_primary()) {
        out = out * unary();
      } else {
        return out;
      }
    }
  }

  NCPoly unary() {
    if (peek('-')) {
      ++i_;
      return -unary();
    }
    return factor();
  }

  NCPoly factor() {
    NCPoly base = primary();
    if (!peek('^')) return base;
    ++i_;
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected exponent");
    if (i_ - start > 3) {
      i_ = start;
      error("exponent too large");
    }
    const int e = std::stoi(std::string(s_.substr(start, i_ - start)));
    if (e == 0) {
      i_ = start;
      error("exponent must be positive");
    }
    return power(base, static_cast<unsigned>(e));
  }

  NCPoly primary() {
    skip();
    if (i_ >= s_.size()) error("unexpected end of input");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return NCPoly(Scalar(Rational(Integer(std::string(s_.substr(start, i_ - start))))));
    }
    if (c == '(') {
      ++i_;
      NCPoly p = expr();
      if (!peek(')')) error("expected ')'");
      ++i_;
      return p;
    }
    if (s_.substr(i_, 4) == "sqrt") {
      const std::size_t at = i_;
      i_ += 4;
      if (!peek('(')) error("expected '(' after sqrt");
      ++i_;
      NCPoly arg = expr();
      if (!peek(')')) error("expected ')'");
      ++i_;
      if (!arg.is_constant()) {
        i_ = at;
        error("sqrt of a non-constant");
      }
      return NCPoly(sqrt_extend(arg.constant_value()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (!is_letter(c)) error(std::string("unknown variable '") + c + "'", ErrorKind::UnknownVariable);
      ++i_;
      return NCPoly::letter(c);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses the polynomial grammar above. Throws SyntaxError with the offending
/// byte offset.
inline NCPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse_all(); }

/// Parses a constant expression such as "5/7 + 4/7*sqrt(2)".
inline Scalar parse_scalar(std::string_view text) {
  NCPoly p = parse_poly(text);
  if (!p.is_constant()) throw SyntaxError(ErrorKind::Syntax, "expected a constant", 0);
  return p.constant_value();
}

// ---------------------------------------------------------------------------
// Printing

/// "xxyx" -> "x^2yx".
inline std::string word_text(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += w[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Deterministic text, degree-descending then lexicographic by word.
inline std::string to_string(const NCPoly& p) {
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    bool neg = false;
    std::string body;
    if (is_monomial(c)) {
      body = to_string(c);
      if (body[0] == '-') {
        neg = true;
        body.erase(0, 1);
      }
    } else {
      body = "(" + to_string(c) + ")";
    }
    if (!w.empty()) {
      if (body == "1")
        body = word_text(w);
      else if (c.is_rational() && c.rational_value().get_den() == 1)
        body += word_text(w);
      else
        body += "*" + word_text(w);
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// Polynomials and defining matrices

/// Defining matrix of a degree-two polynomial in x and y.
inline StdFormMatrix poly_to_matrix(const NCPoly& f) {
  QuadraticCoeffs c;
  for (const auto& [w, v] : f.terms()) {
    if (w.find('z') != Word::npos) fail(ErrorKind::UnknownVariable, "z is not a generator here");
    if (w.size() > 2) fail(ErrorKind::DegreeTooHigh, "polynomial has degree " + std::to_string(w.size()));
    if (w == "xx") c.xx = v;
    else if (w == "xy") c.xy = v;
    else if (w == "yx") c.yx = v;
    else if (w == "yy") c.yy = v;
    else if (w == "x") c.x = v;
    else if (w == "y") c.y = v;
    else c.one = v;
  }
  return to_std_form(c);
}

inline NCPoly matrix_to_poly(const StdFormMatrix& m) {
  const QuadraticCoeffs c = to_coeffs(m);
  NCPoly f;
  f.add_term("xx", c.xx);
  f.add_term("xy", c.xy);
  f.add_term("yx", c.yx);
  f.add_term("yy", c.yy);
  f.add_term("x", c.x);
  f.add_term("y", c.y);
  f.add_term("", c.one);
  return f;
}

/// The z-homogenization: x, y -> xz, yz and constants -> z^2.
inline NCPoly homogenized_poly(const StdFormMatrix& m) {
  const QuadraticCoeffs c = to_coeffs(m);
  NCPoly f;
  f.add_term("xx", c.xx);
  f.add_term("xy", c.xy);
  f.add_term("yx", c.yx);
  f.add_term("yy", c.yy);
  f.add_term("xz", c.x);
  f.add_term("yz", c.y);
  f.add_term("zz", c.one);
  return f;
}

/// Inverse of homogenized_poly; zx and zy count as xz and yz since z is central.
inline StdFormMatrix homogeneous_poly_to_matrix(const NCPoly& f) {
  QuadraticCoeffs c;
  for (const auto& [w, v] : f.terms()) {
    if (w.size() > 2) fail(ErrorKind::DegreeTooHigh, "relation must be homogeneous of degree two");
    if (w.size() < 2) fail(ErrorKind::DegreeTooLow, "relation must be homogeneous of degree two");
    if (w == "xx") c.xx += v;
    else if (w == "xy") c.xy += v;
    else if (w == "yx") c.yx += v;
    else if (w == "yy") c.yy += v;
    else if (w == "xz" || w == "zx") c.x += v;
    else if (w == "yz" || w == "zy") c.y += v;
    else c.one += v;
  }
  return to_std_form(c);
}

// ---------------------------------------------------------------------------
// Rewrite-system fixtures
//
//   # comment
//   precedence z < y < x
//   relation <polynomial>

inline RewriteSystem parse_fixture(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Precedence> prec;
  std::vector<NCPoly> relations;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.rfind("precedence ", 0) == 0) {
      prec = Precedence::parse(line.substr(11));
    } else if (line.rfind("relation ", 0) == 0) {
      relations.push_back(parse_poly(line.substr(9)));
    } else {
      fail(ErrorKind::Syntax, "unknown fixture line '" + line + "'");
    }
  }
  RewriteSystem sys(prec.value_or(Precedence()), {});
  for (const auto& r : relations) sys.add_relation(r);
  return sys;
}

inline RewriteSystem load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidParameter, "cannot read fixture " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

/// Fixture text shipped with the library; mirrors data/rewrite/<name>.txt.
inline std::optional<std::string_view> builtin_fixture_text(std::string_view name) {
  if (name == "u") return "# U: yx - xy + y\nprecedence y < x\nrelation yx - xy + y\n";
  if (name == "v") return "# V: yx - xy + y^2 + x\nprecedence y < x\nrelation yx - xy + y^2 + x\n";
  if (name == "h_os")
    return "# H(os): z central, yx - z^2\nprecedence z < y < x\nrelation xz - zx\nrelation yz - zy\n"
           "relation yx - z^2\n";
  if (name == "h_sxx")
    return "# H(sxx): z central, x^2 - z^2\nprecedence z < y < x\nrelation xz - zx\nrelation yz - zy\n"
           "relation x^2 - z^2\n";
  if (name == "h_kx")
    return "# H(kx): z central, x^2 + yz\n"
           "# The quadratic rules alone are not confluent; the overlap xxx forces\n"
           "# z y^k x y -> z y^(k+1) x for every k. Complete through degree 6.\n"
           "precedence z < y < x\nrelation xz - zx\nrelation yz - zy\nrelation x^2 + yz\n"
           "relation zxy - zyx\nrelation zyxy - zy^2x\nrelation zy^2xy - zy^3x\nrelation zy^3xy - zy^4x\n";
  return std::nullopt;
}

inline RewriteSystem builtin_fixture(std::string_view name) {
  auto text = builtin_fixture_text(name);
  if (!text) fail(ErrorKind::InvalidParameter, "unknown fixture '" + std::string(name) + "'");
  return parse_fixture(*text);
}

}  // namespace sfc
