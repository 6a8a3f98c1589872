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

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "sfc/error.hpp"
#include "sfc/scalar.hpp"

namespace sfc {

/// A monomial: a word over the letters x, y, z. The empty word is 1.
using Word = std::string;

inline constexpr std::string_view kAlphabet = "xyz";

inline bool is_letter(char c) { return kAlphabet.find(c) != std::string_view::npos; }

/// Degree-descending, then lexicographic. This is the printing order.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

/// Element of the free algebra k<x, y, z>. No zero coefficients are stored.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, WordOrder>;

  NCPoly() = default;
  NCPoly(const Scalar& c) { add_term({}, c); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  NCPoly(I c) : NCPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static NCPoly monomial(const Word& w, const Scalar& c = Scalar(1)) {
    for (char ch : w)
      if (!is_letter(ch)) fail(ErrorKind::UnknownVariable, std::string("unknown variable '") + ch + "'");
    NCPoly p;
    p.add_term(w, c);
    return p;
  }
  static NCPoly letter(char ch) { return monomial(Word(1, ch)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest word length, or -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }
  int min_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

  Scalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Scalar constant_value() const { return coefficient({}); }

  void add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  NCPoly operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
  }
  friend NCPoly operator*(const Scalar& s, const NCPoly& p) {
    NCPoly r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : p.terms_) r.terms_.emplace(w, s * c);
    return r;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }

 private:
  Terms terms_;
};

inline NCPoly power(const NCPoly& p, unsigned n) {
  NCPoly r(1);
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

/// Letter-to-polynomial map; letters without an image are fixed.
using LetterMap = std::map<char, NCPoly>;

/// Homomorphic image of `p` under `map`.
inline NCPoly substitute(const LetterMap& map, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly term(c);
    for (char ch : w) {
      auto it = map.find(ch);
      term = term * (it == map.end() ? NCPoly::letter(ch) : it->second);
    }
    out += term;
  }
  return out;
}

}  // namespace sfc
