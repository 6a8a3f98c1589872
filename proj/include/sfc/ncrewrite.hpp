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

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "sfc/error.hpp"
#include "sfc/ncpoly.hpp"

namespace sfc {

/// Total order on letters, smallest first; words compare degree-lexicographically.
class Precedence {
 public:
  Precedence() : order_("zyx") {}
  /// `order` lists the letters from smallest to largest, e.g. "zyx" for z < y < x.
  explicit Precedence(std::string order) : order_(std::move(order)) {
    std::string sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::InvalidParameter, "repeated letter in precedence");
    for (char c : order_)
      if (!is_letter(c)) fail(ErrorKind::UnknownVariable, std::string("unknown variable '") + c + "'");
  }

  /// Parses "z < y < x".
  static Precedence parse(std::string_view text) {
    std::string order;
    bool want_letter = true;
    for (char c : text) {
      if (c == ' ' || c == '\t') continue;
      if (want_letter && std::isalpha(static_cast<unsigned char>(c))) {
        order += c;
        want_letter = false;
      } else if (!want_letter && c == '<') {
        want_letter = true;
      } else {
        fail(ErrorKind::Syntax, "malformed precedence '" + std::string(text) + "'");
      }
    }
    if (want_letter) fail(ErrorKind::Syntax, "malformed precedence '" + std::string(text) + "'");
    return Precedence(order);
  }

  const std::string& order() const { return order_; }

  std::string text() const {
    std::string out;
    for (char c : order_) {
      if (!out.empty()) out += " < ";
      out += c;
    }
    return out;
  }

  int rank(char c) const {
    auto pos = order_.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
  }

  /// a < b in the degree-lexicographic order.
  bool less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return rank(a[i]) < rank(b[i]);
    return false;
  }

  /// The largest word of a nonzero polynomial.
  Word leading(const NCPoly& p) const {
    if (p.is_zero()) fail(ErrorKind::NotOrientable, "zero polynomial has no leading word");
    const Word* best = nullptr;
    for (const auto& [w, c] : p.terms())
      if (!best || less(*best, w)) best = &w;
    return *best;
  }

 private:
  std::string order_;
};

struct Rule {
  Word lhs;
  NCPoly rhs;
};

/// lhs - rhs, the relation a rule encodes.
inline NCPoly relation(const Rule& r) { return NCPoly::monomial(r.lhs) - r.rhs; }

/// Rule lhs -> -(rest)/c from f = c*lhs + rest with lhs the leading word.
inline Rule orient(const NCPoly& f, const Precedence& prec) {
  if (f.is_zero()) fail(ErrorKind::NotOrientable, "cannot orient the zero polynomial");
  Word lead = prec.leading(f);
  for (char c : lead)
    if (prec.rank(c) < 0) fail(ErrorKind::NotOrientable, std::string("letter '") + c + "' has no precedence");
  if (lead.empty()) fail(ErrorKind::NotOrientable, "constant relation");
  const Scalar c = f.coefficient(lead);
  NCPoly rest = f - NCPoly::monomial(lead, c);
  return {lead, (-c.inverse()) * rest};
}

/// Oriented relations. Every right-hand monomial is below its left-hand word,
/// so rewriting terminates.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(Precedence prec, std::vector<Rule> rules) : prec_(std::move(prec)) {
    for (auto& r : rules) add(std::move(r));
  }

  void add(Rule r) {
    if (r.lhs.empty()) fail(ErrorKind::NotOrientable, "empty left-hand side");
    for (char c : r.lhs)
      if (prec_.rank(c) < 0) fail(ErrorKind::NotOrientable, std::string("letter '") + c + "' has no precedence");
    for (const auto& [w, c] : r.rhs.terms())
      if (!prec_.less(w, r.lhs))
        fail(ErrorKind::NotOrientable, "right-hand word " + (w.empty() ? std::string("1") : w) + " is not below " + r.lhs);
    for (const auto& other : rules_)
      if (other.lhs == r.lhs) fail(ErrorKind::NotOrientable, "duplicate left-hand side " + r.lhs);
    rules_.push_back(std::move(r));
  }

  void add_relation(const NCPoly& f) { add(orient(f, prec_)); }

  const Precedence& precedence() const { return prec_; }
  const std::vector<Rule>& rules() const { return rules_; }

  /// Leftmost match: (position, rule index).
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t k = 0; k < rules_.size(); ++k)
        if (w.compare(pos, rules_[k].lhs.size(), rules_[k].lhs) == 0) return std::make_pair(pos, k);
    return std::nullopt;
  }

  /// prefix * rhs * suffix for the rule applied at `pos` of `w`.
  NCPoly rewrite_at(const Word& w, std::size_t pos, std::size_t rule) const {
    const Rule& r = rules_[rule];
    return NCPoly::monomial(w.substr(0, pos)) * r.rhs * NCPoly::monomial(w.substr(pos + r.lhs.size()));
  }

 private:
  Precedence prec_;
  std::vector<Rule> rules_;
};

/// Normal form of `p`: the largest reducible term is rewritten at its leftmost
/// redex until no term contains a left-hand word.
inline NCPoly reduce(const NCPoly& p, const RewriteSystem& sys, int degree_bound) {
  const auto check = [&](const NCPoly& q) {
    if (q.degree() > degree_bound)
      fail(ErrorKind::DegreeBoundExceeded, "degree " + std::to_string(q.degree()) + " exceeds bound " +
                                               std::to_string(degree_bound));
  };
  check(p);
  NCPoly work = p, result;
  const Precedence& prec = sys.precedence();
  while (!work.is_zero()) {
    Word w = prec.leading(work);
    Scalar c = work.coefficient(w);
    work.add_term(w, -c);
    if (auto redex = sys.find_redex(w)) {
      work += c * sys.rewrite_at(w, redex->first, redex->second);
      check(work);
    } else {
      result.add_term(w, c);
    }
  }
  return result;
}

/// A word with two distinct one-step rewrites.
struct Ambiguity {
  Word word;
  NCPoly left;
  NCPoly right;
};

/// Overlap and inclusion ambiguities with words of length at most `max_degree`.
inline std::vector<Ambiguity> critical_pairs(const RewriteSystem& sys, int max_degree) {
  std::vector<Ambiguity> out;
  const auto& rules = sys.rules();
  const auto limit = static_cast<std::size_t>(std::max(max_degree, 0));
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& a = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& b = rules[j].lhs;
      for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
        if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
        Word w = a + b.substr(k);
        if (w.size() > limit) continue;
        out.push_back({w, sys.rewrite_at(w, 0, i), sys.rewrite_at(w, a.size() - k, j)});
      }
      if (i == j || b.size() > a.size() || a.size() > limit) continue;
      for (std::size_t pos = a.find(b); pos != Word::npos; pos = a.find(b, pos + 1))
        out.push_back({a, sys.rewrite_at(a, 0, i), sys.rewrite_at(a, pos, j)});
    }
  }
  return out;
}

struct ConfluenceReport {
  bool confluent = true;
  std::size_t checked = 0;
  std::optional<Ambiguity> failure;  ///< first unresolved ambiguity, sides reduced
};

inline ConfluenceReport confluence_report(const RewriteSystem& sys, int max_degree) {
  if (max_degree > 8) fail(ErrorKind::InvalidParameter, "confluence check supports degree at most 8");
  ConfluenceReport rep;
  for (auto& amb : critical_pairs(sys, max_degree)) {
    ++rep.checked;
    const int bound = std::max<int>(max_degree, static_cast<int>(amb.word.size()));
    NCPoly l = reduce(amb.left, sys, bound), r = reduce(amb.right, sys, bound);
    if (!(l == r)) {
      rep.confluent = false;
      rep.failure = Ambiguity{amb.word, std::move(l), std::move(r)};
      return rep;
    }
  }
  return rep;
}

/// Every ambiguity up to `max_degree` (<= 8) resolves to a common normal form.
inline bool confluence_smoke(const RewriteSystem& sys, int max_degree) {
  return confluence_report(sys, max_degree).confluent;
}

}  // namespace sfc
