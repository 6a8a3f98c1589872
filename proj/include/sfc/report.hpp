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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sfc/algebra.hpp"
#include "sfc/congruence2.hpp"
#include "sfc/error.hpp"
#include "sfc/matrix.hpp"
#include "sfc/polyio.hpp"
#include "sfc/sfcanon.hpp"

namespace sfc {

using Json = nlohmann::ordered_json;

// Documents carry exact scalar text only.

inline Json scalar_document(const Scalar& s) { return to_string(s); }

inline Scalar parse_scalar_document(const Json& j) {
  if (!j.is_string()) fail(ErrorKind::Syntax, "expected scalar text");
  return parse_scalar(j.get<std::string>());
}

inline Json mat2_document(const Mat2& m) {
  return Json::array({Json::array({scalar_document(m(0, 0)), scalar_document(m(0, 1))}),
                      Json::array({scalar_document(m(1, 0)), scalar_document(m(1, 1))})});
}

inline Json vec2_document(const Vec2& v) { return Json::array({scalar_document(v[0]), scalar_document(v[1])}); }

inline Mat2 parse_mat2_document(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2)
    fail(ErrorKind::Syntax, "expected a 2x2 array");
  return Mat2{{parse_scalar_document(j[0][0]), parse_scalar_document(j[0][1])},
              {parse_scalar_document(j[1][0]), parse_scalar_document(j[1][1])}};
}

inline Vec2 parse_vec2_document(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::Syntax, "expected a pair");
  return {parse_scalar_document(j[0]), parse_scalar_document(j[1])};
}

inline Json matrix_document(const StdFormMatrix& m) {
  Json j;
  j["homogeneous"] = mat2_document(m.homogeneous());
  j["linear"] = vec2_document(m.linear());
  j["constant"] = scalar_document(m.constant());
  return j;
}

inline StdFormMatrix parse_matrix_document(const Json& j) {
  if (!j.is_object() || !j.contains("homogeneous") || !j.contains("linear") || !j.contains("constant"))
    fail(ErrorKind::Syntax, "matrix document needs homogeneous, linear and constant");
  return StdFormMatrix(parse_mat2_document(j["homogeneous"]), parse_vec2_document(j["linear"]),
                       parse_scalar_document(j["constant"]));
}

inline Json witness_document(const SfWitness& w) {
  Json j;
  j["P1"] = mat2_document(w.map.linear_part());
  j["P2"] = vec2_document(w.map.translation());
  j["alpha"] = scalar_document(w.alpha);
  return j;
}

inline SfWitness parse_witness_document(const Json& j) {
  if (!j.is_object() || !j.contains("P1") || !j.contains("P2") || !j.contains("alpha"))
    fail(ErrorKind::Syntax, "witness document needs P1, P2 and alpha");
  return {PAffine(parse_mat2_document(j["P1"]), parse_vec2_document(j["P2"])), parse_scalar_document(j["alpha"])};
}

/// {"input", "class", "q"?, "canonical", "witness"}; the witness carries input to canonical.
inline Json canon_report(const StdFormMatrix& input, const Canonicalization& c) {
  Json j;
  j["input"] = matrix_document(input);
  j["class"] = to_string(c.cls.tag);
  if (c.cls.q) j["q"] = scalar_document(*c.cls.q);
  j["canonical"] = matrix_document(c.canonical);
  j["witness"] = witness_document(c.witness);
  return j;
}

/// {"input", "algebra", "q"?, "via_v", "canonical_f", "canonical", "witness"}.
inline Json classification_report(const StdFormMatrix& input, const Classification& c) {
  Json j;
  j["input"] = matrix_document(input);
  j["algebra"] = to_string(c.algebra.name);
  if (c.algebra.q) j["q"] = scalar_document(*c.algebra.q);
  j["via_v"] = c.algebra.via_v;
  j["canonical_f"] = to_string(matrix_to_poly(c.canon.canonical));
  j["canonical"] = matrix_document(c.canon.canonical);
  j["witness"] = witness_document(c.canon.witness);
  return j;
}

struct ReportCheck {
  bool verified = false;
  std::string detail;
};

/// Re-verifies a report: the witness must carry "input" (or "source") to
/// "canonical" (or "target"). Reports whose witness is "envv-bridge" are
/// checked by rerunning the bridge verification.
inline ReportCheck verify_report(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::Syntax, "report must be an object");
  const Json* w = j.contains("witness") ? &j["witness"] : nullptr;
  if (!w) fail(ErrorKind::Syntax, "report has no witness");
  if (w->is_string() && w->get<std::string>() == "envv-bridge")
    return {verify_uv_bridge().ok(), "U/V bridge identities"};
  const char* from = j.contains("input") ? "input" : "source";
  const char* to = j.contains("canonical") ? "canonical" : "target";
  if (!j.contains(from) || !j.contains(to)) fail(ErrorKind::Syntax, "report needs input/source and canonical/target");
  const StdFormMatrix src = parse_matrix_document(j[from]);
  const StdFormMatrix dst = parse_matrix_document(j[to]);
  const SfWitness wit = parse_witness_document(*w);
  const bool ok = verify_witness(dst, src, wit);
  return {ok, ok ? "sf(target) = alpha * sf(P^T source P)" : "witness does not carry source to target"};
}

// ---------------------------------------------------------------------------
// Bracketed matrix text "[[a, b], [c, d]]" with scalar-text entries

namespace detail {

inline std::vector<std::string> split_top_level(std::string_view s, std::size_t offset) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw SyntaxError(ErrorKind::Syntax, "unbalanced brackets", offset + i);
    if (c == ',' && depth == 0) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw SyntaxError(ErrorKind::Syntax, "unbalanced brackets", offset + s.size());
  parts.emplace_back(s.substr(start));
  return parts;
}

inline std::string_view strip(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string_view unbracket(std::string_view s, std::size_t& offset) {
  s = strip(s, offset);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw SyntaxError(ErrorKind::Syntax, "expected '[...]'", offset);
  ++offset;
  return s.substr(1, s.size() - 2);
}

}  // namespace detail

inline DynMatrix parse_matrix_text(std::string_view text) {
  std::size_t offset = 0;
  std::string_view body = detail::unbracket(text, offset);
  std::vector<std::vector<Scalar>> rows;
  for (const std::string& row : detail::split_top_level(body, offset)) {
    std::size_t roff = 0;
    std::string_view inner = detail::unbracket(row, roff);
    std::vector<Scalar> entries;
    for (const std::string& e : detail::split_top_level(inner, roff)) entries.push_back(parse_scalar(e));
    rows.push_back(std::move(entries));
  }
  const std::size_t n = rows.size();
  DynMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) fail(ErrorKind::InvalidParameter, "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline std::string matrix_text(const DynMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.size(); ++j) out += (j ? ", " : "") + to_string(m(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace sfc
