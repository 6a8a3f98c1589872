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
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfc/algebra.hpp"
#include "sfc/congruence2.hpp"
#include "sfc/error.hpp"
#include "sfc/ncrewrite.hpp"
#include "sfc/polyio.hpp"
#include "sfc/report.hpp"
#include "sfc/sfcanon.hpp"

namespace sfc {

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for malformed invocations; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  unsigned long long seed = 0;
  int digits = 0;
  int degree_bound = 6;
  std::string file;
  std::optional<std::string> first;
  std::optional<std::string> second;
  std::string system;
  int orbit = 0;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string s = buf.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

/// Inputs: positional arguments, or the contents of --file as the first one.
inline std::vector<std::string> inputs(const Options& o, std::size_t count) {
  std::vector<std::string> in;
  if (!o.file.empty()) in.push_back(read_file(o.file));
  for (const auto* a : {&o.first, &o.second})
    if (*a) in.push_back(**a);
  if (in.size() != count)
    throw UsageError("expected " + std::to_string(count) + " input" + (count == 1 ? "" : "s") + ", got " +
                     std::to_string(in.size()));
  return in;
}

inline std::string approx_text(const Scalar& s, int digits) { return approx(s, static_cast<unsigned>(digits)).str(); }

inline std::string vec_text(const Vec2& v) { return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ")"; }

inline std::string mat_text(const Mat2& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

inline std::string witness_text(const SfWitness& w) {
  return "P1 = " + mat_text(w.map.linear_part()) + ", P2 = " + vec_text(w.map.translation()) +
         ", alpha = " + to_string(w.alpha);
}

inline void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

inline std::string q_suffix(const std::optional<Scalar>& q) { return q ? " q=" + to_string(*q) : ""; }

inline void append_approx(std::string& text, const Options& o, const std::string& label,
                          const std::optional<Scalar>& value) {
  if (o.digits > 0 && value && !value->is_rational())
    text += label + " (approximate): " + approx_text(*value, o.digits) + "\n";
}

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_classify(const Options& o, std::ostream& out) {
  const StdFormMatrix m = poly_to_matrix(parse_poly(inputs(o, 1)[0]));
  const Classification c = classify_detailed(m);
  std::string text = "algebra: " + to_string(c.algebra.name) + q_suffix(c.algebra.q) + "\n" +
                     "via_v: " + (c.algebra.via_v ? "true" : "false") + "\n" +
                     "class: " + to_string(c.canon.cls.tag) + "\n" +
                     "canonical f: " + to_string(matrix_to_poly(c.canon.canonical)) + "\n" +
                     "witness: " + witness_text(c.canon.witness) + "\n";
  append_approx(text, o, "q", c.algebra.q);
  append_approx(text, o, "alpha", c.canon.witness.alpha);
  emit(out, o, classification_report(m, c), text);
  return kExitOk;
}

inline int cmd_canon(const Options& o, std::ostream& out) {
  const StdFormMatrix m = poly_to_matrix(parse_poly(inputs(o, 1)[0]));
  const Canonicalization c = sf_canonicalize(m);
  Json j = canon_report(m, c);
  std::string text = "class: " + to_string(c.cls.tag) + q_suffix(c.cls.q) + "\n" +
                     "canonical f: " + to_string(matrix_to_poly(c.canonical)) + "\n" +
                     "witness: " + witness_text(c.witness) + "\n";
  append_approx(text, o, "q", c.cls.q);
  append_approx(text, o, "alpha", c.witness.alpha);
  if (o.orbit > 0) {
    std::mt19937_64 rng(o.seed);
    int agree = 0;
    Json mates = Json::array();
    for (int i = 0; i < o.orbit; ++i) {
      OrbitSample s = orbit_sample(m, rng);
      const Canonicalization cs = sf_canonicalize(s.mate);
      const bool same = same_class(cs.cls, c.cls) && cs.canonical == c.canonical;
      agree += same ? 1 : 0;
      mates.push_back({{"mate", to_string(matrix_to_poly(s.mate))}, {"agrees", same}});
    }
    j["orbit_check"] = {{"seed", o.seed}, {"samples", mates}, {"agree", agree}};
    text += "orbit check (seed " + std::to_string(o.seed) + "): " + std::to_string(agree) + "/" +
            std::to_string(o.orbit) + " mates share the canonical form\n";
  }
  emit(out, o, j, text);
  return kExitOk;
}

inline int cmd_congruent(const Options& o, std::ostream& out) {
  const auto in = inputs(o, 2);
  const NCPoly f = parse_poly(in[0]), g = parse_poly(in[1]);
  const StdFormMatrix mf = poly_to_matrix(f), mg = poly_to_matrix(g);
  const IsoResult iso = iso_check(f, g);
  const bool congruent = iso.evidence == IsoEvidence::Affine;
  Json j;
  j["source"] = matrix_document(mg);
  j["target"] = matrix_document(mf);
  j["sf_congruent"] = congruent;
  j["isomorphic"] = iso.isomorphic;
  std::string text;
  if (congruent) {
    j["witness"] = witness_document(*iso.witness);
    text = "sf-congruent; witness " + witness_text(*iso.witness) + "\n";
  } else if (iso.isomorphic) {
    j["witness"] = "envv-bridge";
    text = "not sf-congruent; algebras isomorphic via non-affine bridge\n";
  } else {
    text = "not sf-congruent; algebras not isomorphic\n";
  }
  emit(out, o, j, text);
  return kExitOk;
}

inline int cmd_homogenize(const Options& o, std::ostream& out) {
  const HTriple t = homogenize(parse_poly(inputs(o, 1)[0]));
  const NCPoly fh = homogenized_relation(t);
  Json j;
  j["f_h"] = to_string(fh);
  j["relations"] = Json::array({"xz - zx", "yz - zy", to_string(fh)});
  j["M"] = matrix_document(t.M);
  emit(out, o, j, "relations: xz - zx, yz - zy, " + to_string(fh) + "\n");
  return kExitOk;
}

inline int cmd_classify_h(const Options& o, std::ostream& out) {
  const NCPoly f = parse_poly(inputs(o, 1)[0]);
  const bool has_z = std::any_of(f.terms().begin(), f.terms().end(),
                                 [](const auto& t) { return t.first.find('z') != Word::npos; });
  const HTriple t = homogenize(has_z ? homogeneous_poly_to_matrix(f) : poly_to_matrix(f));
  const HClass h = classify_h(t);
  const Canonicalization c = sf_canonicalize(t.M);
  Json j;
  j["h_class"] = to_string(h.name);
  if (h.q) j["q"] = scalar_document(*h.q);
  j["f_h"] = to_string(homogenized_relation(t));
  j["canonical_f_h"] = to_string(homogenized_poly(c.canonical));
  j["input"] = matrix_document(t.M);
  j["canonical"] = matrix_document(c.canonical);
  j["witness"] = witness_document(c.witness);
  std::string text = "h-class: " + to_string(h.name) + q_suffix(h.q) + "\n" +
                     "canonical f_h: " + to_string(homogenized_poly(c.canonical)) + "\n";
  append_approx(text, o, "q", h.q);
  emit(out, o, j, text);
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  Json j;
  try {
    j = Json::parse(inputs(o, 1)[0]);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("report is not valid JSON: ") + e.what());
  }
  const ReportCheck r = verify_report(j);
  emit(out, o, Json{{"verified", r.verified}, {"detail", r.detail}},
       std::string(r.verified ? "verified" : "not verified") + ": " + r.detail + "\n");
  return r.verified ? kExitOk : kExitDomain;
}

inline Canon2Label parse_label(const std::string& s) {
  if (s == "X2") return Canon2Label::x2();
  if (s == "YX") return Canon2Label::yx();
  if (s == "JORDAN") return Canon2Label::jordan();
  if (s.size() > 3 && s.rfind("Q(", 0) == 0 && s.back() == ')')
    return Canon2Label::m_q(parse_scalar(s.substr(2, s.size() - 3)));
  throw UsageError("label must be X2, YX, JORDAN or Q(<q>)");
}

inline int cmd_stab(const Options& o, std::ostream& out) {
  const auto in = inputs(o, 2);
  const Canon2Label label = parse_label(in[0]);
  const DynMatrix p = parse_matrix_text(in[1]);
  const bool member = stab_membership(label, p.fixed<2>());
  emit(out, o, Json{{"label", in[0]}, {"P", matrix_text(p)}, {"member", member}},
       std::string(member ? "member" : "not a member") + ": P^T L P " + (member ? "=" : "!=") + " L\n");
  return kExitOk;
}

inline int cmd_qas_iso(const Options& o, std::ostream& out) {
  const auto in = inputs(o, 2);
  const auto sigma = qas_iso(parse_matrix_text(in[0]), parse_matrix_text(in[1]));
  Json j{{"isomorphic", sigma.has_value()}};
  std::string text = sigma ? "isomorphic via permutation" : "not isomorphic\n";
  if (sigma) {
    Json perm = Json::array();
    for (std::size_t i : *sigma) {
      perm.push_back(i + 1);
      text += " " + std::to_string(i + 1);
    }
    j["permutation"] = perm;
    text += "\n";
  }
  emit(out, o, j, text);
  return kExitOk;
}

inline int cmd_reduce(const Options& o, std::ostream& out) {
  const NCPoly p = parse_poly(inputs(o, 1)[0]);
  if (o.system.empty()) throw UsageError("reduce needs --system <name or fixture path>");
  const RewriteSystem sys =
      builtin_fixture_text(o.system) ? builtin_fixture(o.system) : load_fixture(o.system);
  const NCPoly nf = reduce(p, sys, o.degree_bound);
  const bool confluent = confluence_smoke(sys, 6);
  Json j{{"normal_form", to_string(nf)}, {"confluent_degree_6", confluent}, {"degree_bound", o.degree_bound}};
  std::string text = "normal form: " + to_string(nf) + "\n";
  if (nf.is_zero())
    text += confluent ? "in the ideal (system confluent through degree 6)\n" : "reduces to 0 under this orientation\n";
  emit(out, o, j, text);
  return kExitOk;
}

}  // namespace cli

/// Entry point of the sfc tool. Exit status: 0 success, 1 domain error,
/// 2 usage or syntax error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Standard-form congruence canonicalizer for two-generator quadratic algebras", "sfc"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized self-checks");
  app.add_option("--digits", o.digits, "Append decimal approximations (text format)")->check(CLI::Range(0, 200));
  app.add_option("--file", o.file, "Read the first input from a file");

  struct Sub {
    const char* name;
    const char* help;
    const char* inputs;
    int (*run)(const Options&, std::ostream&);
  };
  const Sub subs[] = {
      {"classify", "Name the algebra k<x,y|f>", "polynomial", cmd_classify},
      {"canon", "sf-canonical form with witness", "polynomial", cmd_canon},
      {"congruent", "Decide sf-congruence and isomorphism of two relations", "f g", cmd_congruent},
      {"homogenize", "Relations of the homogenization", "polynomial", cmd_homogenize},
      {"classify-h", "Name the homogenization", "polynomial", cmd_classify_h},
      {"verify", "Re-verify the witness in a JSON report", "report", cmd_verify},
      {"stab", "Stabilizer membership P^T L P = L", "label matrix", cmd_stab},
      {"qas-iso", "Permutation isomorphism of quantum affine spaces", "p q", cmd_qas_iso},
      {"reduce", "Normal form modulo a rewrite system", "polynomial", cmd_reduce},
  };
  int (*selected)(const Options&, std::ostream&) = nullptr;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    // Plain string positionals: CLI11 would split "[a, b]" for vector options.
    sub->add_option("input", o.first, s.inputs);
    sub->add_option("input2", o.second);
    if (std::string(s.name) == "reduce") {
      sub->add_option("--system", o.system, "Fixture name (u, v, h_os, h_sxx, h_kx) or path");
      sub->add_option("--degree-bound", o.degree_bound, "Maximum degree during reduction")->check(CLI::Range(1, 64));
    }
    if (std::string(s.name) == "canon")
      sub->add_option("--orbit", o.orbit, "Also canonicalize this many random orbit mates")->check(CLI::Range(0, 1000));
    sub->callback([&selected, run = s.run] { selected = run; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return selected(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Syntax ? kExitUsage : kExitDomain;
  }
}

}  // namespace sfc
