#pragma once

// The on-disk description format for quiver algebras.  A description is a
// JSON object with the fields
//
//   {
//     "name":      optional identifier,
//     "notes":     optional free-form remarks,
//     "field":     "Q" for the rationals or "F<p>" for a prime field,
//     "vertices":  ["x", "y", ...],
//     "arrows":    [{"name": "alpha", "from": "x", "to": "y"}, ...],
//     "relations": [[["1", ["delta", "delta"]]],
//                   [["1", ["alpha", "delta"]], ["-1", ["gamma", "beta"]]], ...]
//   }
//
// Each relation is a list of terms, each term a pair of a coefficient string
// and a list of arrow names in composition order (first name applied last).
// Every term of one relation must run between the same pair of vertices.
// Coefficient strings are parsed exactly by the chosen field, so "2/3" is
// valid over the rationals and "-1" everywhere.
//
// Parsing rejects unknown vertex or arrow names, non-composable or
// non-parallel relation terms, and unknown keys; error messages point at the
// offending line and column where one can be attributed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "quiverstrat/errors.hpp"
#include "quiverstrat/field.hpp"
#include "quiverstrat/fixtures.hpp"
#include "quiverstrat/presentation.hpp"

namespace quiverstrat {

struct FieldSpec {
  bool rational = true;
  std::uint64_t prime = 0;  // meaningful only when rational is false

  std::string text() const {
    return rational ? std::string("Q") : "F" + std::to_string(prime);
  }
  bool operator==(const FieldSpec&) const = default;
};

inline FieldSpec parse_field_spec(const std::string& s) {
  if (s == "Q" || s == "q") return {};
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9' || p > 400'000'000) {
        fail(errc::parse, "bad field '" + s + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
    }
    PrimeField check(p);  // validates primality
    return {false, p};
  }
  fail(errc::parse,
       "bad field '" + s + "' (expected \"Q\" or \"F<prime>\")");
}

struct AlgebraFile {
  FieldSpec field;
  Presentation presentation;
};

namespace detail {

// Line/column of the first occurrence of `token` as a quoted JSON string in
// the original text; empty when it cannot be located.
inline std::string locate_token(const std::string& text,
                                const std::string& token) {
  const std::string quoted = "\"" + token + "\"";
  std::size_t pos = text.find(quoted);
  if (pos == std::string::npos) return "";
  int line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return " (line " + std::to_string(line) + ", column " +
         std::to_string(col) + ")";
}

[[noreturn]] inline void fail_at(const std::string& text,
                                 const std::string& token,
                                 const std::string& message) {
  fail(errc::parse, message + locate_token(text, token));
}

inline void check_keys(const nlohmann::json& obj,
                       const std::vector<std::string>& allowed,
                       const std::string& where, const std::string& text) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const auto& k : allowed) {
      if (item.key() == k) known = true;
    }
    if (!known) {
      fail_at(text, item.key(),
              "unknown key '" + item.key() + "' in " + where);
    }
  }
}

}  // namespace detail

inline AlgebraFile parse_algebra_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("algebra description: ") + e.what());
  }
  try {
    if (!j.is_object()) {
      fail(errc::parse, "algebra description must be a JSON object");
    }
    detail::check_keys(
        j, {"name", "notes", "field", "vertices", "arrows", "relations"},
        "the algebra description", text);
    if (!j.contains("vertices")) {
      fail(errc::parse, "algebra description is missing \"vertices\"");
    }

    AlgebraFile out;
    out.field =
        parse_field_spec(j.contains("field") ? j.at("field").get<std::string>()
                                             : std::string("Q"));
    Presentation& p = out.presentation;
    if (j.contains("name")) p.name = j.at("name").get<std::string>();
    if (j.contains("notes")) p.notes = j.at("notes").get<std::string>();
    for (const auto& v : j.at("vertices")) {
      p.quiver.vertices.push_back(v.get<std::string>());
    }
    if (j.contains("arrows")) {
      for (const auto& a : j.at("arrows")) {
        if (!a.is_object()) {
          fail(errc::parse, "each arrow must be an object");
        }
        detail::check_keys(a, {"name", "from", "to"}, "an arrow", text);
        Arrow arrow;
        arrow.name = a.at("name").get<std::string>();
        const std::string from = a.at("from").get<std::string>();
        const std::string to = a.at("to").get<std::string>();
        arrow.src = p.quiver.vertex_index(from);
        arrow.dst = p.quiver.vertex_index(to);
        if (arrow.src < 0) {
          detail::fail_at(text, from,
                          "unknown vertex '" + from + "' in arrow '" +
                              arrow.name + "'");
        }
        if (arrow.dst < 0) {
          detail::fail_at(text, to,
                          "unknown vertex '" + to + "' in arrow '" +
                              arrow.name + "'");
        }
        p.quiver.arrows.push_back(std::move(arrow));
      }
    }
    p.quiver.validate();
    if (j.contains("relations")) {
      int rel_no = 0;
      for (const auto& r : j.at("relations")) {
        ++rel_no;
        if (!r.is_array() || r.empty()) {
          fail(errc::parse, "relation " + std::to_string(rel_no) +
                                " must be a non-empty array of terms");
        }
        RelationSpec rs;
        int src = -1, dst = -1;
        for (const auto& term : r) {
          if (!term.is_array() || term.size() != 2 || !term[0].is_string() ||
              !term[1].is_array()) {
            fail(errc::parse,
                 "each term of relation " + std::to_string(rel_no) +
                     " must be [coefficient, [arrow names...]]");
          }
          TermSpec ts;
          ts.coeff = term[0].get<std::string>();
          if (ts.coeff.empty()) {
            fail(errc::parse, "empty coefficient in relation " +
                                  std::to_string(rel_no));
          }
          for (const auto& an : term[1]) {
            ts.arrows.push_back(an.get<std::string>());
          }
          if (ts.arrows.empty()) {
            fail(errc::parse, "a term of relation " + std::to_string(rel_no) +
                                  " has no arrows");
          }
          // resolve the term's path right-to-left and reject splices
          int cur_src = -1, cur_dst = -1;
          for (std::size_t k = ts.arrows.size(); k-- > 0;) {
            int a = p.quiver.arrow_index(ts.arrows[k]);
            if (a < 0) {
              detail::fail_at(text, ts.arrows[k],
                              "unknown arrow '" + ts.arrows[k] +
                                  "' in relation " + std::to_string(rel_no));
            }
            const Arrow& arr = p.quiver.arrows[a];
            if (cur_src < 0) {
              cur_src = arr.src;
            } else if (arr.src != cur_dst) {
              detail::fail_at(text, ts.arrows[k],
                              "relation " + std::to_string(rel_no) +
                                  " contains a non-composable term at arrow '" +
                                  ts.arrows[k] + "'");
            }
            cur_dst = arr.dst;
          }
          if (src < 0) {
            src = cur_src;
            dst = cur_dst;
          } else if (src != cur_src || dst != cur_dst) {
            detail::fail_at(
                text, ts.arrows.front(),
                "relation " + std::to_string(rel_no) +
                    " mixes non-parallel terms: expected a path " +
                    p.quiver.vertices[src] + " -> " + p.quiver.vertices[dst]);
          }
          rs.terms.push_back(std::move(ts));
        }
        p.relations.push_back(std::move(rs));
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("algebra description: ") + e.what());
  }
}

inline std::string serialize_algebra_file(const AlgebraFile& f) {
  nlohmann::ordered_json j;
  const Presentation& p = f.presentation;
  if (!p.name.empty()) j["name"] = p.name;
  if (!p.notes.empty()) j["notes"] = p.notes;
  j["field"] = f.field.text();
  j["vertices"] = p.quiver.vertices;
  j["arrows"] = nlohmann::ordered_json::array();
  for (const Arrow& a : p.quiver.arrows) {
    nlohmann::ordered_json ja;
    ja["name"] = a.name;
    ja["from"] = p.quiver.vertices[a.src];
    ja["to"] = p.quiver.vertices[a.dst];
    j["arrows"].push_back(std::move(ja));
  }
  j["relations"] = nlohmann::ordered_json::array();
  for (const RelationSpec& r : p.relations) {
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (const TermSpec& t : r.terms) {
      jr.push_back(nlohmann::ordered_json::array({t.coeff, t.arrows}));
    }
    j["relations"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

inline AlgebraFile algebra_file_for_fixture(const std::string& name) {
  AlgebraFile f;
  f.presentation = fixture(name);
  return f;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(errc::parse, "cannot open '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(errc::parse, "cannot write '" + path.string() + "'");
  }
  out << text;
}

// Resolves a user-supplied algebra argument: an existing file, an existing
// file once ".json" is appended, or the name of a built-in example.
inline AlgebraFile load_algebra_arg(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::exists(arg) && fs::is_regular_file(arg)) {
    return parse_algebra_file(read_text_file(arg));
  }
  if (fs::exists(arg + ".json") && fs::is_regular_file(arg + ".json")) {
    return parse_algebra_file(read_text_file(arg + ".json"));
  }
  const std::string base = fs::path(arg).filename().string();
  for (const std::string& n : fixture_names()) {
    if (n == base) return algebra_file_for_fixture(n);
  }
  fail(errc::parse, "no such file or built-in example: '" + arg + "'");
}

// Writes the whole corpus as JSON files into `dir`; returns the paths.
inline std::vector<std::filesystem::path> write_fixture_corpus(
    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> out;
  for (const std::string& n : fixture_names()) {
    std::filesystem::path p = dir / (n + ".json");
    write_text_file(p, serialize_algebra_file(algebra_file_for_fixture(n)));
    out.push_back(p);
  }
  return out;
}

// Field dispatch: runs `fn` with the concrete field described by `fs`.
template <class Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.rational) return fn(RationalField{});
  return fn(PrimeField(fs.prime));
}

}  // namespace quiverstrat
