#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyclass/constructors.hpp"
#include "polyclass/errors.hpp"
#include "polyclass/polytope.hpp"

// Polytope file:  {"name": "P1", "vertices": [[0, 0], [1, 0], ...]}
// Graph file:     {"n": 4, "edges": [[0, 1], [1, 2], ...]}
// Poset file:     {"n": 3, "relations": [[0, 1], ...]}   (pairs i <= j)
//
// Coordinates are JSON integers, or decimal strings for values beyond 64 bits.
// Floats are rejected.

namespace polyclass {

namespace detail {

using ordered_json = nlohmann::ordered_json;

/// Byte offsets of the JSON tokens that the DOM walk visits: every scalar,
/// key, and bracket, in document order (',' and ':' are skipped).
class TokenIndex {
public:
  explicit TokenIndex(std::string_view text) : text_(text) {
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ':') {
        ++i;
        continue;
      }
      offsets_.push_back(i);
      if (c == '"') {
        for (++i; i < text.size() && text[i] != '"'; ++i)
          if (text[i] == '\\')
            ++i;
        ++i;
      } else if (c == '{' || c == '}' || c == '[' || c == ']') {
        ++i;
      } else {
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(
                                      text[i])) &&
               text[i] != ',' && text[i] != ']' && text[i] != '}' &&
               text[i] != ':')
          ++i;
      }
    }
  }

  std::pair<std::size_t, std::size_t> line_col(std::size_t token) const {
    const std::size_t off =
        token < offsets_.size() ? offsets_[token] : text_.size();
    return line_col_of_offset(text_, off);
  }

  static std::pair<std::size_t, std::size_t>
  line_col_of_offset(std::string_view text, std::size_t off) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < off && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(std::size_t token, const std::string &msg) const {
    auto [line, col] = line_col(token);
    throw ParseError(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(col),
                     line, col);
  }

private:
  std::string_view text_;
  std::vector<std::size_t> offsets_;
};

/// Number of tokens a value spans in TokenIndex terms.
inline std::size_t token_count(const ordered_json &j) {
  if (j.is_array()) {
    std::size_t n = 2;
    for (const auto &e : j)
      n += token_count(e);
    return n;
  }
  if (j.is_object()) {
    std::size_t n = 2;
    for (const auto &[k, v] : j.items())
      n += 1 + token_count(v);
    return n;
  }
  return 1;
}

inline ordered_json parse_document(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    const std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = TokenIndex::line_col_of_offset(text, off);
    throw ParseError("malformed JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(col),
                     line, col);
  }
}

inline BigInt read_integer(const ordered_json &j, const TokenIndex &idx,
                           std::size_t token, const char *what) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>())
                                  : BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto &s = j.get_ref<const std::string &>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() > start &&
        std::all_of(s.begin() + start, s.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return BigInt(s);
  }
  if (j.is_number_float())
    idx.fail(token, std::string(what) + " must be an integer, found a float");
  idx.fail(token, std::string(what) + " must be an integer");
}

/// Calls visit(key, value, token_of_value) for each member of a top-level
/// object, rejecting unexpected keys.
template <class Visit>
void walk_object(const ordered_json &doc, const TokenIndex &idx,
                 std::vector<std::string_view> allowed, Visit &&visit) {
  if (!doc.is_object())
    idx.fail(0, "expected a JSON object");
  std::size_t tok = 1;
  for (const auto &[key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      idx.fail(tok, "unexpected key \"" + key + "\"");
    visit(key, value, tok + 1);
    tok += 1 + token_count(value);
  }
}

inline std::vector<std::pair<std::size_t, std::size_t>>
read_pairs(const ordered_json &arr, const TokenIndex &idx, std::size_t tok,
           std::size_t n, const char *what) {
  if (!arr.is_array())
    idx.fail(tok, std::string("\"") + what + "\" must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t t = tok + 1;
  for (const auto &pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      idx.fail(t, std::string("each entry of \"") + what +
                      "\" must be a pair [i, j]");
    std::size_t ends[2];
    for (std::size_t k = 0; k < 2; ++k) {
      const BigInt v = read_integer(pair[k], idx, t + 1 + k, "index");
      if (v < 0 || v >= n)
        idx.fail(t + 1 + k, "index out of range 0.." + std::to_string(n - 1));
      ends[k] = static_cast<std::size_t>(v);
    }
    out.emplace_back(ends[0], ends[1]);
    t += token_count(pair);
  }
  return out;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace detail

struct PolytopeFile {
  std::string name;
  Polytope polytope;
};

inline PolytopeFile parse_polytope(std::string_view text) {
  const auto doc = detail::parse_document(text);
  const detail::TokenIndex idx(text);
  std::string name;
  std::vector<Point> verts;
  std::optional<std::size_t> width;
  bool have_vertices = false;
  std::size_t vertices_tok = 0;
  detail::walk_object(
      doc, idx, {"name", "vertices"},
      [&](const std::string &key, const detail::ordered_json &v,
          std::size_t tok) {
        if (key == "name") {
          if (!v.is_string())
            idx.fail(tok, "\"name\" must be a string");
          name = v.get<std::string>();
          return;
        }
        have_vertices = true;
        vertices_tok = tok;
        if (!v.is_array())
          idx.fail(tok, "\"vertices\" must be an array");
        std::size_t t = tok + 1;
        for (const auto &row : v) {
          if (!row.is_array())
            idx.fail(t, "each vertex must be an array of integers");
          if (width && row.size() != *width)
            idx.fail(t, "vertex has " + std::to_string(row.size()) +
                            " coordinates, expected " +
                            std::to_string(*width));
          width = row.size();
          Point p;
          std::size_t c = t + 1;
          for (const auto &x : row) {
            p.push_back(detail::read_integer(x, idx, c, "coordinate"));
            c += detail::token_count(x);
          }
          verts.push_back(std::move(p));
          t += detail::token_count(row);
        }
      });
  if (!have_vertices)
    idx.fail(0, "missing \"vertices\"");
  if (verts.empty())
    idx.fail(vertices_tok, "\"vertices\" is empty");
  try {
    return {name, Polytope(*width, std::move(verts))};
  } catch (const ArgumentError &e) {
    idx.fail(vertices_tok, e.what());
  }
}

inline PolytopeFile load_polytope(const std::string &path) {
  return parse_polytope(detail::read_file(path));
}

inline std::string write_polytope(const std::string &name, const Polytope &p) {
  // One vertex per line keeps files diffable.
  std::string out = "{\n  \"name\": " + nlohmann::json(name).dump() +
                    ",\n  \"vertices\": [";
  const auto &vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out += i ? ",\n    [" : "\n    [";
    for (std::size_t j = 0; j < vs[i].size(); ++j) {
      const BigInt &x = vs[i][j];
      const bool fits = x >= std::numeric_limits<std::int64_t>::min() &&
                        x <= std::numeric_limits<std::int64_t>::max();
      out += (j ? ", " : "") + (fits ? x.str() : "\"" + x.str() + "\"");
    }
    out += "]";
  }
  out += vs.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

namespace detail {

inline std::size_t read_count(const ordered_json &v, const TokenIndex &idx,
                              std::size_t tok) {
  const BigInt n = read_integer(v, idx, tok, "\"n\"");
  if (n < 0 || n > 64)
    idx.fail(tok, "\"n\" must be between 0 and 64");
  return static_cast<std::size_t>(n);
}

// Reads {"n": ..., "<list_key>": [[i, j], ...]}; "n" must come first.
inline std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>
parse_pair_file(std::string_view text, const char *list_key) {
  const auto doc = parse_document(text);
  const TokenIndex idx(text);
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  walk_object(doc, idx, {"n", list_key},
              [&](const std::string &key, const ordered_json &v,
                  std::size_t tok) {
                if (key == "n") {
                  n = read_count(v, idx, tok);
                  return;
                }
                if (!n)
                  idx.fail(tok, "\"n\" must precede \"" +
                                    std::string(list_key) + "\"");
                pairs = read_pairs(v, idx, tok, *n, list_key);
              });
  if (!n)
    idx.fail(0, "missing \"n\"");
  return {*n, std::move(pairs)};
}

} // namespace detail

inline Graph parse_graph(std::string_view text) {
  auto [n, edges] = detail::parse_pair_file(text, "edges");
  try {
    return Graph(n, std::move(edges));
  } catch (const ArgumentError &e) {
    throw ParseError(std::string("invalid graph: ") + e.what(), 1, 1);
  }
}

struct PosetInput {
  Poset poset;
  bool was_closed; // false when the tool had to add implied relations
};

inline PosetInput parse_poset(std::string_view text) {
  auto [n, rel] = detail::parse_pair_file(text, "relations");
  try {
    return {Poset(n, rel), Poset::is_closed(n, rel)};
  } catch (const ArgumentError &e) {
    throw ParseError(std::string("invalid poset: ") + e.what(), 1, 1);
  }
}

} // namespace polyclass
