#pragma once

// CXS text format:
//
//   rank N              required, first directive
//   default 2|inf       optional, label for unlisted pairs (default 2)
//   names a b c ...     optional, one name per generator
//   edge I J M          1-based indices, M an integer >= 2 or "inf"
//
// '#' starts a comment. Serialization emits the directives in this order with
// edges sorted lexicographically, listing only pairs that differ from the default.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coxhi/core.hpp"

namespace coxhi {

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_index(const std::string& tok, int line_no) {
  if (tok.empty() || tok.size() > 3 || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("line " + std::to_string(line_no) + ": invalid generator index '" + tok + "'");
  }
  return std::stoi(tok);
}

}  // namespace detail

inline CoxeterSystem parse_cxs(std::string_view text) {
  std::optional<int> rank;
  Label fallback(2);
  bool saw_default = false;
  std::vector<std::string> names;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = detail::split_ws(line);
    if (tok.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    const std::string& cmd = tok[0];
    if (!rank && cmd != "rank") throw InputError(where + "'rank' must be the first directive");

    if (cmd == "rank") {
      if (rank) throw InputError(where + "duplicate 'rank' directive");
      if (tok.size() != 2 || tok[1].find_first_not_of("0123456789") != std::string::npos || tok[1].size() > 6) {
        throw InputError(where + "expected 'rank N'");
      }
      const int n = std::stoi(tok[1]);
      if (n > kMaxRank) throw RankCapError(n, kMaxRank, "cxs input");
      rank = n;
    } else if (cmd == "default") {
      if (saw_default) throw InputError(where + "duplicate 'default' directive");
      if (tok.size() != 2) throw InputError(where + "expected 'default 2|inf'");
      if (tok[1] == "2") {
        fallback = Label(2);
      } else if (tok[1] == "inf") {
        fallback = Label::infinity();
      } else {
        throw InputError(where + "default must be 2 or inf");
      }
      saw_default = true;
    } else if (cmd == "names") {
      if (!names.empty()) throw InputError(where + "duplicate 'names' directive");
      names.assign(tok.begin() + 1, tok.end());
      if (static_cast<int>(names.size()) != *rank) {
        throw InputError(where + "expected " + std::to_string(*rank) + " names, got " + std::to_string(names.size()));
      }
    } else if (cmd == "edge") {
      if (tok.size() != 4) throw InputError(where + "expected 'edge I J M'");
      const int i = detail::parse_index(tok[1], line_no);
      const int j = detail::parse_index(tok[2], line_no);
      if (i < 1 || j < 1 || i > *rank || j > *rank) throw InputError(where + "edge index out of range");
      Label m;
      try {
        m = Label::parse(tok[3]);
      } catch (const InputError&) {
        throw InputError(where + "invalid label '" + tok[3] + "'");
      }
      if (m.is_finite() && m.value() < 2) throw InputError(where + "edge label must be >= 2 or inf");
      edges.push_back({i - 1, j - 1, m});
    } else {
      throw InputError(where + "unknown directive '" + cmd + "'");
    }
    if (eol == text.size()) break;
  }
  if (!rank) throw InputError("missing 'rank' directive");
  return CoxeterSystem::from_edges(*rank, fallback, edges, names);
}

/// Serializes with an explicit `default` directive. `fallback` must be 2 or infinity.
inline std::string to_cxs(const CoxeterSystem& sys, Label fallback = Label(2)) {
  std::ostringstream out;
  out << "rank " << sys.rank() << "\n";
  out << "default " << (fallback.is_infinite() ? "inf" : "2") << "\n";
  if (sys.rank() > 0) {
    out << "names";
    for (const auto& n : sys.names()) out << ' ' << n;
    out << "\n";
  }
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j)
      if (sys.label(i, j) != fallback) out << "edge " << i + 1 << ' ' << j + 1 << ' ' << sys.label(i, j).to_string() << "\n";
  return out.str();
}

/// Picks the default that yields fewer edge lines: inf for right-angled systems
/// with more infinite than commuting pairs, else 2.
inline Label preferred_default(const CoxeterSystem& sys) {
  int inf = 0;
  int two = 0;
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j) {
      if (sys.label(i, j).is_infinite()) ++inf;
      if (sys.label(i, j) == Label(2)) ++two;
    }
  return inf > two ? Label::infinity() : Label(2);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CoxeterSystem read_cxs_file(const std::string& path) { return parse_cxs(read_text_file(path)); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace coxhi
