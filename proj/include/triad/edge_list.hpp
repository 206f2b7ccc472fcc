// Copyright 2026 The Triad Authors
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

// Edge-list text format: one edge per line as two base-10 non-negative
// integers separated by whitespace. Lines whose first non-blank character
// is '#' and blank lines are skipped. Self-loops and repeated edges are
// rejected with the offending line number.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "triad/common.hpp"
#include "triad/graph.hpp"

namespace triad {

struct RawEdge {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

inline std::string_view trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_blank(s[i])) ++i;
  return s.substr(i);
}

inline std::optional<std::uint64_t> take_number(std::string_view& s) {
  s = trim_left(s);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data()) return std::nullopt;
  const std::size_t used = static_cast<std::size_t>(ptr - s.data());
  if (used < s.size() && !is_blank(s[used])) return std::nullopt;
  s.remove_prefix(used);
  return value;
}

}  // namespace detail

// Parses one line. Returns nullopt for comments and blank lines; throws
// ParseError for anything else that is not exactly two integers.
inline std::optional<RawEdge> parse_edge_line(std::string_view line, std::size_t line_no) {
  std::string_view rest = detail::trim_left(line);
  if (rest.empty() || rest.front() == '#') return std::nullopt;
  auto a = detail::take_number(rest);
  if (!a) throw ParseError(line_no, "expected a non-negative integer vertex id");
  auto b = detail::take_number(rest);
  if (!b) throw ParseError(line_no, "expected a second non-negative integer vertex id");
  if (!detail::trim_left(rest).empty()) throw ParseError(line_no, "trailing characters after edge");
  return RawEdge{*a, *b};
}

// Rejects self-loops and repeats while an edge list is being scanned.
class EdgeValidator {
 public:
  void check(const RawEdge& raw, std::size_t line_no) {
    if (raw.a == raw.b) {
      throw ValidationError(line_no, "self-loop at vertex " + std::to_string(raw.a));
    }
    if (!seen_.insert(Edge(raw.a, raw.b)).second) {
      throw ValidationError(line_no, "repeated edge " + std::to_string(raw.a) + " " + std::to_string(raw.b));
    }
  }

 private:
  std::unordered_set<Edge> seen_;
};

// Sorted distinct original ids; dense id = position. Monotone, so the
// canonical orientation and every id-based tie rule are unaffected.
class IdMap {
 public:
  IdMap() = default;
  explicit IdMap(std::vector<std::uint64_t> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  VertexId to_dense(std::uint64_t original) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), original);
    if (it == ids_.end() || *it != original) throw InputError("unknown vertex id " + std::to_string(original));
    return static_cast<VertexId>(it - ids_.begin());
  }

  std::uint64_t to_original(VertexId dense) const { return ids_.at(dense); }
  Count size() const { return ids_.size(); }
  bool is_identity() const { return ids_.empty() || ids_.back() + 1 == ids_.size(); }
  std::span<const std::uint64_t> originals() const { return ids_; }

 private:
  std::vector<std::uint64_t> ids_;
};

struct LoadedEdges {
  std::vector<Edge> edges;  // dense ids, in file order
  IdMap ids;
};

inline LoadedEdges read_edge_list(std::istream& in) {
  std::vector<RawEdge> raw;
  std::vector<std::uint64_t> ids;
  EdgeValidator validator;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto parsed = parse_edge_line(line, line_no);
    if (!parsed) continue;
    validator.check(*parsed, line_no);
    raw.push_back(*parsed);
    ids.push_back(parsed->a);
    ids.push_back(parsed->b);
  }
  LoadedEdges out;
  out.ids = IdMap(std::move(ids));
  out.edges.reserve(raw.size());
  for (const RawEdge& r : raw) out.edges.emplace_back(out.ids.to_dense(r.a), out.ids.to_dense(r.b));
  return out;
}

inline LoadedEdges read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_edge_list(in);
}

// Graph on the dense ids of the file; isolated vertices cannot be
// expressed in the format, so n is the number of distinct endpoints.
inline Graph load_graph(const std::filesystem::path& path) {
  LoadedEdges loaded = read_edge_list(path);
  return Graph::from_edges(loaded.ids.size(), loaded.edges);
}

inline void write_edge_list(std::ostream& out, std::span<const Edge> edges) {
  std::string buffer;
  char num[24];
  for (const Edge& e : edges) {
    auto p = std::to_chars(num, num + sizeof num, e.u).ptr;
    buffer.append(num, p);
    buffer.push_back(' ');
    p = std::to_chars(num, num + sizeof num, e.v).ptr;
    buffer.append(num, p);
    buffer.push_back('\n');
  }
  out << buffer;
}

}  // namespace triad
