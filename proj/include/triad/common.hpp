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

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace triad {

using VertexId = std::uint64_t;
using Count = std::uint64_t;

// Error hierarchy. The CLI maps ConfigError to exit code 2 and
// ParseError / ValidationError to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument to an oracle or generator (absent edge, vertex out of range).
class InputError : public Error {
 public:
  using Error::Error;
};

// Estimator or generator configuration that violates its constraints.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Stream protocol misuse, e.g. begin_pass while a pass is active.
class UsageError : public Error {
 public:
  using Error::Error;
};

class LineError : public Error {
 public:
  LineError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Malformed edge-list line.
class ParseError : public LineError {
 public:
  using LineError::LineError;
};

// Well-formed line describing a self-loop or a repeated edge.
class ValidationError : public LineError {
 public:
  using LineError::LineError;
};

// Undirected edge in canonical orientation u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool contains(VertexId x) const { return x == u || x == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Vertex triple in ascending order. Its three edges, in canonical
// (lexicographic) order, are {a,b}, {a,c}, {b,c}.
struct Triangle {
  std::array<VertexId, 3> v{};

  Triangle() = default;
  Triangle(VertexId a, VertexId b, VertexId c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
  }

  std::array<Edge, 3> edges() const {
    return {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])};
  }

  // Index of e among edges(), or -1.
  int edge_slot(const Edge& e) const {
    auto es = edges();
    for (int i = 0; i < 3; ++i) {
      if (es[i] == e) return i;
    }
    return -1;
  }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// The endpoint whose neighborhood defines N(e): the strictly lower-degree
// endpoint, and e.v (the larger id) when the degrees tie.
inline VertexId anchor_of(const Edge& e, Count deg_u, Count deg_v) {
  return deg_u < deg_v ? e.u : e.v;
}

}  // namespace triad

template <>
struct std::hash<triad::Edge> {
  std::size_t operator()(const triad::Edge& e) const noexcept {
    std::uint64_t x = e.u * 0x9E3779B97F4A7C15ULL ^ (e.v + 0x632BE59BD9B4E019ULL);
    x ^= x >> 31;
    return static_cast<std::size_t>(x * 0xBF58476D1CE4E5B9ULL);
  }
};

template <>
struct std::hash<triad::Triangle> {
  std::size_t operator()(const triad::Triangle& t) const noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (auto x : t.v) {
      h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};
