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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "triad/common.hpp"
#include "triad/edge_list.hpp"
#include "triad/graph.hpp"
#include "triad/random.hpp"

namespace triad {

struct StreamStats {
  Count n = 0;  // distinct endpoints
  Count m = 0;

  friend bool operator==(const StreamStats&, const StreamStats&) = default;
};

// Replayable, pass-counted edge sequence with a single consumer.
//
// Every pass yields each edge exactly once in an order fixed at open time:
// source order without a seed, a seeded uniform permutation with one. The
// pass counter increments once per end_pass() and never decreases.
//
// The file backend re-reads the file on every pass and keeps only the id
// map; with an order seed it additionally keeps one byte offset per edge
// and seeks through them in permuted order.
class EdgeStream {
 public:
  // In-memory source. Vertex ids are used as given. Self-loops and
  // repeats throw ValidationError, numbered by 1-based position.
  static EdgeStream from_edges(std::vector<Edge> edges, std::optional<std::uint64_t> order_seed = std::nullopt) {
    EdgeValidator validator;
    std::unordered_set<VertexId> vertices;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      validator.check({edges[i].u, edges[i].v}, i + 1);
      vertices.insert(edges[i].u);
      vertices.insert(edges[i].v);
    }
    EdgeStream s;
    s.n_ = vertices.size();
    s.m_ = edges.size();
    s.order_seed_ = order_seed;
    if (order_seed) {
      KeyedRng rng(*order_seed, Role::kShuffle);
      shuffle_deterministic(edges.begin(), edges.end(), rng);
    }
    s.memory_ = std::move(edges);
    return s;
  }

  static EdgeStream from_graph(const Graph& g, std::optional<std::uint64_t> order_seed = std::nullopt) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    return from_edges(std::move(edges), order_seed);
  }

  // File source. The file is scanned once here to validate it and build
  // the sparse-to-dense id map; that scan is not a pass.
  static EdgeStream open(const std::filesystem::path& path, std::optional<std::uint64_t> order_seed = std::nullopt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    EdgeValidator validator;
    std::vector<std::uint64_t> ids;
    std::vector<std::uint64_t> offsets;
    std::string line;
    std::size_t line_no = 0;
    Count m = 0;
    std::uint64_t offset = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::uint64_t line_start = offset;
      offset += line.size() + 1;
      auto parsed = parse_edge_line(line, line_no);
      if (!parsed) continue;
      validator.check(*parsed, line_no);
      ids.push_back(parsed->a);
      ids.push_back(parsed->b);
      if (order_seed) offsets.push_back(line_start);
      ++m;
    }
    EdgeStream s;
    s.path_ = path;
    s.ids_ = IdMap(std::move(ids));
    s.n_ = s.ids_.size();
    s.m_ = m;
    s.order_seed_ = order_seed;
    if (order_seed) {
      KeyedRng rng(*order_seed, Role::kShuffle);
      shuffle_deterministic(offsets.begin(), offsets.end(), rng);
      s.offsets_ = std::move(offsets);
    }
    return s;
  }

  void begin_pass() {
    if (active_) throw UsageError("begin_pass called while a pass is active");
    active_ = true;
    cursor_ = 0;
    if (path_) {
      file_ = std::ifstream(*path_, std::ios::binary);
      if (!file_) throw InputError("cannot reopen " + path_->string());
    }
  }

  // Next edge of the active pass, or nullopt at end of pass.
  std::optional<Edge> next_edge() {
    if (!active_) throw UsageError("next_edge called outside a pass");
    if (!path_) {
      if (cursor_ >= memory_.size()) return std::nullopt;
      return memory_[cursor_++];
    }
    std::string line;
    if (order_seed_) {
      if (cursor_ >= offsets_.size()) return std::nullopt;
      file_.clear();
      file_.seekg(static_cast<std::streamoff>(offsets_[cursor_++]));
      std::getline(file_, line);
      auto parsed = parse_edge_line(line, 0);
      return Edge(ids_.to_dense(parsed->a), ids_.to_dense(parsed->b));
    }
    while (std::getline(file_, line)) {
      auto parsed = parse_edge_line(line, 0);
      if (!parsed) continue;
      ++cursor_;
      return Edge(ids_.to_dense(parsed->a), ids_.to_dense(parsed->b));
    }
    return std::nullopt;
  }

  void end_pass() {
    if (!active_) throw UsageError("end_pass called without an active pass");
    active_ = false;
    if (path_) file_.close();
    ++passes_;
  }

  Count passes() const { return passes_; }
  bool in_pass() const { return active_; }
  bool file_backed() const { return path_.has_value(); }
  const std::optional<std::uint64_t>& order_seed() const { return order_seed_; }
  // Identity for in-memory sources.
  const IdMap& ids() const { return ids_; }

  // Known from construction; stats() is the pass-consuming way to learn them.
  Count vertex_count() const { return n_; }
  Count edge_count() const { return m_; }

 private:
  EdgeStream() = default;

  std::vector<Edge> memory_;
  std::optional<std::filesystem::path> path_;
  std::ifstream file_;
  std::vector<std::uint64_t> offsets_;
  IdMap ids_;
  std::optional<std::uint64_t> order_seed_;
  Count n_ = 0;
  Count m_ = 0;
  Count passes_ = 0;
  std::size_t cursor_ = 0;
  bool active_ = false;
};

// Runs one full pass, calling fn(edge) for every edge.
template <typename Fn>
void run_pass(EdgeStream& stream, Fn&& fn) {
  stream.begin_pass();
  while (auto e = stream.next_edge()) fn(*e);
  stream.end_pass();
}

// Consumes one pass.
inline StreamStats stats(EdgeStream& stream) {
  std::unordered_set<VertexId> vertices;
  StreamStats out;
  run_pass(stream, [&](const Edge& e) {
    ++out.m;
    vertices.insert(e.u);
    vertices.insert(e.v);
  });
  out.n = vertices.size();
  return out;
}

}  // namespace triad
