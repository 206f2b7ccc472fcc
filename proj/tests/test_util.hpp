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


// Reference oracles for the tests. They share no code with the library
// beyond the Edge type: adjacency matrices, brute force and the k-core
// definition of degeneracy.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>
#include <string>
#include <vector>

#include "triad/common.hpp"

namespace testing_oracle {

using triad::Count;
using triad::Edge;
using triad::VertexId;

struct Matrix {
  std::size_t n = 0;
  std::vector<std::vector<char>> adj;

  Matrix(std::size_t n_, const std::vector<Edge>& edges) : n(n_), adj(n_, std::vector<char>(n_, 0)) {
    for (const Edge& e : edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  }

  Count degree(std::size_t v) const { return static_cast<Count>(std::count(adj[v].begin(), adj[v].end(), 1)); }

  Count common(std::size_t a, std::size_t b) const {
    Count c = 0;
    for (std::size_t w = 0; w < n; ++w) c += (adj[a][w] && adj[b][w]) ? 1 : 0;
    return c;
  }

  Count triangles() const {
    Count t = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) t += (adj[a][b] && adj[b][c] && adj[a][c]) ? 1 : 0;
    return t;
  }

  // Largest k with a non-empty k-core, by repeated deletion for each k.
  Count degeneracy() const {
    Count best = 0;
    for (Count k = 1; k <= n; ++k) {
      std::vector<char> alive(n, 1);
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
          if (!alive[v]) continue;
          Count d = 0;
          for (std::size_t w = 0; w < n; ++w) d += (alive[w] && adj[v][w]) ? 1 : 0;
          if (d < k) {
            alive[v] = 0;
            changed = true;
          }
        }
      }
      if (std::count(alive.begin(), alive.end(), 1) == 0) break;
      best = k;
    }
    return best;
  }
};

inline std::vector<Edge> random_edges(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> out;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(gen)) out.emplace_back(u, v);
  return out;
}

// Scratch file removed at scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& contents, const std::string& suffix = ".el") {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("triad_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + suffix);
    std::ofstream(path_, std::ios::binary) << contents;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace testing_oracle
