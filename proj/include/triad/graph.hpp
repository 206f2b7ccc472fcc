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
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "triad/common.hpp"

namespace triad {

// Immutable undirected simple graph on vertices [0, n) in CSR form with
// sorted neighbor lists. Edges are kept in canonical lexicographic order;
// an edge's position in edges() is its index for per-edge outputs.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, repeated edges, or endpoints >= n.
  static Graph from_edges(Count n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.edges_.assign(edges.begin(), edges.end());
    for (const Edge& e : g.edges_) {
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
      if (e.v >= n) throw InputError("edge endpoint " + std::to_string(e.v) + " >= n");
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
      throw InputError("repeated edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    }
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (Count i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adjacency_.resize(2 * g.edges_.size());
    std::vector<Count> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
      g.adjacency_[cursor[e.u]++] = e.v;
      g.adjacency_[cursor[e.v]++] = e.u;
    }
    for (Count v = 0; v < n; ++v) {
      std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
    }
    return g;
  }

  // n is one past the largest endpoint.
  static Graph from_edges(std::span<const Edge> edges) {
    Count n = 0;
    for (const Edge& e : edges) n = std::max(n, e.v + 1);
    return from_edges(n, edges);
  }

  Count n() const { return n_; }
  Count m() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  Count degree(VertexId v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  Count max_degree() const {
    Count best = 0;
    for (VertexId v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
    return best;
  }

  bool has_edge(VertexId a, VertexId b) const {
    if (a == b || a >= n_ || b >= n_) return false;
    auto na = neighbors(a);
    return std::binary_search(na.begin(), na.end(), b);
  }

  // Position of e in edges(); throws InputError when absent.
  std::size_t edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
      throw InputError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " not in graph");
    }
    return static_cast<std::size_t>(it - edges_.begin());
  }

 private:
  void check_vertex(VertexId v) const {
    if (v >= n_) {
      throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
    }
  }

  Count n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Count> offsets_{0};
  std::vector<VertexId> adjacency_;
};

struct EdgeProfile {
  Edge edge;
  Count d_e = 0;  // min endpoint degree
  Count t_e = 0;  // triangles containing the edge
};

struct EdgeDegree {
  Count d_e = 0;
  VertexId anchor = 0;  // endpoint whose neighborhood is N(e)
};

inline Count degree(const Graph& g, VertexId v) { return g.degree(v); }

inline EdgeDegree edge_degree(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v)) {
    throw InputError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " not in graph");
  }
  const Count du = g.degree(e.u);
  const Count dv = g.degree(e.v);
  return {std::min(du, dv), anchor_of(e, du, dv)};
}

// d_E, the sum over edges of min endpoint degree. At most 2 m kappa.
inline Count sum_edge_degrees(const Graph& g) {
  Count total = 0;
  for (const Edge& e : g.edges()) total += std::min(g.degree(e.u), g.degree(e.v));
  return total;
}

struct Peeling {
  Count degeneracy = 0;
  std::vector<VertexId> order;  // removal order
};

// Min-degree peeling with bucket queues (Matula-Beck), O(n + m). The
// degeneracy is the largest degree observed at removal time.
inline Peeling peel(const Graph& g) {
  const Count n = g.n();
  Peeling out;
  out.order.reserve(n);
  if (n == 0) return out;
  std::vector<Count> deg(n);
  Count max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  // bin sort vertices by degree; pos/vert give O(1) bucket moves
  std::vector<Count> bin(max_deg + 1, 0);
  for (VertexId v = 0; v < n; ++v) ++bin[deg[v]];
  Count start = 0;
  for (Count d = 0; d <= max_deg; ++d) {
    const Count size = bin[d];
    bin[d] = start;
    start += size;
  }
  std::vector<Count> pos(n);
  std::vector<VertexId> vert(n);
  for (VertexId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]];
    vert[pos[v]] = v;
    ++bin[deg[v]];
  }
  for (Count d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (Count i = 0; i < n; ++i) {
    const VertexId v = vert[i];
    out.degeneracy = std::max(out.degeneracy, deg[v]);
    out.order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (deg[w] > deg[v]) {
        const Count dw = deg[w];
        const Count pw = pos[w];
        const Count pu = bin[dw];
        const VertexId u = vert[pu];
        if (u != w) {
          pos[w] = pu;
          vert[pu] = w;
          pos[u] = pw;
          vert[pw] = u;
        }
        ++bin[dw];
        --deg[w];
      }
    }
  }
  return out;
}

inline Count degeneracy(const Graph& g) { return peel(g).degeneracy; }

// Independent O(n^3) oracle over all vertex triples.
inline Count triangles_exact_naive(const Graph& g) {
  const Count n = g.n();
  Count total = 0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (VertexId c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) ++total;
      }
    }
  }
  return total;
}

// Enumerates every triangle exactly once, in O(m kappa) time.
//
// Vertices are ranked by a degeneracy (peeling) order and every edge is
// oriented from lower to higher rank, so each vertex has at most kappa
// out-neighbors. For an oriented edge (u -> v) the third vertices are the
// common out-neighbors of u and v, i.e. w ranked after both endpoints. A
// triangle is therefore reported once, from its two lowest-ranked vertices,
// and no division by 3 is needed.
template <typename Fn>
void for_each_triangle(const Graph& g, Fn&& fn) {
  const Count n = g.n();
  const Peeling peeling = peel(g);
  std::vector<Count> rank(n);
  for (Count i = 0; i < n; ++i) rank[peeling.order[i]] = i;

  std::vector<std::vector<VertexId>> out(n);
  for (const Edge& e : g.edges()) {
    if (rank[e.u] < rank[e.v]) {
      out[e.u].push_back(e.v);
    } else {
      out[e.v].push_back(e.u);
    }
  }
  auto by_rank = [&](VertexId a, VertexId b) { return rank[a] < rank[b]; };
  for (auto& list : out) std::sort(list.begin(), list.end(), by_rank);

  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : out[u]) {
      const auto& a = out[u];
      const auto& b = out[v];
      auto ia = a.begin();
      auto ib = b.begin();
      while (ia != a.end() && ib != b.end()) {
        if (rank[*ia] < rank[*ib]) {
          ++ia;
        } else if (rank[*ib] < rank[*ia]) {
          ++ib;
        } else {
          fn(Triangle(u, v, *ia));
          ++ia;
          ++ib;
        }
      }
    }
  }
}

inline Count triangles_exact_cn(const Graph& g) {
  Count total = 0;
  for_each_triangle(g, [&](const Triangle&) { ++total; });
  return total;
}

// Exact t_e for every edge, aligned with g.edges(). Sum of t_e is 3T.
inline std::vector<EdgeProfile> per_edge_triangles(const Graph& g) {
  std::vector<EdgeProfile> profiles;
  profiles.reserve(g.m());
  for (const Edge& e : g.edges()) {
    profiles.push_back({e, std::min(g.degree(e.u), g.degree(e.v)), 0});
  }
  for_each_triangle(g, [&](const Triangle& t) {
    for (const Edge& e : t.edges()) ++profiles[g.edge_index(e)].t_e;
  });
  return profiles;
}

struct EdgeFlags {
  bool heavy = false;
  bool costly = false;
};

struct Classification {
  std::vector<EdgeFlags> edges;  // aligned with g.edges()
  Count heavy_triangles = 0;     // all three edges heavy
  Count costly_triangles = 0;    // at least one edge costly
};

// Heavy: t_e > kappa / eps. Costly: d_e / t_e > m kappa / (eps T), with
// t_e = 0 always costly. Both tests are evaluated in multiplied-out form.
inline Classification classify_edges(const Graph& g, double eps, Count T, Count kappa) {
  if (T == 0) throw InputError("classify_edges requires T > 0");
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("classify_edges requires 0 < eps < 1");
  const auto profiles = per_edge_triangles(g);
  const double m = static_cast<double>(g.m());
  const double k = static_cast<double>(kappa);
  const double t_total = static_cast<double>(T);

  Classification out;
  out.edges.resize(profiles.size());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const double te = static_cast<double>(profiles[i].t_e);
    const double de = static_cast<double>(profiles[i].d_e);
    out.edges[i].heavy = te * eps > k;
    out.edges[i].costly = profiles[i].t_e == 0 || de * eps * t_total > te * m * k;
  }
  for_each_triangle(g, [&](const Triangle& t) {
    bool all_heavy = true;
    bool any_costly = false;
    for (const Edge& e : t.edges()) {
      const auto& f = out.edges[g.edge_index(e)];
      all_heavy = all_heavy && f.heavy;
      any_costly = any_costly || f.costly;
    }
    if (all_heavy) ++out.heavy_triangles;
    if (any_costly) ++out.costly_triangles;
  });
  return out;
}

}  // namespace triad
