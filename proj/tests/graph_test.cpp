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


#include <gtest/gtest.h>

#include <array>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "triad/triad.hpp"

namespace {

using testing_oracle::Matrix;
using testing_oracle::random_edges;
using triad::Count;
using triad::Edge;
using triad::Graph;

Graph k_n(Count k) { return triad::gen_complete(k); }

TEST(GraphTest, CanonicalEdgesAndAccessors) {
  std::vector<Edge> edges{{2, 1}, {0, 2}, {1, 0}};
  Graph g = Graph::from_edges(edges);
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[2], Edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(0, 0));
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.edge_index(Edge(1, 2)), 2u);
  EXPECT_THROW(g.edge_index(Edge(0, 5)), triad::InputError);
  EXPECT_THROW(g.degree(3), triad::InputError);
}

TEST(GraphTest, RejectsSelfLoopsRepeatsAndRange) {
  std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), triad::InputError);
  std::vector<Edge> twice{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(3, twice), triad::InputError);
  std::vector<Edge> far{{0, 7}};
  EXPECT_THROW(Graph::from_edges(3, far), triad::InputError);
}

TEST(GraphTest, EmptyGraph) {
  Graph g = Graph::from_edges(0, {});
  EXPECT_EQ(triad::triangles_exact_cn(g), 0u);
  EXPECT_EQ(triad::triangles_exact_naive(g), 0u);
  EXPECT_EQ(triad::degeneracy(g), 0u);
  EXPECT_EQ(triad::sum_edge_degrees(g), 0u);
}

TEST(GraphTest, CliqueValues) {
  EXPECT_EQ(triad::triangles_exact_cn(k_n(3)), 1u);
  EXPECT_EQ(triad::triangles_exact_cn(k_n(4)), 4u);
  EXPECT_EQ(triad::triangles_exact_cn(k_n(10)), 120u);
  EXPECT_EQ(triad::degeneracy(k_n(10)), 9u);
  EXPECT_EQ(triad::sum_edge_degrees(k_n(3)), 6u);
}

TEST(GraphTest, EdgeDegreeAnchorTieGoesToLargerId) {
  Graph k3 = k_n(3);
  const auto ed = triad::edge_degree(k3, Edge(0, 1));
  EXPECT_EQ(ed.d_e, 2u);
  EXPECT_EQ(ed.anchor, 1u);
  EXPECT_THROW(triad::edge_degree(k3, Edge(0, 5)), triad::InputError);

  // Star center 0 with a pendant path: the leaf is the anchor.
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
  Graph star = Graph::from_edges(edges);
  EXPECT_EQ(triad::edge_degree(star, Edge(0, 3)).anchor, 3u);
  EXPECT_EQ(triad::edge_degree(star, Edge(0, 3)).d_e, 1u);
}

TEST(GraphTest, PeelingOrderIsAPermutation) {
  Graph g = Graph::from_edges(random_edges(30, 0.3, 5));
  const auto p = triad::peel(g);
  std::vector<triad::VertexId> order = p.order;
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i);
}

class RandomGraphs : public ::testing::TestWithParam<int> {};

TEST_P(RandomGraphs, AgreeWithMatrixOracle) {
  const int seed = GetParam();
  const std::size_t n = 5 + static_cast<std::size_t>(seed) % 35;
  const double prob = std::array{0.1, 0.3, 0.6}[static_cast<std::size_t>(seed) % 3];
  const auto edges = random_edges(n, prob, static_cast<std::uint64_t>(seed));
  Graph g = Graph::from_edges(n, edges);
  Matrix mat(n, edges);

  const Count T = mat.triangles();
  EXPECT_EQ(triad::triangles_exact_naive(g), T);
  EXPECT_EQ(triad::triangles_exact_cn(g), T);
  EXPECT_EQ(triad::degeneracy(g), mat.degeneracy());

  Count listed = 0;
  std::set<triad::Triangle> seen;
  triad::for_each_triangle(g, [&](const triad::Triangle& t) {
    ++listed;
    EXPECT_TRUE(mat.adj[t.v[0]][t.v[1]] && mat.adj[t.v[0]][t.v[2]] && mat.adj[t.v[1]][t.v[2]]);
    EXPECT_TRUE(seen.insert(t).second) << "triangle listed twice";
  });
  EXPECT_EQ(listed, T);

  Count d_E = 0;
  Count sum_t = 0;
  for (const auto& prof : triad::per_edge_triangles(g)) {
    EXPECT_EQ(prof.t_e, mat.common(prof.edge.u, prof.edge.v));
    EXPECT_EQ(prof.d_e, std::min(mat.degree(prof.edge.u), mat.degree(prof.edge.v)));
    d_E += prof.d_e;
    sum_t += prof.t_e;
  }
  EXPECT_EQ(sum_t, 3 * T);
  EXPECT_EQ(triad::sum_edge_degrees(g), d_E);
  const Count kappa = mat.degeneracy();
  EXPECT_LE(d_E, 2 * g.m() * kappa);
  EXPECT_LE(T, 2 * g.m() * kappa);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphs, ::testing::Range(0, 40));

TEST(ClassifyTest, MatchesDefinitionOnRandomGraphs) {
  for (int seed = 0; seed < 20; ++seed) {
    const std::size_t n = 25;
    const auto edges = random_edges(n, 0.4, 100 + static_cast<std::uint64_t>(seed));
    Graph g = Graph::from_edges(n, edges);
    Matrix mat(n, edges);
    const Count T = mat.triangles();
    if (T == 0) continue;
    const Count kappa = mat.degeneracy();
    const double eps = 0.1;
    const auto cls = triad::classify_edges(g, eps, T, kappa);
    const double m = static_cast<double>(g.m());

    auto heavy = [&](const Edge& e) { return static_cast<double>(mat.common(e.u, e.v)) > kappa / eps; };
    auto costly = [&](const Edge& e) {
      const Count t = mat.common(e.u, e.v);
      if (t == 0) return true;
      const double d = static_cast<double>(std::min(mat.degree(e.u), mat.degree(e.v)));
      return d / static_cast<double>(t) > m * kappa / (eps * static_cast<double>(T));
    };
    Count heavy_tri = 0;
    Count costly_tri = 0;
    for (std::size_t i = 0; i < g.m(); ++i) {
      EXPECT_EQ(cls.edges[i].heavy, heavy(g.edges()[i]));
      EXPECT_EQ(cls.edges[i].costly, costly(g.edges()[i]));
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          if (!(mat.adj[a][b] && mat.adj[a][c] && mat.adj[b][c])) continue;
          const Edge e1(a, b), e2(a, c), e3(b, c);
          heavy_tri += (heavy(e1) && heavy(e2) && heavy(e3)) ? 1 : 0;
          costly_tri += (costly(e1) || costly(e2) || costly(e3)) ? 1 : 0;
        }
    EXPECT_EQ(cls.heavy_triangles, heavy_tri);
    EXPECT_EQ(cls.costly_triangles, costly_tri);
  }
}

TEST(ClassifyTest, BookSpineIsHeavyPagesAreNot) {
  // book(100): spine t = 100, page edges t = 1, kappa = 2.
  const auto book = triad::gen_book(100);
  const auto cls = triad::classify_edges(book.graph, 0.1, 100, 2);
  EXPECT_TRUE(cls.edges[book.graph.edge_index(Edge(0, 1))].heavy);
  EXPECT_FALSE(cls.edges[book.graph.edge_index(Edge(0, 2))].heavy);
  EXPECT_EQ(cls.heavy_triangles, 0u);
}

TEST(ClassifyTest, RejectsBadArguments) {
  Graph g = k_n(4);
  EXPECT_THROW(triad::classify_edges(g, 0.1, 0, 3), triad::InputError);
  EXPECT_THROW(triad::classify_edges(g, 1.5, 4, 3), triad::InputError);
}

}  // namespace
