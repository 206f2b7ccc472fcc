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

#include <algorithm>
#include <cmath>
#include <vector>

#include "test_util.hpp"
#include "triad/triad.hpp"

namespace {

using testing_oracle::Matrix;
using triad::Count;
using triad::DisjKind;
using triad::Edge;
using triad::GroundTruth;

GroundTruth by_matrix(const triad::Graph& g) {
  Matrix mat(g.n(), std::vector<Edge>(g.edges().begin(), g.edges().end()));
  return {g.n(), g.m(), mat.triangles(), mat.degeneracy()};
}

TEST(Generators, WheelClosedForm) {
  EXPECT_EQ(by_matrix(triad::gen_wheel(4).graph), (GroundTruth{4, 6, 4, 3}));
  EXPECT_EQ(triad::gen_wheel(4).truth, (GroundTruth{4, 6, 4, 3}));
  for (Count n : {5, 6, 17, 51}) {
    const auto w = triad::gen_wheel(n);
    EXPECT_EQ(w.truth, (GroundTruth{n, 2 * (n - 1), n - 1, 3})) << n;
    EXPECT_EQ(by_matrix(w.graph), w.truth) << n;
  }
  const auto w5 = triad::gen_wheel(5);
  EXPECT_EQ(w5.graph.degree(0), 4u);
  EXPECT_EQ(triad::sum_edge_degrees(w5.graph), 24u);
  EXPECT_EQ(triad::measure(triad::gen_wheel(1001).graph), (GroundTruth{1001, 2000, 1000, 3}));
  EXPECT_THROW(triad::gen_wheel(3), triad::ConfigError);
}

TEST(Generators, BookClosedForm) {
  const auto k1 = triad::gen_book(1);
  EXPECT_EQ(k1.graph.m(), 3u);
  EXPECT_EQ(triad::triangles_exact_naive(k1.graph), 1u);
  for (Count k : {1, 2, 7, 20}) {
    const auto b = triad::gen_book(k);
    EXPECT_EQ(b.truth, (GroundTruth{k + 2, 2 * k + 1, k, 2})) << k;
    EXPECT_EQ(by_matrix(b.graph), b.truth) << k;
  }
  EXPECT_EQ(triad::measure(triad::gen_book(998).graph), (GroundTruth{1000, 1997, 998, 2}));
}

TEST(Generators, LowerBoundInstances) {
  struct Case {
    Count p, q, N;
    DisjKind kind;
  };
  for (const Case& c : {Case{2, 1, 6, DisjKind::kYes}, Case{2, 1, 6, DisjKind::kNo}, Case{4, 4, 30, DisjKind::kNo},
                        Case{3, 2, 9, DisjKind::kYes}, Case{5, 3, 12, DisjKind::kNo}}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto spec = triad::make_lb_spec(c.p, c.q, c.N, c.kind, seed);
      EXPECT_NO_THROW(spec.validate());
      const auto lb = triad::gen_lb_instance(spec);
      EXPECT_EQ(lb.truth.n, 2 * c.p + c.N * c.q);
      EXPECT_EQ(lb.truth.m, c.p * c.p + 2 * (c.N / 3) * c.p * c.q);
      EXPECT_EQ(lb.graph.m(), lb.truth.m);
      const GroundTruth ref = by_matrix(lb.graph);
      EXPECT_EQ(lb.truth.T, ref.T);
      EXPECT_EQ(lb.truth.kappa, ref.kappa);
      if (c.kind == DisjKind::kYes) {
        EXPECT_EQ(lb.truth.T, 0u);
        EXPECT_EQ(lb.truth.kappa, c.p);
      } else {
        EXPECT_EQ(lb.truth.T, c.p * c.p * c.q);
        EXPECT_GE(lb.truth.kappa, c.p);
        EXPECT_LE(lb.truth.kappa, 2 * c.p);
      }
    }
  }
  EXPECT_EQ(triad::gen_lb_instance(triad::make_lb_spec(2, 1, 6, DisjKind::kYes, 0)).truth.m, 12u);
  EXPECT_EQ(triad::gen_lb_instance(triad::make_lb_spec(2, 1, 6, DisjKind::kNo, 0)).truth.T, 4u);
  const auto two = triad::gen_lb_instance(triad::make_lb_spec(3, 2, 9, DisjKind::kNo, 1, 2));
  EXPECT_EQ(two.truth.T, 2u * 9 * 2);
}

TEST(Generators, LowerBoundSpecErrors) {
  EXPECT_THROW(triad::make_lb_spec(2, 1, 7, DisjKind::kYes, 0), triad::ConfigError);
  EXPECT_THROW(triad::make_lb_spec(2, 1, 6, DisjKind::kNo, 0, 0), triad::ConfigError);
  EXPECT_THROW(triad::make_lb_spec(2, 1, 6, DisjKind::kNo, 0, 3), triad::ConfigError);
  auto spec = triad::make_lb_spec(2, 1, 6, DisjKind::kYes, 0);
  spec.kind = DisjKind::kNo;
  EXPECT_THROW(spec.validate(), triad::ConfigError);
  spec = triad::make_lb_spec(2, 1, 6, DisjKind::kNo, 0);
  spec.kind = DisjKind::kYes;
  EXPECT_THROW(spec.validate(), triad::ConfigError);
  spec = triad::make_lb_spec(2, 1, 6, DisjKind::kYes, 0);
  spec.x.flip();
  EXPECT_THROW(spec.validate(), triad::ConfigError);
}

TEST(Generators, PreferentialAttachment) {
  for (Count attach : {1, 2, 3, 5}) {
    const auto g = triad::gen_preferential_attachment(200, attach, 7);
    const Count clique = attach * (attach + 1) / 2;
    EXPECT_EQ(g.m(), clique + (200 - attach - 1) * attach);
    EXPECT_LE(triad::degeneracy(g), attach);
    EXPECT_EQ(triad::degeneracy(g), by_matrix(g).kappa);
  }
  const auto a = triad::gen_preferential_attachment(100, 3, 1);
  const auto b = triad::gen_preferential_attachment(100, 3, 1);
  EXPECT_TRUE(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
  EXPECT_THROW(triad::gen_preferential_attachment(3, 3, 1), triad::ConfigError);
}

TEST(Generators, ErdosRenyi) {
  const auto g = triad::gen_erdos_renyi(200, 0.1, 3);
  const double pairs = 200.0 * 199 / 2;
  EXPECT_NEAR(static_cast<double>(g.m()), 0.1 * pairs, 5 * std::sqrt(pairs * 0.09));
  EXPECT_EQ(triad::gen_erdos_renyi(30, 0.0, 1).m(), 0u);
  EXPECT_EQ(triad::gen_erdos_renyi(30, 1.0, 1).m(), 435u);
  EXPECT_THROW(triad::gen_erdos_renyi(30, 1.5, 1), triad::ConfigError);
}

TEST(Generators, ChibaBoundOnFamilies) {
  std::vector<triad::Graph> graphs;
  graphs.push_back(triad::gen_wheel(1001).graph);
  graphs.push_back(triad::gen_book(998).graph);
  graphs.push_back(triad::gen_lb_instance(triad::make_lb_spec(4, 4, 30, DisjKind::kNo, 2)).graph);
  graphs.push_back(triad::gen_preferential_attachment(500, 4, 2));
  graphs.push_back(triad::gen_erdos_renyi(100, 0.2, 2));
  graphs.push_back(triad::gen_complete(20));
  for (const auto& g : graphs) {
    const Count k = triad::degeneracy(g);
    EXPECT_LE(triad::sum_edge_degrees(g), 2 * g.m() * k);
    EXPECT_LE(triad::triangles_exact_cn(g), 2 * g.m() * k);
  }
}

TEST(Families, BuildFromJson) {
  EXPECT_EQ(triad::build_family("wheel", {{"n", 10}}).truth.T, 9u);
  EXPECT_EQ(triad::build_family("book", {{"k", 4}}).truth.m, 9u);
  EXPECT_EQ(triad::build_family("complete", {{"k", 5}}).truth.T, 10u);
  EXPECT_EQ(triad::build_family("lb", {{"p", 4}, {"q", 4}, {"N", 30}, {"kind", "no"}}).truth.T, 64u);
  EXPECT_EQ(triad::build_family("pa", {{"n", 50}, {"attach", 2}}).truth.n, 50u);
  EXPECT_EQ(triad::build_family("er", {{"n", 20}, {"prob", 1.0}}).truth.T, 1140u);
  EXPECT_THROW(triad::build_family("nope", triad::Json::object()), triad::ConfigError);
  EXPECT_THROW(triad::build_family("wheel", triad::Json::object()), triad::ConfigError);
  EXPECT_THROW(triad::build_family("wheel", {{"n", "ten"}}), triad::ConfigError);
  EXPECT_THROW(triad::build_family("lb", {{"p", 2}, {"q", 1}, {"N", 6}, {"kind", "maybe"}}), triad::ConfigError);
}

}  // namespace
