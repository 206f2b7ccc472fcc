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
#include <sstream>
#include <vector>

#include "test_util.hpp"
#include "triad/triad.hpp"

namespace {

using testing_oracle::TempFile;
using triad::Edge;
using triad::EdgeStream;

std::vector<Edge> drain(EdgeStream& s) {
  std::vector<Edge> out;
  triad::run_pass(s, [&](const Edge& e) { out.push_back(e); });
  return out;
}

std::vector<Edge> sorted(std::vector<Edge> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string to_text(const std::vector<Edge>& edges) {
  std::ostringstream out;
  triad::write_edge_list(out, edges);
  return out.str();
}

TEST(EdgeStream, UnseededKeepsSourceOrder) {
  std::vector<Edge> edges{{3, 4}, {0, 1}, {1, 2}};
  auto s = EdgeStream::from_edges(edges);
  EXPECT_EQ(drain(s), edges);
  EXPECT_EQ(s.passes(), 1u);
}

TEST(EdgeStream, PassesReplayTheSamePermutation) {
  const auto g = triad::gen_wheel(50).graph;
  auto s = EdgeStream::from_graph(g, 17);
  const auto first = drain(s);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(drain(s), first);
  EXPECT_EQ(s.passes(), 5u);
  EXPECT_EQ(sorted(first), std::vector<Edge>(g.edges().begin(), g.edges().end()));
  EXPECT_NE(first, std::vector<Edge>(g.edges().begin(), g.edges().end()));

  auto other = EdgeStream::from_graph(g, 18);
  EXPECT_NE(drain(other), first);
}

TEST(EdgeStream, UsageErrors) {
  auto s = EdgeStream::from_graph(triad::gen_complete(3));
  EXPECT_THROW(s.next_edge(), triad::UsageError);
  EXPECT_THROW(s.end_pass(), triad::UsageError);
  s.begin_pass();
  EXPECT_TRUE(s.in_pass());
  EXPECT_THROW(s.begin_pass(), triad::UsageError);
  s.end_pass();
  EXPECT_EQ(s.passes(), 1u);
}

TEST(EdgeStream, PartialPassStillCounts) {
  auto s = EdgeStream::from_graph(triad::gen_complete(4));
  s.begin_pass();
  s.next_edge();
  s.end_pass();
  EXPECT_EQ(s.passes(), 1u);
  EXPECT_EQ(drain(s).size(), 6u);
}

TEST(EdgeStream, InMemoryValidation) {
  try {
    EdgeStream::from_edges({{0, 1}, {2, 3}, {1, 0}});
    FAIL();
  } catch (const triad::ValidationError& err) {
    EXPECT_EQ(err.line(), 3u);
  }
  EXPECT_THROW(EdgeStream::from_edges({{4, 4}}), triad::ValidationError);
}

TEST(EdgeStream, Stats) {
  auto k3 = EdgeStream::from_graph(triad::gen_complete(3));
  const auto st = triad::stats(k3);
  EXPECT_EQ(st.n, 3u);
  EXPECT_EQ(st.m, 3u);
  EXPECT_EQ(k3.passes(), 1u);

  const auto w = triad::gen_wheel(1001);
  TempFile wheel(to_text(std::vector<Edge>(w.graph.edges().begin(), w.graph.edges().end())));
  auto ws = EdgeStream::open(wheel.path());
  const auto wst = triad::stats(ws);
  EXPECT_EQ(wst.n, 1001u);
  EXPECT_EQ(wst.m, 2000u);

  TempFile empty("");
  auto es = EdgeStream::open(empty.path());
  const auto est = triad::stats(es);
  EXPECT_EQ(est.n, 0u);
  EXPECT_EQ(est.m, 0u);
  EXPECT_EQ(es.passes(), 1u);
}

TEST(EdgeStream, FileMatchesInMemoryOrder) {
  const auto g = triad::gen_wheel(40).graph;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  TempFile file("# wheel\n" + to_text(edges));
  for (std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>(), std::optional<std::uint64_t>(9)}) {
    auto mem = EdgeStream::from_edges(edges, seed);
    auto disk = EdgeStream::open(file.path(), seed);
    EXPECT_TRUE(disk.file_backed());
    const auto a = drain(mem);
    EXPECT_EQ(drain(disk), a);
    EXPECT_EQ(drain(disk), a);
    EXPECT_EQ(disk.passes(), 2u);
  }
}

TEST(EdgeStream, FileRemapsSparseIds) {
  TempFile file("100 200\n200 300\n300 100\n");
  auto s = EdgeStream::open(file.path());
  EXPECT_EQ(s.vertex_count(), 3u);
  EXPECT_EQ(s.edge_count(), 3u);
  EXPECT_EQ(sorted(drain(s)), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(s.ids().to_original(2), 300u);
}

TEST(EdgeStream, FileErrorsAtOpen) {
  TempFile bad("0 1\n1 two\n");
  try {
    EdgeStream::open(bad.path());
    FAIL();
  } catch (const triad::ParseError& err) {
    EXPECT_EQ(err.line(), 2u);
  }
  TempFile dup("0 1\n1 0\n");
  EXPECT_THROW(EdgeStream::open(dup.path()), triad::ValidationError);
  EXPECT_THROW(EdgeStream::open("/nonexistent/x.el"), triad::InputError);
}

}  // namespace
