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
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "triad/common.hpp"
#include "triad/edge_stream.hpp"
#include "triad/random.hpp"

namespace triad {

// A bank of independent size-1 uniform reservoirs over one item sequence.
//
// Rather than flipping a coin per slot per item, each slot jumps straight
// to its next replacement position: having just taken item k, the next
// replacement J satisfies Pr[J > j] = k / j, so J = floor(k / u) + 1 with
// u uniform on (0, 1]. A min-heap over those positions makes a pass cost
// O(items + slots * log(items) * log(slots)).
template <typename Item>
class UniformReservoirBank {
 public:
  UniformReservoirBank() = default;
  explicit UniformReservoirBank(std::vector<KeyedRng> rngs)
      : rngs_(std::move(rngs)), values_(rngs_.size()) {
    for (std::size_t i = 0; i < rngs_.size(); ++i) heap_.push({1, i});
  }

  void offer(const Item& item) {
    ++seen_;
    while (!heap_.empty() && heap_.top().first == seen_) {
      const std::size_t slot = heap_.top().second;
      heap_.pop();
      values_[slot] = item;
      heap_.push({next_position(slot), slot});
    }
  }

  std::size_t slots() const { return rngs_.size(); }
  Count seen() const { return seen_; }
  // Valid once at least one item has been offered.
  const std::vector<Item>& values() const { return values_; }

 private:
  std::uint64_t next_position(std::size_t slot) {
    const double jump = std::floor(static_cast<double>(seen_) / rngs_[slot].uniform_positive()) + 1.0;
    if (jump >= 0x1.0p63) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(jump);
  }

  using Entry = std::pair<std::uint64_t, std::size_t>;
  std::vector<KeyedRng> rngs_;
  std::vector<Item> values_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
  Count seen_ = 0;
};

// r independent uniform draws from E, with replacement, in one pass.
inline std::vector<Edge> uniform_edge_sample(EdgeStream& stream, std::size_t r, std::uint64_t seed) {
  if (r == 0) throw ConfigError("uniform_edge_sample requires r >= 1");
  std::vector<KeyedRng> rngs;
  rngs.reserve(r);
  for (std::size_t i = 0; i < r; ++i) rngs.emplace_back(seed, Role::kEdgeSample, i);
  UniformReservoirBank<Edge> bank(std::move(rngs));
  run_pass(stream, [&](const Edge& e) { bank.offer(e); });
  if (bank.seen() == 0) throw InputError("uniform_edge_sample over an empty stream");
  return bank.values();
}

// ell independent draws of an index i with probability weights[i] / total.
// No pass is consumed. Integer weights keep the probabilities exact.
inline std::vector<std::size_t> weighted_pick(std::span<const Count> weights, std::size_t ell, std::uint64_t seed) {
  std::vector<Count> prefix(weights.size());
  Count total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total += weights[i];
    prefix[i] = total;
  }
  if (total == 0) throw InputError("weighted_pick requires a positive total weight");
  std::vector<std::size_t> picks;
  picks.reserve(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    KeyedRng rng(seed, Role::kWeightedPick, i);
    const Count x = rng.below(total);
    picks.push_back(static_cast<std::size_t>(std::upper_bound(prefix.begin(), prefix.end(), x) - prefix.begin()));
  }
  return picks;
}

struct NeighborRequest {
  Edge edge;
  VertexId anchor = 0;  // endpoint of edge whose neighborhood is sampled
  std::size_t want = 1;
};

// Services any number of neighbor requests in a single pass. Slot j of
// request i draws from the substream (seed, role, i, j), so results are
// independent across slots and requests and reproducible bit-for-bit.
class NeighborSampler {
 public:
  NeighborSampler() = default;
  NeighborSampler(std::span<const NeighborRequest> requests, std::uint64_t seed, Role role = Role::kNeighborSample) {
    requests_.assign(requests.begin(), requests.end());
    for (std::size_t i = 0; i < requests_.size(); ++i) {
      const auto& req = requests_[i];
      if (!req.edge.contains(req.anchor)) throw InputError("neighbor request anchor is not an endpoint of its edge");
      auto& group = by_anchor_[req.anchor];
      for (std::size_t j = 0; j < req.want; ++j) {
        group.owners.push_back({i, j});
        group.rngs.emplace_back(seed, role, i, j);
      }
    }
    for (auto& [anchor, group] : by_anchor_) {
      group.bank = UniformReservoirBank<VertexId>(std::move(group.rngs));
      group.rngs.clear();
    }
  }

  void on_edge(const Edge& e) {
    if (by_anchor_.empty()) return;
    if (auto it = by_anchor_.find(e.u); it != by_anchor_.end()) it->second.bank.offer(e.v);
    if (auto it = by_anchor_.find(e.v); it != by_anchor_.end()) it->second.bank.offer(e.u);
  }

  // Per request, `want` sampled neighbors; empty when the anchor had no
  // incident edge in the pass.
  std::vector<std::vector<VertexId>> results() const {
    std::vector<std::vector<VertexId>> out(requests_.size());
    for (const auto& [anchor, group] : by_anchor_) {
      if (group.bank.seen() == 0) continue;
      const auto& values = group.bank.values();
      for (std::size_t k = 0; k < group.owners.size(); ++k) {
        auto [req, slot] = group.owners[k];
        auto& dst = out[req];
        if (dst.size() < requests_[req].want) dst.resize(requests_[req].want);
        dst[slot] = values[k];
      }
    }
    return out;
  }

  std::size_t slot_count() const {
    std::size_t total = 0;
    for (const auto& [anchor, group] : by_anchor_) total += group.bank.slots();
    return total;
  }

 private:
  struct AnchorGroup {
    std::vector<std::pair<std::size_t, std::size_t>> owners;  // (request, slot)
    std::vector<KeyedRng> rngs;
    UniformReservoirBank<VertexId> bank;
  };
  std::vector<NeighborRequest> requests_;
  std::map<VertexId, AnchorGroup> by_anchor_;
};

inline std::vector<std::vector<VertexId>> neighbor_sample_pass(EdgeStream& stream,
                                                               std::span<const NeighborRequest> requests,
                                                               std::uint64_t seed) {
  NeighborSampler sampler(requests, seed);
  run_pass(stream, [&](const Edge& e) { sampler.on_edge(e); });
  return sampler.results();
}

// Collects the full neighborhood of each registered vertex in one pass.
class NeighborhoodCollector {
 public:
  void want(VertexId v) { lists_.try_emplace(v); }

  void on_edge(const Edge& e) {
    if (lists_.empty()) return;
    if (auto it = lists_.find(e.u); it != lists_.end()) it->second.push_back(e.v);
    if (auto it = lists_.find(e.v); it != lists_.end()) it->second.push_back(e.u);
  }

  const std::vector<VertexId>& neighbors(VertexId v) const { return lists_.at(v); }
  bool empty() const { return lists_.empty(); }

  std::size_t stored() const {
    std::size_t total = 0;
    for (const auto& [v, list] : lists_) total += list.size();
    return total;
  }

 private:
  std::unordered_map<VertexId, std::vector<VertexId>> lists_;
};

struct ClosureQuery {
  std::vector<Edge> pairs;         // vertex pairs to test for presence
  std::vector<VertexId> vertices;  // vertices whose degree is counted
};

struct ClosureResult {
  std::vector<bool> present;    // aligned with query.pairs
  std::vector<Count> degrees;   // aligned with query.vertices
};

// Answers presence and degree queries exactly in one pass.
class ClosureChecker {
 public:
  ClosureChecker() = default;
  explicit ClosureChecker(const ClosureQuery& query) : query_(query) {
    for (const Edge& p : query_.pairs) {
      if (p.u != p.v) pending_.insert(p);
    }
    for (VertexId v : query_.vertices) degrees_.try_emplace(v, 0);
  }

  void on_edge(const Edge& e) {
    if (!pending_.empty() && pending_.count(e) != 0) found_.insert(e);
    if (!degrees_.empty()) {
      if (auto it = degrees_.find(e.u); it != degrees_.end()) ++it->second;
      if (auto it = degrees_.find(e.v); it != degrees_.end()) ++it->second;
    }
  }

  bool present(const Edge& pair) const { return found_.count(pair) != 0; }
  Count degree(VertexId v) const { return degrees_.at(v); }

  ClosureResult result() const {
    ClosureResult out;
    out.present.reserve(query_.pairs.size());
    for (const Edge& p : query_.pairs) out.present.push_back(present(p));
    out.degrees.reserve(query_.vertices.size());
    for (VertexId v : query_.vertices) out.degrees.push_back(degree(v));
    return out;
  }

  std::size_t stored() const { return pending_.size() + degrees_.size(); }

 private:
  ClosureQuery query_;
  std::unordered_set<Edge> pending_;
  std::unordered_set<Edge> found_;
  std::unordered_map<VertexId, Count> degrees_;
};

inline ClosureResult closure_check_pass(EdgeStream& stream, const ClosureQuery& query) {
  ClosureChecker checker(query);
  run_pass(stream, [&](const Edge& e) { checker.on_edge(e); });
  return checker.result();
}

}  // namespace triad
