#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "judicious/hypergraph.hpp"
#include "judicious/partition.hpp"

using judicious::Hypergraph;
using judicious::input_error;
using judicious::Partition;
using judicious::SplitMix64;
using judicious::VertexId;
using judicious::VertexSet;

namespace {

Hypergraph three_edges() {
  // {1,2,3}, {2,3,4}, {1,2,3} on 5 vertices (0 isolated)
  return Hypergraph(5, {{1, 2, 3}, {2, 3, 4}, {1, 2, 3}});
}

}  // namespace

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(Hypergraph(3, {{}}), input_error);
  CHECK_THROWS_AS(Hypergraph(3, {{1, 1, 2}}), input_error);
  CHECK_THROWS_AS(Hypergraph(3, {{1, 3}}), input_error);
  Hypergraph h(4, {{3, 1, 2}});
  CHECK(h.edges()[0] == std::vector<VertexId>{1, 2, 3});  // stored sorted
}

TEST_CASE("uniformity is inferred") {
  CHECK(three_edges().uniformity() == std::size_t(3));
  CHECK(Hypergraph(3, {{0, 1}, {0, 1, 2}}).uniformity() == std::nullopt);
  Hypergraph empty(0, {});
  CHECK(empty.uniformity() == std::nullopt);
  CHECK(empty.is_uniform(2));
  CHECK(empty.is_uniform(7));
  CHECK(three_edges().is_uniform(3));
  CHECK_FALSE(three_edges().is_uniform(2));
}

TEST_CASE("degree_meeting") {
  Hypergraph h = three_edges();
  CHECK(judicious::degree_meeting(h, VertexSet::of(5, {4})) == 1);
  CHECK(judicious::degree_meeting(h, VertexSet(5)) == 0);
  CHECK(judicious::degree_meeting(h, VertexSet::of(5, {2})) == 3);
  CHECK_THROWS_AS(judicious::degree_meeting(h, VertexSet::of(9, {2})), input_error);
}

TEST_CASE("degree_joint") {
  Hypergraph h(5, {{1, 2, 3}, {2, 3, 4}});
  CHECK(judicious::degree_joint(h, VertexSet::of(5, {1}), VertexSet::of(5, {4})) == 0);
  CHECK(judicious::degree_joint(h, VertexSet::of(5, {1}), VertexSet::of(5, {2})) == 1);
  Hypergraph rep(4, {{1, 2, 3}, {1, 2, 3}});
  CHECK(judicious::degree_joint(rep, VertexSet::of(4, {1}), VertexSet::of(4, {3})) == 2);
  CHECK_THROWS_AS(
      judicious::degree_joint(h, VertexSet::of(5, {1, 2}), VertexSet::of(5, {2})),
      input_error);
}

TEST_CASE("degree_multi") {
  Hypergraph h(4, {{1, 2, 3}});
  CHECK(judicious::degree_multi(h, VertexSet::of(4, {1, 2})) == 1);
  Hypergraph h2(5, {{1, 2, 3}});
  CHECK(judicious::degree_multi(h2, VertexSet::of(5, {1, 4})) == 0);
  Hypergraph pair(3, {{1, 2}, {1, 2}});
  CHECK(judicious::degree_multi(pair, VertexSet::of(3, {1, 2})) == 2);
}

TEST_CASE("max_degree") {
  CHECK(judicious::max_degree(three_edges()) == 3);
  CHECK(judicious::max_degree(Hypergraph(4, {})) == 0);
  CHECK(judicious::max_degree(Hypergraph(6, {{0, 1}, {2, 3}, {4, 5}})) == 1);
}

TEST_CASE("trim_to_set keeps the minimum-id representative") {
  Hypergraph h(4, {{1, 2, 3}});
  CHECK(judicious::trim_to_set(h, VertexSet::of(4, {1, 2})).edges()[0] ==
        std::vector<VertexId>{1, 3});
  CHECK(judicious::trim_to_set(h, VertexSet(4)).edges()[0] ==
        std::vector<VertexId>{1, 2, 3});
  Hypergraph h2(5, {{1, 2, 3}, {2, 3, 4}});
  auto t = judicious::trim_to_set(h2, VertexSet::of(5, {2, 3}));
  CHECK(t.edges()[0] == std::vector<VertexId>{1, 2});
  CHECK(t.edges()[1] == std::vector<VertexId>{2, 4});
}

TEST_CASE("trim_to_set invariants on random instances") {
  SplitMix64 rng(11);
  for (int it = 0; it < 60; ++it) {
    std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.below(8));
    std::uint32_t r = 2 + static_cast<std::uint32_t>(rng.below(3));
    Hypergraph h = testutil::random_uniform(rng, n, r, 2 + rng.below(20));
    std::vector<VertexId> all(n);
    for (std::uint32_t v = 0; v < n; ++v) all[v] = v;
    auto s_list = testutil::random_subset_of(rng, all, 1 + rng.below(n));
    VertexSet s = VertexSet::of(n, s_list);
    Hypergraph t = judicious::trim_to_set(h, s);

    CHECK(t.edge_count() == h.edge_count());
    // every trimmed edge meets s at most once
    for (const auto& e : t.edges()) CHECK(s.count_in(e) <= 1);
    // coverage of s itself is preserved; subsets only lose coverage
    CHECK(judicious::degree_meeting(t, s) == judicious::degree_meeting(h, s));
    CHECK(judicious::max_degree(t) <= judicious::max_degree(h));
    auto x_list = testutil::random_subset_of(rng, s_list, 1 + rng.below(s_list.size()));
    VertexSet x = VertexSet::of(n, x_list);
    CHECK(judicious::degree_meeting(t, x) <= judicious::degree_meeting(h, x));
    // additivity over subsets of s after trimming
    std::int64_t sum = 0;
    for (VertexId v : x_list) sum += judicious::degree_meeting(t, VertexSet::of(n, {v}));
    CHECK(judicious::degree_meeting(t, x) == sum);
  }
}

TEST_CASE("shrink_uniformity") {
  Hypergraph h(4, {{1, 2, 3}});
  CHECK(judicious::shrink_uniformity(h, 1).edges()[0] == std::vector<VertexId>{2, 3});
  Hypergraph h5(5, {{1, 2, 3}});
  CHECK(judicious::shrink_uniformity(h5, 4).edges()[0] == std::vector<VertexId>{1, 2});
  Hypergraph rep(4, {{1, 2, 3}, {1, 2, 3}});
  auto s = judicious::shrink_uniformity(rep, 3);
  CHECK(s.edge_count() == 2);
  CHECK(s.edges()[0] == std::vector<VertexId>{1, 2});
  CHECK(s.edges()[1] == std::vector<VertexId>{1, 2});
  CHECK(s.uniformity() == std::size_t(2));

  Hypergraph pair(2, {{0, 1}});
  CHECK_THROWS_AS(judicious::shrink_uniformity(pair, 0), input_error);
  CHECK_THROWS_AS(judicious::shrink_uniformity(h, 9), input_error);
}

TEST_CASE("shrink_uniformity keeps edge count and never raises coverage") {
  SplitMix64 rng(12);
  for (int it = 0; it < 40; ++it) {
    std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.below(6));
    std::uint32_t r = 3 + static_cast<std::uint32_t>(rng.below(2));
    Hypergraph h = testutil::random_uniform(rng, n, r, 1 + rng.below(15));
    VertexId v = static_cast<VertexId>(rng.below(n));
    Hypergraph s = judicious::shrink_uniformity(h, v);
    CHECK(s.edge_count() == h.edge_count());
    CHECK(s.uniformity() == std::size_t(r - 1));
    CHECK(s.degree(v) == 0);
    std::vector<VertexId> all(n);
    for (std::uint32_t u = 0; u < n; ++u) all[u] = u;
    for (int k = 0; k < 5; ++k) {
      auto x_list = testutil::random_subset_of(rng, all, 1 + rng.below(n));
      VertexSet x = VertexSet::of(n, x_list);
      CHECK(judicious::degree_meeting(s, x) <= judicious::degree_meeting(h, x));
    }
  }
}

TEST_CASE("degree functions agree with set-scan recounts") {
  SplitMix64 rng(13);
  for (int it = 0; it < 60; ++it) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(9));
    std::uint32_t r = 2 + static_cast<std::uint32_t>(rng.below(2));
    Hypergraph h = testutil::random_uniform(rng, n, r, rng.below(25));
    std::vector<VertexId> all(n);
    for (std::uint32_t v = 0; v < n; ++v) all[v] = v;
    auto s_list = testutil::random_subset_of(rng, all, 1 + rng.below(n));
    VertexSet s = VertexSet::of(n, s_list);
    CHECK(judicious::degree_meeting(h, s) == testutil::naive_degree_meeting(h, s_list));
    CHECK(judicious::degree_multi(h, s) == testutil::naive_degree_multi(h, s_list));

    std::vector<VertexId> rest;
    for (VertexId v : all)
      if (!s.contains(v)) rest.push_back(v);
    if (!rest.empty()) {
      auto t_list = testutil::random_subset_of(rng, rest, 1 + rng.below(rest.size()));
      VertexSet t = VertexSet::of(n, t_list);
      CHECK(judicious::degree_joint(h, s, t) ==
            testutil::naive_degree_joint(h, s_list, t_list));
      // inclusion-exclusion for disjoint sets
      CHECK(judicious::degree_meeting(h, s.united(t)) ==
            judicious::degree_meeting(h, s) + judicious::degree_meeting(h, t) -
                judicious::degree_joint(h, s, t));
      // monotonicity
      CHECK(judicious::degree_meeting(h, s) <= judicious::degree_meeting(h, s.united(t)));
      CHECK(judicious::degree_multi(h, s) <= judicious::degree_multi(h, s.united(t)));
    }
  }
}

TEST_CASE("parts_met identity: sum over edges of (f(e)-1) = sum_i d(V_i) - m") {
  SplitMix64 rng(14);
  for (int it = 0; it < 40; ++it) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(8));
    std::uint32_t er = 2 + static_cast<std::uint32_t>(rng.below(2));
    Hypergraph h = testutil::random_uniform(rng, n, er, rng.below(20));
    std::uint32_t r = 2 + static_cast<std::uint32_t>(rng.below(4));
    Partition p;
    p.class_count = r;
    p.assignment.resize(n);
    for (std::uint32_t v = 0; v < n; ++v)
      p.assignment[v] = static_cast<std::uint32_t>(rng.below(r));

    std::int64_t lhs = 0;
    for (std::size_t e = 0; e < h.edges().size(); ++e)
      lhs += judicious::parts_met(h, e, p) - 1;
    auto prof = judicious::coverage_profile(h, p);
    CHECK(lhs == prof.total - h.edge_count());
  }
}

TEST_CASE("parts_met examples") {
  Hypergraph h(4, {{1, 2, 3}});
  Partition spread{3, {0, 0, 1, 2}};
  CHECK(judicious::parts_met(h, 0, spread) == 3);
  Partition together{3, {0, 1, 1, 1}};
  CHECK(judicious::parts_met(h, 0, together) == 1);
  Partition two{3, {0, 0, 0, 1}};
  CHECK(judicious::parts_met(h, 0, two) == 2);
  CHECK_THROWS_AS(judicious::parts_met(h, 1, spread), input_error);
}
