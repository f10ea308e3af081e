#pragma once

// Test-only reference implementations.  Everything here recomputes results
// straight from the definitions (set scans, full enumeration) and stays
// independent of the library code paths under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "judicious/hypergraph.hpp"
#include "judicious/io.hpp"
#include "judicious/partition.hpp"

namespace testutil {

using judicious::Hypergraph;
using judicious::Partition;
using judicious::SplitMix64;
using judicious::VertexId;

inline std::int64_t naive_degree_meeting(const Hypergraph& h,
                                         const std::vector<VertexId>& s) {
  std::set<VertexId> in(s.begin(), s.end());
  std::int64_t d = 0;
  for (const auto& e : h.edges()) {
    bool meets = false;
    for (VertexId v : e) meets = meets || in.count(v) > 0;
    if (meets) ++d;
  }
  return d;
}

inline std::int64_t naive_degree_joint(const Hypergraph& h,
                                       const std::vector<VertexId>& s,
                                       const std::vector<VertexId>& t) {
  std::set<VertexId> in_s(s.begin(), s.end()), in_t(t.begin(), t.end());
  std::int64_t d = 0;
  for (const auto& e : h.edges()) {
    bool ms = false, mt = false;
    for (VertexId v : e) {
      ms = ms || in_s.count(v) > 0;
      mt = mt || in_t.count(v) > 0;
    }
    if (ms && mt) ++d;
  }
  return d;
}

inline std::int64_t naive_degree_multi(const Hypergraph& h,
                                       const std::vector<VertexId>& s) {
  std::set<VertexId> in(s.begin(), s.end());
  std::int64_t d = 0;
  for (const auto& e : h.edges()) {
    std::int64_t c = 0;
    for (VertexId v : e) c += in.count(v) > 0 ? 1 : 0;
    if (c >= 2) ++d;
  }
  return d;
}

// Per-class coverage computed from scratch for an assignment vector.
inline std::vector<std::int64_t> naive_coverage(const Hypergraph& h,
                                                const std::vector<std::uint32_t>& assign,
                                                std::uint32_t r) {
  std::vector<std::int64_t> cov(r, 0);
  for (const auto& e : h.edges()) {
    std::set<std::uint32_t> classes;
    for (VertexId v : e) classes.insert(assign[v]);
    for (std::uint32_t c : classes) ++cov[c];
  }
  return cov;
}

inline std::int64_t naive_min_coverage(const Hypergraph& h,
                                       const std::vector<std::uint32_t>& assign,
                                       std::uint32_t r) {
  auto cov = naive_coverage(h, assign, r);
  return *std::min_element(cov.begin(), cov.end());
}

// Calls fn for every assignment of n vertices to r classes, in lexicographic
// order.  Only sensible for tiny r^n.
inline void for_all_assignments(std::size_t n, std::uint32_t r,
                                const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> a(n, 0);
  for (;;) {
    fn(a);
    std::size_t i = n;
    while (i > 0 && a[i - 1] == r - 1) a[--i] = 0;
    if (i == 0) return;
    ++a[i - 1];
  }
}

// Exhaustive optimum of min-coverage with the lexicographically smallest
// maximizer, enumerated without any symmetry cut or pruning.
inline std::pair<std::vector<std::uint32_t>, std::int64_t> naive_best_partition(
    const Hypergraph& h, std::uint32_t r) {
  std::vector<std::uint32_t> best;
  std::int64_t best_val = -1;
  for_all_assignments(h.vertex_count(), r, [&](const std::vector<std::uint32_t>& a) {
    std::int64_t v = naive_min_coverage(h, a, r);
    if (v > best_val) {
      best_val = v;
      best = a;
    }
  });
  return {best, best_val};
}

// True when no single-vertex move strictly increases sum_i d(V_i),
// recomputed from scratch for every candidate move.
inline bool naive_is_local_optimum(const Hypergraph& h, const Partition& p) {
  auto total = [&](const std::vector<std::uint32_t>& a) {
    auto cov = naive_coverage(h, a, p.class_count);
    std::int64_t s = 0;
    for (auto c : cov) s += c;
    return s;
  };
  const std::int64_t base = total(p.assignment);
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    for (std::uint32_t t = 0; t < p.class_count; ++t) {
      if (t == p.assignment[v]) continue;
      auto moved = p.assignment;
      moved[v] = t;
      if (total(moved) > base) return false;
    }
  return true;
}

// Random r-uniform instance built with local rejection sampling (kept
// separate from the library generator on purpose).
inline Hypergraph random_uniform(SplitMix64& rng, std::uint32_t n, std::uint32_t r,
                                 std::uint64_t m) {
  if (r > n) throw judicious::input_error("random_uniform: r exceeds n");
  std::vector<std::vector<VertexId>> edges;
  for (std::uint64_t k = 0; k < m; ++k) {
    std::set<VertexId> e;
    while (e.size() < r) e.insert(static_cast<VertexId>(rng.below(n)));
    edges.emplace_back(e.begin(), e.end());
  }
  return Hypergraph(n, std::move(edges));
}

inline std::vector<VertexId> random_subset_of(SplitMix64& rng,
                                              const std::vector<VertexId>& pool,
                                              std::size_t want) {
  std::vector<VertexId> scratch = pool;
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < want && i < scratch.size(); ++i) {
    std::size_t j = i + rng.below(scratch.size() - i);
    std::swap(scratch[i], scratch[j]);
    out.push_back(scratch[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testutil
