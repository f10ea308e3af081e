#include "judicious/partition.hpp"

#include <algorithm>
#include <numeric>

namespace judicious {

Partition Partition::round_robin(std::size_t n, std::uint32_t r) {
  if (r == 0) throw input_error("Partition: class count must be positive");
  Partition p;
  p.class_count = r;
  p.assignment.resize(n);
  for (std::size_t v = 0; v < n; ++v)
    p.assignment[v] = static_cast<std::uint32_t>(v % r);
  return p;
}

VertexSet Partition::class_set(std::uint32_t k) const {
  if (k >= class_count) throw input_error("Partition: class index out of range");
  VertexSet s(assignment.size());
  for (std::size_t v = 0; v < assignment.size(); ++v)
    if (assignment[v] == k) s.add(static_cast<VertexId>(v));
  return s;
}

void validate_partition(const Hypergraph& h, const Partition& p) {
  if (p.class_count == 0)
    throw input_error("partition: class count must be positive");
  if (p.assignment.size() != h.vertex_count())
    throw input_error("partition: assignment covers " +
                      std::to_string(p.assignment.size()) + " vertices, expected " +
                      std::to_string(h.vertex_count()));
  for (std::uint32_t c : p.assignment)
    if (c >= p.class_count)
      throw input_error("partition: class index " + std::to_string(c) +
                        " out of range [0, " + std::to_string(p.class_count) + ")");
}

namespace {

// Distinct classes met by one edge; `seen` is caller-provided scratch.
std::int64_t classes_met(std::span<const VertexId> e, const Partition& p,
                         std::vector<std::uint32_t>& seen) {
  seen.clear();
  for (VertexId v : e) {
    std::uint32_t c = p.assignment[v];
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
  }
  return static_cast<std::int64_t>(seen.size());
}

std::int64_t gain_unchecked(const Hypergraph& h, const Partition& p, VertexId v,
                            std::uint32_t target) {
  const std::uint32_t cur = p.assignment[v];
  std::int64_t inc = 0, dec = 0;
  for (std::uint32_t ei : h.incident_edges(v)) {
    bool meets_target = false;
    bool alone_in_cur = true;
    for (VertexId u : h.edge(ei)) {
      std::uint32_t c = p.assignment[u];
      if (c == target) meets_target = true;
      if (u != v && c == cur) alone_in_cur = false;
    }
    if (!meets_target) ++inc;
    if (alone_in_cur) ++dec;
  }
  return inc - dec;
}

}  // namespace

CoverageProfile coverage_profile(const Hypergraph& h, const Partition& p) {
  validate_partition(h, p);
  CoverageProfile out;
  out.coverage.assign(p.class_count, 0);
  std::vector<std::uint32_t> seen;
  for (const auto& e : h.edges()) {
    seen.clear();
    for (VertexId v : e) {
      std::uint32_t c = p.assignment[v];
      if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
        seen.push_back(c);
        ++out.coverage[c];
      }
    }
  }
  out.total = std::accumulate(out.coverage.begin(), out.coverage.end(), std::int64_t(0));
  out.by_descending.resize(p.class_count);
  std::iota(out.by_descending.begin(), out.by_descending.end(), 0u);
  std::stable_sort(out.by_descending.begin(), out.by_descending.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return out.coverage[a] > out.coverage[b];
                   });
  return out;
}

std::int64_t parts_met(const Hypergraph& h, std::size_t edge_index, const Partition& p) {
  validate_partition(h, p);
  std::vector<std::uint32_t> seen;
  return classes_met(h.edge(edge_index), p, seen);
}

std::int64_t move_gain(const Hypergraph& h, const Partition& p, VertexId v,
                       std::uint32_t target) {
  validate_partition(h, p);
  if (v >= h.vertex_count())
    throw input_error("move_gain: vertex out of range");
  if (target >= p.class_count)
    throw input_error("move_gain: target class out of range");
  if (p.assignment[v] == target)
    throw input_error("move_gain: vertex already in target class");
  return gain_unchecked(h, p, v, target);
}

Partition improve_to_local_optimum(const Hypergraph& h, Partition p) {
  validate_partition(h, p);
  const std::size_t n = h.vertex_count();
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint32_t cur = p.assignment[v];
      for (std::uint32_t t = 0; t < p.class_count; ++t) {
        if (t == cur) continue;
        if (gain_unchecked(h, p, static_cast<VertexId>(v), t) > 0) {
          p.assignment[v] = t;
          moved = true;
          break;
        }
      }
    }
  }
  return p;
}

bool coverage_sum_bound_holds(const Hypergraph& h, const Partition& p,
                              std::uint32_t role_class) {
  validate_partition(h, p);
  if (!h.is_uniform(p.class_count))
    throw input_error(
        "coverage_sum_bound_holds: hypergraph must be r-uniform with r equal "
        "to the class count");
  if (role_class >= p.class_count)
    throw input_error("coverage_sum_bound_holds: role class out of range");
  auto prof = coverage_profile(h, p);
  const std::int64_t r = p.class_count;
  const std::int64_t m = h.edge_count();
  return prof.total >= (r + 1) * m - r * prof.coverage[role_class];
}

bool coverage_sum_bound_holds(const Hypergraph& h, const Partition& p) {
  auto prof = coverage_profile(h, p);
  auto it = std::min_element(prof.coverage.begin(), prof.coverage.end());
  auto role = static_cast<std::uint32_t>(it - prof.coverage.begin());
  return coverage_sum_bound_holds(h, p, role);
}

}  // namespace judicious
