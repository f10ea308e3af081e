#pragma once

#include <cstdint>
#include <vector>

#include "judicious/hypergraph.hpp"

namespace judicious {

// Assignment of every vertex to exactly one of `class_count` classes.
// Classes may be empty.
struct Partition {
  std::uint32_t class_count = 0;
  std::vector<std::uint32_t> assignment;  // vertex id -> class index

  static Partition round_robin(std::size_t n, std::uint32_t r);

  // Vertices assigned to class k, as a set over [0, assignment.size()).
  VertexSet class_set(std::uint32_t k) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Throws input_error unless p is a total assignment of h's vertices into
// p.class_count classes.
void validate_partition(const Hypergraph& h, const Partition& p);

// Per-class coverage d(V_i) together with the descending-coverage order.
struct CoverageProfile {
  std::vector<std::int64_t> coverage;
  std::int64_t total = 0;
  std::vector<std::uint32_t> by_descending;  // class indices; ties keep index order
};

CoverageProfile coverage_profile(const Hypergraph& h, const Partition& p);

// Number of distinct classes the edge intersects (at least 1).
std::int64_t parts_met(const Hypergraph& h, std::size_t edge_index, const Partition& p);

// Change in sum_i d(V_i) if v were reassigned to `target`:
//   |{e containing v that miss the target class}| - |{e meeting v's class only at v}|.
std::int64_t move_gain(const Hypergraph& h, const Partition& p, VertexId v,
                       std::uint32_t target);

// Hill-climbs single-vertex moves until no move strictly increases
// sum_i d(V_i).  Sweeps vertices in ascending id and targets in ascending
// class index, taking the first strictly improving move at each vertex;
// stops after a sweep with no acceptance.  Ties (gain 0) are never taken, so
// the integer sum strictly increases with every accepted move and the search
// terminates.  Deterministic.
Partition improve_to_local_optimum(const Hypergraph& h, Partition p);

// Whether sum_i d(V_i) >= (r+1)*m - r*d(V_role) holds.  Requires h to be
// r-uniform with r = p.class_count.  The overload without a role class uses
// the class of minimum coverage, which is the tightest instance.
bool coverage_sum_bound_holds(const Hypergraph& h, const Partition& p,
                              std::uint32_t role_class);
bool coverage_sum_bound_holds(const Hypergraph& h, const Partition& p);

}  // namespace judicious
