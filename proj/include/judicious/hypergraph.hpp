#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "judicious/errors.hpp"

namespace judicious {

using VertexId = std::uint32_t;

// Subset of a vertex range [0, universe) backed by a bitset.  Membership is
// O(1); set algebra is linear in the universe.  Values are cheap to copy and
// safe to share for concurrent reads.
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(std::size_t universe)
      : universe_(universe), bits_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.add(static_cast<VertexId>(v));
    return s;
  }

  static VertexSet of(std::size_t universe, std::initializer_list<VertexId> vs) {
    VertexSet s(universe);
    for (VertexId v : vs) s.add(v);
    return s;
  }

  static VertexSet of(std::size_t universe, const std::vector<VertexId>& vs) {
    VertexSet s(universe);
    for (VertexId v : vs) s.add(v);
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(VertexId v) const {
    return v < universe_ && (bits_[v / 64] >> (v % 64)) & 1;
  }

  void add(VertexId v) {
    check_range(v);
    std::uint64_t& w = bits_[v / 64];
    std::uint64_t bit = std::uint64_t(1) << (v % 64);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }

  void remove(VertexId v) {
    check_range(v);
    std::uint64_t& w = bits_[v / 64];
    std::uint64_t bit = std::uint64_t(1) << (v % 64);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  bool intersects(const VertexSet& o) const;
  VertexSet united(const VertexSet& o) const;
  VertexSet difference(const VertexSet& o) const;

  // Members in ascending order.
  std::vector<VertexId> members() const;

  // Number of entries of `vs` that are members; `vs` must hold distinct ids.
  std::size_t count_in(std::span<const VertexId> vs) const;
  bool meets(std::span<const VertexId> vs) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  void check_range(VertexId v) const {
    if (v >= universe_)
      throw input_error("VertexSet: vertex " + std::to_string(v) +
                        " outside universe of size " + std::to_string(universe_));
  }
  void check_same_universe(const VertexSet& o) const {
    if (universe_ != o.universe_)
      throw input_error("VertexSet: universe mismatch");
  }

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Multi-hypergraph on the vertex range [0, n).  Edges are sets of distinct
// vertices stored sorted; repeated edges are kept in order and counted with
// multiplicity (m is the length of the edge list).  Immutable after
// construction: all derived hypergraphs are new values.
class Hypergraph {
public:
  Hypergraph(std::size_t vertex_count, std::vector<std::vector<VertexId>> edges);

  std::size_t vertex_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  const std::vector<std::vector<VertexId>>& edges() const { return edges_; }

  std::span<const VertexId> edge(std::size_t i) const {
    if (i >= edges_.size())
      throw input_error("Hypergraph: edge index " + std::to_string(i) + " out of range");
    return edges_[i];
  }

  // Indices of the edges containing v, ascending.
  std::span<const std::uint32_t> incident_edges(VertexId v) const {
    if (v >= n_)
      throw input_error("Hypergraph: vertex " + std::to_string(v) + " out of range");
    return incidence_[v];
  }

  std::int64_t degree(VertexId v) const {
    return static_cast<std::int64_t>(incident_edges(v).size());
  }

  // Common edge size, or nullopt when the graph is edgeless or mixed-size.
  std::optional<std::size_t> uniformity() const { return uniform_size_; }

  // True when every edge has exactly r vertices (vacuously true when m = 0).
  bool is_uniform(std::size_t r) const {
    return edges_.empty() || (uniform_size_ && *uniform_size_ == r);
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::optional<std::size_t> uniform_size_;
};

// Number of edges (with multiplicity) having at least one vertex in s.
std::int64_t degree_meeting(const Hypergraph& h, const VertexSet& s);

// Number of edges meeting both s and t; the sets must be disjoint.
std::int64_t degree_joint(const Hypergraph& h, const VertexSet& s, const VertexSet& t);

// Number of edges meeting s in at least two vertices.
std::int64_t degree_multi(const Hypergraph& h, const VertexSet& s);

// Largest single-vertex degree; 0 for an edgeless hypergraph.
std::int64_t max_degree(const Hypergraph& h);

// Replaces every edge that meets s in more than one vertex by the subedge
// keeping only the minimum-id member of the intersection.  Edge count and
// ordering are preserved; coverage of any set can only decrease, and the
// coverage of s itself is unchanged.
Hypergraph trim_to_set(const Hypergraph& h, const VertexSet& s);

// Drops one vertex from every edge of an r-uniform hypergraph (r >= 3): edges
// containing v lose v, all others lose their maximum id.  The result is
// (r-1)-uniform with the same edge count and v isolated.
Hypergraph shrink_uniformity(const Hypergraph& h, VertexId v);

}  // namespace judicious
