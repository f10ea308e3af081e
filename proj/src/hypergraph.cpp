#include "judicious/hypergraph.hpp"

#include <algorithm>
#include <bit>

namespace judicious {

bool VertexSet::intersects(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & o.bits_[i]) return true;
  return false;
}

VertexSet VertexSet::united(const VertexSet& o) const {
  check_same_universe(o);
  VertexSet out(universe_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out.bits_[i] = bits_[i] | o.bits_[i];
    c += std::popcount(out.bits_[i]);
  }
  out.count_ = c;
  return out;
}

VertexSet VertexSet::difference(const VertexSet& o) const {
  check_same_universe(o);
  VertexSet out(universe_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out.bits_[i] = bits_[i] & ~o.bits_[i];
    c += std::popcount(out.bits_[i]);
  }
  out.count_ = c;
  return out;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t w = bits_[i];
    while (w) {
      unsigned b = std::countr_zero(w);
      out.push_back(static_cast<VertexId>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t VertexSet::count_in(std::span<const VertexId> vs) const {
  std::size_t c = 0;
  for (VertexId v : vs)
    if (contains(v)) ++c;
  return c;
}

bool VertexSet::meets(std::span<const VertexId> vs) const {
  for (VertexId v : vs)
    if (contains(v)) return true;
  return false;
}

Hypergraph::Hypergraph(std::size_t vertex_count,
                       std::vector<std::vector<VertexId>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  incidence_.assign(n_, {});
  std::optional<std::size_t> common;
  bool mixed = false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.empty()) throw input_error("Hypergraph: edge " + std::to_string(i) + " is empty");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw input_error("Hypergraph: edge " + std::to_string(i) + " repeats a vertex");
    if (e.back() >= n_)
      throw input_error("Hypergraph: edge " + std::to_string(i) +
                        " references vertex " + std::to_string(e.back()) +
                        " outside [0, " + std::to_string(n_) + ")");
    for (VertexId v : e) incidence_[v].push_back(static_cast<std::uint32_t>(i));
    if (!common)
      common = e.size();
    else if (*common != e.size())
      mixed = true;
  }
  if (common && !mixed) uniform_size_ = common;
}

namespace {

void require_same_universe(const Hypergraph& h, const VertexSet& s, const char* op) {
  if (s.universe() != h.vertex_count())
    throw input_error(std::string(op) + ": vertex set universe (" +
                      std::to_string(s.universe()) +
                      ") does not match hypergraph vertex count (" +
                      std::to_string(h.vertex_count()) + ")");
}

}  // namespace

std::int64_t degree_meeting(const Hypergraph& h, const VertexSet& s) {
  require_same_universe(h, s, "degree_meeting");
  std::int64_t d = 0;
  for (const auto& e : h.edges())
    if (s.meets(e)) ++d;
  return d;
}

std::int64_t degree_joint(const Hypergraph& h, const VertexSet& s, const VertexSet& t) {
  require_same_universe(h, s, "degree_joint");
  require_same_universe(h, t, "degree_joint");
  if (s.intersects(t))
    throw input_error("degree_joint: sets must be disjoint");
  std::int64_t d = 0;
  for (const auto& e : h.edges())
    if (s.meets(e) && t.meets(e)) ++d;
  return d;
}

std::int64_t degree_multi(const Hypergraph& h, const VertexSet& s) {
  require_same_universe(h, s, "degree_multi");
  std::int64_t d = 0;
  for (const auto& e : h.edges())
    if (s.count_in(e) >= 2) ++d;
  return d;
}

std::int64_t max_degree(const Hypergraph& h) {
  std::int64_t best = 0;
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    best = std::max(best, h.degree(static_cast<VertexId>(v)));
  return best;
}

Hypergraph trim_to_set(const Hypergraph& h, const VertexSet& s) {
  require_same_universe(h, s, "trim_to_set");
  std::vector<std::vector<VertexId>> out;
  out.reserve(h.edges().size());
  for (const auto& e : h.edges()) {
    std::size_t in_s = s.count_in(e);
    if (in_s <= 1) {
      out.push_back(e);
      continue;
    }
    // edges are sorted, so the first member in s is the minimum-id one
    VertexId rep = 0;
    for (VertexId v : e)
      if (s.contains(v)) {
        rep = v;
        break;
      }
    std::vector<VertexId> t;
    t.reserve(e.size() - in_s + 1);
    for (VertexId v : e)
      if (!s.contains(v) || v == rep) t.push_back(v);
    out.push_back(std::move(t));
  }
  return Hypergraph(h.vertex_count(), std::move(out));
}

Hypergraph shrink_uniformity(const Hypergraph& h, VertexId v) {
  if (v >= h.vertex_count())
    throw input_error("shrink_uniformity: vertex " + std::to_string(v) + " out of range");
  auto r = h.uniformity();
  if (!r || *r < 3)
    throw input_error("shrink_uniformity: requires an r-uniform hypergraph with r >= 3");
  std::vector<std::vector<VertexId>> out;
  out.reserve(h.edges().size());
  for (const auto& e : h.edges()) {
    std::vector<VertexId> t;
    t.reserve(e.size() - 1);
    if (std::binary_search(e.begin(), e.end(), v)) {
      for (VertexId u : e)
        if (u != v) t.push_back(u);
    } else {
      t.assign(e.begin(), e.end() - 1);  // drop the maximum id
    }
    out.push_back(std::move(t));
  }
  return Hypergraph(h.vertex_count(), std::move(out));
}

}  // namespace judicious
