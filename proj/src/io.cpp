#include "judicious/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace judicious {

Hypergraph parse_instance(std::string_view text) {
  std::vector<std::vector<VertexId>> edges;
  VertexId max_id = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;  // blank
    if (line[first] == '#') continue;               // comment

    std::vector<VertexId> edge;
    std::size_t i = first;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      std::string_view tok = line.substr(i, j - i);
      std::uint64_t value = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw parse_error("malformed token '" + std::string(tok) + "'", line_no);
      if (value > kMaxVertexId)
        throw parse_error("vertex id " + std::string(tok) + " exceeds limit " +
                          std::to_string(kMaxVertexId), line_no);
      edge.push_back(static_cast<VertexId>(value));
      i = j;
    }
    if (edge.empty()) throw parse_error("empty edge", line_no);
    std::vector<VertexId> sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw parse_error("repeated vertex in edge", line_no);
    max_id = std::max(max_id, sorted.back());
    edges.push_back(std::move(sorted));
  }
  const std::size_t n = edges.empty() ? 0 : std::size_t(max_id) + 1;
  return Hypergraph(n, std::move(edges));
}

std::string serialize_instance(const Hypergraph& h) {
  std::string out;
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

std::string partition_line(const Partition& p) {
  std::string out;
  for (std::size_t v = 0; v < p.assignment.size(); ++v) {
    if (v) out += ' ';
    out += std::to_string(p.assignment[v]);
  }
  out += '\n';
  return out;
}

std::uint64_t choose_count(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    c = c * (n - r + i) / i;  // exact: intermediate is C(n-r+i, i)
    if (c > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

// Uniform r-subset of [0, n), sorted: partial Fisher-Yates over `scratch`.
std::vector<VertexId> random_subset(SplitMix64& rng, std::vector<VertexId>& scratch,
                                    std::uint32_t n, std::uint32_t r) {
  scratch.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) scratch[i] = i;
  for (std::uint32_t i = 0; i < r; ++i) {
    std::uint64_t j = i + rng.below(n - i);
    std::swap(scratch[i], scratch[j]);
  }
  std::vector<VertexId> out(scratch.begin(), scratch.begin() + r);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Hypergraph generate(const GenSpec& spec) {
  if (spec.r < 2) throw input_error("generate: r must be at least 2");
  if (spec.n < spec.r) throw input_error("generate: n must be at least r");
  constexpr std::uint64_t kMaxEdges = 10'000'000;
  if (spec.m > kMaxEdges)
    throw input_error("generate: m exceeds the edge limit " + std::to_string(kMaxEdges));

  SplitMix64 rng(spec.seed);
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(spec.m);
  std::vector<VertexId> scratch;

  switch (spec.mode) {
    case GenMode::complete: {
      const std::uint64_t total = choose_count(spec.n, spec.r);
      if (spec.m > total)
        throw input_error("generate: complete mode has only " + std::to_string(total) +
                          " distinct edges, requested " + std::to_string(spec.m));
      std::vector<VertexId> combo(spec.r);
      for (std::uint32_t i = 0; i < spec.r; ++i) combo[i] = i;
      for (std::uint64_t k = 0; k < spec.m; ++k) {
        edges.push_back(combo);
        // advance to the next combination in lexicographic order
        std::int64_t i = spec.r - 1;
        while (i >= 0 && combo[i] == spec.n - spec.r + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (std::uint32_t j = i + 1; j < spec.r; ++j) combo[j] = combo[j - 1] + 1;
      }
      break;
    }
    case GenMode::uniform_random: {
      for (std::uint64_t k = 0; k < spec.m; ++k)
        edges.push_back(random_subset(rng, scratch, spec.n, spec.r));
      break;
    }
    case GenMode::multi_heavy: {
      if (spec.m == 0) break;
      const std::uint64_t want = (spec.m + 3) / 4;
      const std::uint64_t pool_size = std::min(want, choose_count(spec.n, spec.r));
      std::set<std::vector<VertexId>> seen;
      std::vector<std::vector<VertexId>> pool;
      while (pool.size() < pool_size) {
        auto e = random_subset(rng, scratch, spec.n, spec.r);
        if (seen.insert(e).second) pool.push_back(std::move(e));
      }
      for (std::uint64_t k = 0; k < spec.m; ++k)
        edges.push_back(pool[rng.below(pool.size())]);
      break;
    }
  }
  return Hypergraph(spec.n, std::move(edges));
}

}  // namespace judicious
