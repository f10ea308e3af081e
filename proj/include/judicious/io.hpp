#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "judicious/hypergraph.hpp"
#include "judicious/partition.hpp"

namespace judicious {

// Largest vertex id accepted by the text format.
inline constexpr VertexId kMaxVertexId = 1'000'000;

// Pinned 64-bit mixing generator so instance generation is reproducible
// across platforms and standard-library versions.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound), unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw input_error("SplitMix64::below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }
};

// Instance text format: one edge per line as whitespace-separated vertex
// ids; lines starting with '#' and blank lines are ignored; repeated lines
// count as repeated edges.  The vertex count is inferred as 1 + the largest
// id used.
Hypergraph parse_instance(std::string_view text);
std::string serialize_instance(const Hypergraph& h);

// One line with a class index per vertex, space separated.
std::string partition_line(const Partition& p);

enum class GenMode { uniform_random, multi_heavy, complete };

struct GenSpec {
  std::uint32_t r = 3;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::uniform_random;
};

// Deterministic instance generation for a fixed spec.
//   uniform_random: m independent uniform r-subsets of [0, n)
//   multi_heavy:    m draws with replacement from a pool of ceil(m/4)
//                   distinct r-subsets (capped at the number available)
//   complete:       the first m r-subsets in lexicographic order
Hypergraph generate(const GenSpec& spec);

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t choose_count(std::uint64_t n, std::uint64_t r);

}  // namespace judicious
