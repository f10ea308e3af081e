#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "judicious/partition.hpp"
#include "judicious/rational.hpp"

namespace judicious {

// Guaranteed per-class coverage bound for an r-class partition of an
// r-uniform multi-hypergraph with m edges, as an exact rational:
//   r = 2: 2m/3      r = 3: 5m/9      r >= 4: r*m/(3r-4)
Rational threshold(std::uint32_t r, std::int64_t m);

// Bucket counts of class coverages against tau.
struct CaseProfile {
  std::int64_t big = 0;         // >= 2*tau
  std::int64_t mid = 0;         // [tau, 2*tau)
  std::int64_t medium_bad = 0;  // [tau/2, tau)
  std::int64_t very_bad = 0;    // < tau/2
};

CaseProfile case_profile(const std::vector<std::int64_t>& coverage, const Rational& tau);

// A partition together with the recomputed per-class coverage and the exact
// rational bound every class was checked against.
struct Certificate {
  std::uint32_t r = 0;
  std::int64_t m = 0;
  Rational tau;
  Partition partition;
  std::vector<std::int64_t> coverage;
  std::int64_t min_coverage = 0;
};

// Per-class-count counters of which construction path produced the result.
struct SolveStats {
  struct Level {
    std::int64_t edgeless = 0;
    std::int64_t high_degree = 0;
    std::int64_t direct = 0;
    std::int64_t case1 = 0;
    std::int64_t case2 = 0;
    std::int64_t case3 = 0;
  };
  std::map<std::uint32_t, Level> by_class_count;
};

// Constructs an r-class partition of an r-uniform multi-hypergraph in which
// every class meets at least threshold(r, m) edges, and returns it as a
// verified certificate.
//
// Pipeline: edgeless instances certify trivially; while some vertex meets at
// least tau edges it is split off as a singleton class and the instance is
// shrunk to uniformity r-1; otherwise a partition locally optimal under
// single-vertex moves is either already good, repaired by shrinking classes
// to minimal good sets, or repaired by recombining strong classes with weak
// ones.  Internal guarantees are asserted; a violation raises internal_error
// with a reproducible dump of the instance and partition.
Certificate partition_judicious(const Hypergraph& h, std::uint32_t r,
                                SolveStats* stats = nullptr);

struct VerifyResult {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Recomputes the certificate's guarantee from scratch: the partition must be
// a total assignment into exactly r classes, the stored coverage and minimum
// must match a recount, and every class must meet tau.  Never throws on
// malformed certificates; returns the first failed check instead.
VerifyResult verify_certificate(const Hypergraph& h, const Certificate& cert);

}  // namespace judicious
