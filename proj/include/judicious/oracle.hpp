#pragma once

#include <cstdint>
#include <vector>

#include "judicious/partition.hpp"
#include "judicious/rational.hpp"
#include "judicious/solver.hpp"

namespace judicious {

inline constexpr std::uint64_t kDefaultAssignmentBudget = 10'000'000;

struct BruteForceResult {
  Partition best;
  std::int64_t min_coverage = 0;
};

// Exact optimum of min_i d(V_i) over all r^n assignments, together with the
// lexicographically smallest assignment vector achieving it.
//
// Refuses with budget_error when r^n exceeds `budget`.  Vertex 0 is pinned to
// class 0 (min-coverage is invariant under class relabeling, and the
// lexicographically least optimum always has vertex 0 in class 0), and
// subtrees that cannot strictly beat the best known value are pruned; both
// cuts preserve the exact result.  With jobs > 1 the prefix space is striped
// across workers and reduced under (value desc, assignment lex asc), so the
// output is identical for every worker count.
BruteForceResult brute_force_best(const Hypergraph& h, std::uint32_t r,
                                  std::uint64_t budget = kDefaultAssignmentBudget,
                                  unsigned jobs = 1);

// A list of values in [0,1] classified against a constant c in [1/3, 1/2].
struct ValueProfile {
  std::vector<Rational> values;
  Rational c;
};

// Bucket counts of the values: big >= 2c, mid in [c, 2c),
// medium_bad in [c/2, c), very_bad < c/2.
struct ValueCounts {
  std::int64_t big = 0;
  std::int64_t mid = 0;
  std::int64_t medium_bad = 0;
  std::int64_t very_bad = 0;
};

ValueCounts classify_values(const ValueProfile& p);

// Whether big >= medium_bad + 2*very_bad.  Requires a non-empty list of
// values in [0,1], c in [1/3, 1/2], and a mean of at least
// max(2c, 2/3 + c/6); violations raise precondition_error, which is distinct
// from a false return.  Under these preconditions the inequality always
// holds, so a false return signals an implementation bug somewhere.
bool has_enough_bigs(const ValueProfile& p);

// Observational comparison of the exhaustive optimum against the proven
// bound c_r*m and the conjectured bound r*m/(2r-1).  Reported, never
// asserted.
struct GapReport {
  std::uint32_t r = 0;
  std::int64_t m = 0;
  std::int64_t optimum = 0;
  Rational proven_bound;
  Rational conjectured_bound;
  bool meets_proven = false;
  bool meets_conjectured = false;
  bool vacuous = false;  // m == 0: the ratio is undefined
};

GapReport conjecture_gap_report(const Hypergraph& h, std::uint32_t r,
                                const BruteForceResult& best);
GapReport conjecture_gap_report(const Hypergraph& h, std::uint32_t r,
                                std::uint64_t budget = kDefaultAssignmentBudget,
                                unsigned jobs = 1);

}  // namespace judicious
