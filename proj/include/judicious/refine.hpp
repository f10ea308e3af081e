#pragma once

#include <array>
#include <vector>

#include "judicious/hypergraph.hpp"
#include "judicious/partition.hpp"
#include "judicious/rational.hpp"

namespace judicious {

// Split of a set A into three non-empty parts such that the union of any two
// meets at least tau edges of the (trimmed) hypergraph it was built against.
struct TripleSplit {
  VertexSet a1, a2, a3;
};

// Builds a TripleSplit of `a`.  Requires: every edge of h meets `a` in at
// most one vertex (trim first), max_degree(h) < tau, and d(a) >= 2*tau.
//
// a1 is grown greedily over ascending ids while its coverage stays below tau;
// a2 is the minimum-id remaining vertex; a3 is the rest.  Because coverage is
// additive over a trimmed set, any set strictly containing a1 meets at least
// tau edges, and the remainder covers more than tau, so all three pairwise
// unions clear the bound.
TripleSplit split_into_three(const Hypergraph& h, const VertexSet& a, const Rational& tau);

// Repartitions the union of two disjoint sets that each meet at least 2*tau
// edges into three parts that each meet at least tau edges of the original
// hypergraph; the first (merged) part meets at least 10*tau/9.  Requires
// max_degree(h) < tau.
std::array<VertexSet, 3> combine_two_bigs(const Hypergraph& h, const VertexSet& a,
                                          const VertexSet& b, const Rational& tau);

// Repartitions the union of a strong set (d(a) >= 2*tau) and a weak one
// (d(a) + 2*d(b) >= 3*tau) into two parts that each meet at least tau edges
// of the original hypergraph.  Requires max_degree(h) < tau; b may be empty
// when d(a) >= 3*tau.
std::array<VertexSet, 2> combine_big_small(const Hypergraph& h, const VertexSet& a,
                                           const VertexSet& b, const Rational& tau);

// Minimal subset W of s with d(W) >= tau: removing any single vertex of W
// drops its coverage below tau.  Single descending-id pass; coverage is
// monotone under deletion, so a vertex that cannot be removed once can never
// be removed later.  Requires d(s) >= tau.
VertexSet shrink_to_minimal_good(const Hypergraph& h, const VertexSet& s, const Rational& tau);

// Result of refine_by_shrinking: always a full partition into r classes with
// classes[k] minimal-good for k < r-1 and classes[r-1] the leftover.  `good`
// reports whether the leftover class also meets tau.
struct ShrinkRefinement {
  bool good = false;
  std::vector<VertexSet> classes;
};

// Shrinks every class but the last of a locally optimal partition to a
// minimal set still meeting tau and collects all freed vertices into the
// last class.  Requires d(V_i) >= tau for every class but the last.
//
// When the leftover class falls short, the kept classes must jointly cover
// more than (r+1)*(m - tau) edges; a violation means the input partition was
// not locally optimal and raises internal_error.
ShrinkRefinement refine_by_shrinking(const Hypergraph& h, const Partition& p,
                                     const Rational& tau);

}  // namespace judicious
