#include "judicious/refine.hpp"

#include <algorithm>
#include <string>

namespace judicious {

namespace {

void require_same_universe(const Hypergraph& h, const VertexSet& s, const char* op) {
  if (s.universe() != h.vertex_count())
    throw input_error(std::string(op) + ": vertex set universe mismatch");
}

void require_low_max_degree(const Hypergraph& h, const Rational& tau, const char* op) {
  if (!(max_degree(h) < tau))
    throw precondition_error(std::string(op) + ": max_degree(H) < tau fails (max degree " +
                             std::to_string(max_degree(h)) + ", tau " + tau.str() + ")");
}

}  // namespace

TripleSplit split_into_three(const Hypergraph& h, const VertexSet& a, const Rational& tau) {
  require_same_universe(h, a, "split_into_three");
  require_low_max_degree(h, tau, "split_into_three");
  for (std::size_t i = 0; i < h.edges().size(); ++i)
    if (a.count_in(h.edges()[i]) > 1)
      throw precondition_error("split_into_three: edge " + std::to_string(i) +
                               " meets A in more than one vertex (not trimmed)");
  const std::int64_t d_a = degree_meeting(h, a);
  if (d_a < tau * 2)
    throw precondition_error("split_into_three: d(A) >= 2*tau fails (d(A) = " +
                             std::to_string(d_a) + ", tau = " + tau.str() + ")");

  // Coverage is additive over subsets of a trimmed set, so the greedy prefix
  // sum below is exactly d(a1).
  VertexSet a1(h.vertex_count());
  std::int64_t d1 = 0;
  for (VertexId v : a.members()) {
    if (d1 + h.degree(v) < tau) {
      a1.add(v);
      d1 += h.degree(v);
    }
  }
  VertexSet rest = a.difference(a1);
  // d(rest) = d(a) - d(a1) > 2*tau - tau, and a single vertex covers less
  // than tau, so rest has at least two members.
  if (rest.size() < 2)
    throw internal_error("split_into_three: remainder has fewer than two vertices");
  auto rm = rest.members();
  VertexSet a2(h.vertex_count());
  a2.add(rm.front());
  VertexSet a3 = rest;
  a3.remove(rm.front());

  TripleSplit out{std::move(a1), std::move(a2), std::move(a3)};
  if (degree_meeting(h, out.a1.united(out.a2)) < tau ||
      degree_meeting(h, out.a1.united(out.a3)) < tau ||
      degree_meeting(h, out.a2.united(out.a3)) < tau)
    throw internal_error("split_into_three: pairwise union coverage below tau");
  return out;
}

std::array<VertexSet, 3> combine_two_bigs(const Hypergraph& h, const VertexSet& a,
                                          const VertexSet& b, const Rational& tau) {
  require_same_universe(h, a, "combine_two_bigs");
  require_same_universe(h, b, "combine_two_bigs");
  if (a.intersects(b))
    throw precondition_error("combine_two_bigs: A and B must be disjoint");
  require_low_max_degree(h, tau, "combine_two_bigs");
  const std::int64_t d_a = degree_meeting(h, a);
  if (d_a < tau * 2)
    throw precondition_error("combine_two_bigs: d(A) >= 2*tau fails (d(A) = " +
                             std::to_string(d_a) + ", tau = " + tau.str() + ")");
  const std::int64_t d_b = degree_meeting(h, b);
  if (d_b < tau * 2)
    throw precondition_error("combine_two_bigs: d(B) >= 2*tau fails (d(B) = " +
                             std::to_string(d_b) + ", tau = " + tau.str() + ")");

  const Hypergraph t = trim_to_set(trim_to_set(h, a), b);
  const TripleSplit sa = split_into_three(t, a, tau);
  const TripleSplit sb = split_into_three(t, b, tau);
  const VertexSet* as[3] = {&sa.a1, &sa.a2, &sa.a3};
  const VertexSet* bs[3] = {&sb.a1, &sb.a2, &sb.a3};

  // Over the nine candidates, sum d(A_i u B_j) = 3d(A) + 3d(B) - d(A,B)
  // >= 3d(A) + 2d(B) >= 10*tau, so the best one meets at least 10*tau/9.
  int best_i = 0, best_j = 0;
  std::int64_t best = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t d = degree_meeting(t, as[i]->united(*bs[j]));
      if (d > best) {
        best = d;
        best_i = i;
        best_j = j;
      }
    }

  std::array<VertexSet, 3> out{as[best_i]->united(*bs[best_j]),
                               a.difference(*as[best_i]),
                               b.difference(*bs[best_j])};
  if (!(degree_meeting(h, out[0]) >= tau * Rational(10, 9)) ||
      degree_meeting(h, out[1]) < tau || degree_meeting(h, out[2]) < tau)
    throw internal_error("combine_two_bigs: output coverage below guarantee");
  return out;
}

std::array<VertexSet, 2> combine_big_small(const Hypergraph& h, const VertexSet& a,
                                           const VertexSet& b, const Rational& tau) {
  require_same_universe(h, a, "combine_big_small");
  require_same_universe(h, b, "combine_big_small");
  if (a.intersects(b))
    throw precondition_error("combine_big_small: A and B must be disjoint");
  require_low_max_degree(h, tau, "combine_big_small");
  const std::int64_t d_a = degree_meeting(h, a);
  if (2 * d_a < tau * 4)
    throw precondition_error("combine_big_small: 2*d(A) >= 4*tau fails (d(A) = " +
                             std::to_string(d_a) + ", tau = " + tau.str() + ")");
  const std::int64_t d_b = degree_meeting(h, b);
  if (d_a + 2 * d_b < tau * 3)
    throw precondition_error("combine_big_small: d(A) + 2*d(B) >= 3*tau fails (d(A) = " +
                             std::to_string(d_a) + ", d(B) = " + std::to_string(d_b) +
                             ", tau = " + tau.str() + ")");

  const Hypergraph t = trim_to_set(trim_to_set(h, a), b);
  const TripleSplit sa = split_into_three(t, a, tau);
  const VertexSet* as[3] = {&sa.a1, &sa.a2, &sa.a3};

  // sum_i d(A_i u B) = d(A) + 3d(B) - d(A,B) >= d(A) + 2d(B) >= 3*tau.
  int best_i = 0;
  std::int64_t best = -1;
  for (int i = 0; i < 3; ++i) {
    std::int64_t d = degree_meeting(t, as[i]->united(b));
    if (d > best) {
      best = d;
      best_i = i;
    }
  }

  std::array<VertexSet, 2> out{as[best_i]->united(b), a.difference(*as[best_i])};
  if (degree_meeting(h, out[0]) < tau || degree_meeting(h, out[1]) < tau)
    throw internal_error("combine_big_small: output coverage below tau");
  return out;
}

VertexSet shrink_to_minimal_good(const Hypergraph& h, const VertexSet& s, const Rational& tau) {
  require_same_universe(h, s, "shrink_to_minimal_good");
  std::int64_t d = degree_meeting(h, s);
  if (d < tau)
    throw precondition_error("shrink_to_minimal_good: d(S) >= tau fails (d(S) = " +
                             std::to_string(d) + ", tau = " + tau.str() + ")");

  VertexSet cur = s;
  std::vector<std::int32_t> in_cur(h.edges().size(), 0);
  for (std::size_t i = 0; i < h.edges().size(); ++i)
    in_cur[i] = static_cast<std::int32_t>(cur.count_in(h.edges()[i]));

  auto mem = s.members();
  for (auto it = mem.rbegin(); it != mem.rend(); ++it) {
    const VertexId v = *it;
    std::int64_t sole = 0;  // edges meeting cur exactly at v
    for (std::uint32_t ei : h.incident_edges(v))
      if (in_cur[ei] == 1) ++sole;
    if (d - sole >= tau) {
      cur.remove(v);
      d -= sole;
      for (std::uint32_t ei : h.incident_edges(v)) --in_cur[ei];
    }
  }
  return cur;
}

ShrinkRefinement refine_by_shrinking(const Hypergraph& h, const Partition& p,
                                     const Rational& tau) {
  validate_partition(h, p);
  const std::uint32_t r = p.class_count;
  if (r < 2)
    throw input_error("refine_by_shrinking: need at least two classes");

  std::vector<VertexSet> cls(r);
  for (std::uint32_t k = 0; k < r; ++k) cls[k] = p.class_set(k);
  for (std::uint32_t k = 0; k + 1 < r; ++k) {
    std::int64_t d = degree_meeting(h, cls[k]);
    if (d < tau)
      throw precondition_error("refine_by_shrinking: d(V_" + std::to_string(k) +
                               ") >= tau fails (" + std::to_string(d) + " < " +
                               tau.str() + ")");
  }

  ShrinkRefinement out;
  out.classes.assign(r, VertexSet(h.vertex_count()));
  VertexSet rest = VertexSet::full(h.vertex_count());
  for (std::uint32_t k = 0; k + 1 < r; ++k) {
    out.classes[k] = shrink_to_minimal_good(h, cls[k], tau);
    rest = rest.difference(out.classes[k]);
  }
  out.classes[r - 1] = rest;

  const std::int64_t d_last = degree_meeting(h, out.classes[r - 1]);
  out.good = !(d_last < tau);
  if (!out.good) {
    std::int64_t kept = 0;
    for (std::uint32_t k = 0; k + 1 < r; ++k)
      kept += degree_meeting(h, out.classes[k]);
    const Rational bound = (Rational::integer(h.edge_count()) - tau) * (r + 1);
    if (!(kept > bound))
      throw internal_error(
          "refine_by_shrinking: kept classes cover " + std::to_string(kept) +
          " edges, not above (r+1)*(m - tau) = " + bound.str() +
          "; the input partition cannot have been locally optimal");
  }
  return out;
}

}  // namespace judicious
