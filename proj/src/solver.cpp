#include "judicious/solver.hpp"

#include <algorithm>

#include "judicious/io.hpp"
#include "judicious/refine.hpp"

namespace judicious {

Rational threshold(std::uint32_t r, std::int64_t m) {
  if (r < 2) throw input_error("threshold: r must be at least 2");
  if (m < 0) throw input_error("threshold: m must be non-negative");
  if (r == 2) return Rational(2 * m, 3);
  if (r == 3) return Rational(5 * m, 9);
  return Rational(std::int64_t(r) * m, 3 * std::int64_t(r) - 4);
}

CaseProfile case_profile(const std::vector<std::int64_t>& coverage, const Rational& tau) {
  CaseProfile p;
  for (std::int64_t d : coverage) {
    if (d >= tau * 2)
      ++p.big;
    else if (d >= tau)
      ++p.mid;
    else if (2 * d >= tau)
      ++p.medium_bad;
    else
      ++p.very_bad;
  }
  return p;
}

namespace {

std::string dump_state(const Hypergraph& h, const Partition& p) {
  return "instance:\n" + serialize_instance(h) + "partition: " + partition_line(p);
}

Partition partition_from_classes(std::size_t n, const std::vector<VertexSet>& classes) {
  Partition p;
  p.class_count = static_cast<std::uint32_t>(classes.size());
  p.assignment.assign(n, UINT32_MAX);
  for (std::uint32_t k = 0; k < classes.size(); ++k)
    for (VertexId v : classes[k].members()) {
      if (p.assignment[v] != UINT32_MAX)
        throw internal_error("partition_from_classes: classes overlap at vertex " +
                             std::to_string(v));
      p.assignment[v] = k;
    }
  for (std::size_t v = 0; v < n; ++v)
    if (p.assignment[v] == UINT32_MAX)
      throw internal_error("partition_from_classes: vertex " + std::to_string(v) +
                           " not covered");
  return p;
}

Certificate make_certificate(const Hypergraph& h, Partition p, const Rational& tau) {
  auto prof = coverage_profile(h, p);
  Certificate c;
  c.r = p.class_count;
  c.m = h.edge_count();
  c.tau = tau;
  c.coverage = std::move(prof.coverage);
  c.min_coverage = c.coverage.empty()
                       ? 0
                       : *std::min_element(c.coverage.begin(), c.coverage.end());
  c.partition = std::move(p);
  return c;
}

}  // namespace

Certificate partition_judicious(const Hypergraph& h, std::uint32_t r, SolveStats* stats) {
  if (r < 2) throw input_error("partition_judicious: r must be at least 2");
  if (!h.is_uniform(r))
    throw input_error("partition_judicious: hypergraph is not " + std::to_string(r) +
                      "-uniform");
  const std::size_t n = h.vertex_count();
  const std::int64_t m = h.edge_count();
  const Rational tau = threshold(r, m);

  auto level = [&]() -> SolveStats::Level* {
    return stats ? &stats->by_class_count[r] : nullptr;
  };
  auto finish = [&](Partition p, const char* where) -> Certificate {
    Certificate c = make_certificate(h, std::move(p), tau);
    if (auto v = verify_certificate(h, c); !v.ok)
      throw internal_error(std::string("partition_judicious: certificate check failed after ") +
                           where + " (" + v.reason + ")\n" + dump_state(h, c.partition));
    return c;
  };

  if (m == 0) {
    if (auto* l = level()) ++l->edgeless;
    return finish(Partition::round_robin(n, r), "edgeless base case");
  }

  // A vertex meeting tau edges becomes its own class and the remaining
  // problem drops to uniformity r-1, whose threshold is no smaller.
  if (r >= 3) {
    const std::int64_t delta = max_degree(h);
    if (delta >= tau) {
      if (auto* l = level()) ++l->high_degree;
      VertexId pick = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (h.degree(static_cast<VertexId>(v)) == delta) {
          pick = static_cast<VertexId>(v);
          break;
        }
      Certificate inner = partition_judicious(shrink_uniformity(h, pick), r - 1, stats);
      Partition lifted;
      lifted.class_count = r;
      lifted.assignment = inner.partition.assignment;
      lifted.assignment[pick] = r - 1;
      return finish(std::move(lifted), "high-degree reduction");
    }
  }

  // max_degree < tau from here on.
  Partition local = improve_to_local_optimum(h, Partition::round_robin(n, r));

  // Relabel classes so that coverage is descending: class 0 strongest.
  auto prof = coverage_profile(h, local);
  std::vector<std::uint32_t> rank(r);
  for (std::uint32_t k = 0; k < r; ++k) rank[prof.by_descending[k]] = k;
  Partition q;
  q.class_count = r;
  q.assignment.resize(n);
  for (std::size_t v = 0; v < n; ++v) q.assignment[v] = rank[local.assignment[v]];
  std::vector<std::int64_t> cov(r);
  for (std::uint32_t k = 0; k < r; ++k) cov[k] = prof.coverage[prof.by_descending[k]];

  if (cov[r - 1] >= tau) {
    if (auto* l = level()) ++l->direct;
    return finish(std::move(q), "local search");
  }

  // For two classes a local optimum always clears 2m/3 directly.
  if (r == 2)
    throw internal_error(
        "partition_judicious: two-class local optimum below threshold\n" + dump_state(h, q));

  if (cov[r - 2] >= tau) {
    // Every class but the weakest already meets tau: shrink them to minimal
    // good sets and grow the weakest from the freed vertices.  With these
    // thresholds the shrink always succeeds.
    if (auto* l = level()) ++l->case1;
    ShrinkRefinement ref = refine_by_shrinking(h, q, tau);
    if (!ref.good)
      throw internal_error(
          "partition_judicious: minimal-class refinement left the final class below "
          "threshold, which these bounds rule out\n" + dump_state(h, q));
    return finish(partition_from_classes(n, ref.classes), "minimal-class refinement");
  }

  // With three classes the previous case is the only reachable one.
  if (r == 3)
    throw internal_error(
        "partition_judicious: three-class instance fell outside the refinement case\n" +
        dump_state(h, q));

  // r >= 4: repair the weak tail by recombining strong classes.  Weak
  // classes are processed in ascending coverage; strong ones are consumed in
  // descending coverage.
  const CaseProfile profile = case_profile(cov, tau);
  const bool tail_half = (2 * cov[r - 1] >= tau);
  if (tail_half) {
    if (auto* l = level()) ++l->case2;
    if (profile.very_bad != 0)
      throw internal_error("partition_judicious: class below tau/2 despite the weakest "
                           "class clearing it\n" + dump_state(h, q));
    if (profile.big < profile.medium_bad)
      throw internal_error("partition_judicious: not enough strong classes to repair "
                           "the weak ones\n" + dump_state(h, q));
  } else {
    if (auto* l = level()) ++l->case3;
    if (profile.big < profile.medium_bad + 2 * profile.very_bad)
      throw internal_error("partition_judicious: not enough strong classes to repair "
                           "and dissolve the weak ones\n" + dump_state(h, q));
  }

  std::vector<VertexSet> cls(r);
  for (std::uint32_t k = 0; k < r; ++k) cls[k] = q.class_set(k);
  std::vector<bool> used(r, false);
  std::uint32_t next_big = 0;
  auto take_big = [&]() -> const VertexSet& {
    if (next_big >= profile.big)
      throw internal_error("partition_judicious: strong classes exhausted\n" +
                           dump_state(h, q));
    used[next_big] = true;
    return cls[next_big++];
  };

  std::vector<VertexSet> outputs;
  for (std::uint32_t idx = r; idx-- > 0;) {
    if (cov[idx] >= tau) break;  // weak classes are exactly the tail
    used[idx] = true;
    if (2 * cov[idx] >= tau) {
      auto two = combine_big_small(h, take_big(), cls[idx], tau);
      outputs.push_back(std::move(two[0]));
      outputs.push_back(std::move(two[1]));
    } else {
      const VertexSet& big1 = take_big();
      const VertexSet& big2 = take_big();
      auto three = combine_two_bigs(h, big1, big2, tau);
      three[0] = three[0].united(cls[idx]);  // absorbing vertices never lowers coverage
      outputs.push_back(std::move(three[0]));
      outputs.push_back(std::move(three[1]));
      outputs.push_back(std::move(three[2]));
    }
  }

  std::vector<VertexSet> final_classes;
  final_classes.reserve(r);
  for (std::uint32_t k = 0; k < r; ++k)
    if (!used[k]) final_classes.push_back(cls[k]);
  for (auto& s : outputs) final_classes.push_back(std::move(s));
  if (final_classes.size() != r)
    throw internal_error("partition_judicious: class count changed during repair\n" +
                         dump_state(h, q));
  return finish(partition_from_classes(n, final_classes),
                tail_half ? "pairwise repair" : "pairwise repair with dissolution");
}

VerifyResult verify_certificate(const Hypergraph& h, const Certificate& cert) {
  if (cert.r < 2) return {false, "class count below 2"};
  if (cert.partition.class_count != cert.r)
    return {false, "partition class count differs from r"};
  if (cert.m != h.edge_count()) return {false, "edge count mismatch"};
  if (cert.partition.assignment.size() != h.vertex_count())
    return {false, "assignment does not cover the vertex range"};
  for (std::uint32_t c : cert.partition.assignment)
    if (c >= cert.r) return {false, "class index out of range"};
  if (cert.coverage.size() != cert.r) return {false, "coverage list length differs from r"};

  auto prof = coverage_profile(h, cert.partition);
  if (prof.coverage != cert.coverage)
    return {false, "stored coverage differs from recount"};
  const std::int64_t min_cov =
      *std::min_element(prof.coverage.begin(), prof.coverage.end());
  if (min_cov != cert.min_coverage)
    return {false, "stored min_coverage differs from recount"};
  for (std::uint32_t k = 0; k < cert.r; ++k)
    if (prof.coverage[k] < cert.tau)
      return {false, "class " + std::to_string(k) + " meets " +
                         std::to_string(prof.coverage[k]) + " edges, below threshold " +
                         cert.tau.str()};
  return {true, ""};
}

}  // namespace judicious
