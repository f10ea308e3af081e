#include "judicious/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace judicious {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  unsigned __int128 v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(v);
}

// Depth-first enumeration of assignments in lexicographic order with
// incremental per-class state:
//   cov[c]      edges already met by class c
//   possible[c] cov[c] plus edges that could still come to meet c
// min_c possible[c] bounds every completion of the current prefix, so a
// subtree is skipped when it cannot strictly beat the best known value.
// Strict improvement plus lexicographic visit order make the surviving best
// the lexicographically least maximizer.
struct Search {
  const Hypergraph& h;
  const std::uint32_t r;
  const std::size_t n;
  std::atomic<std::int64_t>* shared_best;

  std::vector<std::int32_t> count;       // edge*r + class -> vertices placed
  std::vector<std::int32_t> unassigned;  // per edge
  std::vector<std::int64_t> cov;
  std::vector<std::int64_t> possible;
  std::vector<std::uint32_t> assign;
  std::vector<std::uint32_t> best_assign;
  std::int64_t best = -1;

  Search(const Hypergraph& hg, std::uint32_t classes, std::atomic<std::int64_t>* shared)
      : h(hg), r(classes), n(hg.vertex_count()), shared_best(shared) {
    count.assign(h.edges().size() * r, 0);
    unassigned.resize(h.edges().size());
    for (std::size_t e = 0; e < h.edges().size(); ++e)
      unassigned[e] = static_cast<std::int32_t>(h.edges()[e].size());
    cov.assign(r, 0);
    possible.assign(r, h.edge_count());
    assign.assign(n, 0);
  }

  void place(VertexId v, std::uint32_t c) {
    assign[v] = c;
    for (std::uint32_t ei : h.incident_edges(v)) {
      std::int32_t& k = count[std::size_t(ei) * r + c];
      if (k == 0) ++cov[c];
      ++k;
      if (--unassigned[ei] == 0)
        for (std::uint32_t c2 = 0; c2 < r; ++c2)
          if (count[std::size_t(ei) * r + c2] == 0) --possible[c2];
    }
  }

  void unplace(VertexId v, std::uint32_t c) {
    for (std::uint32_t ei : h.incident_edges(v)) {
      if (unassigned[ei]++ == 0)
        for (std::uint32_t c2 = 0; c2 < r; ++c2)
          if (count[std::size_t(ei) * r + c2] == 0) ++possible[c2];
      std::int32_t& k = count[std::size_t(ei) * r + c];
      if (--k == 0) --cov[c];
    }
  }

  void dfs(std::size_t v) {
    if (v == n) {
      const std::int64_t val = *std::min_element(cov.begin(), cov.end());
      if (val > best) {
        best = val;
        best_assign = assign;
        if (shared_best) {
          std::int64_t cur = shared_best->load(std::memory_order_relaxed);
          while (cur < val &&
                 !shared_best->compare_exchange_weak(cur, val, std::memory_order_relaxed)) {
          }
        }
      }
      return;
    }
    const std::int64_t ub = *std::min_element(possible.begin(), possible.end());
    if (ub <= best) return;
    if (shared_best && ub < shared_best->load(std::memory_order_relaxed)) return;
    for (std::uint32_t c = 0; c < r; ++c) {
      place(static_cast<VertexId>(v), c);
      dfs(v + 1);
      unplace(static_cast<VertexId>(v), c);
    }
  }
};

}  // namespace

BruteForceResult brute_force_best(const Hypergraph& h, std::uint32_t r,
                                  std::uint64_t budget, unsigned jobs) {
  if (r == 0) throw input_error("brute_force_best: r must be positive");
  const std::size_t n = h.vertex_count();
  const std::uint64_t required = saturating_pow(r, n);
  if (required > budget)
    throw budget_error("brute_force_best: needs " + std::to_string(required) +
                           " assignments, budget is " + std::to_string(budget),
                       required);
  if (n == 0) return {Partition{r, {}}, 0};

  jobs = std::clamp(jobs, 1u, 256u);

  // Stripe the space by the classes of vertices 1..p (vertex 0 is pinned);
  // stripes are visited in lexicographic order within each worker.
  std::size_t p = 0;
  if (jobs > 1) {
    std::uint64_t stripes = 1;
    while (p < n - 1 && stripes < 4ull * jobs) {
      stripes *= r;
      ++p;
    }
  }
  std::uint64_t stripe_count = saturating_pow(r, p);

  std::atomic<std::int64_t> shared_best{-1};
  std::vector<Search> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(h, r, &shared_best);

  auto run_worker = [&](unsigned w) {
    Search& s = workers[w];
    for (std::uint64_t stripe = w; stripe < stripe_count; stripe += jobs) {
      // decode most-significant digit first: stripe order == prefix lex order
      std::uint64_t rem = stripe;
      std::vector<std::uint32_t> digits(p);
      for (std::size_t i = p; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(rem % r);
        rem /= r;
      }
      s.place(0, 0);
      for (std::size_t i = 0; i < p; ++i) s.place(static_cast<VertexId>(i + 1), digits[i]);
      s.dfs(p + 1);
      for (std::size_t i = p; i-- > 0;) s.unplace(static_cast<VertexId>(i + 1), digits[i]);
      s.unplace(0, 0);
    }
  };

  if (jobs == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(run_worker, w);
    for (auto& t : threads) t.join();
  }

  const Search* winner = nullptr;
  for (const Search& s : workers) {
    if (s.best < 0) continue;
    if (!winner || s.best > winner->best ||
        (s.best == winner->best && s.best_assign < winner->best_assign))
      winner = &s;
  }
  if (!winner) throw internal_error("brute_force_best: no assignment visited");
  return {Partition{r, winner->best_assign}, winner->best};
}

ValueCounts classify_values(const ValueProfile& p) {
  ValueCounts out;
  for (const Rational& v : p.values) {
    if (v >= p.c * 2)
      ++out.big;
    else if (v >= p.c)
      ++out.mid;
    else if (v * 2 >= p.c)
      ++out.medium_bad;
    else
      ++out.very_bad;
  }
  return out;
}

bool has_enough_bigs(const ValueProfile& p) {
  if (p.values.empty())
    throw precondition_error("has_enough_bigs: value list must be non-empty");
  if (p.c < Rational(1, 3) || p.c > Rational(1, 2))
    throw precondition_error("has_enough_bigs: c must lie in [1/3, 1/2], got " +
                             p.c.str());
  Rational sum;
  for (const Rational& v : p.values) {
    if (v < 0 || v > 1)
      throw precondition_error("has_enough_bigs: value " + v.str() +
                               " outside [0, 1]");
    sum = sum + v;
  }
  const Rational mean = sum / static_cast<std::int64_t>(p.values.size());
  const Rational bound = std::max(p.c * 2, Rational(2, 3) + p.c / 6);
  if (mean < bound)
    throw precondition_error("has_enough_bigs: mean " + mean.str() +
                             " below max(2c, 2/3 + c/6) = " + bound.str());
  const ValueCounts k = classify_values(p);
  return k.big >= k.medium_bad + 2 * k.very_bad;
}

GapReport conjecture_gap_report(const Hypergraph& h, std::uint32_t r,
                                const BruteForceResult& best) {
  if (r < 2) throw input_error("conjecture_gap_report: r must be at least 2");
  GapReport rep;
  rep.r = r;
  rep.m = h.edge_count();
  rep.optimum = best.min_coverage;
  rep.proven_bound = threshold(r, rep.m);
  rep.conjectured_bound = Rational(std::int64_t(r) * rep.m, 2 * std::int64_t(r) - 1);
  rep.vacuous = (rep.m == 0);
  rep.meets_proven = !(rep.optimum < rep.proven_bound);
  rep.meets_conjectured = !(rep.optimum < rep.conjectured_bound);
  return rep;
}

GapReport conjecture_gap_report(const Hypergraph& h, std::uint32_t r,
                                std::uint64_t budget, unsigned jobs) {
  return conjecture_gap_report(h, r, brute_force_best(h, r, budget, jobs));
}

}  // namespace judicious
