#include "judicious/cli.hpp"

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "judicious/io.hpp"

namespace judicious {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

std::vector<std::vector<VertexId>> certificate_classes(const Certificate& cert) {
  std::vector<std::vector<VertexId>> classes(cert.r);
  for (std::size_t v = 0; v < cert.partition.assignment.size(); ++v)
    classes[cert.partition.assignment[v]].push_back(static_cast<VertexId>(v));
  return classes;
}

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", r.num()}, {"den", r.den()}};
}

bool want_json(const std::string& format) {
  if (format == "json") return true;
  if (format == "text") return false;
  return isatty(fileno(stdout)) == 0;  // machines get json, terminals get text
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["r"] = cert.r;
  j["m"] = cert.m;
  j["threshold"] = rational_json(cert.tau);
  j["classes"] = certificate_classes(cert);
  j["coverage"] = cert.coverage;
  j["min_coverage"] = cert.min_coverage;
  return j.dump() + "\n";
}

std::string certificate_to_text(const Certificate& cert) {
  std::string out;
  out += "r: " + std::to_string(cert.r) + "\n";
  out += "m: " + std::to_string(cert.m) + "\n";
  out += "threshold: " + cert.tau.str() + "\n";
  out += "min_coverage: " + std::to_string(cert.min_coverage) + "\n";
  auto classes = certificate_classes(cert);
  for (std::uint32_t k = 0; k < cert.r; ++k) {
    out += "class " + std::to_string(k) + " coverage " +
           std::to_string(cert.coverage[k]) + ":";
    for (VertexId v : classes[k]) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string gap_report_to_json(const BruteForceResult& best, const GapReport& rep) {
  ordered_json j;
  j["r"] = rep.r;
  j["m"] = rep.m;
  j["optimum_min_coverage"] = rep.optimum;
  j["assignment"] = best.best.assignment;
  j["proven_bound"] = rational_json(rep.proven_bound);
  j["meets_proven"] = rep.meets_proven;
  j["conjectured_bound"] = rational_json(rep.conjectured_bound);
  j["meets_conjectured"] = rep.meets_conjectured;
  if (rep.vacuous)
    j["ratio"] = nullptr;
  else
    j["ratio"] = rational_json(Rational(rep.optimum, rep.m));
  return j.dump() + "\n";
}

std::string gap_report_to_text(const BruteForceResult& best, const GapReport& rep) {
  std::string out;
  out += "optimum_min_coverage: " + std::to_string(rep.optimum) + "\n";
  out += "assignment:";
  for (std::uint32_t c : best.best.assignment) out += " " + std::to_string(c);
  out += "\n";
  out += "ratio: " + (rep.vacuous ? std::string("vacuous")
                                  : Rational(rep.optimum, rep.m).str()) + "\n";
  out += "proven_bound: " + rep.proven_bound.str() +
         (rep.meets_proven ? " (met)" : " (NOT met)") + "\n";
  out += "conjectured_bound: " + rep.conjectured_bound.str() +
         (rep.meets_conjectured ? " (met)" : " (not met)") + "\n";
  return out;
}

namespace {

std::uint32_t resolve_r(const Hypergraph& h, std::uint32_t r_flag) {
  if (r_flag != 0) return r_flag;
  auto u = h.uniformity();
  if (!u)
    throw input_error("instance is not uniform (or has no edges); pass --r explicitly");
  return static_cast<std::uint32_t>(*u);
}

int run_partition(const std::string& input, std::uint32_t r_flag,
                  const std::string& format, const std::string& out_path) {
  Hypergraph h = parse_instance(read_file(input));
  std::uint32_t r = resolve_r(h, r_flag);
  Certificate cert = partition_judicious(h, r);
  std::cout << (want_json(format) ? certificate_to_json(cert)
                                  : certificate_to_text(cert));
  if (!out_path.empty()) write_file(out_path, partition_line(cert.partition));
  return 0;
}

int run_verify(const std::string& input, const std::string& partition_path) {
  Hypergraph h = parse_instance(read_file(input));
  const std::string ptext = read_file(partition_path);

  std::vector<std::uint32_t> assign;
  std::istringstream in(ptext);
  std::string tok;
  while (in >> tok) {
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw input_error("partition file: malformed class index '" + tok + "'");
    }
    if (value >= h.vertex_count() + 1)
      throw input_error("partition file: class index " + tok + " is out of range");
    assign.push_back(static_cast<std::uint32_t>(value));
  }
  if (assign.size() != h.vertex_count())
    throw input_error("partition file assigns " + std::to_string(assign.size()) +
                      " vertices, instance has " + std::to_string(h.vertex_count()));

  std::uint32_t r = 2;  // vacuous instances verify against the base bound
  if (!assign.empty())
    r = std::max(2u, *std::max_element(assign.begin(), assign.end()) + 1);

  Partition p{r, std::move(assign)};
  auto prof = coverage_profile(h, p);
  Certificate cert;
  cert.r = r;
  cert.m = h.edge_count();
  cert.tau = threshold(r, cert.m);
  cert.partition = std::move(p);
  cert.coverage = prof.coverage;
  cert.min_coverage = prof.coverage.empty()
                          ? 0
                          : *std::min_element(prof.coverage.begin(), prof.coverage.end());
  VerifyResult res = verify_certificate(h, cert);
  if (res.ok) {
    std::cout << "valid: every class meets at least " << cert.tau.str() << " edges\n";
    return 0;
  }
  std::cout << "invalid: " << res.reason << "\n";
  return 1;
}

int run_brute(const std::string& input, std::uint32_t r, std::uint64_t budget,
              unsigned jobs, const std::string& format) {
  Hypergraph h = parse_instance(read_file(input));
  BruteForceResult best = brute_force_best(h, r, budget, jobs);
  GapReport rep = conjecture_gap_report(h, r, best);
  std::cout << (want_json(format) ? gap_report_to_json(best, rep)
                                  : gap_report_to_text(best, rep));
  return 0;
}

int run_gen(std::uint32_t r, std::uint32_t n, std::int64_t m_flag, std::uint64_t seed,
            const std::string& mode_name, const std::string& out_path) {
  GenSpec spec;
  spec.r = r;
  spec.n = n;
  spec.seed = seed;
  if (mode_name == "uniform-random")
    spec.mode = GenMode::uniform_random;
  else if (mode_name == "multi-heavy")
    spec.mode = GenMode::multi_heavy;
  else if (mode_name == "complete")
    spec.mode = GenMode::complete;
  else
    throw input_error("unknown mode: " + mode_name);

  if (m_flag >= 0) {
    spec.m = static_cast<std::uint64_t>(m_flag);
  } else if (spec.mode == GenMode::complete) {
    spec.m = choose_count(n, r);
    if (spec.m == UINT64_MAX) throw input_error("complete instance is too large");
  } else {
    throw input_error("--m is required for this mode");
  }

  const std::string text = serialize_instance(generate(spec));
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

int run_stats(const std::string& input) {
  Hypergraph h = parse_instance(read_file(input));
  std::cout << "n: " << h.vertex_count() << "\n";
  std::cout << "m: " << h.edge_count() << "\n";
  auto u = h.uniformity();
  std::cout << "uniformity: " << (u ? std::to_string(*u) : std::string("none")) << "\n";
  const std::int64_t delta = max_degree(h);
  std::cout << "max_degree: " << delta << "\n";
  if (u && *u >= 2) {
    Rational tau = threshold(static_cast<std::uint32_t>(*u), h.edge_count());
    std::cout << "threshold: " << tau.str() << "\n";
    std::cout << "max_degree_below_threshold: " << (delta < tau ? "true" : "false")
              << "\n";
  }
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"judicious hypergraph partitioning: solver, verifier, oracle"};
  app.require_subcommand(1);

  std::string input, format = "auto", out_path, partition_path, mode = "uniform-random";
  std::uint32_t r = 0, n = 0;
  std::int64_t m = -1;
  std::uint64_t seed = 0, budget = kDefaultAssignmentBudget;
  unsigned jobs = 1;

  auto* cmd_partition =
      app.add_subcommand("partition", "partition an instance and print the certificate");
  cmd_partition->add_option("--input", input, "instance file")->required();
  cmd_partition->add_option("--r", r, "number of classes (default: the uniformity)")
      ->check(CLI::Range(2u, 1000000u));
  cmd_partition->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text", "auto"}));
  cmd_partition->add_option("--out", out_path, "also write the class-index line here");

  auto* cmd_verify = app.add_subcommand("verify", "check a partition against the bound");
  cmd_verify->add_option("--input", input, "instance file")->required();
  cmd_verify->add_option("--partition", partition_path, "one line of class indices")
      ->required();

  auto* cmd_brute =
      app.add_subcommand("brute", "exhaustive optimum and conjecture gap report");
  cmd_brute->add_option("--input", input, "instance file")->required();
  cmd_brute->add_option("--r", r, "number of classes")
      ->required()
      ->check(CLI::Range(1u, 1000000u));
  cmd_brute->add_option("--budget", budget, "assignment budget (default 1e7)");
  cmd_brute->add_option("--jobs", jobs, "worker threads");
  cmd_brute->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text", "auto"}));

  auto* cmd_gen = app.add_subcommand("gen", "write a generated instance");
  cmd_gen->add_option("--r", r, "edge size")->required();
  cmd_gen->add_option("--n", n, "vertex count")->required();
  cmd_gen->add_option("--m", m, "edge count (complete mode defaults to C(n,r))")
      ->check(CLI::NonNegativeNumber);
  cmd_gen->add_option("--seed", seed, "generator seed");
  cmd_gen->add_option("--mode", mode, "uniform-random|multi-heavy|complete")
      ->check(CLI::IsMember({"uniform-random", "multi-heavy", "complete"}));
  cmd_gen->add_option("--output", out_path, "output file (default: stdout)");

  auto* cmd_stats = app.add_subcommand("stats", "print instance statistics");
  cmd_stats->add_option("--input", input, "instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_partition->parsed()) return run_partition(input, r, format, out_path);
    if (cmd_verify->parsed()) return run_verify(input, partition_path);
    if (cmd_brute->parsed()) return run_brute(input, r, budget, jobs, format);
    if (cmd_gen->parsed()) return run_gen(r, n, m, seed, mode, out_path);
    if (cmd_stats->parsed()) return run_stats(input);
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace judicious
