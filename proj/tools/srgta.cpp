#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "srgta/classifier.hpp"
#include "srgta/error.hpp"
#include "srgta/families.hpp"

namespace fs = std::filesystem;
using namespace srgta;

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFailure = 1;
constexpr int kUsage = 2;
constexpr int kTimeout = 3;

struct RunConfig {
  std::string input;
  std::string output;
  std::string gens;
  bool json = false;
  bool table = false;
  std::uint64_t prime = kDefaultPrime;
  bool rational = false;
  double timeout = 300;
  bool all_vertices = false;
  std::uint64_t seed = 1;
  int omega = 0;
};

VerdictOptions verdict_options(const RunConfig& cfg, const Graph& g, const std::string& name) {
  VerdictOptions o;
  o.name = name;
  o.omega = cfg.omega;
  o.algebra.prime = cfg.prime;
  o.algebra.rational = cfg.rational;
  o.algebra.seed = cfg.seed;
  o.aut.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(cfg.timeout * 1000));
  o.all_vertices = cfg.all_vertices;
  if (!cfg.gens.empty()) o.imported = import_generators(fs::path(cfg.gens), g);
  return o;
}

std::string verdict_str(const AlgebraReport& r) {
  if (r.flags.case_b_candidate) return "case (b) candidate, no verdict";
  if (!r.triply_transitive) return "undecided (group may be a proper subgroup of Aut)";
  return *r.triply_transitive ? "triply transitive" : "not triply transitive";
}

void add_algebra_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--prime", cfg.prime, "Modulus for exact rank computations");
  cmd->add_flag("--rational", cfg.rational, "Exact rational arithmetic (slow)");
  cmd->add_option("--timeout", cfg.timeout, "Automorphism search timeout in seconds");
  cmd->add_option("--seed", cfg.seed, "Seed for the second prime");
}

// --------------------------------------------------------------------------

int cmd_construct(const std::vector<std::string>& words, const RunConfig& cfg) {
  if (words.empty()) throw Error(ErrorKind::Usage, "construct needs a family tag");
  FamilySpec spec;
  spec.tag = words[0];
  for (std::size_t i = 1; i < words.size(); ++i) {
    try {
      spec.args.push_back(std::stoll(words[i]));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "argument '" + words[i] + "' is not an integer");
    }
  }
  const Graph g = construct(spec);
  std::ostream& info = cfg.output.empty() ? std::cerr : std::cout;
  if (cfg.output.empty()) write_graph(g, std::cout);
  else write_graph(g, fs::path(cfg.output));
  auto r = is_strongly_regular(g);
  if (auto* p = std::get_if<SrgParams>(&r)) info << p->str() << "\n";
  else info << "not strongly regular: " << std::get<NotSrg>(r).reason << "\n";
  return kOk;
}

int cmd_analyze(const RunConfig& cfg) {
  const Graph g = read_graph(fs::path(cfg.input));
  const auto reports = analyze(g, verdict_options(cfg, g, fs::path(cfg.input).stem().string()));
  if (cfg.json) {
    if (reports.size() == 1) {
      std::cout << to_json(reports.front()).dump(2) << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    std::cout << table_header() << "\n";
    for (const auto& r : reports) std::cout << table_row(r) << "\n";
    for (const auto& r : reports) std::cout << "omega " << r.omega << ": " << verdict_str(r) << "\n";
  }
  return reports.front().flags.aut_lower_bound_only ? kTimeout : kOk;
}

int cmd_aut(const RunConfig& cfg, const std::string& export_path) {
  const Graph g = read_graph(fs::path(cfg.input));
  AutOptions opts;
  opts.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(cfg.timeout * 1000));
  const AutResult res = automorphism_group(g, opts);
  const GroupBSGS group = schreier_sims(res.gens, g.order());
  const TransitivityRank tr = transitivity_rank(group);
  std::cout << "order " << (res.complete ? "" : ">=") << group.order() << "\n"
            << "generators " << res.gens.size() << "\n"
            << "transitive " << (tr.transitive ? "yes" : "no") << "\n";
  if (tr.transitive) std::cout << "rank " << tr.rank << "\n";
  std::cout << "search nodes " << res.nodes << "\n";
  if (!export_path.empty()) write_generators(g.order(), res.gens, fs::path(export_path));
  if (!res.complete) {
    std::cerr << "search timed out; the order is a lower bound\n";
    return kTimeout;
  }
  return kOk;
}

void print_classify(const SrgParams& p) {
  std::cout << "params " << p.str() << "\n";
  const IntersectionNumbers in = intersection_numbers(p);
  std::cout << "intersection numbers p_ij^k (rows i, columns j), nonzero " << in.nonzero_count() << "\n";
  for (int k = 0; k < 3; ++k) {
    std::cout << "  k=" << k << ":";
    for (int i = 0; i < 3; ++i) {
      std::cout << " [";
      for (int j = 0; j < 3; ++j) std::cout << (j ? " " : "") << in(i, j, k);
      std::cout << "]";
    }
    std::cout << "\n";
  }
  std::cout << "T0 case " << to_string(t0_case(p)) << ", blocks " << block_str(in.t0_blocks()) << "\n";
  if (!is_primitive(p)) {
    std::cout << "imprimitive: Krein and exclusion lemmas do not apply\n";
    return;
  }
  const KreinReport kr = krein(p);
  std::cout << "eigenvalues theta=" << kr.theta.str() << " tau=" << kr.tau.str() << " multiplicities " << kr.f.str() << ", "
            << kr.g.str() << "\n";
  std::cout << "krein q11^1 oracle=" << kr.q11_oracle.str() << " paper=" << kr.q11_paper.str() << "\n";
  std::cout << "krein q22^2 oracle=" << kr.q22_oracle.str() << " paper=" << kr.q22_paper.str() << "\n";
  std::cout << "krein sign agreement " << (kr.agree ? "yes" : "no") << "\n";
  const auto forms = param_form(p);
  std::cout << "forms";
  if (forms.empty()) std::cout << " none";
  for (const auto& f : forms) std::cout << " " << f.str();
  std::cout << "\n";
  std::cout << "exclusion: " << to_string(exclusion_lemma(p)) << "\n";
  const LsNlsCheck ls = ls_nls_lemma(p, false);
  if (ls.applies)
    std::cout << "rank 3 LS/nLS lemma: " << (ls.excludes ? "not triply transitive if rank 3" : "4t^2 form present, no conclusion")
              << " (conjecture-conditional beyond rank 3)\n";
}

int cmd_classify(const std::vector<std::int64_t>& v) {
  if (v.size() != 4) throw Error(ErrorKind::Usage, "classify needs n k lambda mu");
  SrgParams p{v[0], v[1], v[2], v[3]};
  p.validate();
  print_classify(p);
  return kOk;
}

int cmd_check_triple(const RunConfig& cfg) {
  const Graph g = read_graph(fs::path(cfg.input));
  VerdictOptions o = verdict_options(cfg, g, fs::path(cfg.input).stem().string());
  const AlgebraReport r = triple_transitivity_verdict(g, o);
  std::cout << to_json(r).dump(2) << "\n";
  return r.flags.aut_lower_bound_only ? kTimeout : kOk;
}

// --------------------------------------------------------------------------
// reproduce

struct Row {
  std::string group;
  std::string name;
  std::function<Graph()> make;  // empty for imported rows
  std::string import_file;
  std::optional<std::int64_t> t0, t, t_tilde;
  std::optional<Block3> tilde_blocks;
  std::optional<bool> verdict;
  std::optional<std::string> aut_order;
};

std::vector<Row> battery() {
  std::vector<Row> rows;
  auto dims = [](std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::tuple<std::optional<std::int64_t>, std::optional<std::int64_t>, std::optional<std::int64_t>>{a, b, c};
  };
  auto add = [&](std::string group, std::string name, std::function<Graph()> make, auto d, std::optional<bool> verdict) {
    Row r;
    r.group = std::move(group);
    r.name = std::move(name);
    r.make = std::move(make);
    std::tie(r.t0, r.t, r.t_tilde) = d;
    r.verdict = verdict;
    rows.push_back(std::move(r));
    return &rows.back();
  };

  add("table", "Petersen", [] { return complement(johnson(5)); }, dims(14, 15, 15), false)->tilde_blocks =
      Block3{{{1, 1, 1}, {1, 2, 2}, {1, 2, 4}}};
  add("table", "Clebsch complement", [] { return affine_polar(-1, 2, 2); }, dims(14, 14, 14), true)->tilde_blocks =
      Block3{{{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}};
  for (auto [name, file, d] : {std::tuple{"Hoffman-Singleton", "hoffman_singleton.graph", dims(14, 15, 15)},
                               std::tuple{"Gewirtz", "gewirtz.graph", dims(14, 15, 16)},
                               std::tuple{"M22", "m22.graph", dims(14, 15, 16)},
                               std::tuple{"Higman-Sims", "higman_sims.graph", dims(14, 14, 14)}}) {
    Row* r = add("table", name, {}, d, std::get<0>(d) == std::get<1>(d) && std::get<1>(d) == std::get<2>(d));
    r->import_file = file;
  }

  add("imprimitive", "grid(2)", [] { return grid(2); }, dims(10, 10, 10), true);
  for (int parts = 2; parts <= 4; ++parts)
    for (int size = 3; size <= 4; ++size) {
      const std::int64_t d = parts == 2 ? 11 : 12;
      add("imprimitive", "K" + std::to_string(parts) + "x" + std::to_string(size),
          [=] { return complete_multipartite(parts, size); }, dims(d, d, d), true);
    }

  for (int n = 3; n <= 7; ++n) {
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    add("grids", "grid(" + std::to_string(n) + ")", [=] { return grid(n); }, dims(15, 15, 15), true)->aut_order =
        BigInt(2 * fact * fact).str();
  }

  add("paley", "Paley(5)", [] { return paley(5); }, dims(13, 13, 13), true);
  add("paley", "Paley(9)", [] { return paley(9); }, dims(15, 15, 15), true);
  for (int p : {13, 17}) {
    Row* r = add("paley", "Paley(" + std::to_string(p) + ")", [=] { return paley(p); }, dims(15, 0, 3 + 2 * p), false);
    r->t.reset();
  }

  {
    Row* r = add("peisert", "Peisert(7,1)", [] { return peisert(7, 1); }, dims(15, 0, 45), false);
    r->t.reset();
    r->aut_order = "3528";
    r = add("peisert", "Peisert(3,2)", [] { return peisert(3, 2); }, dims(15, 0, 31), false);
    r->t.reset();
  }

  add("polar", "O6-(2)", [] { return o6_minus_collinearity(2); }, dims(15, 15, 15), true);
  add("polar", "O6-(3)", [] { return o6_minus_collinearity(3); }, dims(15, 15, 15), true);
  add("polar", "VO+(4,2)", [] { return affine_polar(1, 2, 2); }, dims(15, 15, 15), true);
  add("polar", "VO-(6,2)", [] { return affine_polar(-1, 3, 2); }, dims(15, 15, 15), true);
  add("polar", "VO+(6,2)", [] { return affine_polar(1, 3, 2); }, dims(15, 15, 15), true);
  return rows;
}

struct RowResult {
  enum { Pass, Fail, Skip } status = Skip;
  std::string detail;
};

RowResult run_row(const Row& row, const RunConfig& cfg, const std::string& import_dir) {
  RowResult res;
  Graph g;
  VerdictOptions o;
  if (!row.import_file.empty()) {
    const fs::path file = fs::path(import_dir) / row.import_file;
    if (import_dir.empty() || !fs::exists(file)) {
      res.detail = "graph file not supplied";
      return res;
    }
    g = read_graph(file);
    fs::path gens = file;
    gens.replace_extension(".gens");
    o = verdict_options(cfg, g, row.name);
    if (fs::exists(gens)) o.imported = import_generators(gens, g);
  } else {
    g = row.make();
    o = verdict_options(cfg, g, row.name);
  }
  o.all_vertices = false;
  const AlgebraReport r = triple_transitivity_verdict(g, o);

  std::ostringstream os;
  bool ok = true;
  auto check = [&](const char* what, const auto& expected, const auto& got) {
    if (expected && *expected != got) {
      ok = false;
      os << " " << what << " expected " << *expected << " got " << got << ";";
    }
  };
  check("T0", row.t0, r.t0);
  check("T", row.t, r.t);
  check("T~", row.t_tilde, r.t_tilde);
  if (row.tilde_blocks && *row.tilde_blocks != r.t_tilde_blocks) {
    ok = false;
    os << " blocks expected " << block_str(*row.tilde_blocks) << ";";
  }
  if (row.verdict && r.triply_transitive != row.verdict) {
    ok = false;
    os << " verdict " << verdict_str(r) << ";";
  }
  if (row.aut_order && *row.aut_order != r.aut_order.str()) {
    ok = false;
    os << " |Aut| expected " << *row.aut_order << " got " << r.aut_order << ";";
  }
  res.status = ok ? RowResult::Pass : RowResult::Fail;
  res.detail = r.params.str() + " dims " + std::to_string(r.t0) + "/" + std::to_string(r.t) + "/" + std::to_string(r.t_tilde) +
               " " + block_str(r.t_tilde_blocks) + " |Aut| " + r.aut_order.str() + " " + verdict_str(r) + os.str();
  return res;
}

int cmd_reproduce(const RunConfig& cfg, const std::string& only, const std::string& import_dir, unsigned jobs) {
  std::vector<Row> rows;
  for (auto& r : battery())
    if (only.empty() || r.group == only) rows.push_back(std::move(r));
  if (rows.empty()) throw Error(ErrorKind::Usage, "no rows in group '" + only + "'");

  std::vector<RowResult> results(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rows.size();) {
      try {
        results[i] = run_row(rows[i], cfg, import_dir);
      } catch (const std::exception& e) {
        results[i] = {RowResult::Fail, e.what()};
      }
    }
  };
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::min<std::size_t>(jobs, rows.size()); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int failed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const char* tag = results[i].status == RowResult::Pass ? "PASS" : results[i].status == RowResult::Fail ? "FAIL" : "SKIP";
    failed += results[i].status == RowResult::Fail;
    std::cout << tag << " " << rows[i].group << "/" << rows[i].name << ": " << results[i].detail << "\n";
  }
  return failed ? kVerdictFailure : kOk;
}

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::Timeout ? kTimeout : kUsage; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly regular graphs and their Terwilliger algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* construct_cmd = app.add_subcommand("construct", "Build a graph family member and write it to a file");
  std::vector<std::string> family;
  construct_cmd->add_option("family", family, "Tag and integer arguments, e.g. 'paley 13'")->required();
  construct_cmd->add_option("-o,--output", cfg.output, "Output graph file (stdout if omitted)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Dimensions and block decompositions of T0, T and T~");
  analyze_cmd->add_option("file", cfg.input)->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--gens", cfg.gens, "Automorphism generators to use instead of searching")->check(CLI::ExistingFile);
  auto* json_flag = analyze_cmd->add_flag("--json", cfg.json, "JSON output");
  auto* table_flag = analyze_cmd->add_flag("--table", cfg.table, "Table output (default)");
  json_flag->excludes(table_flag);
  analyze_cmd->add_flag("--all-vertices", cfg.all_vertices, "One report per vertex");
  analyze_cmd->add_option("--omega", cfg.omega, "Base vertex");
  add_algebra_flags(analyze_cmd, cfg);

  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of a graph");
  std::string export_path;
  aut_cmd->add_option("file", cfg.input)->required()->check(CLI::ExistingFile);
  aut_cmd->add_option("--export", export_path, "Write the generators to a file");
  aut_cmd->add_option("--timeout", cfg.timeout, "Search timeout in seconds");

  auto* classify_cmd = app.add_subcommand("classify", "Parameter-level analysis of (n,k,lambda,mu)");
  std::vector<std::int64_t> params;
  classify_cmd->add_option("params", params, "n k lambda mu")->required()->expected(4);

  auto* check_cmd = app.add_subcommand("check-triple", "Triple transitivity verdict as JSON");
  check_cmd->add_option("file", cfg.input)->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--gens", cfg.gens, "Automorphism generators to use instead of searching")->check(CLI::ExistingFile);
  add_algebra_flags(check_cmd, cfg);

  auto* repro_cmd = app.add_subcommand("reproduce", "Run the table battery and print PASS/FAIL per row");
  std::string only, import_dir;
  unsigned jobs = 0;
  repro_cmd->add_option("--only", only, "Restrict to one group: table, imprimitive, grids, paley, peisert, polar");
  repro_cmd->add_option("--import-dir", import_dir, "Directory with sporadic graph files");
  repro_cmd->add_option("--jobs", jobs, "Worker threads (default: logical cores)");
  add_algebra_flags(repro_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*construct_cmd) return cmd_construct(family, cfg);
    if (*analyze_cmd) return cmd_analyze(cfg);
    if (*aut_cmd) return cmd_aut(cfg, export_path);
    if (*classify_cmd) return cmd_classify(params);
    if (*check_cmd) return cmd_check_triple(cfg);
    if (*repro_cmd) return cmd_reproduce(cfg, only, import_dir, jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
