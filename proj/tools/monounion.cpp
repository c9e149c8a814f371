#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monounion/engine.hpp"
#include "monounion/errors.hpp"
#include "monounion/fixtures.hpp"
#include "monounion/growth.hpp"
#include "monounion/io.hpp"
#include "monounion/persistence.hpp"
#include "monounion/spec.hpp"
#include "monounion/validate.hpp"
#include "monounion/weights.hpp"

namespace {

using namespace monounion;

struct Config {
  std::string spec_path;
  exp_t window = 8;
  std::int64_t depth = 10000;
  exp_t horizon = 64;
  exp_t t_max = 16;
  exp_t q_max = 16;
  exp_t m_max = 12;
  exp_t max_len = 12;
  int threads = 1;
  std::string report_path;
  std::string out_path;
  std::string csv_path;
  std::string out_dir;
  int alphabet = 2;
  exp_t max_exp = 2;
  exp_t search_window = 6;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write file: " + path);
  out << content;
  if (!out) throw DocumentError("cannot write file: " + path);
}

std::string frac(const Rational& r) {
  std::ostringstream out;
  out << r.str() << " (" << r.approx() << ")";
  return out.str();
}

void print_validation(const SemigroupSpec& spec,
                      const ValidationReport& report) {
  if (report.accepted()) {
    std::cout << "spec accepted: " << spec.size()
              << " generators, associativity window " << report.window
              << ", exponent monotonicity OK\n";
    return;
  }
  constexpr std::size_t kShown = 10;
  const auto& assoc = report.associativity_violations;
  for (std::size_t i = 0; i < assoc.size() && i < kShown; ++i) {
    const AssocViolation& v = assoc[i];
    std::cout << "associativity fails at (" << spec.show(v.u) << ", "
              << spec.show(v.v) << ", " << spec.show(v.w)
              << "): (u*v)*w = " << spec.show(v.left) << " but u*(v*w) = "
              << spec.show(v.right) << "\n";
  }
  if (assoc.size() > kShown)
    std::cout << "... and " << assoc.size() - kShown
              << " more associativity violations\n";
  const auto& mono = report.monotonicity_violations;
  for (std::size_t i = 0; i < mono.size() && i < kShown; ++i) {
    const MonoViolation& v = mono[i];
    std::cout << "exponent monotonicity fails for " << spec.name(v.x)
              << ": i = " << v.i << ", j = " << v.j << " lands on exponent "
              << v.k << " < i\n";
  }
  if (mono.size() > kShown)
    std::cout << "... and " << mono.size() - kShown
              << " more monotonicity violations\n";
  for (const std::string& d : report.depth_failures)
    std::cout << "reduction budget exhausted: " << d << "\n";
  std::cout << "spec rejected\n";
}

// Shared validation gate. Returns an exit code when the table is rejected.
std::optional<int> gate(const LoadedSpec& loaded, const Engine& eng,
                        const Config& cfg) {
  ValidationReport report = validate(eng, cfg.window);
  if (report.accepted()) return std::nullopt;
  print_validation(loaded.spec, report);
  if (!cfg.report_path.empty())
    write_file(cfg.report_path,
               serialize_validation(loaded.spec, report, loaded.digest));
  return static_cast<int>(ErrorCode::InvalidSpec);
}

// Persistence graph, verifications, condensation, and weights; structural
// violations are collected rather than thrown so the CLI can print all of
// them before exiting.
Analysis analyze_spec(const Engine& eng, const Config& cfg,
                      std::vector<std::string>& violations) {
  const SemigroupSpec& spec = eng.spec();
  Analysis a{build_persistence_graph(eng, cfg.t_max, cfg.q_max),
             Condensation{}, Weights{}, {}};

  auto accumulate = [&violations](std::vector<std::string> batch) {
    for (std::string& v : batch) violations.push_back(std::move(v));
  };
  accumulate(verify_transitivity(spec, a.graph));

  std::vector<Element> samples = sample_elements(eng);
  for (const Element& x : samples)
    for (gen_t y = 0; y < spec.size(); ++y) {
      Trajectory t = trajectory(eng, x, y, cfg.horizon);
      accumulate(verify_trajectory_structure(spec, t));
      a.trajectories.push_back(std::move(t));
    }
  accumulate(verify_x_independence(eng, a.graph, samples, cfg.horizon));
  if (!violations.empty()) return a;

  a.cond = condense(spec, a.graph);
  a.weights = synthesize_weights(spec, a.graph, a.cond);
  accumulate(verify_weights(spec, a.graph, a.cond, a.weights));
  return a;
}

void print_analysis(const SemigroupSpec& spec, const Analysis& a) {
  for (const auto& [key, e] : a.graph.edges()) {
    auto [y, z] = key;
    std::cout << "edge (" << spec.name(y) << " -> " << spec.name(z)
              << "): M = " << frac(e.multiplier) << ", witness "
              << spec.show(Element{e.witness.base, e.witness.start_exp})
              << " * " << spec.name(e.witness.letter) << "^"
              << e.witness.letter_count << " = "
              << spec.show(Element{e.witness.base, e.witness.end_exp})
              << "\n";
  }
  for (std::size_t c = 0; c < a.cond.classes.size(); ++c) {
    std::cout << "class " << c << ": {";
    for (std::size_t i = 0; i < a.cond.classes[c].size(); ++i)
      std::cout << (i ? ", " : "") << spec.name(a.cond.classes[c][i]);
    std::cout << "}\n";
  }
  std::cout << "processing order (sinks first):";
  for (int c : a.cond.order) std::cout << " " << c;
  std::cout << "\n";
  for (gen_t g = 0; g < spec.size(); ++g)
    std::cout << "d(" << spec.name(g) << ") = " << a.weights.of(g) << "\n";
}

int run_validate(const Config& cfg) {
  LoadedSpec loaded = load_spec_file(cfg.spec_path);
  Engine eng(loaded.spec, EngineLimits{cfg.depth});
  ValidationReport report = validate(eng, cfg.window);
  print_validation(loaded.spec, report);
  if (!cfg.report_path.empty())
    write_file(cfg.report_path,
               serialize_validation(loaded.spec, report, loaded.digest));
  return report.accepted() ? 0 : static_cast<int>(ErrorCode::InvalidSpec);
}

int run_analyze(const Config& cfg) {
  LoadedSpec loaded = load_spec_file(cfg.spec_path);
  Engine eng(loaded.spec, EngineLimits{cfg.depth});
  if (auto code = gate(loaded, eng, cfg)) return *code;

  std::vector<std::string> violations;
  Analysis a = analyze_spec(eng, cfg, violations);
  if (!violations.empty()) {
    for (const std::string& v : violations)
      std::cout << "structure violation: " << v << "\n";
    return static_cast<int>(ErrorCode::InvalidSpec);
  }
  print_analysis(loaded.spec, a);
  if (!cfg.report_path.empty())
    write_file(cfg.report_path,
               serialize_analysis(loaded.spec, a, loaded.digest));
  return 0;
}

int run_certify(const Config& cfg) {
  LoadedSpec loaded = load_spec_file(cfg.spec_path);
  Engine eng(loaded.spec, EngineLimits{cfg.depth});
  if (auto code = gate(loaded, eng, cfg)) return *code;

  std::vector<std::string> violations;
  Analysis a = analyze_spec(eng, cfg, violations);
  if (!violations.empty()) {
    for (const std::string& v : violations)
      std::cout << "structure violation: " << v << "\n";
    return static_cast<int>(ErrorCode::InvalidSpec);
  }

  LetterBound k = compute_letter_bound(eng, a.graph, a.weights, cfg.horizon);
  std::vector<std::string> recheck =
      recheck_letter_bound(eng, a.weights, k.value, cfg.horizon,
                           checked_mul(cfg.horizon, 2));
  if (!recheck.empty()) {
    for (const std::string& v : recheck)
      std::cout << "letter bound re-check failed: " << v << "\n";
    return static_cast<int>(ErrorCode::Certificate);
  }

  BallOptions opts;
  opts.threads = cfg.threads;
  GrowthCertificate cert = certify(eng, a.weights, k, cfg.m_max, opts);

  print_analysis(loaded.spec, a);
  std::cout << "K = " << k.value << " (scanned horizon " << k.horizon
            << ", re-checked through " << checked_mul(cfg.horizon, 2)
            << ")\n";
  std::cout << "L = " << frac(cert.density) << "\n";
  std::cout << "L*K = " << frac(cert.coefficient) << "\n";
  for (const BallRow& row : cert.rows)
    std::cout << "m = " << row.m << ": |J(m)| = " << row.count
              << ", bound " << row.bound << "\n";
  std::cout << "verdict: " << (cert.verdict ? "pass" : "fail") << "\n";

  if (!cfg.out_path.empty())
    write_file(cfg.out_path, serialize_certificate(loaded.spec, a.graph,
                                                   cert, loaded.digest));
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, ball_table_csv(cert));
  return 0;
}

int run_growth(const Config& cfg) {
  LoadedSpec loaded = load_spec_file(cfg.spec_path);
  Engine eng(loaded.spec, EngineLimits{cfg.depth});
  if (auto code = gate(loaded, eng, cfg)) return *code;

  BallOptions opts;
  opts.threads = cfg.threads;
  BallEnumerator balls(eng, opts);
  std::vector<std::pair<exp_t, std::int64_t>> rows;
  for (exp_t m = 1; m <= cfg.max_len; ++m) {
    balls.next_level();
    rows.emplace_back(m, balls.total());
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::cout << (i ? "," : "") << rows[i].second;
  std::cout << "\n";
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, growth_csv(rows));
  return 0;
}

int run_search(const Config& cfg) {
  SearchOptions opts;
  opts.alphabet = cfg.alphabet;
  opts.max_exp = cfg.max_exp;
  opts.window = cfg.search_window;
  opts.depth_bound = cfg.depth;
  std::vector<SemigroupSpec> survivors = search_fixtures(opts);

  std::int64_t per_cell = static_cast<std::int64_t>(cfg.alphabet) *
                          cfg.max_exp;
  std::int64_t total = 1;
  for (int i = 0; i < cfg.alphabet * (cfg.alphabet - 1); ++i)
    total = checked_mul(total, per_cell);
  std::cout << total << " tables scanned, " << survivors.size()
            << " canonical survivors\n";

  Config analysis_cfg = cfg;
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    const SemigroupSpec& s = survivors[i];
    std::cout << "survivor " << i + 1 << ":";
    for (gen_t x = 0; x < s.size(); ++x)
      for (gen_t y = 0; y < s.size(); ++y) {
        if (x == y) continue;
        std::cout << " " << s.name(x) << "*" << s.name(y) << " = "
                  << s.show(s.table(x, y));
      }
    std::cout << "\n";
    try {
      Engine eng(s, EngineLimits{cfg.depth});
      std::vector<std::string> violations;
      Analysis a = analyze_spec(eng, analysis_cfg, violations);
      if (!violations.empty()) {
        std::cout << "  analysis: " << violations.size()
                  << " structure violations\n";
      } else {
        for (const auto& [key, e] : a.graph.edges())
          std::cout << "  edge (" << s.name(key.first) << " -> "
                    << s.name(key.second) << "): M = " << frac(e.multiplier)
                    << "\n";
        for (gen_t g = 0; g < s.size(); ++g)
          std::cout << "  d(" << s.name(g) << ") = " << a.weights.of(g)
                    << "\n";
      }
    } catch (const Error& e) {
      std::cout << "  analysis stopped: " << e.what() << "\n";
    }
    if (!cfg.out_dir.empty()) {
      std::ostringstream name;
      name << cfg.out_dir << "/survivor-" << (i + 1 < 10 ? "0" : "")
           << i + 1 << ".json";
      write_file(name.str(), serialize_spec(s));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Linear-growth certificates for disjoint unions of monogenic "
      "semigroups"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_spec_arg = [&cfg](CLI::App* cmd) {
    cmd->add_option("spec", cfg.spec_path, "spec document path")->required();
  };
  const auto add_window = [&cfg](CLI::App* cmd) {
    cmd->add_option("--window", cfg.window,
                    "associativity window (default 8)");
    cmd->add_option("--depth", cfg.depth,
                    "reduction step budget (default 10000)");
  };
  const auto add_analysis = [&cfg](CLI::App* cmd) {
    cmd->add_option("--horizon", cfg.horizon,
                    "trajectory horizon (default 64)");
    cmd->add_option("--t-max", cfg.t_max,
                    "return search bound on start exponents (default 16)");
    cmd->add_option("--q-max", cfg.q_max,
                    "return search bound on letter counts (default 16)");
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check table totality, associativity "
                                     "window, exponent monotonicity");
  add_spec_arg(validate_cmd);
  add_window(validate_cmd);
  validate_cmd->add_option("--report", cfg.report_path,
                           "write the machine-readable report here");

  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "persistence edges, multipliers, classes, weights");
  add_spec_arg(analyze_cmd);
  add_window(analyze_cmd);
  add_analysis(analyze_cmd);
  analyze_cmd->add_option("--report", cfg.report_path,
                          "write the machine-readable report here");

  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "full pipeline; emits the linear-growth certificate");
  add_spec_arg(certify_cmd);
  add_window(certify_cmd);
  add_analysis(certify_cmd);
  certify_cmd->add_option("--m-max", cfg.m_max,
                          "largest ball radius (default 12)");
  certify_cmd->add_option("--threads", cfg.threads,
                          "worker threads for ball enumeration (default 1)");
  certify_cmd->add_option("--out", cfg.out_path,
                          "write the certificate document here");
  certify_cmd->add_option("--csv", cfg.csv_path,
                          "write the ball table as CSV here");

  CLI::App* growth_cmd = app.add_subcommand(
      "growth", "ball sizes by brute-force enumeration only");
  add_spec_arg(growth_cmd);
  add_window(growth_cmd);
  growth_cmd->add_option("--max-len", cfg.max_len,
                         "largest word length (default 12)");
  growth_cmd->add_option("--threads", cfg.threads,
                         "worker threads for ball enumeration (default 1)");
  growth_cmd->add_option("--csv", cfg.csv_path, "write m,count rows here");

  CLI::App* search_cmd = app.add_subcommand(
      "search", "enumerate small tables and keep the valid ones");
  search_cmd->add_option("--alphabet", cfg.alphabet,
                         "generator count, 2 or 3 (default 2)");
  search_cmd->add_option("--max-exp", cfg.max_exp,
                         "largest result exponent, 1 to 3 (default 2)");
  search_cmd->add_option("--window", cfg.search_window,
                         "associativity window for the filter (default 6)");
  search_cmd->add_option("--depth", cfg.depth,
                         "reduction step budget (default 10000)");
  search_cmd->add_option("--out-dir", cfg.out_dir,
                         "write each survivor as a spec document here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return run_validate(cfg);
    if (analyze_cmd->parsed()) return run_analyze(cfg);
    if (certify_cmd->parsed()) return run_certify(cfg);
    if (growth_cmd->parsed()) return run_growth(cfg);
    if (search_cmd->parsed()) return run_search(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::Horizon)
      std::cerr << "hint: raise --horizon or the --t-max/--q-max return "
                   "search bounds\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorCode::Document);
  }
  return 0;
}
