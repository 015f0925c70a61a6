#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibthermo/fib_words.hpp"
#include "fibthermo/rauzy.hpp"
#include "fibthermo/thermo.hpp"
#include "fibthermo/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fibthermo;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* zone_name(thermo::Zone z) {
  return z == thermo::Zone::Free ? "free" : "excursion";
}

// Oracle sizes are capped so a stray flag cannot ask for gigabyte windows.
constexpr std::size_t kMaxOracleLength = 2000;

words::FactorOracle make_oracle(std::size_t max_query_length) {
  if (max_query_length > kMaxOracleLength) {
    throw std::invalid_argument("parameters require factor queries of length " +
                                std::to_string(max_query_length) + "; the CLI caps queries at " +
                                std::to_string(kMaxOracleLength));
  }
  return words::FactorOracle(max_query_length);
}

std::vector<double> sweep_betas(const std::string& spec) {
  double b0 = 0, b1 = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &b0, &b1, &step) != 3 || step <= 0 || b1 < b0) {
    throw std::invalid_argument("--sweep expects b0:b1:step with step > 0 and b1 >= b0");
  }
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double b = b0 + i * step;
    if (b > b1 + 1e-12) break;
    out.push_back(b);
  }
  return out;
}

void cmd_word(int level, std::size_t length, bool have_level, bool have_length) {
  if (have_level == have_length) {
    throw std::invalid_argument("word: give exactly one of --level or --length");
  }
  if (have_level) {
    if (level < 0 || level > 40) {
      throw std::invalid_argument("word: --level must lie in [0, 40]");
    }
    std::cout << words::fib_word(level) << "\n";
  } else {
    if (length < 1 || length > 100000000) {
      throw std::invalid_argument("word: --length must lie in [1, 1e8]");
    }
    std::cout << words::fib_prefix(length) << "\n";
  }
}

void cmd_factors(int length, bool classify, bool as_json) {
  if (length < 1 || static_cast<std::size_t>(length) + 1 > kMaxOracleLength) {
    throw std::invalid_argument("factors: --length out of supported range");
  }
  const auto oracle = make_oracle(static_cast<std::size_t>(length) + 1);
  const auto factors = oracle.factors_of(static_cast<std::size_t>(length));
  if (as_json) {
    json out = json::array();
    for (const Word& w : factors) {
      if (classify) {
        const auto cls = rauzy::classify_word(w, oracle);
        out.push_back(json{{"word", w},
                           {"kind", rauzy::to_string(cls.kind)},
                           {"left_extensions", cls.left_extensions},
                           {"right_extensions", cls.right_extensions}});
      } else {
        out.push_back(w);
      }
    }
    std::cout << out.dump() << "\n";
    return;
  }
  for (const Word& w : factors) {
    if (classify) {
      const auto cls = rauzy::classify_word(w, oracle);
      std::cout << w << " " << rauzy::to_string(cls.kind) << " left={"
                << cls.left_extensions << "} right={" << cls.right_extensions << "}\n";
    } else {
      std::cout << w << "\n";
    }
  }
}

void cmd_rauzy(int order, bool dot) {
  if (order < 1 || static_cast<std::size_t>(order) + 1 > kMaxOracleLength) {
    throw std::invalid_argument("rauzy: --order out of supported range");
  }
  const auto oracle = make_oracle(static_cast<std::size_t>(order) + 1);
  const auto g = rauzy::build_rauzy(order, oracle);
  if (dot) {
    std::cout << rauzy::export_dot(g);
    return;
  }
  std::cout << "order: " << g.order << "\n"
            << "vertices: " << g.vertices.size() << "\n"
            << "edges: " << g.edges.size() << "\n"
            << "branch (right special): " << g.branch_vertex << "\n"
            << "merge (left special): " << g.merge_vertex << "\n";
  for (const auto& e : g.edges) {
    std::cout << e.from << " -" << e.appended << "-> " << e.to << "\n";
  }
}

std::size_t bispecial_query_length(int p, int n_loops) {
  // |W| + n |R1| plus one symbol of classification slack.
  return static_cast<std::size_t>(words::fib_number(p)) - 2 +
         static_cast<std::size_t>(std::max(n_loops, 1)) *
             static_cast<std::size_t>(words::fib_number(p - 1)) +
         2;
}

void cmd_bispecial(int p) {
  if (p < 2 || p > 15) {
    throw std::invalid_argument("bispecial: --p must lie in [2, 15]");
  }
  const auto oracle = make_oracle(static_cast<std::size_t>(words::fib_number(p)));
  const auto level = rauzy::bispecial_level(p, oracle);
  std::cout << "p: " << level.p << "\n"
            << "W: " << level.w << "\n"
            << "R1: " << level.r1 << "\n"
            << "R2: " << level.r2 << "\n";
}

void cmd_loops(int p, int n, bool as_json) {
  if (p < 2 || p > 12) {
    throw std::invalid_argument("loops: --p must lie in [2, 12]");
  }
  if (n < 1 || n > 60) {
    throw std::invalid_argument("loops: --n must lie in [1, 60]");
  }
  const auto oracle = make_oracle(bispecial_query_length(p, n));
  const auto level = rauzy::bispecial_level(p, oracle);
  const auto ll = rauzy::loop_language(level, n, oracle);
  if (as_json) {
    json out = json::array();
    for (const auto& seq : ll.sequences) out.push_back(rauzy::phi_encode(seq));
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& seq : ll.sequences) {
    std::cout << seq << " -> " << rauzy::phi_encode(seq) << "\n";
  }
}

void cmd_returns(int max_len, bool csv) {
  if (max_len < 1 || max_len > 24) {
    throw std::invalid_argument("returns: --max-len must lie in [1, 24]");
  }
  if (csv) std::cout << "length,word\n";
  thermo::enumerate_return_words(static_cast<std::size_t>(max_len), [&](const Word& w) {
    if (csv) {
      std::cout << w.size() << "," << w << "\n";
    } else {
      std::cout << w << "\n";
    }
  });
}

void cmd_annotate(const std::string& word, int N, double A, bool as_json) {
  const auto params = thermo::validate_params(N, A);
  if (word.size() > 1000) {
    throw std::invalid_argument("annotate: --word longer than 1000 symbols");
  }
  const auto oracle =
      make_oracle(std::max<std::size_t>(word.size() + 4, static_cast<std::size_t>(N) + 1));
  const auto ann = thermo::annotate_trajectory(word, params, oracle);
  const double birkhoff = thermo::birkhoff_sum(ann, params);
  if (as_json) {
    json acc = json::array();
    for (const auto& a : ann.accidents) acc.push_back(json{{"time", a.time}, {"depth", a.depth}});
    json zones = json::array();
    for (auto z : ann.zones) zones.push_back(zone_name(z));
    json out{{"word", ann.word},
             {"deltas", ann.deltas},
             {"zones", zones},
             {"accidents", acc},
             {"fe_transitions", ann.fe_transitions},
             {"ef_transitions", ann.ef_transitions},
             {"entry_bispecials", ann.entry_bispecials},
             {"exit_words", ann.exit_words},
             {"birkhoff_sum", birkhoff}};
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "word: " << ann.word << "\n";
  std::cout << "k symbol delta zone flags\n";
  for (std::size_t k = 0; k < ann.word.size(); ++k) {
    std::string flags;
    for (const auto& a : ann.accidents) {
      if (a.time == k) flags += " accident(depth=" + std::to_string(a.depth) + ")";
    }
    for (auto t : ann.fe_transitions) {
      if (t == k) flags += " FE";
    }
    for (auto t : ann.ef_transitions) {
      if (t == k) flags += " EF";
    }
    std::cout << k << " " << ann.word[k] << " " << ann.deltas[k] << " "
              << zone_name(ann.zones[k]) << flags << "\n";
  }
  for (const auto& w : ann.entry_bispecials) std::cout << "entry bispecial: " << w << "\n";
  for (const auto& w : ann.exit_words) std::cout << "exit word: " << w << "\n";
  std::cout << "birkhoff_sum: " << fmt17(birkhoff) << "\n";
}

void print_lambda_row(const thermo::PartitionEstimate& est, bool csv) {
  if (csv) {
    std::cout << fmt17(est.beta) << "," << est.params.excursion_threshold << ","
              << fmt17(est.params.free_penalty) << "," << est.max_len << ","
              << est.num_return_words << "," << fmt17(est.partial_sum) << "\n";
  } else {
    std::cout << "beta=" << fmt17(est.beta) << " N=" << est.params.excursion_threshold
              << " A=" << fmt17(est.params.free_penalty) << " max_len=" << est.max_len
              << " return_words=" << est.num_return_words
              << " partial_sum=" << fmt17(est.partial_sum) << "\n";
  }
}

void cmd_lambda(double beta, int N, double A, int max_len, const std::string& sweep, bool csv) {
  const auto params = thermo::validate_params(N, A);
  if (max_len < 0 || max_len > 24) {
    throw std::invalid_argument("lambda: --max-len must lie in [0, 24]");
  }
  std::vector<double> betas = sweep.empty() ? std::vector<double>{beta} : sweep_betas(sweep);
  for (double b : betas) {
    if (!(b > 0.0)) throw std::invalid_argument("lambda: beta must be positive");
  }
  if (csv) std::cout << "beta,N,A,max_len,num_return_words,partial_sum\n";
  for (double b : betas) {
    print_lambda_row(thermo::lambda_truncated(b, params, static_cast<std::size_t>(max_len)), csv);
  }
}

void print_bound_row(const thermo::BoundReport& r, bool csv) {
  if (csv) {
    std::cout << fmt17(r.beta) << "," << fmt17(r.zeta_beta) << ","
              << fmt17(r.zeta_beta_minus_1) << "," << fmt17(r.t0_lower) << ","
              << fmt17(r.tw_lower) << "," << fmt17(r.tv_scale) << "," << r.P << "," << r.Q
              << "," << fmt17(r.bound) << "," << (r.vacuous ? "true" : "false") << "\n";
  } else {
    std::cout << "beta=" << fmt17(r.beta) << " zeta(beta)=" << fmt17(r.zeta_beta)
              << " zeta(beta-1)=" << fmt17(r.zeta_beta_minus_1)
              << " t0=" << fmt17(r.t0_lower) << " tw=" << fmt17(r.tw_lower)
              << " tv_scale=" << fmt17(r.tv_scale) << " P=" << r.P << " Q=" << r.Q
              << " bound=" << fmt17(r.bound) << " vacuous=" << (r.vacuous ? "true" : "false")
              << "\n";
  }
}

void cmd_bound(double beta, int N, double A, const std::string& sweep, bool csv) {
  const auto params = thermo::validate_params(N, A);
  std::vector<double> betas = sweep.empty() ? std::vector<double>{beta} : sweep_betas(sweep);
  for (double b : betas) {
    if (!(b > 1.0)) throw std::invalid_argument("bound: beta must exceed 1");
  }
  if (csv) {
    std::cout << "beta,zeta_beta,zeta_beta_minus_1,t0,tw,tv_scale,P,Q,bound,vacuous\n";
  }
  for (double b : betas) print_bound_row(thermo::lower_bound(b, params), csv);
}

void cmd_exclusion(int N, double A) {
  const auto params = thermo::validate_params(N, A);
  const auto report = thermo::beta_c_exclusion(params, {1.1, 1.5, 2.0});
  for (const auto& e : report.entries) {
    std::cout << "beta=" << fmt17(e.beta) << " lower_bound=" << fmt17(e.bound)
              << " -> lambda_beta cannot equal 1\n";
  }
  std::cout << "lambda samples (max_len=14):";
  for (std::size_t i = 0; i < report.lambda_sample_betas.size(); ++i) {
    std::cout << " beta=" << fmt17(report.lambda_sample_betas[i]) << ":"
              << fmt17(report.lambda_sample_values[i]);
  }
  std::cout << "\n";
  std::cout << "lambda decreasing in beta: "
            << (report.lambda_monotone_decreasing ? "true" : "false") << "\n";
  std::cout << "verdict: beta_c " << (report.excluded ? "not in" : "UNRESOLVED for")
            << " (0, 2]\n";
}

int cmd_verify(const std::string& suite) {
  const auto report = verify::run_suite(suite);
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(
        json{{"case", f.case_id}, {"expected", f.expected}, {"got", f.got}});
  }
  json out{{"suite", report.suite},
           {"cases_run", report.cases_run},
           {"failures", failures},
           {"failures_total", report.failures_total},
           {"elapsed_seconds", report.elapsed_seconds}};
  std::cout << out.dump() << "\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci subshift combinatorics and freezing-transition bounds"};
  app.require_subcommand(1);

  int word_level = 0;
  std::size_t word_length = 0;
  auto* word = app.add_subcommand("word", "Print a finite Fibonacci word or a prefix of omega");
  auto* opt_level = word->add_option("--level", word_level, "index n of omega_n");
  auto* opt_length = word->add_option("--length", word_length, "prefix length of omega");

  int factors_length = 1;
  bool factors_classify = false, factors_json = false;
  auto* factors = app.add_subcommand("factors", "List the factors of omega of one length");
  factors->add_option("--length", factors_length, "factor length")->required();
  factors->add_flag("--classify", factors_classify, "annotate each factor with its extensions");
  factors->add_flag("--json", factors_json, "emit JSON");

  int rauzy_order = 1;
  bool rauzy_dot = false;
  auto* rauzy_cmd = app.add_subcommand("rauzy", "Build the Rauzy graph of one order");
  rauzy_cmd->add_option("--order", rauzy_order, "graph order n")->required();
  rauzy_cmd->add_flag("--dot", rauzy_dot, "emit DOT");

  int bis_p = 2;
  auto* bispecial = app.add_subcommand("bispecial", "Bispecial word and factor loops at level p");
  bispecial->add_option("--p", bis_p, "level p >= 2")->required();

  int loops_p = 2, loops_n = 1;
  bool loops_json = false;
  auto* loops = app.add_subcommand("loops", "Admissible loop sequences at a bispecial word");
  loops->add_option("--p", loops_p, "level p >= 2")->required();
  loops->add_option("--n", loops_n, "sequence length")->required();
  loops->add_flag("--json", loops_json, "emit the phi-coded sequences as JSON");

  int returns_max = 1;
  bool returns_csv = false;
  auto* returns = app.add_subcommand("returns", "Enumerate return words of the cylinder [000]");
  returns->add_option("--max-len", returns_max, "largest word length")->required();
  returns->add_flag("--csv", returns_csv, "emit CSV");

  std::string annotate_word;
  int annotate_N = 10;
  double annotate_A = 1.0;
  bool annotate_json = false;
  auto* annotate = app.add_subcommand("annotate", "Delta profile of a return trajectory");
  annotate->add_option("--word", annotate_word, "return word over {0,1}")->required();
  annotate->add_option("--N", annotate_N, "excursion threshold")->required();
  annotate->add_option("--A", annotate_A, "free-zone penalty")->required();
  annotate->add_flag("--json", annotate_json, "emit JSON");

  double lambda_beta = 1.0, lambda_A = 1.0;
  int lambda_N = 10, lambda_max = 0;
  std::string lambda_sweep;
  bool lambda_csv = false;
  auto* lambda = app.add_subcommand("lambda", "Truncated return-word partition sum");
  auto* lambda_beta_opt = lambda->add_option("--beta", lambda_beta, "inverse temperature");
  lambda->add_option("--N", lambda_N, "excursion threshold")->required();
  lambda->add_option("--A", lambda_A, "free-zone penalty")->required();
  lambda->add_option("--max-len", lambda_max, "truncation length")->required();
  auto* lambda_sweep_opt =
      lambda->add_option("--sweep", lambda_sweep, "beta sweep b0:b1:step");
  lambda->add_flag("--csv", lambda_csv, "emit CSV");
  lambda_sweep_opt->excludes(lambda_beta_opt);

  double bound_beta = 2.5, bound_A = 1.0;
  int bound_N = 10;
  std::string bound_sweep;
  bool bound_csv = false;
  auto* bound = app.add_subcommand("bound", "Closed-form lower bound for lambda_beta");
  auto* bound_beta_opt = bound->add_option("--beta", bound_beta, "inverse temperature > 1");
  bound->add_option("--N", bound_N, "excursion threshold")->required();
  bound->add_option("--A", bound_A, "free-zone penalty")->required();
  auto* bound_sweep_opt = bound->add_option("--sweep", bound_sweep, "beta sweep b0:b1:step");
  bound->add_flag("--csv", bound_csv, "emit CSV");
  bound_sweep_opt->excludes(bound_beta_opt);

  int excl_N = 10;
  double excl_A = 1.0;
  auto* exclusion = app.add_subcommand("exclusion", "Exclusion report for beta_c in (0, 2]");
  exclusion->add_option("--N", excl_N, "excursion threshold")->required();
  exclusion->add_option("--A", excl_A, "free-zone penalty")->required();

  std::string verify_suite;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant battery");
  verify_cmd->add_option("--suite", verify_suite, "fibwords|rauzy|bicephalic|transitions|bounds|all")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (word->parsed()) {
      cmd_word(word_level, word_length, opt_level->count() > 0, opt_length->count() > 0);
    } else if (factors->parsed()) {
      cmd_factors(factors_length, factors_classify, factors_json);
    } else if (rauzy_cmd->parsed()) {
      cmd_rauzy(rauzy_order, rauzy_dot);
    } else if (bispecial->parsed()) {
      cmd_bispecial(bis_p);
    } else if (loops->parsed()) {
      cmd_loops(loops_p, loops_n, loops_json);
    } else if (returns->parsed()) {
      cmd_returns(returns_max, returns_csv);
    } else if (annotate->parsed()) {
      cmd_annotate(annotate_word, annotate_N, annotate_A, annotate_json);
    } else if (lambda->parsed()) {
      if (lambda_beta_opt->count() == 0 && lambda_sweep_opt->count() == 0) {
        throw std::invalid_argument("lambda: give --beta or --sweep");
      }
      cmd_lambda(lambda_beta, lambda_N, lambda_A, lambda_max, lambda_sweep, lambda_csv);
    } else if (bound->parsed()) {
      if (bound_beta_opt->count() == 0 && bound_sweep_opt->count() == 0) {
        throw std::invalid_argument("bound: give --beta or --sweep");
      }
      cmd_bound(bound_beta, bound_N, bound_A, bound_sweep, bound_csv);
    } else if (exclusion->parsed()) {
      cmd_exclusion(excl_N, excl_A);
    } else if (verify_cmd->parsed()) {
      return cmd_verify(verify_suite);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
