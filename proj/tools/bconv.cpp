// Command-line surface: evaluate a convergence on a sequence, generate and
// export sequential topologies, run the verification suites, dump corpora.
//
// Exit codes: 0 success, 1 check failure, 2 usage or configuration error,
// 3 resource-cap error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bconv/corpus.hpp"
#include "bconv/serialize.hpp"
#include "bconv/suites.hpp"
#include "bconv/topology.hpp"

namespace {

using bconv::json;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw bconv::usage_error("cannot open output file: " + out_path);
  out << text;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BCONV_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw bconv::usage_error("BCONV_SEED must be an unsigned integer");
    }
  }
  return bconv::SuiteConfig{}.seed;
}

int run(int argc, char** argv) {
  CLI::App app{"convergence structures on finite atomic Boolean algebras"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand(
      "eval", "evaluate a convergence on one sequence");
  int eval_atoms = 2;
  std::string eval_seq, eval_conv = "s", eval_out;
  eval->add_option("--atoms", eval_atoms, "atom count (1..4)")
      ->check(CLI::Range(1, bconv::Algebra::topology_atoms));
  eval->add_option("--seq", eval_seq, "sequence literal, e.g. [1,2]|[3]")
      ->required();
  eval->add_option("--conv", eval_conv,
                   "convergence: s|ls|li|l0..l4|star:<c>|bar:<c>|"
                   "meet:<c>,<c>|lim:<topology-file>");
  eval->add_option("--out", eval_out, "write JSON here instead of stdout");

  // topology
  auto* topo = app.add_subcommand(
      "topology", "generate the sequential topology of a convergence");
  int topo_atoms = 2;
  std::string topo_conv = "ls", topo_format = "json", topo_out;
  topo->add_option("--atoms", topo_atoms, "atom count (1..4)")
      ->check(CLI::Range(1, bconv::Algebra::topology_atoms));
  topo->add_option("--conv", topo_conv, "convergence name");
  topo->add_option("--format", topo_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  topo->add_option("--out", topo_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  bconv::SuiteConfig config;
  config.seed = default_seed();
  std::string verify_out;
  auto* atoms_opt =
      verify->add_option("--atoms", config.max_atoms, "largest atom count")
          ->check(CLI::Range(1, bconv::Algebra::topology_atoms));
  auto* suites_opt = verify->add_option(
      "--suite", config.suites,
      "suite to run (repeatable; default: the whole battery)");
  verify->add_option("--seed", config.seed, "seed for sampled corpora");
  verify->add_option("--samples", config.samples, "sampled-corpus size");
  int prefix_bound = -1, cycle_bound = -1;
  verify->add_option("--prefix-bound", prefix_bound,
                     "override the corpus prefix bound");
  verify->add_option("--cycle-bound", cycle_bound,
                     "override the corpus cycle bound");
  verify->add_option("--out", verify_out, "write the JSON report here");

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "dump a sequence corpus");
  int corpus_atoms = 2;
  std::uint64_t corpus_seed = default_seed();
  std::size_t corpus_samples = 500;
  int corpus_prefix = -1, corpus_cycle = -1;
  std::string corpus_out;
  corpus_cmd->add_option("--atoms", corpus_atoms, "atom count (1..4)")
      ->check(CLI::Range(1, bconv::Algebra::topology_atoms));
  corpus_cmd->add_option("--seed", corpus_seed, "seed when sampling");
  corpus_cmd->add_option("--samples", corpus_samples, "sample count");
  corpus_cmd->add_option("--prefix-bound", corpus_prefix, "prefix bound");
  corpus_cmd->add_option("--cycle-bound", corpus_cycle, "cycle bound");
  corpus_cmd->add_option("--out", corpus_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval->parsed()) {
    bconv::Algebra algebra(eval_atoms);
    bconv::EpSequence x = bconv::parse_sequence_literal(eval_seq, algebra);
    bconv::Convergence c = bconv::parse_convergence(eval_conv, algebra);
    json out{{"algebra", bconv::to_json(algebra)},
             {"sequence", bconv::to_json(x)},
             {"convergence", eval_conv},
             {"limits", bconv::to_json(bconv::eval_convergence(c, x))},
             {"forcing", bconv::forcing_report_json(x)}};
    write_output(out.dump(2), eval_out);
    return 0;
  }

  if (topo->parsed()) {
    bconv::Algebra algebra(topo_atoms);
    bconv::Convergence c = bconv::parse_convergence(topo_conv, algebra);
    bconv::FiniteTopology t =
        bconv::generate_sequential_topology(c, algebra);
    if (topo_format == "dot")
      write_output(bconv::dot_export(t), topo_out);
    else
      write_output(bconv::to_json(t).dump(2), topo_out);
    return 0;
  }

  if (verify->parsed()) {
    config.atoms_explicit = atoms_opt->count() > 0;
    config.explicit_suites = suites_opt->count() > 0;
    if (prefix_bound >= 0) config.prefix_bound = prefix_bound;
    if (cycle_bound >= 1) config.cycle_bound = cycle_bound;
    bconv::SuiteReport report = bconv::run_suites(config);
    for (const auto& suite : report.suites)
      for (const auto& check : suite.checks)
        std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.name
                  << "\n";
    std::cout << (report.all_pass ? "OK" : "FAILED") << "\n";
    if (!verify_out.empty())
      write_output(report.full_json().dump(2), verify_out);
    return report.all_pass ? 0 : 1;
  }

  if (corpus_cmd->parsed()) {
    bconv::Algebra algebra(corpus_atoms);
    bconv::CorpusBounds bounds = bconv::default_bounds(algebra);
    if (corpus_prefix >= 0) bounds.prefix_bound = corpus_prefix;
    if (corpus_cycle >= 1) bounds.cycle_bound = corpus_cycle;
    auto corpus =
        bconv::generate_corpus(algebra, bounds, corpus_seed, corpus_samples);
    json arr = json::array();
    for (const auto& x : corpus) arr.push_back(bconv::to_json(x));
    json out{{"algebra", bconv::to_json(algebra)},
             {"bounds",
              {{"prefix", bounds.prefix_bound}, {"cycle", bounds.cycle_bound}}},
             {"sequences", arr}};
    write_output(out.dump(2), corpus_out);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bconv::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const bconv::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const bconv::structural_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const bconv::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
