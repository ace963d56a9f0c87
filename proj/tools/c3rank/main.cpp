// c3rank: ingest, rank, analyze and synthesize bibliographic corpora.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "c3/analysis.hpp"
#include "c3/corpus.hpp"
#include "c3/csv.hpp"
#include "c3/error.hpp"
#include "c3/synth.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotConverged = 3;

// Thrown for semantically bad flag values that CLI11 cannot catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorpusArgs {
  std::string path;
  std::string format = "jsonl";
};

struct SolverArgs {
  double theta = 0.5;
  double alpha = 0.0;
  double epsilon = 1e-9;
  std::size_t max_iters = 1000;
  bool unweighted = false;
  bool self_citations = false;
  std::string aai_cycle = "midpoint";
  std::size_t threads = 1;

  c3::SolverConfig config() const {
    c3::SolverConfig cfg;
    cfg.theta = theta;
    cfg.alpha = alpha;
    cfg.epsilon = epsilon;
    cfg.max_iters = max_iters;
    cfg.aai_cycle_handling = c3::parse_aai_cycle_handling(aai_cycle);
    cfg.threads = threads;
    cfg.validate();
    return cfg;
  }
  c3::GraphBuildOptions options() const { return {!unweighted, self_citations}; }
};

std::string default_out_dir() {
  const char* env = std::getenv("C3_OUTPUT_DIR");
  return env && *env ? env : ".";
}

void add_corpus_args(CLI::App* cmd, CorpusArgs& a) {
  cmd->add_option("corpus", a.path, "Corpus file")->required();
  cmd->add_option("--format", a.format, "Input format")
      ->check(CLI::IsMember({"jsonl", "aminer"}))
      ->capture_default_str();
}

void add_solver_args(CLI::App* cmd, SolverArgs& s) {
  cmd->add_option("--theta", s.theta, "Damping factor in [0, 1) [published default]")
      ->capture_default_str();
  cmd->add_option("--alpha", s.alpha, "Coauthor credit exponent >= 0 [published default]")
      ->capture_default_str();
  cmd->add_option("--epsilon", s.epsilon, "Max-norm stopping tolerance [tool default]")
      ->capture_default_str();
  cmd->add_option("--max-iters", s.max_iters, "Iteration cap [tool default]")
      ->capture_default_str();
  cmd->add_flag("--unweighted", s.unweighted,
                "Count each author/coauthor relation once instead of by multiplicity "
                "[tool default: weighted]");
  cmd->add_flag("--self-citations", s.self_citations,
                "Keep author self-citations [tool default: dropped]");
  cmd->add_option("--aai-cycle", s.aai_cycle,
                  "Period-two coauthorship oscillation: midpoint averages the last two "
                  "iterates, none iterates literally [tool default]")
      ->check(CLI::IsMember({"midpoint", "none"}))
      ->capture_default_str();
  cmd->add_option("--threads", s.threads, "Worker threads; results do not depend on it")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}))
      ->capture_default_str();
}

c3::Corpus load_corpus(const CorpusArgs& a, c3::ParseReport* report) {
  std::ifstream in(a.path, std::ios::binary);
  if (!in) throw c3::InputError("cannot open '" + a.path + "'");
  return a.format == "aminer" ? c3::parse_aminer(in, report) : c3::parse_jsonl(in, report);
}

c3::Corpus load_and_report(const CorpusArgs& a) {
  c3::ParseReport report;
  auto corpus = load_corpus(a, &report);
  if (report.records_rejected || report.dangling_refs_dropped || report.self_refs_dropped) {
    std::cerr << report << '\n';
  }
  return corpus;
}

std::ofstream open_output(const std::string& dir, const std::string& name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const auto path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw c3::InputError("cannot write '" + path.string() + "'");
  return out;
}

void finish(std::ofstream& out, const std::string& dir, const std::string& name) {
  out.flush();
  if (!out) throw c3::InputError("write failed for '" + (fs::path(dir) / name).string() + "'");
  std::cerr << "wrote " << (fs::path(dir) / name).string() << '\n';
}

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ';')) {
      auto name = c3::normalize_name(part);
      if (!name.empty()) out.push_back(name);
    }
  }
  return out;
}

int latest_year(const c3::Corpus& corpus) {
  int y = 0;
  for (const auto& p : corpus.papers()) y = std::max(y, p.year);
  return y;
}

// ---------------------------------------------------------------------------

struct IngestArgs {
  std::string input;
  std::string format = "aminer";
  std::string out;
};

int run_ingest(const IngestArgs& a) {
  c3::ParseReport report;
  auto corpus = load_corpus({a.input, a.format}, &report);
  std::cerr << report << '\n';
  if (a.out.empty() || a.out == "-") {
    c3::write_jsonl(corpus, std::cout);
    return kExitOk;
  }
  std::ofstream out(a.out, std::ios::binary);
  if (!out) throw c3::InputError("cannot write '" + a.out + "'");
  c3::write_jsonl(corpus, out);
  out.flush();
  if (!out) throw c3::InputError("write failed for '" + a.out + "'");
  return kExitOk;
}

struct RankArgs {
  CorpusArgs corpus;
  SolverArgs solver;
  int year = 0;
  std::string out_dir = default_out_dir();
};

int run_rank(const RankArgs& a) {
  const auto cfg = a.solver.config();
  const auto corpus = load_and_report(a.corpus);
  const int year = a.year > 0 ? a.year : latest_year(corpus);
  auto ranked = c3::rank_snapshot(corpus, year > 0 ? year : 1, a.solver.options(), cfg);
  if (ranked.graph.num_papers() == 0) {
    std::cerr << "warning: snapshot " << year << " contains no papers\n";
  }

  c3::RunInfo info{c3::corpus_hash(corpus), {year}, a.solver.options(), cfg,
                   ranked.solution.report, {}};
  {
    auto out = open_output(a.out_dir, "authors.csv");
    c3::write_author_scores(out, info, ranked.graph, ranked.solution.scores, &ranked.baselines);
    finish(out, a.out_dir, "authors.csv");
  }
  {
    auto out = open_output(a.out_dir, "papers.csv");
    c3::write_paper_scores(out, info, ranked.graph, ranked.solution.scores, &ranked.baselines);
    finish(out, a.out_dir, "papers.csv");
  }
  const auto& rep = ranked.solution.report;
  std::cerr << "iterations=" << rep.iterations_run
            << " final_delta=" << c3::format_score(rep.final_delta)
            << " converged=" << (rep.converged ? "true" : "false")
            << " aai_cycle_detected=" << (rep.aai_cycle_detected ? "true" : "false") << '\n';
  return rep.converged ? kExitOk : kExitNotConverged;
}

struct AnalyzeArgs {
  std::string sub;
  CorpusArgs corpus;
  SolverArgs solver;
  int year = 0;
  int base = 0;
  int target = 0;
  std::vector<int> years;
  std::vector<std::uint32_t> bins{0, 1, 2, 3, 5, 10};
  std::vector<std::uint32_t> h_bin{1};
  std::string mode = "value";
  std::vector<std::string> authors;
  std::string out_dir = default_out_dir();
};

int require_year(int year, const char* flag) {
  if (year <= 0) throw UsageError(std::string("this analysis needs ") + flag);
  return year;
}

int run_analyze(const AnalyzeArgs& a) {
  const auto cfg = a.solver.config();
  const auto opts = a.solver.options();
  const auto corpus = load_and_report(a.corpus);
  const auto hash = c3::corpus_hash(corpus);
  std::string name;
  std::ostringstream body;
  bool converged = true;

  if (a.sub == "hist" || a.sub == "ties" || a.sub == "scatter" || a.sub == "table") {
    const int year = require_year(a.year, "--year");
    name = a.sub + "_" + std::to_string(year) + ".csv";
    const bool needs_scores = a.sub != "hist";
    c3::RunInfo info{hash, {year}, opts, cfg, std::nullopt, {}};
    if (!needs_scores) {
      auto graph = c3::build_graph(c3::snapshot(corpus, year), opts);
      c3::write_h_distribution(body, info, c3::h_distribution(c3::compute_baselines(graph)));
    } else {
      auto r = c3::rank_snapshot(corpus, year, opts, cfg);
      info.convergence = r.solution.report;
      converged = r.solution.report.converged;
      if (a.sub == "ties") {
        c3::write_ties(body, info, c3::tie_stats(r.solution.scores, r.baselines));
      } else if (a.sub == "scatter") {
        c3::write_scatter(body, info, c3::export_scatter(r.graph, r.solution.scores, r.baselines));
      } else {
        auto rows = c3::component_table(r.graph, r.solution.scores, r.baselines,
                                        split_names(a.authors));
        c3::write_component_table(body, info, rows);
      }
    }
  } else if (a.sub == "drift" || a.sub == "consistency") {
    const int base = require_year(a.base, "--base");
    const int target = require_year(a.target, "--target");
    if (base > target) throw UsageError("--base must not be later than --target");
    name = a.sub + "_" + std::to_string(base) + "_" + std::to_string(target) + ".csv";
    c3::RunInfo info{hash, {base, target}, opts, cfg, std::nullopt, {}};
    if (a.sub == "drift") {
      auto g0 = c3::build_graph(c3::snapshot(corpus, base), opts);
      auto g1 = c3::build_graph(c3::snapshot(corpus, target), opts);
      auto d = c3::cohort_drift(g0, c3::compute_baselines(g0), g1, c3::compute_baselines(g1),
                                a.bins);
      c3::write_drift(body, info, d);
    } else {
      const auto mode = a.mode == "rank" ? c3::CorrelationMode::Rank : c3::CorrelationMode::Value;
      auto r0 = c3::rank_snapshot(corpus, base, opts, cfg);
      converged = r0.solution.report.converged;
      c3::ConsistencyResult result;
      if (target == base) {
        result = c3::temporal_consistency(r0, r0, a.h_bin, mode);
      } else {
        auto r1 = c3::rank_snapshot(corpus, target, opts, cfg);
        converged = converged && r1.solution.report.converged;
        result = c3::temporal_consistency(r0, r1, a.h_bin, mode);
      }
      info.extra.emplace_back("all_converged", converged ? "true" : "false");
      c3::write_consistency(body, info, result);
    }
  } else {  // trajectory
    if (a.years.empty()) throw UsageError("trajectory needs --years");
    name = "trajectory_" + std::to_string(a.years.front());
    if (a.years.size() > 1) name += "_" + std::to_string(a.years.back());
    name += ".csv";
    c3::RunInfo info{hash, a.years, opts, cfg, std::nullopt, {}};
    auto series = c3::trajectories(corpus, split_names(a.authors), a.years, opts, cfg);
    c3::write_trajectories(body, info, series);
  }

  auto out = open_output(a.out_dir, name);
  out << body.str();
  finish(out, a.out_dir, name);
  if (!converged) {
    std::cerr << "warning: solver did not converge\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

struct SynthArgs {
  c3::SynthParams params;
  std::string out;
};

int run_synth(const SynthArgs& a) {
  auto corpus = c3::generate(a.params);
  if (a.out.empty() || a.out == "-") {
    c3::write_jsonl(corpus, std::cout);
    return kExitOk;
  }
  std::ofstream out(a.out, std::ios::binary);
  if (!out) throw c3::InputError("cannot write '" + a.out + "'");
  c3::write_jsonl(corpus, out);
  out.flush();
  if (!out) throw c3::InputError("write failed for '" + a.out + "'");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C3-index ranking of authors and papers from citation corpora"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 usage, 2 input error, 3 solver did not converge.\n"
      "C3_OUTPUT_DIR sets the default output directory.\n"
      "[published default] marks defaults fixed by the method's authors; "
      "[tool default] marks choices made by this implementation.");

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Validate a corpus and write canonical JSON lines");
  ingest_cmd->add_option("input", ingest.input, "Input file")->required();
  ingest_cmd->add_option("--format", ingest.format, "Input format")
      ->check(CLI::IsMember({"aminer", "jsonl"}))
      ->capture_default_str();
  ingest_cmd->add_option("--out", ingest.out, "Output file (default: standard output)");

  RankArgs rank;
  auto* rank_cmd = app.add_subcommand("rank", "Score a snapshot; writes authors.csv and papers.csv");
  add_corpus_args(rank_cmd, rank.corpus);
  add_solver_args(rank_cmd, rank.solver);
  rank_cmd->add_option("--year", rank.year, "Snapshot bound year (default: latest year)");
  rank_cmd->add_option("--out-dir", rank.out_dir, "Output directory")->capture_default_str();

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Distribution, drift, tie, correlation exports");
  analyze_cmd->add_option("analysis", analyze.sub, "Analysis to run")
      ->required()
      ->check(CLI::IsMember(
          {"hist", "drift", "ties", "scatter", "consistency", "trajectory", "table"}));
  add_corpus_args(analyze_cmd, analyze.corpus);
  add_solver_args(analyze_cmd, analyze.solver);
  analyze_cmd->add_option("--year", analyze.year, "Snapshot year (hist, ties, scatter, table)");
  analyze_cmd->add_option("--base", analyze.base, "Base year (drift, consistency)");
  analyze_cmd->add_option("--target", analyze.target, "Target year (drift, consistency)");
  analyze_cmd->add_option("--years", analyze.years, "Ascending years (trajectory)")->delimiter(',');
  analyze_cmd->add_option("--bins", analyze.bins, "h-bin lower bounds starting at 0 (drift)")
      ->delimiter(',')
      ->capture_default_str();
  analyze_cmd->add_option("--h-bin", analyze.h_bin, "h values selecting authors (consistency)")
      ->delimiter(',')
      ->capture_default_str();
  analyze_cmd->add_option("--mode", analyze.mode,
                          "Correlate raw scores (value) or rank positions (rank) [tool default]")
      ->check(CLI::IsMember({"value", "rank"}))
      ->capture_default_str();
  analyze_cmd->add_option("--authors", analyze.authors,
                          "Author names, ';'-separated or repeated (table, trajectory)");
  analyze_cmd->add_option("--out-dir", analyze.out_dir, "Output directory")->capture_default_str();

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus as JSON lines");
  synth_cmd->add_option("--seed", synth.params.seed, "Random seed")->required();
  synth_cmd->add_option("--papers", synth.params.n_papers, "Number of papers")->capture_default_str();
  synth_cmd->add_option("--authors", synth.params.n_authors, "Author pool size")
      ->capture_default_str();
  synth_cmd->add_option("--year-start", synth.params.year_start, "First year")->capture_default_str();
  synth_cmd->add_option("--year-end", synth.params.year_end, "Last year")->capture_default_str();
  synth_cmd->add_option("--refs-mean", synth.params.refs_per_paper_mean, "Mean references per paper")
      ->capture_default_str();
  synth_cmd->add_option("--team-mean", synth.params.authors_per_paper_mean,
                        "Mean authors per paper (>= 1)")
      ->capture_default_str();
  synth_cmd->add_option("--bias", synth.params.attachment_bias,
                        "Preferential attachment strength (0 = uniform)")
      ->capture_default_str();
  synth_cmd->add_option("--out", synth.out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest_cmd) return run_ingest(ingest);
    if (*rank_cmd) return run_rank(rank);
    if (*analyze_cmd) return run_analyze(analyze);
    return run_synth(synth);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const c3::LookupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const c3::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const c3::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
