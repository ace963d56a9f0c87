#include "c3/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "c3/parallel.hpp"

namespace c3 {

namespace {

// Scatter-free gather: next[i] = sum over in-neighbors k of (w * share[k]),
// accumulated in ascending k so the result is independent of thread count.
void gather(const Csr& in, const std::vector<double>& share, bool use_weights, double scale,
            double offset, std::vector<double>& next, unsigned threads) {
  parallel_for(in.rows(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double sum = 0.0;
      for (auto e = in.offsets[i]; e < in.offsets[i + 1]; ++e) {
        const double s = share[in.targets[e]];
        sum += use_weights ? static_cast<double>(in.weights[e]) * s : s;
      }
      next[i] = offset + scale * sum;
    }
  });
}

// share[k] = value[k] / (weighted out-strength or out-degree of k), 0 when k
// has no out-edges.
std::vector<double> out_shares(const Csr& out, const std::vector<double>& value, bool use_weights,
                               unsigned threads) {
  std::vector<double> share(out.rows(), 0.0);
  parallel_for(out.rows(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto first = out.offsets[k];
      const auto last = out.offsets[k + 1];
      if (first == last) continue;
      double denom = 0.0;
      if (use_weights) {
        std::uint64_t sum = 0;
        for (auto e = first; e < last; ++e) sum += out.weights[e];
        denom = static_cast<double>(sum);
      } else {
        denom = static_cast<double>(last - first);
      }
      share[k] = value[k] / denom;
    }
  });
  return share;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

std::string to_string(AaiCycleHandling mode) {
  return mode == AaiCycleHandling::Midpoint ? "midpoint" : "none";
}

AaiCycleHandling parse_aai_cycle_handling(const std::string& text) {
  if (text == "midpoint") return AaiCycleHandling::Midpoint;
  if (text == "none") return AaiCycleHandling::None;
  throw std::invalid_argument("unknown AAI cycle handling '" + text + "' (expected midpoint|none)");
}

void SolverConfig::validate() const {
  if (!(theta >= 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in [0, 1)");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be >= 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (max_iters == 0) throw std::invalid_argument("max_iters must be >= 1");
}

ScoreSet init_scores(const MultiLayerGraph& graph) {
  ScoreSet s;
  s.pqi.assign(graph.num_papers(), 1.0);
  s.aci.assign(graph.num_authors(), 1.0);
  s.aai.assign(graph.num_authors(), 1.0);
  s.pci.assign(graph.num_authors(), 1.0);
  s.c3.assign(graph.num_authors(), 1.0);
  return s;
}

std::vector<double> pqi_step(const MultiLayerGraph& graph, const ScoreSet& prev,
                             const SolverConfig& cfg) {
  auto share = out_shares(graph.paper_refs_csr(), prev.pqi, false, cfg.threads);
  std::vector<double> next(graph.num_papers());
  gather(graph.paper_cited_by_csr(), share, false, cfg.theta, 1.0 - cfg.theta, next, cfg.threads);
  return next;
}

std::vector<double> aci_step(const MultiLayerGraph& graph, const ScoreSet& prev,
                             const SolverConfig& cfg) {
  const bool w = graph.weighted();
  auto share = out_shares(graph.author_cites_csr(), prev.aci, w, cfg.threads);
  std::vector<double> next(graph.num_authors());
  gather(graph.author_cited_by_csr(), share, w, cfg.theta, 1.0 - cfg.theta, next, cfg.threads);
  return next;
}

std::vector<double> aai_step(const MultiLayerGraph& graph, const ScoreSet& prev,
                             const SolverConfig& cfg) {
  const bool w = graph.weighted();
  // Coauthorship is symmetric: the out-rows double as in-rows.
  auto share = out_shares(graph.coauthor_csr(), prev.aai, w, cfg.threads);
  std::vector<double> next(graph.num_authors());
  gather(graph.coauthor_csr(), share, w, 1.0, 0.0, next, cfg.threads);
  return next;
}

std::vector<double> pci_step(const MultiLayerGraph& graph, const ScoreSet& prev,
                             const SolverConfig& cfg) {
  const std::size_t n_authors = graph.num_authors();
  const std::size_t n_papers = graph.num_papers();

  // c3^alpha with 0^0 = 1, so alpha = 0 always degenerates to equal shares.
  std::vector<double> weight(n_authors, 1.0);
  if (cfg.alpha != 0.0) {
    for (std::size_t j = 0; j < n_authors; ++j) weight[j] = std::pow(prev.c3[j], cfg.alpha);
  }

  const Csr& paper_authors = graph.paper_authors_csr();
  std::vector<double> share(n_papers);
  std::atomic<bool> zero_denominator{false};
  parallel_for(n_papers, cfg.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      double denom = 0.0;
      for (auto e = paper_authors.offsets[p]; e < paper_authors.offsets[p + 1]; ++e) {
        denom += weight[paper_authors.targets[e]];
      }
      if (!(denom > 0.0)) zero_denominator = true;
      share[p] = prev.pqi[p] / denom;
    }
  });
  if (zero_denominator) throw std::domain_error("credit denominator is zero for some paper");

  const Csr& author_papers = graph.author_papers_csr();
  std::vector<double> next(n_authors);
  parallel_for(n_authors, cfg.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      double sum = 0.0;
      for (auto e = author_papers.offsets[j]; e < author_papers.offsets[j + 1]; ++e) {
        sum += share[author_papers.targets[e]];
      }
      next[j] = weight[j] * sum;
    }
  });
  return next;
}

std::vector<double> c3_step(const std::vector<double>& aci, const std::vector<double>& aai,
                            const std::vector<double>& pci, const SolverConfig& cfg) {
  std::vector<double> c3(aci.size());
  for (std::size_t j = 0; j < c3.size(); ++j) {
    c3[j] = (1.0 - cfg.theta) + cfg.theta * (aci[j] + aai[j] + pci[j]);
  }
  return c3;
}

SolveResult solve(const MultiLayerGraph& graph, const SolverConfig& cfg,
                  const IterationObserver& observer) {
  cfg.validate();
  SolveResult result;
  ScoreSet cur = init_scores(graph);
  std::vector<double> aai_before;  // AAI two iterations back
  ConvergenceReport& report = result.report;

  for (std::size_t t = 1; t <= cfg.max_iters; ++t) {
    ScoreSet next;
    next.pqi = pqi_step(graph, cur, cfg);
    next.aci = aci_step(graph, cur, cfg);
    next.aai = aai_step(graph, cur, cfg);
    next.pci = pci_step(graph, cur, cfg);

    if (!aai_before.empty()) {
      const double two_back = max_abs_diff(next.aai, aai_before);
      const double one_back = max_abs_diff(next.aai, cur.aai);
      if (two_back < cfg.epsilon && one_back >= cfg.epsilon) {
        report.aai_cycle_detected = true;
        if (cfg.aai_cycle_handling == AaiCycleHandling::Midpoint) {
          for (std::size_t j = 0; j < next.aai.size(); ++j) {
            next.aai[j] = 0.5 * (next.aai[j] + cur.aai[j]);
          }
        }
      }
    }

    next.c3 = c3_step(next.aci, next.aai, next.pci, cfg);
    next.iteration = t;

    const double delta = std::max({max_abs_diff(next.pqi, cur.pqi), max_abs_diff(next.aci, cur.aci),
                                   max_abs_diff(next.aai, cur.aai), max_abs_diff(next.pci, cur.pci),
                                   max_abs_diff(next.c3, cur.c3)});
    aai_before = std::move(cur.aai);
    cur = std::move(next);
    report.iterations_run = t;
    report.final_delta = delta;
    if (observer) observer(cur);
    if (delta < cfg.epsilon) {
      report.converged = true;
      break;
    }
  }
  result.scores = std::move(cur);
  return result;
}

}  // namespace c3
