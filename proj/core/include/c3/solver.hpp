#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "c3/graph.hpp"

namespace c3 {

enum class AaiCycleHandling {
  /// On a detected 2-cycle, replace AAI by the mean of the last two iterates.
  Midpoint,
  /// Iterate the undamped walk literally; a 2-cycle then runs to the cap.
  None,
};

std::string to_string(AaiCycleHandling mode);
AaiCycleHandling parse_aai_cycle_handling(const std::string& text);

struct SolverConfig {
  double theta = 0.5;    // damping factor
  double alpha = 0.0;    // credit exponent; 0 gives every coauthor an equal share
  double epsilon = 1e-9;
  std::size_t max_iters = 1000;
  AaiCycleHandling aai_cycle_handling = AaiCycleHandling::Midpoint;
  /// Worker threads per step. Results are bitwise independent of this.
  unsigned threads = 1;

  /// Throws std::invalid_argument unless 0 <= theta < 1, alpha >= 0,
  /// epsilon > 0 and max_iters >= 1.
  void validate() const;
};

/// Per-paper PQI and per-author ACI, AAI, PCI, C3 at one iteration.
struct ScoreSet {
  std::vector<double> pqi;
  std::vector<double> aci;
  std::vector<double> aai;
  std::vector<double> pci;
  std::vector<double> c3;
  std::size_t iteration = 0;

  bool operator==(const ScoreSet&) const = default;
};

struct ConvergenceReport {
  std::size_t iterations_run = 0;
  /// Max-norm change across all five vectors between the last two iterates.
  double final_delta = 0.0;
  bool converged = false;
  bool aai_cycle_detected = false;
};

struct SolveResult {
  ScoreSet scores;
  ConvergenceReport report;
};

/// Called after every completed iteration with the new scores.
using IterationObserver = std::function<void(const ScoreSet&)>;

ScoreSet init_scores(const MultiLayerGraph& graph);

// Single recurrences. Each reads only `prev` and the immutable graph.
std::vector<double> pqi_step(const MultiLayerGraph& graph, const ScoreSet& prev,
                             const SolverConfig& cfg);
std::vector<double> aci_step(const MultiLayerGraph& graph, const ScoreSet& prev,
                             const SolverConfig& cfg);
std::vector<double> aai_step(const MultiLayerGraph& graph, const ScoreSet& prev,
                             const SolverConfig& cfg);
std::vector<double> pci_step(const MultiLayerGraph& graph, const ScoreSet& prev,
                             const SolverConfig& cfg);
/// (1 - theta) + theta * (aci + aai + pci), elementwise over same-iteration
/// components.
std::vector<double> c3_step(const std::vector<double>& aci, const std::vector<double>& aai,
                            const std::vector<double>& pci, const SolverConfig& cfg);

/// Iterates all recurrences in lock step until the max-norm change drops
/// below epsilon or max_iters is reached. Non-convergence is reported, not thrown.
SolveResult solve(const MultiLayerGraph& graph, const SolverConfig& cfg = {},
                  const IterationObserver& observer = {});

}  // namespace c3
