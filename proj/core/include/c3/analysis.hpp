#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "c3/corpus.hpp"
#include "c3/graph.hpp"
#include "c3/metrics.hpp"
#include "c3/solver.hpp"

namespace c3 {

/// One snapshot taken all the way through graph construction, baselines and
/// the solver.
struct RankedSnapshot {
  int year = 0;
  MultiLayerGraph graph;
  AuthorBaselines baselines;
  SolveResult solution;
};

RankedSnapshot rank_snapshot(const Corpus& corpus, int year, const GraphBuildOptions& options,
                             const SolverConfig& cfg);

// ---------------------------------------------------------------------------
// h-index distributions

struct HDistribution {
  std::vector<std::size_t> counts;  // counts[h] = authors with that h-index
  std::size_t total = 0;

  /// Fraction of authors with h-index <= h.
  double cumulative_share(std::uint32_t h) const;
};

HDistribution h_distribution(const AuthorBaselines& baselines);

/// Bins given by ascending lower bounds starting at 0, e.g. {0, 1, 2, 5}
/// means [0], [1], [2, 4], [5, inf).
struct DriftResult {
  std::vector<std::string> labels;
  std::vector<double> base_percent;
  std::vector<double> target_percent;
  std::size_t cohort_size = 0;
  double mean_h_base = 0.0;
  double mean_h_target = 0.0;
};

/// Follows the cohort of authors present in the base snapshot into the target
/// snapshot. Throws DomainError for an empty cohort, std::invalid_argument for
/// bad bins and InputError if a cohort member is missing from the target.
DriftResult cohort_drift(const MultiLayerGraph& base_graph, const AuthorBaselines& base,
                         const MultiLayerGraph& target_graph, const AuthorBaselines& target,
                         std::span<const std::uint32_t> bin_lower_bounds);

std::string format_bin_label(std::span<const std::uint32_t> bin_lower_bounds, std::size_t bin);

// ---------------------------------------------------------------------------
// Tie-breaking

struct TieBin {
  std::uint32_t h = 0;
  std::size_t author_count = 0;
  std::size_t distinct_c3_values = 0;
  double tie_fraction = 0.0;  // 1 - distinct / count
  double c3_min = 0.0;
  double c3_max = 0.0;
  double c3_spread = 0.0;
};

/// One entry per h value that occurs. C3 values are compared at 12
/// significant digits, the precision of every exported score.
std::vector<TieBin> tie_stats(const ScoreSet& scores, const AuthorBaselines& baselines);

// ---------------------------------------------------------------------------
// Correlation and temporal consistency

enum class CorrelationMode { Value, Rank };

std::string to_string(CorrelationMode mode);

/// Pearson product-moment coefficient. Throws std::invalid_argument for
/// unequal or short (< 2) inputs and DomainError for zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// Average ranks (1-based, ties share the mean rank).
std::vector<double> fractional_ranks(std::span<const double> values);

/// Pearson on fractional ranks.
double spearman(std::span<const double> x, std::span<const double> y);

struct ConsistencyResult {
  int base_year = 0;
  int target_year = 0;
  std::vector<std::uint32_t> h_bin;
  CorrelationMode mode = CorrelationMode::Value;
  double pearson_r = 0.0;
  std::size_t n_common_authors = 0;
};

/// Correlates the C3 of base-year authors whose h-index lies in `h_bin` with
/// their C3 at the target year. Throws DomainError with fewer than two
/// common authors.
ConsistencyResult temporal_consistency(const Corpus& corpus, int base_year, int target_year,
                                       std::span<const std::uint32_t> h_bin,
                                       const GraphBuildOptions& options, const SolverConfig& cfg,
                                       CorrelationMode mode = CorrelationMode::Value);

/// Same, from already ranked snapshots.
ConsistencyResult temporal_consistency(const RankedSnapshot& base, const RankedSnapshot& target,
                                       std::span<const std::uint32_t> h_bin,
                                       CorrelationMode mode = CorrelationMode::Value);

// ---------------------------------------------------------------------------
// Scatter, trajectories, component table

struct ScatterPoint {
  std::string author;
  std::uint32_t h = 0;
  double c3 = 0.0;
  double h_norm = 0.0;
  double c3_norm = 0.0;
};

struct Scatter {
  std::vector<ScatterPoint> points;  // author order of the graph
  bool h_degenerate = false;         // all h equal; every h_norm is 0
  bool c3_degenerate = false;
};

/// Min-max normalizes both axes to [0, 1].
Scatter export_scatter(const MultiLayerGraph& graph, const ScoreSet& scores,
                       const AuthorBaselines& baselines);

struct TrajectoryPoint {
  int year = 0;
  std::uint32_t h = 0;
  double c3 = 0.0;
};

struct Trajectory {
  std::string author;
  std::vector<TrajectoryPoint> points;
};

/// Throws LookupError (with prefix near-matches) when a name is not an author
/// in the earliest snapshot, std::invalid_argument for unsorted years.
std::vector<Trajectory> trajectories(const Corpus& corpus, std::span<const std::string> authors,
                                     std::span<const int> years, const GraphBuildOptions& options,
                                     const SolverConfig& cfg);

struct ComponentRow {
  std::string author;
  std::uint32_t h = 0;
  double aci = 0.0;
  double pci = 0.0;
  double aai = 0.0;
  double c3 = 0.0;
};

/// Rows in the requested order. Throws LookupError for unknown names.
std::vector<ComponentRow> component_table(const MultiLayerGraph& graph, const ScoreSet& scores,
                                          const AuthorBaselines& baselines,
                                          std::span<const std::string> authors);

/// Resolves a name or throws LookupError listing up to ten authors whose names
/// start with `name` (or with its first word when nothing matches).
AuthorIdx resolve_author(const MultiLayerGraph& graph, const std::string& name);

}  // namespace c3
