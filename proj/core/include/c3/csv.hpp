#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c3/analysis.hpp"
#include "c3/graph.hpp"
#include "c3/metrics.hpp"
#include "c3/solver.hpp"

namespace c3 {

/// Everything needed to regenerate a CSV deterministically. Rendered as the
/// first line of every exported file: `# key=value key=value ...`.
struct RunInfo {
  std::string corpus_hash;
  std::vector<int> years;
  GraphBuildOptions options;
  SolverConfig cfg;
  std::optional<ConvergenceReport> convergence;
  std::vector<std::pair<std::string, std::string>> extra;
};

std::string header_line(const RunInfo& info);

/// 12 significant digits, printf %.12g.
std::string format_score(double value);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view text);

/// author,aci,aai,pci,c3[,h_index,total_citations]; descending c3, then
/// ascending name.
void write_author_scores(std::ostream& out, const RunInfo& info, const MultiLayerGraph& graph,
                         const ScoreSet& scores, const AuthorBaselines* baselines = nullptr);

/// paper,pqi[,citations]; descending pqi, then ascending id.
void write_paper_scores(std::ostream& out, const RunInfo& info, const MultiLayerGraph& graph,
                        const ScoreSet& scores, const AuthorBaselines* baselines = nullptr);

/// author,h_index,total_citations in author order.
void write_baselines(std::ostream& out, const RunInfo& info, const MultiLayerGraph& graph,
                     const AuthorBaselines& baselines);

void write_h_distribution(std::ostream& out, const RunInfo& info, const HDistribution& dist);
void write_drift(std::ostream& out, const RunInfo& info, const DriftResult& drift);
void write_ties(std::ostream& out, const RunInfo& info, std::span<const TieBin> bins);
void write_scatter(std::ostream& out, RunInfo info, const Scatter& scatter);
void write_consistency(std::ostream& out, const RunInfo& info, const ConsistencyResult& result);
void write_trajectories(std::ostream& out, const RunInfo& info,
                        std::span<const Trajectory> series);
void write_component_table(std::ostream& out, const RunInfo& info,
                           std::span<const ComponentRow> rows);

}  // namespace c3
