#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "c3/graph.hpp"

namespace c3 {

/// Citation baselines scoped to one snapshot. Every coauthor gets full credit
/// for a paper's citations.
struct AuthorBaselines {
  std::vector<std::uint32_t> h_index;          // per author
  std::vector<std::uint64_t> total_citations;  // per author
  std::vector<std::uint32_t> paper_citations;  // per paper
};

/// In-degree of every paper in the citation layer.
std::vector<std::uint32_t> paper_citation_counts(const MultiLayerGraph& graph);

/// Largest h such that at least h of the values are >= h.
std::uint32_t h_index(std::span<const std::uint32_t> citations);

std::vector<std::uint32_t> author_h_index(const MultiLayerGraph& graph,
                                          std::span<const std::uint32_t> paper_citations);

AuthorBaselines compute_baselines(const MultiLayerGraph& graph);

}  // namespace c3
