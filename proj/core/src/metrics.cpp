#include "c3/metrics.hpp"

#include <algorithm>
#include <functional>

namespace c3 {

std::vector<std::uint32_t> paper_citation_counts(const MultiLayerGraph& graph) {
  const Csr& in = graph.paper_cited_by_csr();
  std::vector<std::uint32_t> counts(graph.num_papers());
  for (std::size_t p = 0; p < counts.size(); ++p) counts[p] = in.offsets[p + 1] - in.offsets[p];
  return counts;
}

std::uint32_t h_index(std::span<const std::uint32_t> citations) {
  std::vector<std::uint32_t> sorted(citations.begin(), citations.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::uint32_t h = 0;
  while (h < sorted.size() && sorted[h] >= h + 1) ++h;
  return h;
}

std::vector<std::uint32_t> author_h_index(const MultiLayerGraph& graph,
                                          std::span<const std::uint32_t> paper_citations) {
  std::vector<std::uint32_t> result(graph.num_authors());
  std::vector<std::uint32_t> scratch;
  for (std::uint32_t a = 0; a < result.size(); ++a) {
    scratch.clear();
    for (auto p : graph.papers_of(AuthorIdx{a})) scratch.push_back(paper_citations[p]);
    result[a] = h_index(scratch);
  }
  return result;
}

AuthorBaselines compute_baselines(const MultiLayerGraph& graph) {
  AuthorBaselines b;
  b.paper_citations = paper_citation_counts(graph);
  b.h_index = author_h_index(graph, b.paper_citations);
  b.total_citations.assign(graph.num_authors(), 0);
  for (std::uint32_t a = 0; a < graph.num_authors(); ++a) {
    for (auto p : graph.papers_of(AuthorIdx{a})) b.total_citations[a] += b.paper_citations[p];
  }
  return b;
}

}  // namespace c3
