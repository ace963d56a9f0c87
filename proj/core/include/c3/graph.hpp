#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "c3/corpus.hpp"

namespace c3 {

/// Dense index into a graph's author table.
struct AuthorIdx {
  std::uint32_t value = 0;
  auto operator<=>(const AuthorIdx&) const = default;
};

/// Dense index into a graph's paper table.
struct PaperIdx {
  std::uint32_t value = 0;
  auto operator<=>(const PaperIdx&) const = default;
};

struct GraphBuildOptions {
  /// Degrees are weighted strengths and neighbor shares are w / strength.
  /// When false every edge counts once.
  bool weighted = true;
  /// Keep author-citation self-loops (an author citing their own work).
  bool include_self_citations = false;
};

/// Compressed sparse rows. Each row's targets are strictly ascending.
struct Csr {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> targets;
  std::vector<std::uint32_t> weights;  // empty for unweighted layers

  std::size_t rows() const { return offsets.size() - 1; }
  std::size_t nnz() const { return targets.size(); }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {targets.data() + offsets[r], targets.data() + offsets[r + 1]};
  }
  std::span<const std::uint32_t> row_weights(std::size_t r) const {
    return {weights.data() + offsets[r], weights.data() + offsets[r + 1]};
  }
};

struct BuildReport {
  std::size_t authors = 0;
  std::size_t papers = 0;
  std::size_t paper_citation_edges = 0;
  std::size_t author_citation_edges = 0;     // distinct directed pairs
  std::uint64_t author_citation_weight = 0;  // total multiplicity
  std::size_t coauthor_edges = 0;            // distinct unordered pairs
  std::uint64_t coauthor_weight = 0;
  std::size_t authorship_links = 0;
  std::uint64_t self_citations_dropped = 0;
};

std::ostream& operator<<(std::ostream& os, const BuildReport& report);

enum class Layer { PaperCitation, AuthorCitation, Coauthorship, Authorship };

/// Immutable three-layer author/paper network plus bipartite authorship.
///
/// Paper indices follow the corpus order (sorted by id); author indices follow
/// the sorted author universe. All neighbor lists are ascending by index.
class MultiLayerGraph {
 public:
  MultiLayerGraph() = default;

  std::size_t num_authors() const { return author_names_.size(); }
  std::size_t num_papers() const { return paper_ids_.size(); }
  const GraphBuildOptions& options() const { return options_; }
  bool weighted() const { return options_.weighted; }

  const std::string& author_name(AuthorIdx a) const;
  const std::string& paper_id(PaperIdx p) const;
  int paper_year(PaperIdx p) const;
  std::optional<AuthorIdx> find_author(std::string_view name) const;
  std::optional<PaperIdx> find_paper(std::string_view id) const;
  const std::vector<std::string>& author_names() const { return author_names_; }

  // Paper citation layer (directed, unweighted).
  std::span<const std::uint32_t> references(PaperIdx p) const;
  std::span<const std::uint32_t> cited_by(PaperIdx p) const;
  std::size_t out_degree_paper(PaperIdx p) const;

  // Author citation layer (directed, weighted by citation multiplicity).
  std::span<const std::uint32_t> cited_authors(AuthorIdx a) const;
  std::span<const std::uint32_t> cited_author_weights(AuthorIdx a) const;
  std::span<const std::uint32_t> citing_authors(AuthorIdx a) const;
  std::span<const std::uint32_t> citing_author_weights(AuthorIdx a) const;
  /// Sum of out-edge weights (weighted) or distinct cited authors.
  double out_strength_author(AuthorIdx a) const;

  // Coauthorship layer (undirected, weighted by joint papers).
  std::span<const std::uint32_t> coauthors(AuthorIdx a) const;
  std::span<const std::uint32_t> coauthor_weights(AuthorIdx a) const;
  /// Sum of incident weights (weighted) or number of distinct coauthors.
  double strength_coauthor(AuthorIdx a) const;
  /// Raw integer weight of an edge, 0 when absent.
  std::uint32_t coauthor_weight(AuthorIdx a, AuthorIdx b) const;
  std::uint32_t author_citation_weight(AuthorIdx from, AuthorIdx to) const;

  // Authorship links.
  std::span<const std::uint32_t> papers_of(AuthorIdx a) const;
  std::span<const std::uint32_t> authors_of(PaperIdx p) const;

  /// Raw adjacency, for bulk kernels.
  const Csr& paper_refs_csr() const { return paper_out_; }
  const Csr& paper_cited_by_csr() const { return paper_in_; }
  const Csr& author_cites_csr() const { return author_out_; }
  const Csr& author_cited_by_csr() const { return author_in_; }
  const Csr& coauthor_csr() const { return coauthor_; }
  const Csr& author_papers_csr() const { return author_papers_; }
  const Csr& paper_authors_csr() const { return paper_authors_; }

  friend MultiLayerGraph build_graph(const Corpus&, const GraphBuildOptions&, BuildReport*);

 private:
  void check(AuthorIdx a) const;
  void check(PaperIdx p) const;

  GraphBuildOptions options_;
  std::vector<std::string> author_names_;
  std::vector<std::string> paper_ids_;
  std::vector<int> paper_years_;

  Csr paper_out_;
  Csr paper_in_;
  Csr author_out_;
  Csr author_in_;
  Csr coauthor_;
  Csr author_papers_;
  Csr paper_authors_;
};

/// Throws InputError if the corpus is not closed or has author-less papers.
MultiLayerGraph build_graph(const Corpus& corpus, const GraphBuildOptions& options = {},
                            BuildReport* report = nullptr);

inline MultiLayerGraph build_graph(const Snapshot& snap, const GraphBuildOptions& options = {},
                                   BuildReport* report = nullptr) {
  return build_graph(snap.corpus, options, report);
}

/// CSV `src,dst,weight` using dense indices. Coauthorship is written in both
/// directions; authorship is written as author,paper,1.
void write_edge_list(const MultiLayerGraph& graph, Layer layer, std::ostream& out);

}  // namespace c3
