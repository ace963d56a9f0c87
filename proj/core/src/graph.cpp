#include "c3/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "c3/error.hpp"

namespace c3 {

namespace {

Csr transpose(const Csr& in, std::size_t cols) {
  Csr out;
  out.offsets.assign(cols + 1, 0);
  for (auto t : in.targets) ++out.offsets[t + 1];
  std::partial_sum(out.offsets.begin(), out.offsets.end(), out.offsets.begin());
  out.targets.resize(in.nnz());
  const bool has_weights = !in.weights.empty();
  if (has_weights) out.weights.resize(in.nnz());
  std::vector<std::uint32_t> cursor(out.offsets.begin(), out.offsets.end() - 1);
  for (std::uint32_t r = 0; r < in.rows(); ++r) {
    for (auto e = in.offsets[r]; e < in.offsets[r + 1]; ++e) {
      auto slot = cursor[in.targets[e]]++;
      out.targets[slot] = r;
      if (has_weights) out.weights[slot] = in.weights[e];
    }
  }
  return out;
}

// Appends a row built from an unsorted multiset of targets: duplicates become
// integer weights.
void append_weighted_row(Csr& csr, std::vector<std::uint32_t>& scratch) {
  std::sort(scratch.begin(), scratch.end());
  for (std::size_t i = 0; i < scratch.size();) {
    std::size_t j = i;
    while (j < scratch.size() && scratch[j] == scratch[i]) ++j;
    csr.targets.push_back(scratch[i]);
    csr.weights.push_back(static_cast<std::uint32_t>(j - i));
    i = j;
  }
  csr.offsets.push_back(static_cast<std::uint32_t>(csr.targets.size()));
  scratch.clear();
}

std::uint32_t lookup_weight(const Csr& csr, std::uint32_t row, std::uint32_t col) {
  auto targets = csr.row(row);
  auto it = std::lower_bound(targets.begin(), targets.end(), col);
  if (it == targets.end() || *it != col) return 0;
  return csr.weights[csr.offsets[row] + static_cast<std::uint32_t>(it - targets.begin())];
}

double strength(const Csr& csr, std::uint32_t row, bool weighted) {
  if (!weighted) return static_cast<double>(csr.offsets[row + 1] - csr.offsets[row]);
  std::uint64_t sum = 0;
  for (auto w : csr.row_weights(row)) sum += w;
  return static_cast<double>(sum);
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const BuildReport& r) {
  os << "authors=" << r.authors << " papers=" << r.papers
     << " paper_citation_edges=" << r.paper_citation_edges
     << " author_citation_edges=" << r.author_citation_edges
     << " author_citation_weight=" << r.author_citation_weight
     << " coauthor_edges=" << r.coauthor_edges << " coauthor_weight=" << r.coauthor_weight
     << " authorship_links=" << r.authorship_links
     << " self_citations_dropped=" << r.self_citations_dropped;
  return os;
}

MultiLayerGraph build_graph(const Corpus& corpus, const GraphBuildOptions& options,
                            BuildReport* report) {
  MultiLayerGraph g;
  g.options_ = options;
  g.author_names_ = corpus.author_universe();
  const auto papers = corpus.papers();
  const std::size_t n_papers = papers.size();
  const std::size_t n_authors = g.author_names_.size();
  if (n_papers >= UINT32_MAX || n_authors >= UINT32_MAX) {
    throw InputError("corpus too large for 32-bit indices");
  }

  g.paper_ids_.reserve(n_papers);
  g.paper_years_.reserve(n_papers);
  for (const auto& p : papers) {
    g.paper_ids_.push_back(p.id);
    g.paper_years_.push_back(p.year);
  }
  if (!std::is_sorted(g.paper_ids_.begin(), g.paper_ids_.end()) ||
      std::adjacent_find(g.paper_ids_.begin(), g.paper_ids_.end()) != g.paper_ids_.end()) {
    throw InputError("corpus paper ids are not unique");
  }

  auto author_index = [&](const std::string& name) -> std::uint32_t {
    auto it = std::lower_bound(g.author_names_.begin(), g.author_names_.end(), name);
    if (it == g.author_names_.end() || *it != name) {
      throw InputError("author '" + name + "' missing from author universe");
    }
    return static_cast<std::uint32_t>(it - g.author_names_.begin());
  };
  auto paper_index = [&](const std::string& id) -> std::uint32_t {
    auto it = std::lower_bound(g.paper_ids_.begin(), g.paper_ids_.end(), id);
    if (it == g.paper_ids_.end() || *it != id) {
      throw InputError("dangling reference to paper '" + id + "'");
    }
    return static_cast<std::uint32_t>(it - g.paper_ids_.begin());
  };

  std::vector<std::uint32_t> row;
  for (std::uint32_t p = 0; p < n_papers; ++p) {
    const auto& rec = papers[p];
    if (rec.authors.empty()) throw InputError("paper '" + rec.id + "' has no authors");
    row.clear();
    for (const auto& name : rec.authors) row.push_back(author_index(name));
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw InputError("paper '" + rec.id + "' lists an author twice");
    }
    g.paper_authors_.targets.insert(g.paper_authors_.targets.end(), row.begin(), row.end());
    g.paper_authors_.offsets.push_back(static_cast<std::uint32_t>(g.paper_authors_.nnz()));

    row.clear();
    for (const auto& ref : rec.refs) {
      if (ref == rec.id) throw InputError("paper '" + rec.id + "' cites itself");
      row.push_back(paper_index(ref));
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    g.paper_out_.targets.insert(g.paper_out_.targets.end(), row.begin(), row.end());
    g.paper_out_.offsets.push_back(static_cast<std::uint32_t>(g.paper_out_.nnz()));
  }

  g.paper_in_ = transpose(g.paper_out_, n_papers);
  g.author_papers_ = transpose(g.paper_authors_, n_authors);

  std::uint64_t self_dropped = 0;
  std::vector<std::uint32_t> scratch;
  for (std::uint32_t k = 0; k < n_authors; ++k) {
    for (auto p : g.author_papers_.row(k)) {
      for (auto j : g.paper_authors_.row(p)) {
        if (j != k) scratch.push_back(j);
      }
    }
    append_weighted_row(g.coauthor_, scratch);

    for (auto p : g.author_papers_.row(k)) {
      for (auto cited : g.paper_out_.row(p)) {
        for (auto j : g.paper_authors_.row(cited)) {
          if (j == k && !options.include_self_citations) {
            ++self_dropped;
            continue;
          }
          scratch.push_back(j);
        }
      }
    }
    append_weighted_row(g.author_out_, scratch);
  }
  g.author_in_ = transpose(g.author_out_, n_authors);

  if (report) {
    BuildReport r;
    r.authors = n_authors;
    r.papers = n_papers;
    r.paper_citation_edges = g.paper_out_.nnz();
    r.author_citation_edges = g.author_out_.nnz();
    r.author_citation_weight =
        std::accumulate(g.author_out_.weights.begin(), g.author_out_.weights.end(), std::uint64_t{0});
    r.coauthor_edges = g.coauthor_.nnz() / 2;
    r.coauthor_weight =
        std::accumulate(g.coauthor_.weights.begin(), g.coauthor_.weights.end(), std::uint64_t{0}) / 2;
    r.authorship_links = g.paper_authors_.nnz();
    r.self_citations_dropped = self_dropped;
    *report = r;
  }
  return g;
}

void MultiLayerGraph::check(AuthorIdx a) const {
  if (a.value >= author_names_.size()) {
    throw std::out_of_range("author index " + std::to_string(a.value) + " out of range");
  }
}

void MultiLayerGraph::check(PaperIdx p) const {
  if (p.value >= paper_ids_.size()) {
    throw std::out_of_range("paper index " + std::to_string(p.value) + " out of range");
  }
}

const std::string& MultiLayerGraph::author_name(AuthorIdx a) const {
  check(a);
  return author_names_[a.value];
}

const std::string& MultiLayerGraph::paper_id(PaperIdx p) const {
  check(p);
  return paper_ids_[p.value];
}

int MultiLayerGraph::paper_year(PaperIdx p) const {
  check(p);
  return paper_years_[p.value];
}

std::optional<AuthorIdx> MultiLayerGraph::find_author(std::string_view name) const {
  auto it = std::lower_bound(author_names_.begin(), author_names_.end(), name);
  if (it == author_names_.end() || *it != name) return std::nullopt;
  return AuthorIdx{static_cast<std::uint32_t>(it - author_names_.begin())};
}

std::optional<PaperIdx> MultiLayerGraph::find_paper(std::string_view id) const {
  auto it = std::lower_bound(paper_ids_.begin(), paper_ids_.end(), id);
  if (it == paper_ids_.end() || *it != id) return std::nullopt;
  return PaperIdx{static_cast<std::uint32_t>(it - paper_ids_.begin())};
}

std::span<const std::uint32_t> MultiLayerGraph::references(PaperIdx p) const {
  check(p);
  return paper_out_.row(p.value);
}

std::span<const std::uint32_t> MultiLayerGraph::cited_by(PaperIdx p) const {
  check(p);
  return paper_in_.row(p.value);
}

std::size_t MultiLayerGraph::out_degree_paper(PaperIdx p) const {
  check(p);
  return paper_out_.offsets[p.value + 1] - paper_out_.offsets[p.value];
}

std::span<const std::uint32_t> MultiLayerGraph::cited_authors(AuthorIdx a) const {
  check(a);
  return author_out_.row(a.value);
}

std::span<const std::uint32_t> MultiLayerGraph::cited_author_weights(AuthorIdx a) const {
  check(a);
  return author_out_.row_weights(a.value);
}

std::span<const std::uint32_t> MultiLayerGraph::citing_authors(AuthorIdx a) const {
  check(a);
  return author_in_.row(a.value);
}

std::span<const std::uint32_t> MultiLayerGraph::citing_author_weights(AuthorIdx a) const {
  check(a);
  return author_in_.row_weights(a.value);
}

double MultiLayerGraph::out_strength_author(AuthorIdx a) const {
  check(a);
  return strength(author_out_, a.value, options_.weighted);
}

std::span<const std::uint32_t> MultiLayerGraph::coauthors(AuthorIdx a) const {
  check(a);
  return coauthor_.row(a.value);
}

std::span<const std::uint32_t> MultiLayerGraph::coauthor_weights(AuthorIdx a) const {
  check(a);
  return coauthor_.row_weights(a.value);
}

double MultiLayerGraph::strength_coauthor(AuthorIdx a) const {
  check(a);
  return strength(coauthor_, a.value, options_.weighted);
}

std::uint32_t MultiLayerGraph::coauthor_weight(AuthorIdx a, AuthorIdx b) const {
  check(a);
  check(b);
  return lookup_weight(coauthor_, a.value, b.value);
}

std::uint32_t MultiLayerGraph::author_citation_weight(AuthorIdx from, AuthorIdx to) const {
  check(from);
  check(to);
  return lookup_weight(author_out_, from.value, to.value);
}

std::span<const std::uint32_t> MultiLayerGraph::papers_of(AuthorIdx a) const {
  check(a);
  return author_papers_.row(a.value);
}

std::span<const std::uint32_t> MultiLayerGraph::authors_of(PaperIdx p) const {
  check(p);
  return paper_authors_.row(p.value);
}

void write_edge_list(const MultiLayerGraph& g, Layer layer, std::ostream& out) {
  out << "src,dst,weight\n";
  auto dump = [&](const Csr& csr) {
    for (std::uint32_t r = 0; r < csr.rows(); ++r) {
      for (auto e = csr.offsets[r]; e < csr.offsets[r + 1]; ++e) {
        out << r << ',' << csr.targets[e] << ',' << (csr.weights.empty() ? 1u : csr.weights[e])
            << '\n';
      }
    }
  };
  switch (layer) {
    case Layer::PaperCitation: dump(g.paper_refs_csr()); break;
    case Layer::AuthorCitation: dump(g.author_cites_csr()); break;
    case Layer::Coauthorship: dump(g.coauthor_csr()); break;
    case Layer::Authorship: dump(g.author_papers_csr()); break;
  }
}

}  // namespace c3
