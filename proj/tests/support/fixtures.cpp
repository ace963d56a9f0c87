#include "fixtures.hpp"

#include <algorithm>
#include <random>

namespace c3::testing {

PaperRecord paper(std::string id, int year, std::vector<std::string> authors,
                  std::vector<std::string> refs) {
  PaperRecord p;
  p.id = std::move(id);
  p.title = "Title " + p.id;
  p.year = year;
  p.authors = std::move(authors);
  p.refs = std::move(refs);
  return p;
}

Corpus corpus_of(std::vector<PaperRecord> records) {
  return Corpus::from_records(std::move(records));
}

Corpus two_author_fixture() {
  return corpus_of({paper("P1", 1995, {"X"}), paper("P2", 1996, {"Y"}, {"P1"})});
}

Corpus path_fixture() {
  return corpus_of({paper("Q1", 2000, {"A", "B"}), paper("Q2", 2000, {"B", "C"})});
}

Corpus paper_cycle_fixture() {
  return corpus_of({paper("P1", 2000, {"U"}, {"P2"}), paper("P2", 2000, {"V"}, {"P3"}),
                    paper("P3", 2000, {"W"}, {"P1"})});
}

Corpus random_cyclic_corpus(std::uint64_t seed, std::size_t max_papers, std::size_t max_authors) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
  };
  const std::size_t n_papers = pick(2, max_papers);
  const std::size_t n_authors = pick(2, max_authors);
  std::vector<PaperRecord> records;
  for (std::size_t i = 0; i < n_papers; ++i) {
    std::vector<std::string> authors;
    const std::size_t team = pick(1, std::min<std::size_t>(4, n_authors));
    for (std::size_t k = 0; k < team; ++k) authors.push_back("a" + std::to_string(pick(0, n_authors - 1)));
    std::vector<std::string> refs;
    const std::size_t n_refs = pick(0, 4);
    for (std::size_t k = 0; k < n_refs; ++k) refs.push_back("p" + std::to_string(pick(0, n_papers - 1)));
    records.push_back(paper("p" + std::to_string(i), 1990 + static_cast<int>(pick(0, 10)),
                            std::move(authors), std::move(refs)));
  }
  return corpus_of(std::move(records));
}

Corpus campaign_corpus(std::size_t i) {
  if (i % 2 == 0) return random_cyclic_corpus(1000 + i);
  SynthParams p;
  std::mt19937_64 rng(5000 + i);
  p.n_papers = 5 + rng() % 56;
  p.n_authors = 3 + rng() % 28;
  p.refs_per_paper_mean = 0.5 + static_cast<double>(rng() % 40) / 10.0;
  p.authors_per_paper_mean = 1.0 + static_cast<double>(rng() % 25) / 10.0;
  p.attachment_bias = static_cast<double>(rng() % 6);
  p.year_start = 1990;
  p.year_end = 2000;
  p.seed = 77 + i;
  return generate(p);
}

std::string data_path(const std::string& name) { return std::string(C3_TEST_DATA_DIR) + "/" + name; }

}  // namespace c3::testing
