#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "c3/corpus.hpp"
#include "c3/synth.hpp"

namespace c3::testing {

PaperRecord paper(std::string id, int year, std::vector<std::string> authors,
                  std::vector<std::string> refs = {});

Corpus corpus_of(std::vector<PaperRecord> records);

/// Author X wrote P1, author Y wrote P2, P2 cites P1.
Corpus two_author_fixture();

/// Coauthorship path A-B-C: one paper by {A, B}, one by {B, C}, no citations.
Corpus path_fixture();

/// Three single-author papers citing each other in a cycle P1->P2->P3->P1.
Corpus paper_cycle_fixture();

/// Small random corpus whose citations may form cycles (unlike synth output).
/// At most `max_papers` papers and `max_authors` authors.
Corpus random_cyclic_corpus(std::uint64_t seed, std::size_t max_papers = 60,
                            std::size_t max_authors = 30);

/// The i-th member of the seeded random graph campaign: alternates between
/// synth corpora and cyclic random corpora, all within 60 papers / 30 authors.
Corpus campaign_corpus(std::size_t i);

/// Path to a checked-in test data file.
std::string data_path(const std::string& name);

}  // namespace c3::testing
