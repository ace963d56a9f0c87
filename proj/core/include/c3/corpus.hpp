#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace c3 {

struct Snapshot;

/// One publication. After validation: non-empty unique id, year > 0, at least
/// one author, no duplicate authors, no duplicate or self references.
struct PaperRecord {
  std::string id;
  std::string title;
  int year = 0;
  std::vector<std::string> authors;
  std::vector<std::string> refs;

  bool operator==(const PaperRecord&) const = default;
};

/// Counters produced while turning raw records into a Corpus.
struct ParseReport {
  std::size_t records_read = 0;
  std::size_t records_rejected = 0;
  std::size_t rejected_missing_id = 0;
  std::size_t rejected_missing_year = 0;
  std::size_t rejected_no_authors = 0;
  std::size_t rejected_duplicate_id = 0;
  std::size_t rejected_malformed = 0;
  std::size_t dangling_refs_dropped = 0;
  std::size_t self_refs_dropped = 0;
  std::size_t duplicate_refs_dropped = 0;
  std::size_t duplicate_authors_collapsed = 0;

  ParseReport& operator+=(const ParseReport& other);
};

std::ostream& operator<<(std::ostream& os, const ParseReport& report);

/// A validated, closed set of papers. Papers are kept sorted by id (byte-wise
/// string order) so that equal content always yields equal layout.
class Corpus {
 public:
  Corpus() = default;

  /// Validates raw records. Invalid records are rejected and counted;
  /// dangling references are dropped. Never throws on content problems.
  static Corpus from_records(std::vector<PaperRecord> records, ParseReport* report = nullptr);

  std::span<const PaperRecord> papers() const { return papers_; }
  /// Sorted, deduplicated union of all author names.
  const std::vector<std::string>& author_universe() const { return authors_; }
  std::size_t size() const { return papers_.size(); }
  bool empty() const { return papers_.empty(); }

  /// nullptr when absent.
  const PaperRecord* find(std::string_view id) const;

  bool operator==(const Corpus&) const = default;

 private:
  friend Snapshot snapshot(const Corpus& corpus, int year);

  std::vector<PaperRecord> papers_;
  std::vector<std::string> authors_;
};

/// Corpus restricted to evidence published up to and including `year_bound`.
struct Snapshot {
  int year_bound = 0;
  Corpus corpus;

  bool operator==(const Snapshot&) const = default;
};

/// Trim and collapse internal whitespace runs to single spaces.
std::string normalize_name(std::string_view raw);

/// AMiner citation text format. Throws InputError if the stream is bad.
Corpus parse_aminer(std::istream& in, ParseReport* report = nullptr);

/// Canonical JSON-lines format. Throws InputError if the stream is bad.
Corpus parse_jsonl(std::istream& in, ParseReport* report = nullptr);

/// Deterministic JSON-lines output; parse_jsonl inverts it exactly.
void write_jsonl(const Corpus& corpus, std::ostream& out);
std::string to_jsonl(const Corpus& corpus);

/// Throws std::invalid_argument for year <= 0.
Snapshot snapshot(const Corpus& corpus, int year);

/// 64-bit FNV-1a over the canonical JSON-lines serialization, as 16 hex digits.
std::string corpus_hash(const Corpus& corpus);

}  // namespace c3
