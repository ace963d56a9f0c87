#include "c3/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "c3/error.hpp"

namespace c3 {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool parse_year(std::string_view text, int& year) {
  text = trim(text);
  if (text.empty()) return false;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return false;
  year = value;
  return true;
}

void check_stream(const std::istream& in) {
  if (in.bad() || (in.fail() && !in.eof())) {
    throw InputError("input stream is not readable");
  }
}

}  // namespace

ParseReport& ParseReport::operator+=(const ParseReport& o) {
  records_read += o.records_read;
  records_rejected += o.records_rejected;
  rejected_missing_id += o.rejected_missing_id;
  rejected_missing_year += o.rejected_missing_year;
  rejected_no_authors += o.rejected_no_authors;
  rejected_duplicate_id += o.rejected_duplicate_id;
  rejected_malformed += o.rejected_malformed;
  dangling_refs_dropped += o.dangling_refs_dropped;
  self_refs_dropped += o.self_refs_dropped;
  duplicate_refs_dropped += o.duplicate_refs_dropped;
  duplicate_authors_collapsed += o.duplicate_authors_collapsed;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ParseReport& r) {
  os << "records_read=" << r.records_read << " records_rejected=" << r.records_rejected
     << " (missing_id=" << r.rejected_missing_id << " missing_year=" << r.rejected_missing_year
     << " no_authors=" << r.rejected_no_authors << " duplicate_id=" << r.rejected_duplicate_id
     << " malformed=" << r.rejected_malformed << ")"
     << " dangling_refs_dropped=" << r.dangling_refs_dropped
     << " self_refs_dropped=" << r.self_refs_dropped
     << " duplicate_refs_dropped=" << r.duplicate_refs_dropped
     << " duplicate_authors_collapsed=" << r.duplicate_authors_collapsed;
  return os;
}

std::string normalize_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : trim(raw)) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

Corpus Corpus::from_records(std::vector<PaperRecord> records, ParseReport* report) {
  ParseReport local;
  local.records_read = records.size();

  std::vector<PaperRecord> kept;
  kept.reserve(records.size());
  std::unordered_set<std::string> ids;

  for (auto& rec : records) {
    rec.id = std::string(trim(rec.id));

    std::vector<std::string> authors;
    authors.reserve(rec.authors.size());
    for (const auto& raw : rec.authors) {
      std::string name = normalize_name(raw);
      if (name.empty()) continue;
      if (std::find(authors.begin(), authors.end(), name) != authors.end()) {
        ++local.duplicate_authors_collapsed;
        continue;
      }
      authors.push_back(std::move(name));
    }
    rec.authors = std::move(authors);

    if (rec.id.empty()) {
      ++local.rejected_missing_id;
      ++local.records_rejected;
      continue;
    }
    if (rec.year <= 0) {
      ++local.rejected_missing_year;
      ++local.records_rejected;
      continue;
    }
    if (rec.authors.empty()) {
      ++local.rejected_no_authors;
      ++local.records_rejected;
      continue;
    }
    if (!ids.insert(rec.id).second) {
      ++local.rejected_duplicate_id;
      ++local.records_rejected;
      continue;
    }

    std::vector<std::string> refs;
    refs.reserve(rec.refs.size());
    std::unordered_set<std::string> seen;
    for (auto& raw : rec.refs) {
      std::string ref(trim(raw));
      if (ref.empty()) continue;
      if (ref == rec.id) {
        ++local.self_refs_dropped;
        continue;
      }
      if (!seen.insert(ref).second) {
        ++local.duplicate_refs_dropped;
        continue;
      }
      refs.push_back(std::move(ref));
    }
    rec.refs = std::move(refs);
    kept.push_back(std::move(rec));
  }

  for (auto& rec : kept) {
    auto dangling = std::erase_if(rec.refs, [&](const std::string& r) { return !ids.contains(r); });
    local.dangling_refs_dropped += dangling;
  }

  std::sort(kept.begin(), kept.end(),
            [](const PaperRecord& a, const PaperRecord& b) { return a.id < b.id; });

  std::vector<std::string> universe;
  for (const auto& rec : kept) universe.insert(universe.end(), rec.authors.begin(), rec.authors.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  Corpus corpus;
  corpus.papers_ = std::move(kept);
  corpus.authors_ = std::move(universe);
  if (report) *report += local;
  return corpus;
}

const PaperRecord* Corpus::find(std::string_view id) const {
  auto it = std::lower_bound(papers_.begin(), papers_.end(), id,
                             [](const PaperRecord& p, std::string_view key) { return p.id < key; });
  if (it == papers_.end() || it->id != id) return nullptr;
  return &*it;
}

Corpus parse_aminer(std::istream& in, ParseReport* report) {
  check_stream(in);
  std::vector<PaperRecord> records;
  ParseReport local;

  PaperRecord current;
  bool has_content = false;
  bool has_index = false;

  auto flush = [&] {
    if (!has_content) return;
    if (!has_index) {
      // A record with markers but no #index cannot be identified at all.
      ++local.records_read;
      ++local.records_rejected;
      ++local.rejected_malformed;
    } else {
      records.push_back(std::move(current));
    }
    current = PaperRecord{};
    has_content = false;
    has_index = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = line;
    if (trim(view).empty()) {
      flush();
      continue;
    }
    if (view.size() < 2 || view[0] != '#') continue;

    if (view.starts_with("#index")) {
      current.id = std::string(trim(view.substr(6)));
      has_index = true;
    } else if (view.starts_with("#*")) {
      if (has_content) flush();
      current.title = std::string(trim(view.substr(2)));
    } else if (view.starts_with("#@")) {
      std::string_view rest = view.substr(2);
      std::size_t start = 0;
      for (std::size_t i = 0; i <= rest.size(); ++i) {
        if (i == rest.size() || rest[i] == ';' || rest[i] == ',') {
          current.authors.emplace_back(rest.substr(start, i - start));
          start = i + 1;
        }
      }
    } else if (view.starts_with("#t")) {
      if (!parse_year(view.substr(2), current.year)) current.year = 0;
    } else if (view.starts_with("#%")) {
      current.refs.emplace_back(trim(view.substr(2)));
    } else if (view.starts_with("#c") || view.starts_with("#!")) {
      // venue and abstract are not used
    } else {
      continue;
    }
    has_content = true;
  }
  check_stream(in);
  flush();

  Corpus corpus = Corpus::from_records(std::move(records), &local);
  if (report) *report += local;
  return corpus;
}

Corpus parse_jsonl(std::istream& in, ParseReport* report) {
  check_stream(in);
  std::vector<PaperRecord> records;
  ParseReport local;

  auto reject = [&] {
    ++local.records_read;
    ++local.records_rejected;
    ++local.rejected_malformed;
  };

  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) {
      reject();
      continue;
    }
    PaperRecord rec;
    bool ok = true;
    auto get_string_list = [&](const char* key, std::vector<std::string>& out) {
      auto it = doc.find(key);
      if (it == doc.end()) return;
      if (!it->is_array()) {
        ok = false;
        return;
      }
      for (const auto& v : *it) {
        if (!v.is_string()) {
          ok = false;
          return;
        }
        out.push_back(v.get<std::string>());
      }
    };

    if (auto it = doc.find("id"); it != doc.end()) {
      if (it->is_string()) rec.id = it->get<std::string>();
      else ok = false;
    }
    if (auto it = doc.find("title"); it != doc.end()) {
      if (it->is_string()) rec.title = it->get<std::string>();
      else if (!it->is_null()) ok = false;
    }
    if (auto it = doc.find("year"); it != doc.end()) {
      if (it->is_number_integer()) {
        auto y = it->get<long long>();
        rec.year = (y > 0 && y < 100000) ? static_cast<int>(y) : 0;
      } else {
        ok = false;
      }
    }
    get_string_list("authors", rec.authors);
    get_string_list("refs", rec.refs);

    if (!ok) {
      reject();
      continue;
    }
    records.push_back(std::move(rec));
  }
  check_stream(in);

  Corpus corpus = Corpus::from_records(std::move(records), &local);
  if (report) *report += local;
  return corpus;
}

void write_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const auto& p : corpus.papers()) {
    nlohmann::ordered_json obj;
    obj["id"] = p.id;
    obj["title"] = p.title;
    obj["year"] = p.year;
    obj["authors"] = p.authors;
    obj["refs"] = p.refs;
    out << obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
  }
}

std::string to_jsonl(const Corpus& corpus) {
  std::ostringstream os;
  write_jsonl(corpus, os);
  return os.str();
}

Snapshot snapshot(const Corpus& corpus, int year) {
  if (year <= 0) throw std::invalid_argument("snapshot year must be positive");
  Snapshot snap;
  snap.year_bound = year;

  std::unordered_set<std::string_view> in_bound;
  for (const auto& p : corpus.papers()) {
    if (p.year <= year) in_bound.insert(p.id);
  }

  std::vector<std::string> universe;
  for (const auto& p : corpus.papers()) {
    if (p.year > year) continue;
    PaperRecord copy = p;
    std::erase_if(copy.refs, [&](const std::string& r) { return !in_bound.contains(r); });
    universe.insert(universe.end(), copy.authors.begin(), copy.authors.end());
    snap.corpus.papers_.push_back(std::move(copy));
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  snap.corpus.authors_ = std::move(universe);
  return snap;
}

std::string corpus_hash(const Corpus& corpus) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_jsonl(corpus)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace c3
