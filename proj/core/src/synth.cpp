#include "c3/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace c3 {

namespace {

std::string padded(std::size_t value, std::size_t width, const char* prefix) {
  std::string digits = std::to_string(value);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

}  // namespace

void SynthParams::validate() const {
  if (n_papers == 0) throw std::invalid_argument("n_papers must be positive");
  if (n_authors == 0) throw std::invalid_argument("n_authors must be positive");
  if (year_start <= 0) throw std::invalid_argument("year_start must be positive");
  if (year_start > year_end) throw std::invalid_argument("year_start must not exceed year_end");
  if (!(refs_per_paper_mean >= 0.0) || !std::isfinite(refs_per_paper_mean)) {
    throw std::invalid_argument("refs_per_paper_mean must be >= 0");
  }
  if (!(authors_per_paper_mean >= 1.0) || !std::isfinite(authors_per_paper_mean)) {
    throw std::invalid_argument("authors_per_paper_mean must be >= 1");
  }
  if (!(attachment_bias >= 0.0) || !std::isfinite(attachment_bias)) {
    throw std::invalid_argument("attachment_bias must be >= 0");
  }
}

double PortableRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t PortableRng::below(std::uint64_t n) {
  // Reject the low tail so every residue is equally likely.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % n;
  }
}

std::uint64_t PortableRng::poisson(double mean) {
  std::uint64_t count = 0;
  while (mean > 0.0) {
    const double chunk = std::min(mean, 16.0);
    mean -= chunk;
    const double limit = std::exp(-chunk);
    double product = uniform();
    while (product > limit) {
      ++count;
      product *= uniform();
    }
  }
  return count;
}

void WeightedSampler::set(std::size_t i, double w) {
  const double delta = w - weights_[i];
  weights_[i] = w;
  for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) tree_[k] += delta;
}

double WeightedSampler::total() const {
  double sum = 0.0;
  for (std::size_t k = weights_.size(); k > 0; k -= k & (~k + 1)) sum += tree_[k];
  return sum;
}

std::size_t WeightedSampler::sample(PortableRng& rng) const {
  double target = rng.uniform() * total();
  std::size_t pos = 0;
  std::size_t step = 1;
  while (step * 2 < tree_.size()) step *= 2;
  for (; step > 0; step /= 2) {
    const std::size_t next = pos + step;
    if (next < tree_.size() && tree_[next] <= target) {
      pos = next;
      target -= tree_[next];
    }
  }
  // Rounding can land on a zero-weight slot; walk to the nearest positive one.
  std::size_t i = std::min(pos, weights_.size() - 1);
  while (i > 0 && weights_[i] <= 0.0) --i;
  while (i + 1 < weights_.size() && weights_[i] <= 0.0) ++i;
  return i;
}

Corpus generate(const SynthParams& params) {
  params.validate();
  PortableRng rng(params.seed);
  const std::size_t n = params.n_papers;
  const std::size_t id_width = std::to_string(n - 1).size();
  const std::size_t author_width = std::to_string(params.n_authors - 1).size();
  const auto span = static_cast<std::uint64_t>(params.year_end - params.year_start + 1);

  WeightedSampler targets(n);
  std::vector<std::uint32_t> citations(n, 0);
  std::vector<PaperRecord> records;
  records.reserve(n);

  std::vector<std::size_t> chosen;
  std::vector<std::size_t> team;
  for (std::size_t i = 0; i < n; ++i) {
    PaperRecord rec;
    rec.id = padded(i, id_width, "");
    rec.title = "Synthetic paper " + rec.id;
    rec.year = params.year_start + static_cast<int>(static_cast<std::uint64_t>(i) * span / n);

    const std::size_t team_size = std::min<std::size_t>(
        params.n_authors, 1 + rng.poisson(params.authors_per_paper_mean - 1.0));
    team.clear();
    while (team.size() < team_size) {
      const std::size_t a = rng.below(params.n_authors);
      if (std::find(team.begin(), team.end(), a) == team.end()) team.push_back(a);
    }
    for (auto a : team) rec.authors.push_back(padded(a, author_width, "Author "));

    const std::size_t n_refs = std::min<std::size_t>(i, rng.poisson(params.refs_per_paper_mean));
    chosen.clear();
    for (std::size_t r = 0; r < n_refs; ++r) {
      const std::size_t target = targets.sample(rng);
      chosen.push_back(target);
      targets.set(target, 0.0);  // without replacement within one paper
    }
    std::sort(chosen.begin(), chosen.end());
    for (auto target : chosen) {
      ++citations[target];
      targets.set(target, 1.0 + params.attachment_bias * citations[target]);
      rec.refs.push_back(records[target].id);
    }

    targets.set(i, 1.0);
    records.push_back(std::move(rec));
  }
  return Corpus::from_records(std::move(records));
}

}  // namespace c3
