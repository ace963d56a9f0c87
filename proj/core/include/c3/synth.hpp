#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "c3/corpus.hpp"

namespace c3 {

struct SynthParams {
  std::size_t n_papers = 1000;
  std::size_t n_authors = 400;
  int year_start = 1990;
  int year_end = 2010;
  double refs_per_paper_mean = 5.0;
  double authors_per_paper_mean = 2.5;
  /// 0 picks citation targets uniformly; larger values favor already-cited papers.
  double attachment_bias = 1.0;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument.
  void validate() const;
};

/// Portable random source: std::mt19937_64 (whose output sequence is fixed by
/// the standard) plus hand-written samplers, so corpora are identical across
/// standard libraries.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [0, n), unbiased. n must be > 0.
  std::uint64_t below(std::uint64_t n);
  /// Poisson(mean) by multiplication of uniforms, split into chunks of <= 16
  /// so exp(-mean) never underflows.
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

/// Fenwick tree over non-negative weights supporting O(log n) updates and
/// proportional sampling.
class WeightedSampler {
 public:
  explicit WeightedSampler(std::size_t n) : tree_(n + 1, 0.0), weights_(n, 0.0) {}

  void set(std::size_t i, double w);
  double weight(std::size_t i) const { return weights_[i]; }
  double total() const;
  /// Index i drawn with probability weight(i) / total(). total() must be > 0.
  std::size_t sample(PortableRng& rng) const;

 private:
  std::vector<double> tree_;
  std::vector<double> weights_;
};

/// Growing corpus: paper i arrives at year_start + floor(i * span / n_papers),
/// cites distinct earlier papers with probability proportional to
/// 1 + attachment_bias * citations_so_far, and is written by a uniformly drawn
/// team of distinct authors from a fixed pool. Same params, same corpus.
Corpus generate(const SynthParams& params);

}  // namespace c3
