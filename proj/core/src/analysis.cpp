#include "c3/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "c3/csv.hpp"
#include "c3/error.hpp"

namespace c3 {

RankedSnapshot rank_snapshot(const Corpus& corpus, int year, const GraphBuildOptions& options,
                             const SolverConfig& cfg) {
  RankedSnapshot r;
  r.year = year;
  r.graph = build_graph(snapshot(corpus, year), options);
  r.baselines = compute_baselines(r.graph);
  r.solution = solve(r.graph, cfg);
  return r;
}

double HDistribution::cumulative_share(std::uint32_t h) const {
  if (total == 0) return 0.0;
  std::size_t upto = 0;
  for (std::size_t i = 0; i < counts.size() && i <= h; ++i) upto += counts[i];
  return static_cast<double>(upto) / static_cast<double>(total);
}

HDistribution h_distribution(const AuthorBaselines& baselines) {
  HDistribution d;
  for (auto h : baselines.h_index) {
    if (h >= d.counts.size()) d.counts.resize(h + 1, 0);
    ++d.counts[h];
  }
  d.total = baselines.h_index.size();
  return d;
}

namespace {

void check_bins(std::span<const std::uint32_t> bounds) {
  if (bounds.empty() || bounds.front() != 0) {
    throw std::invalid_argument("h bins must start at 0");
  }
  if (std::adjacent_find(bounds.begin(), bounds.end(), std::greater_equal<>()) != bounds.end()) {
    throw std::invalid_argument("h bin bounds must be strictly ascending");
  }
}

std::size_t bin_of(std::span<const std::uint32_t> bounds, std::uint32_t h) {
  return static_cast<std::size_t>(std::upper_bound(bounds.begin(), bounds.end(), h) -
                                  bounds.begin()) -
         1;
}

}  // namespace

std::string format_bin_label(std::span<const std::uint32_t> bounds, std::size_t bin) {
  const auto lo = bounds[bin];
  if (bin + 1 == bounds.size()) return std::to_string(lo) + "+";
  const auto hi = bounds[bin + 1] - 1;
  if (hi == lo) return std::to_string(lo);
  return std::to_string(lo) + "-" + std::to_string(hi);
}

DriftResult cohort_drift(const MultiLayerGraph& base_graph, const AuthorBaselines& base,
                         const MultiLayerGraph& target_graph, const AuthorBaselines& target,
                         std::span<const std::uint32_t> bounds) {
  check_bins(bounds);
  const std::size_t cohort = base_graph.num_authors();
  if (cohort == 0) throw DomainError("cohort is empty");

  DriftResult d;
  d.cohort_size = cohort;
  std::vector<std::size_t> base_counts(bounds.size(), 0);
  std::vector<std::size_t> target_counts(bounds.size(), 0);
  double sum_base = 0.0;
  double sum_target = 0.0;
  for (std::uint32_t a = 0; a < cohort; ++a) {
    const auto& name = base_graph.author_name(AuthorIdx{a});
    auto later = target_graph.find_author(name);
    if (!later) throw InputError("cohort author '" + name + "' missing from target snapshot");
    const auto h0 = base.h_index[a];
    const auto h1 = target.h_index[later->value];
    ++base_counts[bin_of(bounds, h0)];
    ++target_counts[bin_of(bounds, h1)];
    sum_base += h0;
    sum_target += h1;
  }
  for (std::size_t b = 0; b < bounds.size(); ++b) {
    d.labels.push_back(format_bin_label(bounds, b));
    d.base_percent.push_back(100.0 * static_cast<double>(base_counts[b]) / cohort);
    d.target_percent.push_back(100.0 * static_cast<double>(target_counts[b]) / cohort);
  }
  d.mean_h_base = sum_base / cohort;
  d.mean_h_target = sum_target / cohort;
  return d;
}

std::vector<TieBin> tie_stats(const ScoreSet& scores, const AuthorBaselines& baselines) {
  std::map<std::uint32_t, std::vector<double>> by_h;
  for (std::size_t a = 0; a < baselines.h_index.size(); ++a) {
    by_h[baselines.h_index[a]].push_back(scores.c3[a]);
  }
  std::vector<TieBin> bins;
  for (const auto& [h, values] : by_h) {
    TieBin bin;
    bin.h = h;
    bin.author_count = values.size();
    std::set<std::string> distinct;
    for (double v : values) distinct.insert(format_score(v));
    bin.distinct_c3_values = distinct.size();
    bin.tie_fraction =
        1.0 - static_cast<double>(bin.distinct_c3_values) / static_cast<double>(bin.author_count);
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    bin.c3_min = *lo;
    bin.c3_max = *hi;
    bin.c3_spread = *hi - *lo;
    bins.push_back(bin);
  }
  return bins;
}

std::string to_string(CorrelationMode mode) {
  return mode == CorrelationMode::Value ? "value" : "rank";
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("pearson: need at least two points");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
  };
  if (constant(x) || constant(y)) throw DomainError("pearson: zero variance");

  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw DomainError("pearson: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> fractional_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + 1 + j);  // mean of i+1 .. j
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  auto rx = fractional_ranks(x);
  auto ry = fractional_ranks(y);
  return pearson(rx, ry);
}

ConsistencyResult temporal_consistency(const RankedSnapshot& base, const RankedSnapshot& target,
                                       std::span<const std::uint32_t> h_bin,
                                       CorrelationMode mode) {
  if (base.year > target.year) {
    throw std::invalid_argument("base year must not be later than target year");
  }
  ConsistencyResult r;
  r.base_year = base.year;
  r.target_year = target.year;
  r.h_bin.assign(h_bin.begin(), h_bin.end());
  r.mode = mode;

  std::vector<double> before;
  std::vector<double> after;
  for (std::uint32_t a = 0; a < base.graph.num_authors(); ++a) {
    const auto h = base.baselines.h_index[a];
    if (std::find(h_bin.begin(), h_bin.end(), h) == h_bin.end()) continue;
    auto later = target.graph.find_author(base.graph.author_name(AuthorIdx{a}));
    if (!later) continue;
    before.push_back(base.solution.scores.c3[a]);
    after.push_back(target.solution.scores.c3[later->value]);
  }
  r.n_common_authors = before.size();
  if (before.size() < 2) {
    throw DomainError("temporal consistency needs at least two common authors, found " +
                      std::to_string(before.size()));
  }
  r.pearson_r = mode == CorrelationMode::Value ? pearson(before, after) : spearman(before, after);
  return r;
}

ConsistencyResult temporal_consistency(const Corpus& corpus, int base_year, int target_year,
                                       std::span<const std::uint32_t> h_bin,
                                       const GraphBuildOptions& options, const SolverConfig& cfg,
                                       CorrelationMode mode) {
  if (base_year > target_year) {
    throw std::invalid_argument("base year must not be later than target year");
  }
  auto base = rank_snapshot(corpus, base_year, options, cfg);
  if (target_year == base_year) return temporal_consistency(base, base, h_bin, mode);
  auto target = rank_snapshot(corpus, target_year, options, cfg);
  return temporal_consistency(base, target, h_bin, mode);
}

Scatter export_scatter(const MultiLayerGraph& graph, const ScoreSet& scores,
                       const AuthorBaselines& baselines) {
  Scatter s;
  const std::size_t n = graph.num_authors();
  if (n == 0) return s;
  auto [hlo, hhi] = std::minmax_element(baselines.h_index.begin(), baselines.h_index.end());
  auto [clo, chi] = std::minmax_element(scores.c3.begin(), scores.c3.end());
  const double h_min = *hlo;
  const double h_range = static_cast<double>(*hhi) - h_min;
  const double c_min = *clo;
  const double c_range = *chi - c_min;
  s.h_degenerate = !(h_range > 0.0);
  s.c3_degenerate = !(c_range > 0.0);
  s.points.reserve(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    ScatterPoint p;
    p.author = graph.author_name(AuthorIdx{a});
    p.h = baselines.h_index[a];
    p.c3 = scores.c3[a];
    p.h_norm = s.h_degenerate ? 0.0 : (p.h - h_min) / h_range;
    p.c3_norm = s.c3_degenerate ? 0.0 : (p.c3 - c_min) / c_range;
    s.points.push_back(std::move(p));
  }
  return s;
}

AuthorIdx resolve_author(const MultiLayerGraph& graph, const std::string& name) {
  if (auto idx = graph.find_author(name)) return *idx;

  const auto& names = graph.author_names();
  auto collect = [&](std::string_view prefix) {
    std::vector<std::string> out;
    for (auto it = std::lower_bound(names.begin(), names.end(), prefix);
         it != names.end() && it->starts_with(prefix) && out.size() < 10; ++it) {
      out.push_back(*it);
    }
    return out;
  };
  auto candidates = collect(name);
  if (candidates.empty()) {
    const auto space = name.find(' ');
    if (space != std::string::npos && space > 0) candidates = collect(name.substr(0, space));
  }
  std::string message = "unknown author '" + name + "'";
  if (!candidates.empty()) {
    message += "; did you mean:";
    for (const auto& c : candidates) message += " '" + c + "'";
  }
  throw LookupError(message);
}

std::vector<Trajectory> trajectories(const Corpus& corpus, std::span<const std::string> authors,
                                     std::span<const int> years, const GraphBuildOptions& options,
                                     const SolverConfig& cfg) {
  if (years.empty()) throw std::invalid_argument("trajectories: no years given");
  if (std::adjacent_find(years.begin(), years.end(), std::greater_equal<>()) != years.end()) {
    throw std::invalid_argument("trajectories: years must be strictly ascending");
  }
  std::vector<Trajectory> out(authors.size());
  for (std::size_t i = 0; i < authors.size(); ++i) out[i].author = authors[i];

  for (std::size_t y = 0; y < years.size(); ++y) {
    auto ranked = rank_snapshot(corpus, years[y], options, cfg);
    for (std::size_t i = 0; i < authors.size(); ++i) {
      AuthorIdx idx = resolve_author(ranked.graph, authors[i]);
      out[i].points.push_back(
          {years[y], ranked.baselines.h_index[idx.value], ranked.solution.scores.c3[idx.value]});
    }
  }
  return out;
}

std::vector<ComponentRow> component_table(const MultiLayerGraph& graph, const ScoreSet& scores,
                                          const AuthorBaselines& baselines,
                                          std::span<const std::string> authors) {
  std::vector<ComponentRow> rows;
  rows.reserve(authors.size());
  for (const auto& name : authors) {
    const auto a = resolve_author(graph, name).value;
    rows.push_back({graph.author_name(AuthorIdx{a}), baselines.h_index[a], scores.aci[a],
                    scores.pci[a], scores.aai[a], scores.c3[a]});
  }
  return rows;
}

}  // namespace c3
