#include "c3/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>

namespace c3 {

std::string format_score(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string header_line(const RunInfo& info) {
  std::string line = "# corpus_hash=" + info.corpus_hash;
  if (!info.years.empty()) {
    line += " year=";
    for (std::size_t i = 0; i < info.years.size(); ++i) {
      if (i) line += ',';
      line += std::to_string(info.years[i]);
    }
  }
  line += " theta=" + format_score(info.cfg.theta);
  line += " alpha=" + format_score(info.cfg.alpha);
  line += std::string(" weighted=") + (info.options.weighted ? "true" : "false");
  line += std::string(" self_citations=") + (info.options.include_self_citations ? "true" : "false");
  line += " aai_cycle=" + to_string(info.cfg.aai_cycle_handling);
  line += " epsilon=" + format_score(info.cfg.epsilon);
  line += " max_iters=" + std::to_string(info.cfg.max_iters);
  if (info.convergence) {
    line += std::string(" converged=") + (info.convergence->converged ? "true" : "false");
    line += " iterations=" + std::to_string(info.convergence->iterations_run);
    line += " final_delta=" + format_score(info.convergence->final_delta);
    line += std::string(" aai_cycle_detected=") +
            (info.convergence->aai_cycle_detected ? "true" : "false");
  }
  for (const auto& [key, value] : info.extra) line += " " + key + "=" + value;
  return line;
}

void write_author_scores(std::ostream& out, const RunInfo& info, const MultiLayerGraph& graph,
                         const ScoreSet& scores, const AuthorBaselines* baselines) {
  std::vector<std::uint32_t> order(graph.num_authors());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (scores.c3[a] != scores.c3[b]) return scores.c3[a] > scores.c3[b];
    return graph.author_names()[a] < graph.author_names()[b];
  });
  out << header_line(info) << '\n';
  out << "author,aci,aai,pci,c3" << (baselines ? ",h_index,total_citations" : "") << '\n';
  for (auto a : order) {
    out << csv_field(graph.author_names()[a]) << ',' << format_score(scores.aci[a]) << ','
        << format_score(scores.aai[a]) << ',' << format_score(scores.pci[a]) << ','
        << format_score(scores.c3[a]);
    if (baselines) out << ',' << baselines->h_index[a] << ',' << baselines->total_citations[a];
    out << '\n';
  }
}

void write_paper_scores(std::ostream& out, const RunInfo& info, const MultiLayerGraph& graph,
                        const ScoreSet& scores, const AuthorBaselines* baselines) {
  std::vector<std::uint32_t> order(graph.num_papers());
  std::iota(order.begin(), order.end(), 0);
  // Paper ids are already sorted, so index order breaks ties by id.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return scores.pqi[a] > scores.pqi[b]; });
  out << header_line(info) << '\n';
  out << "paper,pqi" << (baselines ? ",citations" : "") << '\n';
  for (auto p : order) {
    out << csv_field(graph.paper_id(PaperIdx{p})) << ',' << format_score(scores.pqi[p]);
    if (baselines) out << ',' << baselines->paper_citations[p];
    out << '\n';
  }
}

void write_baselines(std::ostream& out, const RunInfo& info, const MultiLayerGraph& graph,
                     const AuthorBaselines& baselines) {
  out << header_line(info) << '\n' << "author,h_index,total_citations\n";
  for (std::uint32_t a = 0; a < graph.num_authors(); ++a) {
    out << csv_field(graph.author_names()[a]) << ',' << baselines.h_index[a] << ','
        << baselines.total_citations[a] << '\n';
  }
}

void write_h_distribution(std::ostream& out, const RunInfo& info, const HDistribution& dist) {
  out << header_line(info) << '\n' << "h_index,authors,cumulative_share\n";
  for (std::size_t h = 0; h < dist.counts.size(); ++h) {
    out << h << ',' << dist.counts[h] << ','
        << format_score(dist.cumulative_share(static_cast<std::uint32_t>(h))) << '\n';
  }
}

void write_drift(std::ostream& out, const RunInfo& info, const DriftResult& drift) {
  out << header_line(info) << " cohort=" << drift.cohort_size
      << " mean_h_base=" << format_score(drift.mean_h_base)
      << " mean_h_target=" << format_score(drift.mean_h_target) << '\n';
  out << "h_bin,base_percent,target_percent\n";
  for (std::size_t b = 0; b < drift.labels.size(); ++b) {
    out << drift.labels[b] << ',' << format_score(drift.base_percent[b]) << ','
        << format_score(drift.target_percent[b]) << '\n';
  }
}

void write_ties(std::ostream& out, const RunInfo& info, std::span<const TieBin> bins) {
  out << header_line(info) << '\n'
      << "h_index,authors,distinct_c3,tie_fraction,c3_min,c3_max,c3_spread\n";
  for (const auto& b : bins) {
    out << b.h << ',' << b.author_count << ',' << b.distinct_c3_values << ','
        << format_score(b.tie_fraction) << ',' << format_score(b.c3_min) << ','
        << format_score(b.c3_max) << ',' << format_score(b.c3_spread) << '\n';
  }
}

void write_scatter(std::ostream& out, RunInfo info, const Scatter& scatter) {
  info.extra.emplace_back("h_degenerate", scatter.h_degenerate ? "true" : "false");
  info.extra.emplace_back("c3_degenerate", scatter.c3_degenerate ? "true" : "false");
  out << header_line(info) << '\n' << "author,h_norm,c3_norm,h_index,c3\n";
  for (const auto& p : scatter.points) {
    out << csv_field(p.author) << ',' << format_score(p.h_norm) << ',' << format_score(p.c3_norm)
        << ',' << p.h << ',' << format_score(p.c3) << '\n';
  }
}

void write_consistency(std::ostream& out, const RunInfo& info, const ConsistencyResult& r) {
  out << header_line(info) << '\n' << "base_year,target_year,h_bin,mode,n_common_authors,pearson_r\n";
  std::string bins;
  for (std::size_t i = 0; i < r.h_bin.size(); ++i) {
    if (i) bins += ';';
    bins += std::to_string(r.h_bin[i]);
  }
  out << r.base_year << ',' << r.target_year << ',' << bins << ',' << to_string(r.mode) << ','
      << r.n_common_authors << ',' << format_score(r.pearson_r) << '\n';
}

void write_trajectories(std::ostream& out, const RunInfo& info,
                        std::span<const Trajectory> series) {
  out << header_line(info) << '\n' << "author,year,h_index,c3\n";
  for (const auto& t : series) {
    for (const auto& p : t.points) {
      out << csv_field(t.author) << ',' << p.year << ',' << p.h << ',' << format_score(p.c3)
          << '\n';
    }
  }
}

void write_component_table(std::ostream& out, const RunInfo& info,
                           std::span<const ComponentRow> rows) {
  out << header_line(info) << '\n' << "author,h_index,aci,pci,aai,c3\n";
  for (const auto& r : rows) {
    out << csv_field(r.author) << ',' << r.h << ',' << format_score(r.aci) << ','
        << format_score(r.pci) << ',' << format_score(r.aai) << ',' << format_score(r.c3) << '\n';
  }
}

}  // namespace c3
