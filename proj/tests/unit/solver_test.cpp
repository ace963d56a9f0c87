#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "c3/graph.hpp"
#include "c3/solver.hpp"
#include "dense_oracle.hpp"
#include "fixtures.hpp"

using namespace c3;
using c3::testing::corpus_of;
using c3::testing::paper;

namespace {

double at(const MultiLayerGraph& g, const std::vector<double>& v, const std::string& author) {
  return v[g.find_author(author).value().value];
}

double at_paper(const MultiLayerGraph& g, const std::vector<double>& v, const std::string& id) {
  return v[g.find_paper(id).value().value];
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(Config, Validation) {
  SolverConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.theta = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.alpha = -0.1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.epsilon = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.max_iters = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_EQ(parse_aai_cycle_handling("none"), AaiCycleHandling::None);
  EXPECT_THROW(parse_aai_cycle_handling("damped"), std::invalid_argument);
}

TEST(Init, AllOnes) {
  auto g = build_graph(corpus_of({paper("p1", 2000, {"A", "B"}), paper("p2", 2000, {"C"})}));
  auto s = init_scores(g);
  EXPECT_EQ(s.pqi, (std::vector<double>{1, 1}));
  EXPECT_EQ(s.aci, (std::vector<double>{1, 1, 1}));
  EXPECT_EQ(s.aai, s.aci);
  EXPECT_EQ(s.pci, s.aci);
  EXPECT_EQ(s.c3, s.aci);
  EXPECT_EQ(s.iteration, 0u);
  EXPECT_EQ(init_scores(g), init_scores(g));
  auto e = init_scores(build_graph(Corpus{}));
  EXPECT_TRUE(e.pqi.empty());
  EXPECT_TRUE(e.c3.empty());
}

TEST(PqiStep, UncitedPaperGetsAffineFloor) {
  auto g = build_graph(corpus_of({paper("a", 2000, {"X"})}));
  EXPECT_DOUBLE_EQ(pqi_step(g, init_scores(g), {})[0], 0.5);
}

TEST(PqiStep, ThreeCycleFixedPoint) {
  auto g = build_graph(c3::testing::paper_cycle_fixture());
  auto r = solve(g);
  ASSERT_TRUE(r.report.converged);
  for (double v : r.scores.pqi) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(AciStep, WeightedShare) {
  auto c = corpus_of({paper("j1", 2000, {"J"}), paper("j2", 2000, {"J"}), paper("j3", 2000, {"J"}),
                      paper("l1", 2000, {"L"}), paper("k", 2001, {"K"}, {"j1", "j2", "j3", "l1"})});
  auto g = build_graph(c);
  auto aci = aci_step(g, init_scores(g), {});
  // K sends 3/4 of theta * aci(K) to J and 1/4 to L.
  EXPECT_DOUBLE_EQ(at(g, aci, "J"), 0.5 + 0.5 * 0.75);
  EXPECT_DOUBLE_EQ(at(g, aci, "L"), 0.5 + 0.5 * 0.25);
  EXPECT_DOUBLE_EQ(at(g, aci, "K"), 0.5);

  auto u = build_graph(c, {.weighted = false});
  auto aci_u = aci_step(u, init_scores(u), {});
  EXPECT_DOUBLE_EQ(at(u, aci_u, "J"), 0.75);
  EXPECT_DOUBLE_EQ(at(u, aci_u, "L"), 0.75);
}

TEST(AaiStep, SoleAuthorDropsToZero) {
  auto g = build_graph(corpus_of({paper("a", 2000, {"X"})}));
  EXPECT_DOUBLE_EQ(aai_step(g, init_scores(g), {})[0], 0.0);
}

TEST(AaiStep, PairIsStationary) {
  auto g = build_graph(corpus_of({paper("a", 2000, {"X", "Y"})}));
  auto s = init_scores(g);
  for (int t = 0; t < 5; ++t) {
    s.aai = aai_step(g, s, {});
    EXPECT_EQ(s.aai, (std::vector<double>{1.0, 1.0}));
  }
}

TEST(AaiStep, PathOscillatesLiterally) {
  auto g = build_graph(c3::testing::path_fixture());
  auto s = init_scores(g);
  s.aai = aai_step(g, s, {});
  EXPECT_EQ(s.aai, (std::vector<double>{0.5, 2.0, 0.5}));
  s.aai = aai_step(g, s, {});
  EXPECT_EQ(s.aai, (std::vector<double>{1.0, 1.0, 1.0}));
  // The midpoint is a fixed point of the update.
  s.aai = {0.75, 1.5, 0.75};
  EXPECT_EQ(aai_step(g, s, {}), s.aai);
}

TEST(PciStep, EqualShareWithAlphaZero) {
  auto g = build_graph(corpus_of({paper("solo", 2000, {"S"}), paper("team", 2000, {"A", "B", "C"})}));
  auto s = init_scores(g);
  s.pqi[g.find_paper("solo")->value] = 0.75;
  s.pqi[g.find_paper("team")->value] = 0.6;
  auto pci = pci_step(g, s, {});
  EXPECT_DOUBLE_EQ(at(g, pci, "S"), 0.75);
  for (const char* n : {"A", "B", "C"}) EXPECT_DOUBLE_EQ(at(g, pci, n), 0.2);
}

TEST(PciStep, AlphaOneSharesByC3) {
  auto g = build_graph(corpus_of({paper("p", 2000, {"A", "B"})}));
  auto s = init_scores(g);
  s.pqi = {0.9};
  s.c3 = {2.0, 1.0};
  SolverConfig cfg;
  cfg.alpha = 1.0;
  auto pci = pci_step(g, s, cfg);
  EXPECT_NEAR(pci[0], 0.6, 1e-15);
  EXPECT_NEAR(pci[1], 0.3, 1e-15);
  EXPECT_NEAR(pci[0] + pci[1], 0.9, 1e-15);
}

TEST(PciStep, ZeroToTheZeroIsOne) {
  auto g = build_graph(corpus_of({paper("p", 2000, {"A", "B"})}));
  auto s = init_scores(g);
  s.c3 = {0.0, 0.0};
  s.pqi = {1.0};
  EXPECT_EQ(pci_step(g, s, {}), (std::vector<double>{0.5, 0.5}));
  SolverConfig cfg;
  cfg.alpha = 2.0;
  EXPECT_THROW(pci_step(g, s, cfg), std::domain_error);
}

TEST(C3Step, AffineCombination) {
  SolverConfig cfg;
  EXPECT_EQ(c3_step({0.0}, {0.0}, {0.0}, cfg), std::vector<double>{0.5});
  EXPECT_EQ(c3_step({0.75}, {0.0}, {0.75}, cfg), std::vector<double>{1.25});
  // Doubling every component maps 0.5 + 0.5 s to 0.5 + s.
  const double s = 0.3 + 0.4 + 1.1;
  EXPECT_DOUBLE_EQ(c3_step({0.3}, {0.4}, {1.1}, cfg)[0], 0.5 + 0.5 * s);
  EXPECT_DOUBLE_EQ(c3_step({0.6}, {0.8}, {2.2}, cfg)[0], 0.5 + s);
}

TEST(Solve, TwoAuthorFixture) {
  auto g = build_graph(c3::testing::two_author_fixture());
  auto r = solve(g);
  ASSERT_TRUE(r.report.converged);
  EXPECT_LT(r.report.final_delta, 1e-9);
  EXPECT_NEAR(at_paper(g, r.scores.pqi, "P1"), 0.75, 1e-9);
  EXPECT_NEAR(at_paper(g, r.scores.pqi, "P2"), 0.5, 1e-9);
  EXPECT_NEAR(at(g, r.scores.aci, "X"), 0.75, 1e-9);
  EXPECT_NEAR(at(g, r.scores.aci, "Y"), 0.5, 1e-9);
  EXPECT_NEAR(at(g, r.scores.aai, "X"), 0.0, 1e-9);
  EXPECT_NEAR(at(g, r.scores.aai, "Y"), 0.0, 1e-9);
  EXPECT_NEAR(at(g, r.scores.pci, "X"), 0.75, 1e-9);
  EXPECT_NEAR(at(g, r.scores.pci, "Y"), 0.5, 1e-9);
  EXPECT_NEAR(at(g, r.scores.c3, "X"), 1.25, 1e-9);
  EXPECT_NEAR(at(g, r.scores.c3, "Y"), 1.0, 1e-9);
}

TEST(Solve, EmptyGraphConvergesImmediately) {
  auto r = solve(build_graph(Corpus{}));
  EXPECT_TRUE(r.report.converged);
  EXPECT_EQ(r.report.iterations_run, 1u);
  EXPECT_TRUE(r.scores.c3.empty());
}

TEST(Solve, PathMidpointAndLiteral) {
  auto g = build_graph(c3::testing::path_fixture());
  auto mid = solve(g);
  EXPECT_TRUE(mid.report.converged);
  EXPECT_TRUE(mid.report.aai_cycle_detected);
  EXPECT_NEAR(at(g, mid.scores.aai, "A"), 0.75, 1e-12);
  EXPECT_NEAR(at(g, mid.scores.aai, "B"), 1.5, 1e-12);
  EXPECT_NEAR(at(g, mid.scores.aai, "C"), 0.75, 1e-12);

  SolverConfig literal;
  literal.aai_cycle_handling = AaiCycleHandling::None;
  literal.max_iters = 200;
  auto lit = solve(g, literal);
  EXPECT_FALSE(lit.report.converged);
  EXPECT_TRUE(lit.report.aai_cycle_detected);
  EXPECT_EQ(lit.report.iterations_run, 200u);
  EXPECT_GE(lit.report.final_delta, literal.epsilon);
}

TEST(Solve, NonConvergenceIsReportedNotThrown) {
  auto g = build_graph(c3::testing::two_author_fixture());
  SolverConfig cfg;
  cfg.max_iters = 2;
  auto r = solve(g, cfg);
  EXPECT_FALSE(r.report.converged);
  EXPECT_EQ(r.report.iterations_run, 2u);
}

TEST(Solve, ThetaZeroKillsPropagation) {
  SolverConfig cfg;
  cfg.theta = 0.0;
  auto g = build_graph(c3::testing::campaign_corpus(3));
  auto r = solve(g, cfg);
  for (double v : r.scores.pqi) EXPECT_EQ(v, 1.0);
  for (double v : r.scores.aci) EXPECT_EQ(v, 1.0);
  for (double v : r.scores.c3) EXPECT_EQ(v, 1.0);
}

// Properties over the seeded campaign of small random graphs.
class SolverProperties : public ::testing::TestWithParam<int> {};

TEST_P(SolverProperties, FloorConservationAndEqualShare) {
  const auto i = static_cast<std::size_t>(GetParam());
  auto c = c3::testing::campaign_corpus(i);
  for (double alpha : {0.0, 0.5, 1.0}) {
    auto g = build_graph(c, {.weighted = (i % 3 != 0)});
    SolverConfig cfg;
    cfg.alpha = alpha;

    // Connected components of the coauthorship layer.
    std::vector<int> comp(g.num_authors(), -1);
    int n_comp = 0;
    for (std::uint32_t s = 0; s < g.num_authors(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::uint32_t> stack{s};
      comp[s] = n_comp;
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto v : g.coauthors(AuthorIdx{u})) {
          if (comp[v] < 0) {
            comp[v] = n_comp;
            stack.push_back(v);
          }
        }
      }
      ++n_comp;
    }
    std::vector<double> comp_size(n_comp, 0.0);
    for (auto k : comp) comp_size[k] += 1.0;

    ScoreSet prev = init_scores(g);
    solve(g, cfg, [&](const ScoreSet& s) {
      for (double v : s.pqi) EXPECT_GE(v, 1.0 - cfg.theta);
      for (double v : s.aci) EXPECT_GE(v, 1.0 - cfg.theta);
      for (double v : s.c3) EXPECT_GE(v, 1.0 - cfg.theta);
      for (double v : s.aai) EXPECT_TRUE(std::isfinite(v) && v >= 0.0);

      // PCI credit conservation is against the PQI the step consumed.
      const double pqi_sum = std::accumulate(prev.pqi.begin(), prev.pqi.end(), 0.0);
      const double pci_sum = std::accumulate(s.pci.begin(), s.pci.end(), 0.0);
      EXPECT_NEAR(pci_sum, pqi_sum, 1e-9 * std::max(1.0, pqi_sum));

      std::vector<double> mass(n_comp, 0.0);
      for (std::size_t a = 0; a < s.aai.size(); ++a) mass[comp[a]] += s.aai[a];
      for (int k = 0; k < n_comp; ++k) {
        if (comp_size[k] >= 2) EXPECT_NEAR(mass[k], comp_size[k], 1e-9 * comp_size[k]);
      }

      if (alpha == 0.0) {
        std::vector<double> explicit_share(g.num_authors(), 0.0);
        for (std::uint32_t a = 0; a < g.num_authors(); ++a) {
          for (auto p : g.papers_of(AuthorIdx{a})) {
            explicit_share[a] += prev.pqi[p] / static_cast<double>(g.authors_of(PaperIdx{p}).size());
          }
        }
        EXPECT_EQ(s.pci, explicit_share);
      }
      prev = s;
    });
  }
}

TEST_P(SolverProperties, MatchesDenseOracle) {
  const auto i = static_cast<std::size_t>(GetParam());
  auto c = c3::testing::campaign_corpus(i);
  for (bool weighted : {true, false}) {
    auto g = build_graph(c, {.weighted = weighted});
    SolverConfig cfg;
    cfg.alpha = (i % 3) * 0.5;
    auto fast = solve(g, cfg);
    auto slow = c3::testing::dense_oracle(g, cfg);
    EXPECT_LE(max_abs_diff(fast.scores.pqi, slow.scores.pqi), 1e-9);
    EXPECT_LE(max_abs_diff(fast.scores.aci, slow.scores.aci), 1e-9);
    EXPECT_LE(max_abs_diff(fast.scores.aai, slow.scores.aai), 1e-9);
    EXPECT_LE(max_abs_diff(fast.scores.pci, slow.scores.pci), 1e-9);
    EXPECT_LE(max_abs_diff(fast.scores.c3, slow.scores.c3), 1e-9);
    EXPECT_EQ(fast.report.converged, slow.report.converged);
  }
}

TEST_P(SolverProperties, RelabelingPermutesScores) {
  const auto i = static_cast<std::size_t>(GetParam());
  auto c = c3::testing::campaign_corpus(i);
  // Rename authors through a random bijection so that their sorted order changes.
  std::vector<std::string> names = c.author_universe();
  std::vector<std::string> renamed = names;
  std::mt19937 rng(static_cast<unsigned>(i));
  std::shuffle(renamed.begin(), renamed.end(), rng);
  std::map<std::string, std::string> rename;
  for (std::size_t k = 0; k < names.size(); ++k) rename[names[k]] = "r" + renamed[k];
  std::vector<PaperRecord> records(c.papers().begin(), c.papers().end());
  for (auto& p : records) {
    for (auto& a : p.authors) a = rename[a];
    p.id = "x" + p.id;
    for (auto& r : p.refs) r = "x" + r;
  }
  auto g1 = build_graph(c);
  auto g2 = build_graph(Corpus::from_records(records));
  auto r1 = solve(g1);
  auto r2 = solve(g2);
  for (const auto& n : names) {
    EXPECT_NEAR(at(g1, r1.scores.c3, n), at(g2, r2.scores.c3, rename[n]), 1e-9);
    EXPECT_NEAR(at(g1, r1.scores.aai, n), at(g2, r2.scores.aai, rename[n]), 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeded, SolverProperties, ::testing::Range(0, 20));

TEST(Solve, ThreadCountDoesNotChangeBits) {
  SynthParams p;
  p.n_papers = 30000;
  p.n_authors = 9000;
  p.seed = 3;
  auto g = build_graph(generate(p));
  SolverConfig one;
  one.threads = 1;
  SolverConfig many = one;
  many.threads = 8;
  auto a = solve(g, one);
  auto b = solve(g, many);
  EXPECT_EQ(a.scores, b.scores);
  EXPECT_EQ(a.report.final_delta, b.report.final_delta);
  EXPECT_EQ(a.report.iterations_run, b.report.iterations_run);
}
