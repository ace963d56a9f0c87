#include <gtest/gtest.h>

#include <sstream>

#include "c3/csv.hpp"
#include "fixtures.hpp"

using namespace c3;

TEST(Format, Scores) {
  EXPECT_EQ(format_score(1.25), "1.25");
  EXPECT_EQ(format_score(-0.0), "0");
  EXPECT_EQ(format_score(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_score(1.2499999999999), "1.25");
  EXPECT_EQ(format_score(1e-9), "1e-09");
}

TEST(Format, CsvQuoting) {
  EXPECT_EQ(csv_field("Ben Smith"), "Ben Smith");
  EXPECT_EQ(csv_field("Smith, Ben"), "\"Smith, Ben\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Header, RecordsFullConfig) {
  RunInfo info;
  info.corpus_hash = "00000000deadbeef";
  info.years = {1998, 2008};
  EXPECT_EQ(header_line(info),
            "# corpus_hash=00000000deadbeef year=1998,2008 theta=0.5 alpha=0 weighted=true "
            "self_citations=false aai_cycle=midpoint epsilon=1e-09 max_iters=1000");
  info.convergence = ConvergenceReport{12, 5e-10, true, false};
  info.cfg.threads = 8;
  EXPECT_EQ(header_line(info).find("threads"), std::string::npos);
  EXPECT_NE(header_line(info).find(" converged=true iterations=12 final_delta=5e-10"),
            std::string::npos);
}

TEST(Export, TwoAuthorFixtureAuthorsAndPapers) {
  const auto corpus = c3::testing::two_author_fixture();
  auto g = build_graph(corpus);
  auto r = solve(g);
  auto b = compute_baselines(g);
  RunInfo info;
  info.corpus_hash = corpus_hash(corpus);
  std::ostringstream authors, papers;
  write_author_scores(authors, info, g, r.scores, &b);
  write_paper_scores(papers, info, g, r.scores, &b);
  const auto head = header_line(info) + "\n";
  EXPECT_EQ(authors.str(), head +
                               "author,aci,aai,pci,c3,h_index,total_citations\n"
                               "X,0.75,0,0.75,1.25,1,1\n"
                               "Y,0.5,0,0.5,1,0,0\n");
  EXPECT_EQ(papers.str(), head +
                              "paper,pqi,citations\n"
                              "P1,0.75,1\n"
                              "P2,0.5,0\n");
}

TEST(Export, CorpusHashIsStable) {
  const auto a = corpus_hash(c3::testing::two_author_fixture());
  EXPECT_EQ(a.size(), 16u);
  EXPECT_EQ(a, corpus_hash(c3::testing::two_author_fixture()));
  EXPECT_NE(a, corpus_hash(c3::testing::path_fixture()));
}
