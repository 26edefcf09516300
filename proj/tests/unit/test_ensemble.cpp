#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "amrseq/ensemble.hpp"
#include "amrseq/penman.hpp"
#include "amrseq/smatch.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace amrseq;

namespace {

CandidateSet set_of(std::vector<AmrGraph> graphs) {
  CandidateSet set;
  set.id = "doc";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    set.candidates.emplace_back("p" + std::to_string(i), std::move(graphs[i]));
  }
  return set;
}

}  // namespace

TEST_CASE("the duplicated candidate wins the pairwise vote") {
  AmrGraph a = testsupport::example_graph();
  AmrGraph b = parse_penman("(c / cell)");
  Selection selection = select(set_of({b, a, a}), 4, 9);
  CHECK(selection.index == 1);
  Selection reversed = select(set_of({a, a, b}), 4, 9);
  CHECK(reversed.index == 0);
}

TEST_CASE("the pairwise matrix is symmetric with a zero diagonal") {
  AmrGraph a = testsupport::example_graph();
  AmrGraph b = parse_penman("(c / cell)");
  AmrGraph c = testsupport::example_broken_reentrancy();
  Selection selection = select(set_of({a, b, c}), 4, 9);
  REQUIRE(selection.matrix.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(selection.matrix[i].size() == 3);
    CHECK(selection.matrix[i][i] == 0.0);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(selection.matrix[i][j] == selection.matrix[j][i]);
    }
  }
  CHECK(selection.matrix[0][2] ==
        doctest::Approx(40.0 / 43.0).epsilon(1e-12));
  REQUIRE(selection.row_sums.size() == 3);
  CHECK(selection.row_sums[0] ==
        doctest::Approx(selection.matrix[0][1] + selection.matrix[0][2])
            .epsilon(1e-12));
}

TEST_CASE("a single candidate is chosen trivially") {
  Selection selection = select(set_of({parse_penman("(c / cell)")}), 4, 9);
  CHECK(selection.index == 0);
  CHECK(selection.matrix.empty());
  CHECK(selection.row_sums.empty());
}

TEST_CASE("ties go to the earliest candidate") {
  AmrGraph a = parse_penman("(c / cell)");
  Selection selection = select(set_of({a, a}), 4, 9);
  CHECK(selection.index == 0);
}

TEST_CASE("selection matches a brute-force pairwise tally") {
  std::mt19937_64 rng(70707);
  for (int round = 0; round < 20; ++round) {
    std::vector<AmrGraph> graphs;
    for (int i = 0; i < 3; ++i) graphs.push_back(testsupport::random_graph(rng, 6, 4));
    Selection selection = select(set_of(graphs), 4, round);

    std::vector<double> sums(graphs.size(), 0.0);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = 0; j < graphs.size(); ++j) {
        if (i == j) continue;
        sums[i] += smatch_exact(graphs[i], graphs[j]).f();
      }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < sums.size(); ++i) {
      if (sums[i] > sums[best]) best = i;
    }
    CHECK(selection.index == static_cast<int>(best));
  }
}

TEST_CASE("selection is deterministic for a fixed seed") {
  std::mt19937_64 rng(70708);
  std::vector<AmrGraph> graphs;
  for (int i = 0; i < 4; ++i) graphs.push_back(testsupport::random_graph(rng, 6, 4));
  Selection a = select(set_of(graphs), 4, 31);
  Selection b = select(set_of(graphs), 4, 31);
  CHECK(a.index == b.index);
  CHECK(a.row_sums == b.row_sums);
}

TEST_CASE("the oracle picks the candidate closest to gold") {
  AmrGraph gold = testsupport::example_graph();
  AmrGraph near = testsupport::example_broken_reentrancy();
  AmrGraph far = parse_penman("(c / cell)");
  OracleChoice choice = oracle_select(set_of({far, near}), gold, 4, 9);
  CHECK(choice.index == 1);
  CHECK(choice.f == doctest::Approx(40.0 / 43.0).epsilon(1e-12));
}

TEST_CASE("the oracle never does worse than the pairwise vote") {
  std::mt19937_64 rng(70709);
  for (int round = 0; round < 20; ++round) {
    AmrGraph gold = testsupport::random_graph(rng, 6, 4);
    std::vector<AmrGraph> graphs;
    for (int i = 0; i < 3; ++i) graphs.push_back(testsupport::random_graph(rng, 6, 4));
    CandidateSet cands = set_of(graphs);
    OracleChoice oracle = oracle_select(cands, gold, 4, round);
    Selection vote = select(cands, 4, round);
    double vote_f =
        smatch_exact(gold, graphs[static_cast<std::size_t>(vote.index)]).f();
    double oracle_f =
        smatch_exact(gold, graphs[static_cast<std::size_t>(oracle.index)]).f();
    CHECK(oracle_f >= vote_f);
  }
}

TEST_CASE("empty candidate sets are rejected") {
  CHECK_THROWS_AS(select(CandidateSet{}, 4, 9), std::invalid_argument);
  CHECK_THROWS_AS(oracle_select(CandidateSet{}, AmrGraph{}, 4, 9),
                  std::invalid_argument);
}

TEST_CASE("parser comparison tallies wins and ties") {
  Corpus gold = parse_corpus(testsupport::kToyGoldCorpus);
  Corpus imperfect = parse_corpus(testsupport::kToyTestCorpus);

  ParserRun perfect_run{"echo", gold.documents};
  ParserRun other_run{"model", imperfect.documents};
  CompareReport report =
      compare_parsers(gold.documents, {perfect_run, other_run}, 4, 9);
  CHECK(report.parsers == std::vector<std::string>{"echo", "model"});
  REQUIRE(report.rows.size() == 3);
  REQUIRE(report.wins.size() == 2);

  // d2 is identical in both runs; d1 and d3 differ and favor the echo run.
  CHECK(report.wins[0] == 2);
  CHECK(report.wins[1] == 0);
  CHECK(report.ties == 1);
  for (const CompareRow& row : report.rows) {
    if (row.id == "d2") CHECK(row.winner == -1);
    if (row.id == "d1") CHECK(row.winner == 0);
    if (row.id == "d3") CHECK(row.winner == 0);
  }
}

TEST_CASE("parser comparison aligns runs by document id") {
  Corpus gold = parse_corpus(testsupport::kToyGoldCorpus);
  std::vector<Document> shuffled = {gold.documents[2], gold.documents[0],
                                    gold.documents[1]};
  CompareReport report =
      compare_parsers(gold.documents, {{"echo", shuffled}}, 4, 9);
  CHECK(report.wins[0] == 3);
  CHECK(report.ties == 0);
  CHECK(report.rows[0].id == "d1");
  CHECK(report.rows[0].scores[0] == doctest::Approx(1.0));
}

TEST_CASE("comparison results are stable across job counts") {
  Corpus gold = parse_corpus(testsupport::kToyGoldCorpus);
  Corpus test = parse_corpus(testsupport::kToyTestCorpus);
  CompareReport serial = compare_parsers(
      gold.documents, {{"a", gold.documents}, {"b", test.documents}}, 4, 9, 1);
  CompareReport threaded = compare_parsers(
      gold.documents, {{"a", gold.documents}, {"b", test.documents}}, 4, 9, 8);
  REQUIRE(serial.rows.size() == threaded.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].scores == threaded.rows[i].scores);
    CHECK(serial.rows[i].winner == threaded.rows[i].winner);
  }
}
