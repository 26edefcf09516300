#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amrseq/corpus.hpp"
#include "amrseq/graph.hpp"
#include "amrseq/smatch.hpp"

namespace amrseq {

// Parser outputs for one sentence, in priority order (earlier wins ties).
struct CandidateSet {
  std::string id;
  std::vector<std::pair<std::string, AmrGraph>> candidates;  // (parser, graph)
};

struct Selection {
  int index = 0;
  std::vector<std::vector<double>> matrix;  // pairwise F, diagonal 0
  std::vector<double> row_sums;
};

// Chooses the candidate most similar to the others: highest row sum of the
// pairwise Smatch-F matrix, ties to the lowest index. A single candidate is
// returned with an empty matrix. The matrix uses the exact scorer when every
// candidate has at most max_vars variables, hill-climbing otherwise.
Selection select(const CandidateSet& cands, int restarts, std::uint64_t seed,
                 int max_vars = kDefaultMaxVars);

struct OracleChoice {
  int index = 0;
  double f = 0.0;
};

// Upper bound of ensembling: the candidate scoring highest against gold.
OracleChoice oracle_select(const CandidateSet& cands, const AmrGraph& gold,
                           int restarts, std::uint64_t seed,
                           int max_vars = kDefaultMaxVars);

struct ParserRun {
  std::string parser;
  std::vector<Document> docs;
};

struct CompareRow {
  std::string id;
  std::vector<double> scores;  // per parser, in run order
  int winner = -1;             // -1 = tie for the top score
};

struct CompareReport {
  std::vector<std::string> parsers;
  std::vector<CompareRow> rows;
  std::vector<int> wins;  // per parser
  int ties = 0;
};

// Scores every run against gold per document and tallies which parser wins
// where. Runs are aligned to gold by id first; each (parser, document) pair
// scores on its own seed, so job count never changes the outcome.
CompareReport compare_parsers(const std::vector<Document>& gold,
                              const std::vector<ParserRun>& runs, int restarts,
                              std::uint64_t seed, int jobs = 1,
                              int max_vars = kDefaultMaxVars);

}  // namespace amrseq
