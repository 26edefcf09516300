#include "amrseq/ensemble.hpp"

#include <stdexcept>

#include "amrseq/evaluate.hpp"
#include "amrseq/parallel.hpp"

namespace amrseq {

namespace {

bool fits_exact(const AmrGraph& graph, int max_vars) {
  return graph.nodes.size() <= static_cast<std::size_t>(max_vars);
}

double pair_f(const AmrGraph& a, const AmrGraph& b, bool exact, int restarts,
              std::uint64_t seed, int max_vars) {
  if (exact) return smatch_exact(a, b, max_vars).f();
  return smatch_hill(a, b, restarts, seed).f();
}

}  // namespace

Selection select(const CandidateSet& cands, int restarts, std::uint64_t seed,
                 int max_vars) {
  const auto& list = cands.candidates;
  if (list.empty()) {
    throw std::invalid_argument("candidate set is empty");
  }
  Selection result;
  if (list.size() == 1) return result;

  bool exact = true;
  for (const auto& [parser, graph] : list) {
    if (!fits_exact(graph, max_vars)) exact = false;
  }

  std::size_t n = list.size();
  result.matrix.assign(n, std::vector<double>(n, 0.0));
  std::size_t pair_index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double f = pair_f(list[i].second, list[j].second, exact, restarts,
                        pair_seed(seed, pair_index), max_vars);
      ++pair_index;
      result.matrix[i][j] = f;
      result.matrix[j][i] = f;
    }
  }
  result.row_sums.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) result.row_sums[i] += result.matrix[i][j];
    }
  }
  result.index = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (result.row_sums[i] > result.row_sums[static_cast<std::size_t>(
            result.index)]) {
      result.index = static_cast<int>(i);
    }
  }
  return result;
}

OracleChoice oracle_select(const CandidateSet& cands, const AmrGraph& gold,
                           int restarts, std::uint64_t seed, int max_vars) {
  const auto& list = cands.candidates;
  if (list.empty()) {
    throw std::invalid_argument("candidate set is empty");
  }
  bool exact = fits_exact(gold, max_vars);
  for (const auto& [parser, graph] : list) {
    if (!fits_exact(graph, max_vars)) exact = false;
  }

  OracleChoice choice;
  choice.f = -1.0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    double f = pair_f(gold, list[i].second, exact, restarts,
                      pair_seed(seed, i), max_vars);
    if (f > choice.f) {
      choice.f = f;
      choice.index = static_cast<int>(i);
    }
  }
  return choice;
}

CompareReport compare_parsers(const std::vector<Document>& gold,
                              const std::vector<ParserRun>& runs, int restarts,
                              std::uint64_t seed, int jobs, int max_vars) {
  if (runs.empty()) {
    throw std::invalid_argument("no parser runs to compare");
  }
  CompareReport report;
  std::vector<std::vector<Document>> aligned;
  aligned.reserve(runs.size());
  for (const auto& run : runs) {
    report.parsers.push_back(run.parser);
    aligned.push_back(align_by_id(gold, run.docs));
  }
  report.wins.assign(runs.size(), 0);

  std::vector<CompareRow> rows = parallel_map(
      gold, jobs, [&](const Document& doc, std::size_t d) {
        CompareRow row;
        row.id = doc.id;
        for (std::size_t p = 0; p < aligned.size(); ++p) {
          const AmrGraph& test = aligned[p][d].graph;
          bool exact = fits_exact(doc.graph, max_vars) &&
                       fits_exact(test, max_vars);
          row.scores.push_back(pair_f(doc.graph, test, exact, restarts,
                                      pair_seed(seed, p * gold.size() + d),
                                      max_vars));
        }
        double best = row.scores[0];
        for (double f : row.scores) {
          if (f > best) best = f;
        }
        int winner = -1;
        bool tie = false;
        for (std::size_t p = 0; p < row.scores.size(); ++p) {
          if (row.scores[p] == best) {
            if (winner < 0) {
              winner = static_cast<int>(p);
            } else {
              tie = true;
            }
          }
        }
        row.winner = tie ? -1 : winner;
        return row;
      });

  for (auto& row : rows) {
    if (row.winner >= 0) {
      ++report.wins[static_cast<std::size_t>(row.winner)];
    } else {
      ++report.ties;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace amrseq
