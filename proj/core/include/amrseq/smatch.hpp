#pragma once

#include <cstdint>
#include <vector>

#include "amrseq/graph.hpp"
#include "amrseq/triples.hpp"

namespace amrseq {

// Triple-overlap counts between a gold and a test graph under the best
// variable mapping found. Precision, recall, and F derive from the counts,
// so summing scores micro-averages them.
struct SmatchScore {
  long long matched = 0;
  long long gold_total = 0;
  long long test_total = 0;

  double precision() const;
  double recall() const;
  double f() const;
};

inline constexpr int kDefaultMaxVars = 8;
inline constexpr int kDefaultRestarts = 4;

// Maximizes matched triples over every injective variable mapping from the
// smaller side into the larger, by branch-and-bound search. Exponential in
// the smaller side's variable count, hence the cap.
SmatchScore smatch_exact(const TripleSet& gold, const TripleSet& test,
                         int max_vars = kDefaultMaxVars);
SmatchScore smatch_exact(const AmrGraph& gold, const AmrGraph& test,
                         int max_vars = kDefaultMaxVars);

// Restarted steepest-ascent search over mappings: restart 0 starts from a
// greedy concept match, later restarts from seeded random mappings. Fully
// deterministic for fixed inputs, restarts, and seed; never beats the exact
// score.
SmatchScore smatch_hill(const TripleSet& gold, const TripleSet& test,
                        int restarts, std::uint64_t seed);
SmatchScore smatch_hill(const AmrGraph& gold, const AmrGraph& test,
                        int restarts, std::uint64_t seed);

// Independent per-pair seed; index 0 keeps the base seed, so a one-document
// corpus scores exactly like a direct pair call.
std::uint64_t pair_seed(std::uint64_t seed, std::size_t index);

// Micro-average: triple counts are summed over pairs before computing P/R/F.
// Pair i is scored with pair_seed(seed, i) on its own RNG, so results are
// identical for any job count.
SmatchScore corpus_smatch(const std::vector<AmrGraph>& gold,
                          const std::vector<AmrGraph>& test, int restarts,
                          std::uint64_t seed, int jobs = 1);
SmatchScore corpus_smatch(const std::vector<TripleSet>& gold,
                          const std::vector<TripleSet>& test, int restarts,
                          std::uint64_t seed, int jobs = 1);

}  // namespace amrseq
