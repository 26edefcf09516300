#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amrseq/corpus.hpp"
#include "amrseq/smatch.hpp"

namespace amrseq {

struct CategoryScore {
  SmatchScore counts;
  bool empty = false;  // neither side had anything in this category

  // Empty categories read as perfect agreement rather than 0/0.
  double f() const { return empty ? 1.0 : counts.f(); }
};

// Category scores in fixed report order.
struct FineGrainedReport {
  std::vector<std::pair<std::string, CategoryScore>> categories;

  const CategoryScore& at(std::string_view name) const;
};

// Reorders test documents to match gold by `::id`. Falls back to positional
// pairing when ids are missing or duplicated on either side (duplicates are
// legitimate in augmented corpora). Mismatched ids or counts raise
// IdMismatch.
std::vector<Document> align_by_id(const std::vector<Document>& gold,
                                  const std::vector<Document>& test);

// Corpus scores per category, micro-averaged:
//   Smatch         whole-graph triple overlap
//   Unlabeled      every edge relation rewritten to one label
//   No WSD         `-NN` sense suffixes stripped from concepts
//   Named Entities bag of (concept, entity name) pairs
//   Wikification   bag of (entity name, wiki link) pairs
//   Negation       bag of concepts carrying `:polarity -`
//   Concepts       bag of concept labels
//   Reentrancies   triple overlap restricted to re-entrant nodes
//   SRL            triple overlap restricted to `:ARGn` / `:ARGn-of` edges
// Inputs must already be aligned (see align_by_id).
FineGrainedReport fine_grained(const std::vector<Document>& gold,
                               const std::vector<Document>& test,
                               int restarts, std::uint64_t seed, int jobs = 1);

struct LengthBucketRow {
  int max_len = 0;
  int doc_count = 0;
  std::optional<double> f;  // nullopt when the bucket is empty
};

// Cumulative buckets: a document lands in every bucket whose edge is at
// least its sentence token count. Token counts come from `::tok` metadata
// when present, else from whitespace-splitting the sentence.
std::vector<LengthBucketRow> length_buckets(const std::vector<Document>& gold,
                                            const std::vector<Document>& test,
                                            const std::vector<int>& edges,
                                            int restarts, std::uint64_t seed,
                                            int jobs = 1);

}  // namespace amrseq
