#include "amrseq/smatch.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "amrseq/errors.hpp"
#include "amrseq/parallel.hpp"

namespace amrseq {

namespace {

// Triples re-encoded over interned strings and variable indices, so that
// evaluating a mapping compares ints only. Variable-valued fields hold
// -(index+1); string-valued fields hold a non-negative intern id.
struct EncodedTriple {
  int kind;
  int source;  // variable index (small or large side)
  int relation;
  int value;       // intern id, or variable index when value_is_var
  bool value_is_var;
};

using TripleKey = std::array<int, 4>;

class Interner {
 public:
  int id(const std::string& s) {
    auto [it, inserted] = ids_.emplace(s, static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::map<std::string, int> ids_;
};

struct Side {
  std::vector<std::string> vars;            // sorted
  std::map<std::string, int> var_index;
  std::vector<EncodedTriple> triples;
  std::vector<int> concepts;                // per var, intern id or -1
};

Side encode_side(const TripleSet& set, Interner& intern) {
  Side side;
  side.vars = set.variables();
  for (std::size_t i = 0; i < side.vars.size(); ++i) {
    side.var_index[side.vars[i]] = static_cast<int>(i);
  }
  side.concepts.assign(side.vars.size(), -1);
  for (const auto& triple : set.triples) {
    EncodedTriple enc;
    enc.kind = static_cast<int>(triple.kind);
    enc.source = side.var_index.at(triple.source);
    enc.relation = intern.id(triple.relation);
    if (triple.kind == TripleKind::Relation) {
      enc.value = side.var_index.at(triple.value);
      enc.value_is_var = true;
    } else {
      enc.value = intern.id(triple.value);
      enc.value_is_var = false;
    }
    side.triples.push_back(enc);
    if (triple.kind == TripleKind::Instance) {
      side.concepts[static_cast<std::size_t>(enc.source)] = enc.value;
    }
  }
  return side;
}

TripleKey key_in_own_side(const EncodedTriple& t) {
  return {t.kind, -(t.source + 1), t.relation,
          t.value_is_var ? -(t.value + 1) : t.value};
}

// assign maps small-side variable indices to large-side indices.
TripleKey key_under_mapping(const EncodedTriple& t,
                            const std::vector<int>& assign) {
  return {t.kind, -(assign[static_cast<std::size_t>(t.source)] + 1),
          t.relation,
          t.value_is_var ? -(assign[static_cast<std::size_t>(t.value)] + 1)
                         : t.value};
}

// Shared scoring state: the small side is mapped into the large side.
// Matched counts are symmetric under swapping sides, and precision/recall
// come from the stored totals, so orientation never needs tracking.
struct Matcher {
  Side small;
  Side large;
  std::map<TripleKey, int> large_counts;

  long long evaluate(const std::vector<int>& assign) const {
    std::map<TripleKey, int> remaining = large_counts;
    long long matched = 0;
    for (const auto& triple : small.triples) {
      auto it = remaining.find(key_under_mapping(triple, assign));
      if (it != remaining.end() && it->second > 0) {
        --it->second;
        ++matched;
      }
    }
    return matched;
  }

  // Greedy start: give each small variable an unused large variable with the
  // same concept when one exists, otherwise the first unused one.
  std::vector<int> greedy_assign() const {
    std::vector<int> assign(small.vars.size(), -1);
    std::vector<bool> used(large.vars.size(), false);
    for (std::size_t i = 0; i < small.vars.size(); ++i) {
      int chosen = -1;
      if (small.concepts[i] >= 0) {
        for (std::size_t j = 0; j < large.vars.size(); ++j) {
          if (!used[j] && large.concepts[j] == small.concepts[i]) {
            chosen = static_cast<int>(j);
            break;
          }
        }
      }
      if (chosen < 0) {
        for (std::size_t j = 0; j < large.vars.size(); ++j) {
          if (!used[j]) {
            chosen = static_cast<int>(j);
            break;
          }
        }
      }
      assign[i] = chosen;
      used[static_cast<std::size_t>(chosen)] = true;
    }
    return assign;
  }
};

Matcher make_matcher(const TripleSet& gold, const TripleSet& test) {
  Interner intern;
  Side gold_side = encode_side(gold, intern);
  Side test_side = encode_side(test, intern);

  Matcher m;
  if (gold_side.vars.size() <= test_side.vars.size()) {
    m.small = std::move(gold_side);
    m.large = std::move(test_side);
  } else {
    m.small = std::move(test_side);
    m.large = std::move(gold_side);
  }
  for (const auto& triple : m.large.triples) {
    ++m.large_counts[key_in_own_side(triple)];
  }
  return m;
}

SmatchScore make_score(long long matched, const TripleSet& gold,
                       const TripleSet& test) {
  SmatchScore score;
  score.matched = matched;
  score.gold_total = static_cast<long long>(gold.size());
  score.test_total = static_cast<long long>(test.size());
  return score;
}

// Exhaustive branch and bound. Small variables are assigned in index order;
// a triple is settled as soon as its last variable gets a value, so partial
// assignments carry exact partial scores and `settled + remaining` bounds
// the reachable total.
class ExactSearch {
 public:
  explicit ExactSearch(const Matcher& m) : m_(m) {
    std::size_t k = m_.small.vars.size();
    settled_at_.resize(k);
    for (std::size_t t = 0; t < m_.small.triples.size(); ++t) {
      const auto& triple = m_.small.triples[t];
      int last = triple.source;
      if (triple.value_is_var && triple.value > last) last = triple.value;
      settled_at_[static_cast<std::size_t>(last)].push_back(t);
    }
    remaining_after_.assign(k + 1, 0);
    for (std::size_t d = k; d-- > 0;) {
      remaining_after_[d] = remaining_after_[d + 1] +
                            static_cast<long long>(settled_at_[d].size());
    }
  }

  long long run(long long initial_best) {
    best_ = initial_best;
    assign_.assign(m_.small.vars.size(), -1);
    used_.assign(m_.large.vars.size(), false);
    remaining_ = m_.large_counts;
    descend(0, 0);
    return best_;
  }

 private:
  void descend(std::size_t depth, long long matched) {
    if (depth == assign_.size()) {
      if (matched > best_) best_ = matched;
      return;
    }
    if (matched + remaining_after_[depth] <= best_) return;
    for (std::size_t j = 0; j < used_.size(); ++j) {
      if (used_[j]) continue;
      used_[j] = true;
      assign_[depth] = static_cast<int>(j);
      long long gained = 0;
      std::vector<std::map<TripleKey, int>::iterator> taken;
      for (std::size_t t : settled_at_[depth]) {
        auto it = remaining_.find(
            key_under_mapping(m_.small.triples[t], assign_));
        if (it != remaining_.end() && it->second > 0) {
          --it->second;
          taken.push_back(it);
          ++gained;
        }
      }
      descend(depth + 1, matched + gained);
      for (auto it : taken) ++it->second;
      assign_[depth] = -1;
      used_[j] = false;
    }
  }

  const Matcher& m_;
  std::vector<std::vector<std::size_t>> settled_at_;
  std::vector<long long> remaining_after_;
  std::vector<int> assign_;
  std::vector<bool> used_;
  std::map<TripleKey, int> remaining_;
  long long best_ = 0;
};

// SplitMix64: tiny, well-mixed, and identical everywhere, unlike the
// standard library's distributions.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough index draw; the slight modulo bias is irrelevant here and
  // keeps the sequence platform-independent.
  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(next() % bound);
  }
};

std::vector<int> random_assign(std::size_t small_count, std::size_t large_count,
                               std::uint64_t seed) {
  std::vector<int> pool(large_count);
  for (std::size_t i = 0; i < large_count; ++i) pool[i] = static_cast<int>(i);
  SplitMix64 rng{seed};
  for (std::size_t i = large_count; i > 1; --i) {
    std::swap(pool[i - 1], pool[rng.below(i)]);
  }
  pool.resize(small_count);
  return pool;
}

long long climb(const Matcher& m, std::vector<int>& assign) {
  std::size_t k = assign.size();
  std::size_t n = m.large.vars.size();
  std::vector<bool> used(n, false);
  for (int j : assign) used[static_cast<std::size_t>(j)] = true;

  long long current = m.evaluate(assign);
  while (true) {
    long long best_gain = 0;
    enum class Move { None, Reassign, Swap } best_move = Move::None;
    std::size_t best_i = 0, best_j = 0;

    for (std::size_t i = 0; i < k; ++i) {
      int old = assign[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        assign[i] = static_cast<int>(j);
        long long gain = m.evaluate(assign) - current;
        assign[i] = old;
        if (gain > best_gain) {
          best_gain = gain;
          best_move = Move::Reassign;
          best_i = i;
          best_j = j;
        }
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        std::swap(assign[a], assign[b]);
        long long gain = m.evaluate(assign) - current;
        std::swap(assign[a], assign[b]);
        if (gain > best_gain) {
          best_gain = gain;
          best_move = Move::Swap;
          best_i = a;
          best_j = b;
        }
      }
    }

    if (best_move == Move::None) return current;
    if (best_move == Move::Reassign) {
      used[static_cast<std::size_t>(assign[best_i])] = false;
      assign[best_i] = static_cast<int>(best_j);
      used[best_j] = true;
    } else {
      std::swap(assign[best_i], assign[best_j]);
    }
    current += best_gain;
  }
}

}  // namespace

double SmatchScore::precision() const {
  if (test_total <= 0) return 0.0;
  return static_cast<double>(matched) / static_cast<double>(test_total);
}

double SmatchScore::recall() const {
  if (gold_total <= 0) return 0.0;
  return static_cast<double>(matched) / static_cast<double>(gold_total);
}

double SmatchScore::f() const {
  double p = precision();
  double r = recall();
  if (p + r <= 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

SmatchScore smatch_exact(const TripleSet& gold, const TripleSet& test,
                         int max_vars) {
  Matcher m = make_matcher(gold, test);
  if (m.small.vars.size() > static_cast<std::size_t>(max_vars)) {
    throw Error(ErrorKind::TooLarge,
                "smaller side has " + std::to_string(m.small.vars.size()) +
                    " variables, exact search allows " +
                    std::to_string(max_vars));
  }
  long long best = 0;
  if (!m.small.vars.empty()) {
    best = ExactSearch(m).run(m.evaluate(m.greedy_assign()));
  }
  return make_score(best, gold, test);
}

SmatchScore smatch_exact(const AmrGraph& gold, const AmrGraph& test,
                         int max_vars) {
  return smatch_exact(to_triples(gold), to_triples(test), max_vars);
}

SmatchScore smatch_hill(const TripleSet& gold, const TripleSet& test,
                        int restarts, std::uint64_t seed) {
  if (restarts < 1) {
    throw std::invalid_argument("restarts must be at least 1");
  }
  Matcher m = make_matcher(gold, test);
  std::size_t k = m.small.vars.size();
  std::size_t n = m.large.vars.size();
  long long best = 0;
  if (k > 0) {
    for (int r = 0; r < restarts; ++r) {
      std::vector<int> assign =
          r == 0 ? m.greedy_assign()
                 : random_assign(k, n, pair_seed(seed, static_cast<std::size_t>(r)));
      long long matched = climb(m, assign);
      if (matched > best) best = matched;
    }
  }
  return make_score(best, gold, test);
}

SmatchScore smatch_hill(const AmrGraph& gold, const AmrGraph& test,
                        int restarts, std::uint64_t seed) {
  return smatch_hill(to_triples(gold), to_triples(test), restarts, seed);
}

std::uint64_t pair_seed(std::uint64_t seed, std::size_t index) {
  return seed + static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ULL;
}

SmatchScore corpus_smatch(const std::vector<TripleSet>& gold,
                          const std::vector<TripleSet>& test, int restarts,
                          std::uint64_t seed, int jobs) {
  if (gold.size() != test.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " documents, test has " + std::to_string(test.size()));
  }
  std::vector<SmatchScore> scores = parallel_map(
      gold, jobs, [&](const TripleSet& g, std::size_t i) {
        return smatch_hill(g, test[i], restarts, pair_seed(seed, i));
      });
  SmatchScore total;
  for (const auto& score : scores) {
    total.matched += score.matched;
    total.gold_total += score.gold_total;
    total.test_total += score.test_total;
  }
  return total;
}

SmatchScore corpus_smatch(const std::vector<AmrGraph>& gold,
                          const std::vector<AmrGraph>& test, int restarts,
                          std::uint64_t seed, int jobs) {
  if (gold.size() != test.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " documents, test has " + std::to_string(test.size()));
  }
  std::vector<TripleSet> gold_triples;
  std::vector<TripleSet> test_triples;
  gold_triples.reserve(gold.size());
  test_triples.reserve(test.size());
  for (const auto& g : gold) gold_triples.push_back(to_triples(g));
  for (const auto& t : test) test_triples.push_back(to_triples(t));
  return corpus_smatch(gold_triples, test_triples, restarts, seed, jobs);
}

}  // namespace amrseq
