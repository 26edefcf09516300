#include <doctest.h>

#include <string>
#include <vector>

#include "amrseq/corpus.hpp"
#include "amrseq/errors.hpp"
#include "amrseq/evaluate.hpp"
#include "support/checks.hpp"
#include "support/fixtures.hpp"

using namespace amrseq;
using testsupport::kind_of;

namespace {

std::vector<Document> gold_docs() {
  return parse_corpus(testsupport::kToyGoldCorpus).documents;
}

std::vector<Document> test_docs() {
  return parse_corpus(testsupport::kToyTestCorpus).documents;
}

}  // namespace

TEST_CASE("documents align by id regardless of order") {
  std::vector<Document> gold = gold_docs();
  std::vector<Document> shuffled = {gold[2], gold[0], gold[1]};
  std::vector<Document> aligned = align_by_id(gold, shuffled);
  REQUIRE(aligned.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(aligned[i].id == gold[i].id);
}

TEST_CASE("alignment by id rejects missing or extra documents") {
  std::vector<Document> gold = gold_docs();
  std::vector<Document> short_list = {gold[0], gold[1]};
  CHECK(kind_of([&] { align_by_id(gold, short_list); }) == ErrorKind::IdMismatch);

  std::vector<Document> renamed = gold;
  renamed[2].id = "mystery";
  CHECK(kind_of([&] { align_by_id(gold, renamed); }) == ErrorKind::IdMismatch);
}

TEST_CASE("duplicate ids fall back to positional pairing") {
  std::vector<Document> gold = gold_docs();
  for (auto& doc : gold) doc.id = "same";
  std::vector<Document> test = {gold[1], gold[0], gold[2]};
  std::vector<Document> aligned = align_by_id(gold, test);
  REQUIRE(aligned.size() == 3);
  CHECK(aligned[0].graph.root == test[0].graph.root);
}

TEST_CASE("the fixed categories appear in report order") {
  FineGrainedReport report = fine_grained(gold_docs(), test_docs(), 4, 11);
  std::vector<std::string> names;
  for (const auto& [name, score] : report.categories) names.push_back(name);
  CHECK(names == std::vector<std::string>{
                     "Smatch", "Unlabeled", "No WSD", "Named Entities",
                     "Wikification", "Negation", "Concepts", "Reentrancies",
                     "SRL"});
  CHECK(kind_of([&] { report.at("Nonsense"); }) == ErrorKind::IdMismatch);
}

TEST_CASE("a corpus scores perfectly against itself") {
  FineGrainedReport report = fine_grained(gold_docs(), gold_docs(), 4, 11);
  for (const auto& [name, score] : report.categories) {
    CHECK(score.f() == 1.0);
    CHECK_FALSE(score.empty);
  }
}

TEST_CASE("categories with nothing on either side are flagged empty") {
  Corpus plain = parse_corpus("# ::id only\n(c / cell)\n");
  FineGrainedReport report =
      fine_grained(plain.documents, plain.documents, 4, 11);
  CHECK(report.at("Smatch").f() == 1.0);
  CHECK_FALSE(report.at("Smatch").empty);
  CHECK(report.at("Named Entities").empty);
  CHECK(report.at("Wikification").empty);
  CHECK(report.at("Negation").empty);
  CHECK(report.at("Reentrancies").empty);
  CHECK(report.at("SRL").empty);
  CHECK(report.at("Named Entities").f() == 1.0);
}

TEST_CASE("the toy corpus reproduces its hand-computed category scores") {
  FineGrainedReport report = fine_grained(gold_docs(), test_docs(), 4, 11);
  CHECK(report.at("Smatch").f() == doctest::Approx(24.0 / 31.0).epsilon(1e-9));
  CHECK(report.at("Unlabeled").f() == doctest::Approx(26.0 / 31.0).epsilon(1e-9));
  CHECK(report.at("No WSD").f() == doctest::Approx(28.0 / 31.0).epsilon(1e-9));
  CHECK(report.at("Named Entities").f() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.at("Wikification").f() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.at("Negation").f() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK_FALSE(report.at("Negation").empty);
  CHECK(report.at("Concepts").f() == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
  CHECK(report.at("Reentrancies").f() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(report.at("SRL").f() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("dropping a word sense only hurts the sense-aware categories") {
  Corpus gold = parse_corpus("# ::id d\n(r / require-01 :ARG0 (c / cell))\n");
  Corpus test = parse_corpus("# ::id d\n(r / require :ARG0 (c / cell))\n");
  FineGrainedReport report =
      fine_grained(gold.documents, test.documents, 4, 11);
  CHECK(report.at("No WSD").f() == 1.0);
  CHECK(report.at("Smatch").f() < 1.0);
  CHECK(report.at("Unlabeled").f() < 1.0);
}

TEST_CASE("mismatched corpus sizes are rejected") {
  CHECK(kind_of([&] {
          fine_grained(gold_docs(), std::vector<Document>{gold_docs()[0]}, 4, 11);
        }) == ErrorKind::IdMismatch);
}

TEST_CASE("fine-grained scoring is identical across job counts") {
  FineGrainedReport serial = fine_grained(gold_docs(), test_docs(), 4, 11, 1);
  FineGrainedReport threaded = fine_grained(gold_docs(), test_docs(), 4, 11, 8);
  REQUIRE(serial.categories.size() == threaded.categories.size());
  for (std::size_t i = 0; i < serial.categories.size(); ++i) {
    CHECK(serial.categories[i].second.f() == threaded.categories[i].second.f());
  }
}

TEST_CASE("length buckets are cumulative and sourced from tokens") {
  std::string tok_line = "# ::tok";
  for (int i = 0; i < 25; ++i) tok_line += " w";
  Corpus gold = parse_corpus(
      "# ::id a ::snt one two three\n(c / cell)\n"
      "\n"
      "# ::id b ::snt w w w w w w w w w w w w\n(d / dog)\n"
      "\n"
      "# ::id c ::snt short\n" +
      tok_line + "\n(e / eel)\n");
  REQUIRE(gold.errors.empty());
  std::vector<LengthBucketRow> rows =
      length_buckets(gold.documents, gold.documents, {10, 20, 30}, 4, 11);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].max_len == 10);
  CHECK(rows[0].doc_count == 1);
  CHECK(rows[1].doc_count == 2);
  CHECK(rows[2].doc_count == 3);
  for (const auto& row : rows) {
    REQUIRE(row.f.has_value());
    CHECK(*row.f == 1.0);
  }
}

TEST_CASE("empty length buckets report no score") {
  Corpus gold = parse_corpus("# ::id a ::snt one two three\n(c / cell)\n");
  std::vector<LengthBucketRow> rows =
      length_buckets(gold.documents, gold.documents, {2, 10}, 4, 11);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].doc_count == 0);
  CHECK_FALSE(rows[0].f.has_value());
  CHECK(rows[1].doc_count == 1);
}
