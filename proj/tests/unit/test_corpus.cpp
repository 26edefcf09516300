#include <doctest.h>

#include <sstream>
#include <string>

#include "amrseq/corpus.hpp"
#include "support/fixtures.hpp"

using namespace amrseq;

TEST_CASE("html tags are stripped and spaces collapsed") {
  CHECK(strip_html("A <b>cell</b>.") == "A cell.");
  CHECK(strip_html("<a href=\"x\"> left <i> right </i> </a>") == "left right");
  CHECK(strip_html("no markup") == "no markup");
  CHECK(strip_html("").empty());
  CHECK(strip_html("a < b") == "a < b");
}

TEST_CASE("whitespace tokenization splits on any blank run") {
  CHECK(whitespace_tokens("a  b\tc\n d") == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(whitespace_tokens("  ").empty());
  CHECK(whitespace_tokens("").empty());
}

TEST_CASE("blocks are separated by blank lines and keep line numbers") {
  auto blocks = split_blocks("one\ntwo\n\n\nthree\n");
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].text == "one\ntwo\n");
  CHECK(blocks[0].first_line == 1);
  CHECK(blocks[1].text == "three\n");
  CHECK(blocks[1].first_line == 5);
}

TEST_CASE("metadata lines fill the document and its graph") {
  Corpus corpus = parse_corpus(
      "# ::id d1 ::snt A <b>cell</b> moved.\n"
      "# ::tok A cell moved .\n"
      "# ::save 2017-01-01\n"
      "(m / move-02 :ARG0 (c / cell))\n");
  REQUIRE(corpus.errors.empty());
  REQUIRE(corpus.documents.size() == 1);
  const Document& doc = corpus.documents[0];
  CHECK(doc.id == "d1");
  CHECK(doc.sentence == "A cell moved.");
  CHECK(doc.graph.meta.id == "d1");
  CHECK(doc.graph.meta.sentence == "A cell moved.");
  CHECK(doc.graph.meta.tokens ==
        std::vector<std::string>{"A", "cell", "moved", "."});
  REQUIRE(doc.graph.meta.extra.size() == 1);
  CHECK(doc.graph.meta.extra[0].first == "save");
  CHECK(doc.graph.meta.extra[0].second == "2017-01-01");
  CHECK(doc.graph.root == "m");
}

TEST_CASE("a malformed block is recorded without losing its neighbors") {
  Corpus corpus = parse_corpus(
      "# ::id good1\n(c / cell)\n"
      "\n"
      "# ::id bad\n(c / cell\n"
      "\n"
      "# ::id good2\n(d / dog)\n");
  REQUIRE(corpus.documents.size() == 2);
  CHECK(corpus.documents[0].id == "good1");
  CHECK(corpus.documents[1].id == "good2");
  REQUIRE(corpus.errors.size() == 1);
  CHECK(corpus.errors[0].id == "bad");
  CHECK(corpus.errors[0].line == 5);
  CHECK_FALSE(corpus.errors[0].message.empty());
}

TEST_CASE("the toy corpora parse cleanly") {
  Corpus gold = parse_corpus(testsupport::kToyGoldCorpus);
  CHECK(gold.errors.empty());
  CHECK(gold.documents.size() == 3);
  Corpus test = parse_corpus(testsupport::kToyTestCorpus);
  CHECK(test.errors.empty());
  CHECK(test.documents.size() == 3);
}

TEST_CASE("writing and reparsing a corpus preserves documents") {
  Corpus gold = parse_corpus(testsupport::kToyGoldCorpus);
  std::ostringstream out;
  write_corpus(out, gold.documents);
  Corpus again = parse_corpus(out.str());
  REQUIRE(again.errors.empty());
  REQUIRE(again.documents.size() == gold.documents.size());
  for (std::size_t i = 0; i < gold.documents.size(); ++i) {
    CHECK(again.documents[i].id == gold.documents[i].id);
    CHECK(again.documents[i].sentence == gold.documents[i].sentence);
    CHECK(again.documents[i].graph.root == gold.documents[i].graph.root);
    CHECK(again.documents[i].graph.nodes == gold.documents[i].graph.nodes);
    CHECK(again.documents[i].graph.edges == gold.documents[i].graph.edges);
  }
}

TEST_CASE("an empty file yields an empty corpus") {
  Corpus corpus = parse_corpus("");
  CHECK(corpus.documents.empty());
  CHECK(corpus.errors.empty());
}
