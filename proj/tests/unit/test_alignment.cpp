#include <doctest.h>

#include <string>

#include "amrseq/alignment.hpp"
#include "amrseq/errors.hpp"
#include "amrseq/seq_tree.hpp"
#include "support/checks.hpp"
#include "support/fixtures.hpp"

using namespace amrseq;
using testsupport::kind_of;

namespace {

SeqTree small_tree() {
  return text_to_tree("(alpha :x (beta :y (gamma)) :z (delta))");
}

}  // namespace

TEST_CASE("paths format as dotted indices with the root empty") {
  CHECK(format_path({}).empty());
  CHECK(format_path({0}) == "0");
  CHECK(format_path({1, 0, 2}) == "1.0.2");
}

TEST_CASE("node lookup follows child indices") {
  SeqTree tree = small_tree();
  CHECK(node_at(tree, {})->label == "alpha");
  CHECK(node_at(tree, {0})->label == "beta");
  CHECK(node_at(tree, {0, 0})->label == "gamma");
  CHECK(node_at(tree, {1})->label == "delta");
  CHECK(node_at(tree, {2}) == nullptr);
  CHECK(node_at(tree, {0, 0, 0}) == nullptr);
}

TEST_CASE("alignment items are span|path") {
  Alignment alignment = parse_alignments("0-1| 3-3|0.0 2-2|1", small_tree());
  REQUIRE(alignment.spans.size() == 3);
  CHECK(alignment.spans.at({}) == TokenSpan{0, 1});
  CHECK(alignment.spans.at({0, 0}) == TokenSpan{3, 3});
  CHECK(alignment.spans.at({1}) == TokenSpan{2, 2});
}

TEST_CASE("one span may cover several paths joined by plus") {
  Alignment alignment = parse_alignments("4-5|0+0.0", small_tree());
  REQUIRE(alignment.spans.size() == 2);
  CHECK(alignment.spans.at({0}) == TokenSpan{4, 5});
  CHECK(alignment.spans.at({0, 0}) == TokenSpan{4, 5});
}

TEST_CASE("the last item for a path wins") {
  Alignment alignment = parse_alignments("1-1|0 2-2|0", small_tree());
  REQUIRE(alignment.spans.size() == 1);
  CHECK(alignment.spans.at({0}) == TokenSpan{2, 2});
}

TEST_CASE("comment lines and blank lines are skipped") {
  Alignment alignment =
      parse_alignments("# word alignments\n\n1-1|0\n", small_tree());
  CHECK(alignment.spans.size() == 1);
  CHECK(parse_alignments("", small_tree()).empty());
}

TEST_CASE("bad spans are rejected") {
  SeqTree tree = small_tree();
  CHECK(kind_of([&] { parse_alignments("11|0", tree); }) == ErrorKind::BadSpan);
  CHECK(kind_of([&] { parse_alignments("1-x|0", tree); }) == ErrorKind::BadSpan);
  CHECK(kind_of([&] { parse_alignments("3-1|0", tree); }) == ErrorKind::BadSpan);
  CHECK(kind_of([&] { parse_alignments("-2-1|0", tree); }) == ErrorKind::BadSpan);
  CHECK(kind_of([&] { parse_alignments("1-1", tree); }) == ErrorKind::BadSpan);
}

TEST_CASE("paths outside the tree are rejected") {
  SeqTree tree = small_tree();
  CHECK(kind_of([&] { parse_alignments("1-1|5", tree); }) == ErrorKind::BadPath);
  CHECK(kind_of([&] { parse_alignments("1-1|0.0.0", tree); }) == ErrorKind::BadPath);
  CHECK(kind_of([&] { parse_alignments("1-1|a", tree); }) == ErrorKind::BadPath);
}

TEST_CASE("formatting alignments is stable and reparsable") {
  SeqTree tree = small_tree();
  Alignment alignment = parse_alignments("3-3|0.0 0-1| 2-2|1", tree);
  std::string text = format_alignments(alignment);
  CHECK(text == "0-1| 3-3|0.0 2-2|1");
  Alignment again = parse_alignments(text, tree);
  CHECK(again.spans == alignment.spans);
}

TEST_CASE("the example alignments parse against their trees") {
  Alignment original =
      parse_alignments(testsupport::kExampleAlignment, testsupport::example_tree());
  CHECK(original.spans.size() == 7);
  Alignment reordered = parse_alignments(testsupport::kReorderedAlignment,
                                         testsupport::reordered_tree());
  CHECK(reordered.spans.size() == 7);
}
