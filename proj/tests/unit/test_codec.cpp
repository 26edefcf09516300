#include <doctest.h>

#include <string>

#include "amrseq/codec.hpp"
#include "amrseq/penman.hpp"
#include "amrseq/seq_tree.hpp"
#include "amrseq/smatch.hpp"
#include "amrseq/triples.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace amrseq;

TEST_CASE("anonymizing the example graph yields the example tree") {
  SeqTree tree = anonymize(testsupport::example_graph());
  CHECK(tree == testsupport::example_tree());
  CHECK(tree_to_text(tree) == testsupport::kExampleTreeLine);
}

TEST_CASE("re-entrant targets become bare reference leaves") {
  SeqTree tree = anonymize(testsupport::example_graph());
  const SeqTree& ref = tree.children[0].subtree.children[1].subtree.children[0].subtree;
  CHECK(ref.is_ref);
  CHECK(ref.label == "cell");
  CHECK(ref.leaf());
}

TEST_CASE("wiki edges are dropped from the tree") {
  AmrGraph graph = parse_penman(
      "(p / protein :wiki \"Crk_protein\" :name (n / name :op1 \"Crk\"))");
  SeqTree tree = anonymize(graph);
  CHECK(tree_to_text(tree) == "(protein :name (name :op1 \"Crk\"))");
}

TEST_CASE("restoring the example line reproduces the example graph") {
  AmrGraph restored = restore(testsupport::kExampleTreeLine);
  AmrGraph original = testsupport::example_graph();
  CHECK(restored.root == original.root);
  CHECK(restored.nodes == original.nodes);
  CHECK(same_triples(to_triples(restored), to_triples(original)));
  CHECK(smatch_exact(original, restored, 16).f() == 1.0);
}

TEST_CASE("restore re-links reference leaves to the expanded node") {
  AmrGraph restored = restore(testsupport::kExampleTreeLine);
  bool arg1_to_c = false;
  bool arg0_to_c = false;
  for (const Edge& edge : restored.edges) {
    if (edge == Edge{"i", "ARG1", EdgeTarget::variable("c")}) arg1_to_c = true;
    if (edge == Edge{"m", "ARG0", EdgeTarget::variable("c")}) arg0_to_c = true;
  }
  CHECK(arg1_to_c);
  CHECK(arg0_to_c);
}

TEST_CASE("a childless duplicate concept merges into the first occurrence") {
  AmrGraph graph = restore("(alpha :ARG0 (beta :mod (gamma)) :ARG1 (beta))");
  CHECK(graph.nodes.size() == 3);
  bool merged = false;
  for (const Edge& edge : graph.edges) {
    if (edge == Edge{"a", "ARG1", EdgeTarget::variable("b")}) merged = true;
  }
  CHECK(merged);
}

TEST_CASE("duplicates with children stay separate nodes") {
  AmrGraph graph = restore("(alpha :ARG0 (beta :mod (gamma)) :ARG1 (beta :mod (delta)))");
  CHECK(graph.nodes.size() == 5);
  CHECK(graph.concept_of("b") == "beta");
  CHECK(graph.concept_of("b2") == "beta");
}

TEST_CASE("restore names variables from concept initials") {
  AmrGraph graph = restore("(cell :mod (cat))");
  CHECK(graph.root == "c");
  CHECK(graph.concept_of("c") == "cell");
  CHECK(graph.concept_of("c2") == "cat");
}

TEST_CASE("restore keeps attribute constants as constants") {
  AmrGraph graph = restore("(require-01 :polarity - :quant 42 :op1 \"Crk\")");
  CHECK(graph.nodes.size() == 1);
  CHECK(graph.attribute_count() == 3);
}

TEST_CASE("restore inverts -of relations to forward edges") {
  AmrGraph graph = restore("(alpha :ARG0-of (beta))");
  REQUIRE(graph.edges.size() == 1);
  CHECK(graph.edges[0] == Edge{"b", "ARG0", EdgeTarget::variable("a")});
}

TEST_CASE("anonymize writes backward-only nodes with -of relations") {
  AmrGraph graph = parse_penman("(a / alpha :ARG0-of (b / beta :mod (c / gamma)))");
  SeqTree tree = anonymize(graph);
  CHECK(tree_to_text(tree) == "(alpha :ARG0-of (beta :mod (gamma)))");
  CHECK(smatch_exact(graph, restore(tree)).f() == 1.0);
}

TEST_CASE("random graphs with distinct concepts survive the codec round trip") {
  std::mt19937_64 rng(98001);
  for (int i = 0; i < 100; ++i) {
    AmrGraph graph = testsupport::random_graph(rng, 8);
    AmrGraph back = restore(tree_to_text(anonymize(graph)));
    CHECK(smatch_exact(graph, back).f() == 1.0);
  }
}
