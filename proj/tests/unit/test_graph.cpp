#include <doctest.h>

#include "amrseq/graph.hpp"
#include "support/checks.hpp"
#include "support/fixtures.hpp"

using namespace amrseq;
using testsupport::kind_of;

TEST_CASE("constant tokens: quoted strings, numbers, polarity, modes") {
  CHECK(is_constant_token("\"Crk\""));
  CHECK(is_constant_token("\"New York\""));
  CHECK(is_constant_token("-"));
  CHECK(is_constant_token("+"));
  CHECK(is_constant_token("42"));
  CHECK(is_constant_token("3.14"));
  CHECK(is_constant_token("-3.5"));
  CHECK(is_constant_token("+7"));
  CHECK(is_constant_token("imperative"));
  CHECK(is_constant_token("expressive"));
  CHECK(is_constant_token("interrogative"));

  CHECK_FALSE(is_constant_token("cell"));
  CHECK_FALSE(is_constant_token("bind-01"));
  CHECK_FALSE(is_constant_token("3.1.4"));
  CHECK_FALSE(is_constant_token("."));
  CHECK_FALSE(is_constant_token(""));
}

TEST_CASE("inverse relations end in -of with a nonempty base") {
  CHECK(is_inverse_relation("ARG0-of"));
  CHECK(is_inverse_relation("consist-of"));
  CHECK(is_inverse_relation("part-of"));
  CHECK(is_inverse_relation("prep-out-of"));

  CHECK_FALSE(is_inverse_relation("-of"));
  CHECK_FALSE(is_inverse_relation("of"));
  CHECK_FALSE(is_inverse_relation("ARG0"));
  CHECK_FALSE(is_inverse_relation(""));
}

TEST_CASE("quoting round trip") {
  CHECK(quote("New York") == "\"New York\"");
  CHECK(strip_quotes("\"New York\"") == "New York");
  CHECK(strip_quotes(quote("Crk")) == "Crk");
  CHECK(strip_quotes("plain") == "plain");
  CHECK(strip_quotes("\"\"").empty());
}

TEST_CASE("variable namer uses the concept's first letter, then suffixes") {
  VariableNamer namer;
  CHECK(namer.fresh("cell") == "c");
  CHECK(namer.fresh("cat") == "c2");
  CHECK(namer.fresh("city") == "c3");
  CHECK(namer.fresh("12th") == "x");
  CHECK(namer.fresh("xylophone") == "x2");
}

TEST_CASE("variable namer respects reserved names and upper case") {
  VariableNamer namer;
  namer.reserve("b");
  CHECK(namer.fresh("bind-01") == "b2");
  CHECK(namer.fresh("Beta") == "b3");
}

TEST_CASE("concept lookup returns empty for unknown variables") {
  AmrGraph graph;
  graph.root = "c";
  graph.nodes["c"] = "cell";
  CHECK(graph.concept_of("c") == "cell");
  CHECK(graph.concept_of("zz").empty());
}

TEST_CASE("attribute edges are counted separately") {
  CHECK(testsupport::example_graph().attribute_count() == 2);

  AmrGraph graph;
  graph.root = "c";
  graph.nodes["c"] = "cell";
  CHECK(graph.attribute_count() == 0);
  graph.edges.push_back({"c", "polarity", EdgeTarget::constant("-")});
  CHECK(graph.attribute_count() == 1);
}

TEST_CASE("validate accepts the running example") {
  CHECK(validate(testsupport::example_graph()).empty());
}

TEST_CASE("validate flags an undefined root") {
  AmrGraph graph;
  graph.root = "x";
  auto violations = validate(graph);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ErrorKind::UndefinedVariableReference);
}

TEST_CASE("validate flags undefined edge endpoints") {
  AmrGraph graph;
  graph.root = "c";
  graph.nodes["c"] = "cell";
  graph.edges.push_back({"c", "ARG0", EdgeTarget::variable("ghost")});
  auto violations = validate(graph);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ErrorKind::UndefinedVariableReference);
}

TEST_CASE("validate flags empty concepts and empty variables") {
  AmrGraph graph;
  graph.root = "c";
  graph.nodes["c"] = "";
  auto violations = validate(graph);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ErrorKind::EmptyConcept);

  AmrGraph unnamed;
  unnamed.root = "c";
  unnamed.nodes["c"] = "cell";
  unnamed.nodes[""] = "ghost";
  bool saw_unexpected = false;
  for (const auto& v : validate(unnamed)) {
    if (v.kind == ErrorKind::UnexpectedToken) saw_unexpected = true;
  }
  CHECK(saw_unexpected);
}

TEST_CASE("validate flags nodes unreachable in either direction") {
  AmrGraph graph;
  graph.root = "c";
  graph.nodes["c"] = "cell";
  graph.nodes["d"] = "dog";
  auto violations = validate(graph);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ErrorKind::Unreachable);
}

TEST_CASE("validate walks edges backwards for reachability") {
  AmrGraph graph;
  graph.root = "r";
  graph.nodes["r"] = "require-01";
  graph.nodes["x"] = "cell";
  graph.edges.push_back({"x", "ARG0", EdgeTarget::variable("r")});
  CHECK(validate(graph).empty());
}
