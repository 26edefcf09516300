#include <doctest.h>

#include <algorithm>

#include "amrseq/penman.hpp"
#include "amrseq/triples.hpp"
#include "support/fixtures.hpp"

using namespace amrseq;

TEST_CASE("a lone node yields its instance and top triples") {
  TripleSet set = to_triples(parse_penman("(c / cell)"));
  REQUIRE(set.size() == 2);
  CHECK(set.count(TripleKind::Instance) == 1);
  CHECK(set.count(TripleKind::Top) == 1);
}

TEST_CASE("the running example yields twenty-one triples") {
  TripleSet set = to_triples(testsupport::example_graph());
  CHECK(set.size() == 21);
  CHECK(set.count(TripleKind::Instance) == 9);
  CHECK(set.count(TripleKind::Relation) == 9);
  CHECK(set.count(TripleKind::Attribute) == 2);
  CHECK(set.count(TripleKind::Top) == 1);
}

TEST_CASE("the top triple carries the root concept as its value") {
  TripleSet set = to_triples(parse_penman("(c / cell)"));
  auto it = std::find_if(set.triples.begin(), set.triples.end(),
                         [](const Triple& t) { return t.kind == TripleKind::Top; });
  REQUIRE(it != set.triples.end());
  CHECK(it->source == "c");
  CHECK(it->value == "cell");
}

TEST_CASE("triples print in functor notation") {
  CHECK(to_string({TripleKind::Instance, "c", "instance", "cell"}) == "instance(c, cell)");
  CHECK(to_string({TripleKind::Relation, "r", "ARG0", "i"}) == "ARG0(r, i)");
  CHECK(to_string({TripleKind::Attribute, "r", "polarity", "-"}) == "polarity(r, -)");
  CHECK(to_string({TripleKind::Top, "r", "TOP", "require-01"}) == "TOP(r)");
}

TEST_CASE("triple comparison is order insensitive") {
  AmrGraph graph = testsupport::example_graph();
  AmrGraph shuffled = graph;
  std::reverse(shuffled.edges.begin(), shuffled.edges.end());
  CHECK(same_triples(to_triples(graph), to_triples(shuffled)));
}

TEST_CASE("triple comparison is a multiset, not a set") {
  TripleSet once;
  once.triples.push_back({TripleKind::Relation, "a", "mod", "b"});
  TripleSet twice = once;
  twice.triples.push_back({TripleKind::Relation, "a", "mod", "b"});
  CHECK_FALSE(same_triples(once, twice));
}

TEST_CASE("variables are listed sorted and distinct") {
  TripleSet set = to_triples(testsupport::example_graph());
  std::vector<std::string> expected = {"b", "c", "i", "m", "n", "n2", "p", "p2", "r"};
  CHECK(set.variables() == expected);
}

TEST_CASE("attribute constants are not variables") {
  TripleSet set = to_triples(parse_penman("(c / cell :polarity - :quant 3)"));
  CHECK(set.variables() == std::vector<std::string>{"c"});
}
