#include "fixtures.hpp"

#include "amrseq/penman.hpp"

namespace testsupport {

const char* const kExamplePenman =
    "(r / require-01\n"
    "    :ARG0 (i / induce-01\n"
    "        :ARG1 (c / cell)\n"
    "        :ARG2 (m / migrate-01\n"
    "            :ARG0 c))\n"
    "    :ARG1 (b / bind-01\n"
    "        :ARG1 (p / protein\n"
    "            :name (n / name\n"
    "                :op1 \"Crk\"))\n"
    "        :ARG2 (p2 / protein\n"
    "            :name (n2 / name\n"
    "                :op1 \"CAS\"))))";

const char* const kExampleTreeLine =
    "(require-01 :ARG0 (induce-01 :ARG1 (cell) :ARG2 (migrate-01 :ARG0 cell))"
    " :ARG1 (bind-01 :ARG1 (protein :name (name :op1 \"Crk\"))"
    " :ARG2 (protein :name (name :op1 \"CAS\"))))";

const char* const kReorderedTreeLine =
    "(require-01 :ARG1 (bind-01 :ARG1 (protein :name (name :op1 \"Crk\"))"
    " :ARG2 (protein :name (name :op1 \"CAS\")))"
    " :ARG0 (induce-01 :ARG1 (cell) :ARG2 (migrate-01 :ARG0 cell)))";

const char* const kExampleSentence =
    "Crk binding to CAS is required for the induction of cell migration";

const char* const kExampleAlignment =
    "5-5| 8-8|0 10-10|0.0 11-11|0.1 1-1|1 0-0|1.0 3-3|1.1";

const char* const kReorderedAlignment =
    "5-5| 1-1|0 0-0|0.0 3-3|0.1 8-8|1 10-10|1.0 11-11|1.1";

const char* const kToyGoldCorpus =
    "# ::id d1\n"
    "# ::snt A cell is not required.\n"
    "(r / require-01\n"
    "    :ARG0 (c / cell)\n"
    "    :polarity -)\n"
    "\n"
    "# ::id d2\n"
    "# ::snt Crk protein.\n"
    "(p / protein\n"
    "    :wiki \"Crk_protein\"\n"
    "    :name (n / name\n"
    "        :op1 \"Crk\"))\n"
    "\n"
    "# ::id d3\n"
    "# ::snt The protein binds itself.\n"
    "(b / bind-01\n"
    "    :ARG0 (p / protein)\n"
    "    :ARG1 p)\n";

const char* const kToyTestCorpus =
    "# ::id d1\n"
    "# ::snt A cell is not required.\n"
    "(r / require\n"
    "    :ARG0 (c / cell))\n"
    "\n"
    "# ::id d2\n"
    "# ::snt Crk protein.\n"
    "(p / protein\n"
    "    :wiki \"Crk_protein\"\n"
    "    :name (n / name\n"
    "        :op1 \"Crk\"))\n"
    "\n"
    "# ::id d3\n"
    "# ::snt The protein binds itself.\n"
    "(b / bind-01\n"
    "    :ARG0 (p / protein)\n"
    "    :ARG2 p)\n";

amrseq::AmrGraph example_graph() { return amrseq::parse_penman(kExamplePenman); }

amrseq::SeqTree example_tree() { return amrseq::text_to_tree(kExampleTreeLine); }

amrseq::SeqTree reordered_tree() {
  return amrseq::text_to_tree(kReorderedTreeLine);
}

amrseq::AmrGraph example_broken_reentrancy() {
  amrseq::AmrGraph graph = example_graph();
  graph.nodes["c2"] = "cell";
  for (auto& edge : graph.edges) {
    if (edge.source == "m" && edge.relation == "ARG0") {
      edge.target = amrseq::EdgeTarget::variable("c2");
    }
  }
  return graph;
}

}  // namespace testsupport
