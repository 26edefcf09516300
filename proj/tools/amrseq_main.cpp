// amrseq: command-line surface over the AMR pipeline library.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amrseq/alignment.hpp"
#include "amrseq/codec.hpp"
#include "amrseq/corpus.hpp"
#include "amrseq/ensemble.hpp"
#include "amrseq/errors.hpp"
#include "amrseq/evaluate.hpp"
#include "amrseq/graph.hpp"
#include "amrseq/parallel.hpp"
#include "amrseq/penman.hpp"
#include "amrseq/postprocess.hpp"
#include "amrseq/reorder.hpp"
#include "amrseq/seq_tree.hpp"
#include "amrseq/smatch.hpp"
#include "amrseq/trainer_config.hpp"
#include "amrseq/triples.hpp"
#include "amrseq/vocab.hpp"
#include "amrseq/wiki.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace amrseq;

// Signals an exit code after the command already reported its findings.
struct CommandFailure {
  int code;
};

std::string fixed(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, value);
  return buf;
}

std::string csv_field(std::string_view raw) {
  if (raw.find_first_of(",\"\n") == std::string_view::npos) return std::string(raw);
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::string text = read_text_file(path);
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  return lines;
}

// Reports malformed blocks and fails: every downstream command pairs
// documents positionally or by id, so silently dropping blocks would
// misalign everything after the first bad one.
std::vector<Document> load_corpus(const std::string& path) {
  Corpus corpus = read_corpus(path);
  if (!corpus.errors.empty()) {
    for (const auto& err : corpus.errors) {
      std::cerr << path << ":" << err.line << ": " << err.message;
      if (!err.id.empty()) std::cerr << " [" << err.id << "]";
      std::cerr << "\n";
    }
    throw CommandFailure{1};
  }
  return std::move(corpus.documents);
}

std::vector<AmrGraph> graphs_of(const std::vector<Document>& docs) {
  std::vector<AmrGraph> graphs;
  graphs.reserve(docs.size());
  for (const auto& doc : docs) graphs.push_back(doc.graph);
  return graphs;
}

// Output sink: stdout by default, a file when --output was given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorKind::IoError, "cannot write " + path);
      out_ = &file_;
    }
  }

  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

const char* kind_name(TripleKind kind) {
  switch (kind) {
    case TripleKind::Instance: return "instance";
    case TripleKind::Attribute: return "attribute";
    case TripleKind::Relation: return "relation";
    case TripleKind::Top: return "top";
  }
  return "?";
}

std::string doc_label(const Document& doc, std::size_t index) {
  return doc.id.empty() ? std::to_string(index) : doc.id;
}

// ---------------------------------------------------------------- validate

struct ValidateOpts {
  std::string input;
};

void run_validate(const ValidateOpts& opts) {
  Corpus corpus = read_corpus(opts.input);
  int problems = 0;
  for (const auto& err : corpus.errors) {
    std::cout << opts.input << ":" << err.line << ": " << err.message;
    if (!err.id.empty()) std::cout << " [" << err.id << "]";
    std::cout << "\n";
    ++problems;
  }
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    const Document& doc = corpus.documents[i];
    for (const auto& violation : validate(doc.graph)) {
      std::cout << doc_label(doc, i) << ": " << violation.message << "\n";
      ++problems;
    }
  }
  std::size_t blocks = corpus.documents.size() + corpus.errors.size();
  std::cout << "checked " << blocks << " block(s), " << problems
            << " problem(s)\n";
  if (problems > 0) throw CommandFailure{1};
}

// ----------------------------------------------------------------- triples

struct TriplesOpts {
  std::string input;
  std::string output;
  std::string format = "text";
};

void run_triples(const TriplesOpts& opts) {
  auto docs = load_corpus(opts.input);
  Sink sink(opts.output);
  std::ostream& out = sink.stream();

  if (opts.format == "csv") {
    out << "doc,kind,source,relation,value\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
      for (const auto& t : to_triples(docs[i].graph).triples) {
        out << csv_field(doc_label(docs[i], i)) << "," << kind_name(t.kind)
            << "," << csv_field(t.source) << "," << csv_field(t.relation)
            << "," << csv_field(t.value) << "\n";
      }
    }
    return;
  }
  if (opts.format == "json") {
    json report = json::array();
    for (std::size_t i = 0; i < docs.size(); ++i) {
      json entry;
      entry["id"] = docs[i].id;
      json triples = json::array();
      for (const auto& t : to_triples(docs[i].graph).triples) {
        triples.push_back({{"kind", kind_name(t.kind)},
                           {"source", t.source},
                           {"relation", t.relation},
                           {"value", t.value}});
      }
      entry["triples"] = std::move(triples);
      report.push_back(std::move(entry));
    }
    out << report.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out << "\n";
    for (const auto& t : to_triples(docs[i].graph).triples) {
      out << to_string(t) << "\n";
    }
  }
}

// --------------------------------------------------------------- anonymize

struct AnonymizeOpts {
  std::string corpus;
  std::string output;
  std::string sentences_out;
  bool indent = false;
};

void run_anonymize(const AnonymizeOpts& opts) {
  auto docs = load_corpus(opts.corpus);
  Sink sink(opts.output);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (opts.indent && i > 0) sink.stream() << "\n";
    sink.stream() << tree_to_text(anonymize(docs[i].graph), opts.indent)
                  << "\n";
  }
  if (!opts.sentences_out.empty()) {
    std::string text;
    for (const auto& doc : docs) {
      text += doc.sentence;
      text += '\n';
    }
    write_text_file(opts.sentences_out, text);
  }
}

// ----------------------------------------------------------------- restore

struct RestoreOpts {
  std::string input;
  std::string output;
};

void run_restore(const RestoreOpts& opts) {
  auto lines = read_lines(opts.input);
  Sink sink(opts.output);
  bool first = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string::npos) continue;
    AmrGraph graph;
    try {
      graph = restore(lines[i]);
    } catch (const Error& e) {
      throw Error(e.kind(),
                  opts.input + ":" + std::to_string(i + 1) + ": " + e.what());
    }
    if (!first) sink.stream() << "\n";
    first = false;
    sink.stream() << serialize_penman(graph, true) << "\n";
  }
}

// ----------------------------------------------------------------- augment

struct AugmentOpts {
  std::string corpus;
  std::string alignments;
  std::string output;
};

void run_augment(const AugmentOpts& opts) {
  auto docs = load_corpus(opts.corpus);
  std::vector<std::string> lines;
  for (const auto& line : read_lines(opts.alignments)) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() != docs.size()) {
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(docs.size()) + " documents but " +
                    std::to_string(lines.size()) + " alignment lines");
  }
  std::vector<std::pair<Document, Alignment>> pairs;
  pairs.reserve(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    SeqTree tree = anonymize(docs[i].graph);
    Alignment alignment;
    try {
      alignment = parse_alignments(lines[i], tree);
    } catch (const Error& e) {
      throw Error(e.kind(), opts.alignments + ", document " +
                                doc_label(docs[i], i) + ": " + e.what());
    }
    pairs.emplace_back(docs[i], std::move(alignment));
  }
  auto augmented = augment_corpus(pairs);
  Sink sink(opts.output);
  write_corpus(sink.stream(), augmented);
}

// ------------------------------------------------------------- prune/repair

struct TreeLinesOpts {
  std::string input;
  std::string output;
  bool use_default = false;  // repair only
};

void run_prune(const TreeLinesOpts& opts) {
  auto lines = read_lines(opts.input);
  Sink sink(opts.output);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string::npos) continue;
    try {
      sink.stream() << tree_to_text(prune(text_to_tree(lines[i]))) << "\n";
    } catch (const Error& e) {
      throw Error(e.kind(),
                  opts.input + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
}

void run_repair(const TreeLinesOpts& opts) {
  auto lines = read_lines(opts.input);
  Sink sink(opts.output);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      sink.stream() << repair(lines[i]) << "\n";
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Unrepairable && opts.use_default) {
        sink.stream() << tree_to_text(default_amr()) << "\n";
        continue;
      }
      throw Error(e.kind(),
                  opts.input + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
}

// ------------------------------------------------------------ wikification

struct WikifyOpts {
  std::string corpus;
  std::string table;
  std::string output;
  double threshold = 0.5;
};

void run_wikify(const WikifyOpts& opts) {
  auto docs = load_corpus(opts.corpus);
  WikiTable table = load_wiki_table(opts.table);
  for (auto& doc : docs) doc.graph = wikify(doc.graph, table, opts.threshold);
  Sink sink(opts.output);
  write_corpus(sink.stream(), docs);
}

struct BuildWikiOpts {
  std::string gold;
  std::string output;
};

void run_build_wiki_table(const BuildWikiOpts& opts) {
  auto docs = load_corpus(opts.gold);
  save_wiki_table(build_wiki_table(docs), opts.output);
}

// ------------------------------------------------------------------ smatch

struct SmatchOpts {
  std::string gold;
  std::string test;
  std::string format = "text";
  std::uint64_t seed = 0;
  int restarts = kDefaultRestarts;
  int max_vars = kDefaultMaxVars;
  int jobs = 1;
  bool exact = false;
};

void print_score(const SmatchScore& score, const std::string& format) {
  if (format == "csv") {
    std::cout << "metric,value\n"
              << "precision," << fixed(score.precision(), 6) << "\n"
              << "recall," << fixed(score.recall(), 6) << "\n"
              << "f," << fixed(score.f(), 6) << "\n";
    return;
  }
  if (format == "json") {
    json report;
    report["matched"] = score.matched;
    report["gold_total"] = score.gold_total;
    report["test_total"] = score.test_total;
    report["precision"] = score.precision();
    report["recall"] = score.recall();
    report["f"] = score.f();
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << "P " << fixed(score.precision(), 4) << "\n"
            << "R " << fixed(score.recall(), 4) << "\n"
            << "F " << fixed(score.f(), 4) << "\n";
}

void run_smatch(const SmatchOpts& opts) {
  auto gold = load_corpus(opts.gold);
  auto test = align_by_id(gold, load_corpus(opts.test));
  SmatchScore score;
  if (opts.exact) {
    auto gold_graphs = graphs_of(gold);
    auto scores = parallel_map(
        gold_graphs, opts.jobs, [&](const AmrGraph& g, std::size_t i) {
          return smatch_exact(g, test[i].graph, opts.max_vars);
        });
    for (const auto& s : scores) {
      score.matched += s.matched;
      score.gold_total += s.gold_total;
      score.test_total += s.test_total;
    }
  } else {
    score = corpus_smatch(graphs_of(gold), graphs_of(test), opts.restarts,
                          opts.seed, opts.jobs);
  }
  print_score(score, opts.format);
}

// ---------------------------------------------------------------- evaluate

struct EvaluateOpts {
  std::string gold;
  std::string test;
  std::string format = "text";
  std::uint64_t seed = 0;
  int restarts = kDefaultRestarts;
  int jobs = 1;
};

void run_evaluate(const EvaluateOpts& opts) {
  auto gold = load_corpus(opts.gold);
  auto test = align_by_id(gold, load_corpus(opts.test));
  FineGrainedReport report =
      fine_grained(gold, test, opts.restarts, opts.seed, opts.jobs);

  if (opts.format == "csv") {
    std::cout << "category,f\n";
    for (const auto& [name, score] : report.categories) {
      std::cout << csv_field(name) << "," << fixed(score.f(), 6) << "\n";
    }
    return;
  }
  if (opts.format == "json") {
    json rows = json::array();
    for (const auto& [name, score] : report.categories) {
      rows.push_back(
          {{"category", name}, {"f", score.f()}, {"empty", score.empty}});
    }
    std::cout << rows.dump(2) << "\n";
    return;
  }
  for (const auto& [name, score] : report.categories) {
    std::cout << name << std::string(16 - name.size(), ' ')
              << fixed(score.f(), 4);
    if (score.empty) std::cout << " (empty)";
    std::cout << "\n";
  }
}

// ----------------------------------------------------------- length-report

struct LengthOpts {
  std::string gold;
  std::string test;
  std::string format = "text";
  std::vector<int> edges = {10, 20, 30, 40, 50};
  std::uint64_t seed = 0;
  int restarts = kDefaultRestarts;
  int jobs = 1;
};

void run_length_report(const LengthOpts& opts) {
  auto gold = load_corpus(opts.gold);
  auto test = align_by_id(gold, load_corpus(opts.test));
  auto rows = length_buckets(gold, test, opts.edges, opts.restarts, opts.seed,
                             opts.jobs);

  if (opts.format == "json") {
    json report = json::array();
    for (const auto& row : rows) {
      json entry;
      entry["max_len"] = row.max_len;
      entry["count"] = row.doc_count;
      if (row.f) {
        entry["f"] = *row.f;
      } else {
        entry["f"] = nullptr;
      }
      report.push_back(std::move(entry));
    }
    std::cout << report.dump(2) << "\n";
    return;
  }
  bool csv = opts.format == "csv";
  std::cout << (csv ? "max_len,count,f\n" : "max_len count f\n");
  for (const auto& row : rows) {
    std::string f_field =
        row.f ? fixed(*row.f, csv ? 6 : 4) : (csv ? "" : "-");
    char sep = csv ? ',' : ' ';
    std::cout << row.max_len << sep << row.doc_count << sep << f_field << "\n";
  }
}

// ------------------------------------------------------- multi-run loading

struct RunsOpts {
  std::vector<std::string> files;
  std::vector<std::string> names;
};

std::string file_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

// Aligns every run to the first run's document order.
std::vector<ParserRun> load_runs(const RunsOpts& opts) {
  std::vector<std::string> names = opts.names;
  if (names.empty()) {
    for (const auto& file : opts.files) names.push_back(file_stem(file));
  }
  if (names.size() != opts.files.size()) {
    throw CLI::ValidationError("--parsers",
                               "need one name per run file");
  }
  if (std::set<std::string>(names.begin(), names.end()).size() !=
      names.size()) {
    throw CLI::ValidationError(
        "--parsers", "duplicate parser names; pass distinct --parsers");
  }
  std::vector<ParserRun> runs;
  runs.reserve(opts.files.size());
  for (std::size_t i = 0; i < opts.files.size(); ++i) {
    runs.push_back({names[i], load_corpus(opts.files[i])});
  }
  for (std::size_t i = 1; i < runs.size(); ++i) {
    runs[i].docs = align_by_id(runs[0].docs, runs[i].docs);
  }
  return runs;
}

// ---------------------------------------------------------------- ensemble

struct EnsembleOpts {
  RunsOpts runs;
  std::string output;
  std::string csv;
  std::uint64_t seed = 0;
  int restarts = kDefaultRestarts;
  int max_vars = kDefaultMaxVars;
  int jobs = 1;
};

void run_ensemble(const EnsembleOpts& opts) {
  auto runs = load_runs(opts.runs);
  const auto& ref = runs[0].docs;

  auto selections =
      parallel_map(ref, opts.jobs, [&](const Document& doc, std::size_t i) {
        CandidateSet cands;
        cands.id = doc.id;
        for (const auto& run : runs) {
          cands.candidates.emplace_back(run.parser, run.docs[i].graph);
        }
        return select(cands, opts.restarts, pair_seed(opts.seed, i),
                      opts.max_vars);
      });

  std::vector<Document> chosen;
  chosen.reserve(ref.size());
  std::vector<int> counts(runs.size(), 0);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    chosen.push_back(runs[selections[i].index].docs[i]);
    ++counts[selections[i].index];
  }
  if (!opts.output.empty()) write_corpus(opts.output, chosen);
  if (!opts.csv.empty()) {
    std::ofstream out(opts.csv, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + opts.csv);
    out << "id,choice,score\n";
    for (std::size_t i = 0; i < ref.size(); ++i) {
      const Selection& sel = selections[i];
      double row_sum = sel.row_sums.empty() ? 0.0 : sel.row_sums[sel.index];
      out << csv_field(doc_label(ref[i], i)) << ","
          << csv_field(runs[sel.index].parser) << "," << fixed(row_sum, 6)
          << "\n";
    }
  }
  for (std::size_t p = 0; p < runs.size(); ++p) {
    std::cout << runs[p].parser << " " << counts[p] << "\n";
  }
}

// ------------------------------------------------------------------ oracle

struct OracleOpts {
  RunsOpts runs;
  std::string gold;
  std::string output;
  std::string csv;
  std::uint64_t seed = 0;
  int restarts = kDefaultRestarts;
  int max_vars = kDefaultMaxVars;
  int jobs = 1;
};

void run_oracle(const OracleOpts& opts) {
  auto gold = load_corpus(opts.gold);
  auto runs = load_runs(opts.runs);
  for (auto& run : runs) run.docs = align_by_id(gold, run.docs);

  auto choices =
      parallel_map(gold, opts.jobs, [&](const Document& doc, std::size_t i) {
        CandidateSet cands;
        cands.id = doc.id;
        for (const auto& run : runs) {
          cands.candidates.emplace_back(run.parser, run.docs[i].graph);
        }
        return oracle_select(cands, doc.graph, opts.restarts,
                             pair_seed(opts.seed, i), opts.max_vars);
      });

  std::vector<Document> chosen;
  chosen.reserve(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    chosen.push_back(runs[choices[i].index].docs[i]);
  }
  if (!opts.output.empty()) write_corpus(opts.output, chosen);
  if (!opts.csv.empty()) {
    std::ofstream out(opts.csv, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + opts.csv);
    out << "id,choice,f\n";
    for (std::size_t i = 0; i < gold.size(); ++i) {
      out << csv_field(doc_label(gold[i], i)) << ","
          << csv_field(runs[choices[i].index].parser) << ","
          << fixed(choices[i].f, 6) << "\n";
    }
  }
  // Headline number: corpus F of the per-document best choices.
  SmatchScore score = corpus_smatch(graphs_of(gold), graphs_of(chosen),
                                    opts.restarts, opts.seed, opts.jobs);
  print_score(score, "text");
}

// ----------------------------------------------------------------- compare

struct CompareOpts {
  RunsOpts runs;
  std::string gold;
  std::string csv;
  std::uint64_t seed = 0;
  int restarts = kDefaultRestarts;
  int max_vars = kDefaultMaxVars;
  int jobs = 1;
};

void run_compare(const CompareOpts& opts) {
  auto gold = load_corpus(opts.gold);
  auto runs = load_runs(opts.runs);
  CompareReport report = compare_parsers(gold, runs, opts.restarts, opts.seed,
                                         opts.jobs, opts.max_vars);
  if (!opts.csv.empty()) {
    std::ofstream out(opts.csv, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + opts.csv);
    out << "id";
    for (const auto& parser : report.parsers) out << "," << csv_field(parser);
    out << ",winner\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const CompareRow& row = report.rows[i];
      out << csv_field(row.id.empty() ? std::to_string(i) : row.id);
      for (double score : row.scores) out << "," << fixed(score, 6);
      out << ","
          << (row.winner < 0 ? "tie"
                             : csv_field(report.parsers[row.winner]))
          << "\n";
    }
  }
  for (std::size_t p = 0; p < report.parsers.size(); ++p) {
    std::cout << report.parsers[p] << " " << report.wins[p] << "\n";
  }
  std::cout << "ties " << report.ties << "\n";
}

// ------------------------------------------------------------------ encode

struct EncodeOpts {
  std::string vocab;
  std::string input;
  std::string output;
  std::string format = "text";
};

void run_encode(const EncodeOpts& opts) {
  Vocab vocab = load_vocab(opts.vocab);
  auto lines = read_lines(opts.input);
  Sink sink(opts.output);
  if (opts.format == "json") {
    json report = json::array();
    for (const auto& line : lines) {
      TokenSeq seq = encode(line, vocab);
      report.push_back({{"ids", seq.ids}, {"unknown", seq.unknown}});
    }
    sink.stream() << report.dump(2) << "\n";
    return;
  }
  for (const auto& line : lines) {
    TokenSeq seq = encode(line, vocab);
    for (std::size_t i = 0; i < seq.ids.size(); ++i) {
      if (i > 0) sink.stream() << " ";
      sink.stream() << seq.ids[i];
    }
    sink.stream() << "\n";
  }
}

// ------------------------------------------------------------- build-vocab

struct BuildVocabOpts {
  std::string corpus;
  std::string pos_file;
  std::vector<std::string> pos_tags;
  std::string output;
};

void run_build_vocab(const BuildVocabOpts& opts) {
  auto docs = load_corpus(opts.corpus);
  std::set<std::string> tags(opts.pos_tags.begin(), opts.pos_tags.end());
  if (!opts.pos_file.empty()) {
    for (const auto& sentence : read_pos_file(opts.pos_file)) {
      for (const auto& [token, tag] : sentence) tags.insert(tag);
    }
  }
  Vocab vocab =
      build_vocab(docs, std::vector<std::string>(tags.begin(), tags.end()));
  save_vocab(vocab, opts.output);
  std::cout << "size " << vocab.size() << "\n";
  if (vocab.size() < 150 || vocab.size() > 200) {
    std::cerr << "warning: vocabulary size " << vocab.size()
              << " outside 150-200\n";
  }
}

// ------------------------------------------------------------ pos-annotate

struct PosAnnotateOpts {
  std::string corpus;
  std::string input;
  std::string pos;
  std::string output;
};

void run_pos_annotate(const PosAnnotateOpts& opts) {
  std::vector<std::string> sentences;
  if (!opts.corpus.empty()) {
    for (const auto& doc : load_corpus(opts.corpus)) {
      sentences.push_back(doc.sentence);
    }
  } else {
    sentences = read_lines(opts.input);
  }
  auto tagged = read_pos_file(opts.pos);
  if (tagged.size() != sentences.size()) {
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(sentences.size()) + " sentences but " +
                    std::to_string(tagged.size()) + " tagged blocks");
  }
  Sink sink(opts.output);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    try {
      sink.stream() << pos_annotate(sentences[i], tagged[i]) << "\n";
    } catch (const Error& e) {
      throw Error(e.kind(),
                  "sentence " + std::to_string(i + 1) + ": " + e.what());
    }
  }
}

// ----------------------------------------------------- emit-trainer-config

struct TrainerOpts {
  std::string output;
  TrainerConfig config;
  std::vector<int> buckets;
  std::vector<int> epochs;
  std::vector<int> vocabulary;
};

std::pair<int, int> as_range(const std::vector<int>& values,
                             std::pair<int, int> fallback) {
  if (values.empty()) return fallback;
  if (values.size() == 1) return {values[0], values[0]};
  return {values[0], values[1]};
}

void run_emit_trainer_config(const TrainerOpts& opts) {
  TrainerConfig config = opts.config;
  config.buckets = as_range(opts.buckets, config.buckets);
  config.epochs = as_range(opts.epochs, config.epochs);
  config.vocabulary = as_range(opts.vocabulary, config.vocabulary);
  auto problems = check(config);
  if (!problems.empty()) {
    std::string joined;
    for (const auto& problem : problems) {
      if (!joined.empty()) joined += "; ";
      joined += problem;
    }
    throw CLI::ValidationError("trainer config", joined);
  }
  if (opts.output.empty()) {
    std::cout << format_trainer_config(config);
  } else {
    save_trainer_config(config, opts.output);
  }
}

// -------------------------------------------------------------------- main

void add_format(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "report format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"character-level AMR parsing pipeline"};
  app.set_config("--config", "", "INI config file")->envname("AMRSEQ_CONFIG");
  app.require_subcommand(1);

  // validate
  auto validate_opts = std::make_shared<ValidateOpts>();
  {
    auto* cmd = app.add_subcommand(
        "validate", "check corpus structure and graph invariants");
    cmd->add_option("--input", validate_opts->input, "corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->callback([validate_opts] { run_validate(*validate_opts); });
  }

  // triples
  auto triples_opts = std::make_shared<TriplesOpts>();
  {
    auto* cmd =
        app.add_subcommand("triples", "decompose graphs into Smatch triples");
    cmd->add_option("--input", triples_opts->input, "corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", triples_opts->output, "output file (default stdout)");
    add_format(cmd, triples_opts->format);
    cmd->callback([triples_opts] { run_triples(*triples_opts); });
  }

  // anonymize
  auto anonymize_opts = std::make_shared<AnonymizeOpts>();
  {
    auto* cmd = app.add_subcommand(
        "anonymize", "convert graphs to variable-free trees, one per line");
    cmd->add_option("--corpus", anonymize_opts->corpus, "corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", anonymize_opts->output,
                    "tree file (default stdout)");
    cmd->add_option("--sentences-out", anonymize_opts->sentences_out,
                    "also write one sentence per line to this file");
    cmd->add_flag("--indent", anonymize_opts->indent,
                  "indented blocks instead of single lines");
    cmd->callback([anonymize_opts] { run_anonymize(*anonymize_opts); });
  }

  // restore
  auto restore_opts = std::make_shared<RestoreOpts>();
  {
    auto* cmd = app.add_subcommand(
        "restore", "turn serialized trees back into Penman graphs");
    cmd->add_option("--input", restore_opts->input,
                    "tree file, one tree per line")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", restore_opts->output,
                    "Penman file (default stdout)");
    cmd->callback([restore_opts] { run_restore(*restore_opts); });
  }

  // augment
  auto augment_opts = std::make_shared<AugmentOpts>();
  {
    auto* cmd = app.add_subcommand(
        "augment", "double a corpus with word-order-matched duplicates");
    cmd->add_option("--corpus", augment_opts->corpus, "corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--alignments", augment_opts->alignments,
                    "alignment file, one line per document")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", augment_opts->output,
                    "corpus file (default stdout)");
    cmd->callback([augment_opts] { run_augment(*augment_opts); });
  }

  // prune
  auto prune_opts = std::make_shared<TreeLinesOpts>();
  {
    auto* cmd = app.add_subcommand(
        "prune", "drop duplicate (relation, child) branches from trees");
    cmd->add_option("--input", prune_opts->input, "tree file, one per line")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", prune_opts->output,
                    "tree file (default stdout)");
    cmd->callback([prune_opts] { run_prune(*prune_opts); });
  }

  // repair
  auto repair_opts = std::make_shared<TreeLinesOpts>();
  {
    auto* cmd = app.add_subcommand(
        "repair", "fix unbalanced or truncated tree serializations");
    cmd->add_option("--input", repair_opts->input,
                    "tree text file, one per line")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", repair_opts->output,
                    "tree file (default stdout)");
    cmd->add_flag("--use-default", repair_opts->use_default,
                  "emit the placeholder graph for unrepairable lines");
    cmd->callback([repair_opts] { run_repair(*repair_opts); });
  }

  // wikify
  auto wikify_opts = std::make_shared<WikifyOpts>();
  {
    auto* cmd = app.add_subcommand(
        "wikify", "add :wiki links from a gold-derived frequency table");
    cmd->add_option("--corpus", wikify_opts->corpus, "corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--table", wikify_opts->table, "wiki table file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", wikify_opts->output,
                    "corpus file (default stdout)");
    cmd->add_option("--threshold", wikify_opts->threshold,
                    "minimum link frequency share, exclusive")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->callback([wikify_opts] { run_wikify(*wikify_opts); });
  }

  // build-wiki-table
  auto build_wiki_opts = std::make_shared<BuildWikiOpts>();
  {
    auto* cmd = app.add_subcommand(
        "build-wiki-table", "count (name, wiki link) pairs in a gold corpus");
    cmd->add_option("--gold", build_wiki_opts->gold, "gold corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", build_wiki_opts->output, "table file")
        ->required();
    cmd->callback([build_wiki_opts] { run_build_wiki_table(*build_wiki_opts); });
  }

  // smatch
  auto smatch_opts = std::make_shared<SmatchOpts>();
  {
    auto* cmd = app.add_subcommand("smatch", "corpus Smatch score");
    cmd->add_option("--gold", smatch_opts->gold, "gold corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--test", smatch_opts->test, "test corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", smatch_opts->seed, "RNG seed")->required();
    cmd->add_option("--restarts", smatch_opts->restarts,
                    "hill-climbing restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-vars", smatch_opts->max_vars,
                    "exact-scorer variable cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--jobs", smatch_opts->jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--exact", smatch_opts->exact,
                  "use the exact scorer (fails above --max-vars)");
    add_format(cmd, smatch_opts->format);
    cmd->callback([smatch_opts] { run_smatch(*smatch_opts); });
  }

  // evaluate
  auto evaluate_opts = std::make_shared<EvaluateOpts>();
  {
    auto* cmd =
        app.add_subcommand("evaluate", "fine-grained category evaluation");
    cmd->add_option("--gold", evaluate_opts->gold, "gold corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--test", evaluate_opts->test, "test corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", evaluate_opts->seed, "RNG seed")->required();
    cmd->add_option("--restarts", evaluate_opts->restarts,
                    "hill-climbing restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--jobs", evaluate_opts->jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(cmd, evaluate_opts->format);
    cmd->callback([evaluate_opts] { run_evaluate(*evaluate_opts); });
  }

  // length-report
  auto length_opts = std::make_shared<LengthOpts>();
  {
    auto* cmd = app.add_subcommand(
        "length-report", "Smatch by cumulative sentence-length buckets");
    cmd->add_option("--gold", length_opts->gold, "gold corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--test", length_opts->test, "test corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", length_opts->seed, "RNG seed")->required();
    cmd->add_option("--edges", length_opts->edges,
                    "bucket edges in tokens, ascending")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--restarts", length_opts->restarts,
                    "hill-climbing restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--jobs", length_opts->jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(cmd, length_opts->format);
    cmd->callback([length_opts] { run_length_report(*length_opts); });
  }

  // ensemble
  auto ensemble_opts = std::make_shared<EnsembleOpts>();
  {
    auto* cmd = app.add_subcommand(
        "ensemble", "pick the most agreed-on parse per document");
    cmd->add_option("--runs", ensemble_opts->runs.files,
                    "candidate corpus files, one per parser")
        ->required()
        ->expected(1, -1)
        ->check(CLI::ExistingFile);
    cmd->add_option("--parsers", ensemble_opts->runs.names,
                    "parser names (default: file stems)")
        ->delimiter(',');
    cmd->add_option("--seed", ensemble_opts->seed, "RNG seed")->required();
    cmd->add_option("--output", ensemble_opts->output,
                    "corpus file of the chosen parses");
    cmd->add_option("--csv", ensemble_opts->csv, "per-document choice file");
    cmd->add_option("--restarts", ensemble_opts->restarts,
                    "hill-climbing restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-vars", ensemble_opts->max_vars,
                    "exact-scorer variable cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--jobs", ensemble_opts->jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback([ensemble_opts] { run_ensemble(*ensemble_opts); });
  }

  // oracle
  auto oracle_opts = std::make_shared<OracleOpts>();
  {
    auto* cmd = app.add_subcommand(
        "oracle", "per-document best candidate against gold (upper bound)");
    cmd->add_option("--gold", oracle_opts->gold, "gold corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--runs", oracle_opts->runs.files,
                    "candidate corpus files, one per parser")
        ->required()
        ->expected(1, -1)
        ->check(CLI::ExistingFile);
    cmd->add_option("--parsers", oracle_opts->runs.names,
                    "parser names (default: file stems)")
        ->delimiter(',');
    cmd->add_option("--seed", oracle_opts->seed, "RNG seed")->required();
    cmd->add_option("--output", oracle_opts->output,
                    "corpus file of the chosen parses");
    cmd->add_option("--csv", oracle_opts->csv, "per-document choice file");
    cmd->add_option("--restarts", oracle_opts->restarts,
                    "hill-climbing restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-vars", oracle_opts->max_vars,
                    "exact-scorer variable cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--jobs", oracle_opts->jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback([oracle_opts] { run_oracle(*oracle_opts); });
  }

  // compare
  auto compare_opts = std::make_shared<CompareOpts>();
  {
    auto* cmd = app.add_subcommand(
        "compare", "score parsers against gold and tally per-document wins");
    cmd->add_option("--gold", compare_opts->gold, "gold corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--runs", compare_opts->runs.files,
                    "parser output files")
        ->required()
        ->expected(1, -1)
        ->check(CLI::ExistingFile);
    cmd->add_option("--parsers", compare_opts->runs.names,
                    "parser names (default: file stems)")
        ->delimiter(',');
    cmd->add_option("--seed", compare_opts->seed, "RNG seed")->required();
    cmd->add_option("--csv", compare_opts->csv, "per-document score file");
    cmd->add_option("--restarts", compare_opts->restarts,
                    "hill-climbing restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-vars", compare_opts->max_vars,
                    "exact-scorer variable cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--jobs", compare_opts->jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback([compare_opts] { run_compare(*compare_opts); });
  }

  // encode
  auto encode_opts = std::make_shared<EncodeOpts>();
  {
    auto* cmd = app.add_subcommand(
        "encode", "turn text lines into vocabulary id sequences");
    cmd->add_option("--vocab", encode_opts->vocab, "vocabulary file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--input", encode_opts->input, "text file, one per line")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", encode_opts->output,
                    "id file (default stdout)");
    add_format(cmd, encode_opts->format);
    cmd->callback([encode_opts] { run_encode(*encode_opts); });
  }

  // build-vocab
  auto build_vocab_opts = std::make_shared<BuildVocabOpts>();
  {
    auto* cmd = app.add_subcommand(
        "build-vocab", "collect the super-character vocabulary of a corpus");
    cmd->add_option("--corpus", build_vocab_opts->corpus, "corpus file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--pos-file", build_vocab_opts->pos_file,
                    "POS file whose tags become markers")
        ->check(CLI::ExistingFile);
    cmd->add_option("--pos-tags", build_vocab_opts->pos_tags,
                    "extra POS tags to include")
        ->delimiter(',');
    cmd->add_option("--output", build_vocab_opts->output, "vocabulary file")
        ->required();
    cmd->callback([build_vocab_opts] { run_build_vocab(*build_vocab_opts); });
  }

  // pos-annotate
  auto pos_opts = std::make_shared<PosAnnotateOpts>();
  {
    auto* cmd = app.add_subcommand(
        "pos-annotate", "interleave POS markers into sentences");
    auto* corpus = cmd->add_option("--corpus", pos_opts->corpus,
                                   "corpus file supplying the sentences")
                       ->check(CLI::ExistingFile);
    auto* input = cmd->add_option("--input", pos_opts->input,
                                  "sentence file, one per line")
                      ->check(CLI::ExistingFile);
    corpus->excludes(input);
    cmd->add_option("--pos", pos_opts->pos, "token<TAB>TAG file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", pos_opts->output,
                    "sentence file (default stdout)");
    cmd->callback([pos_opts, corpus, input] {
      if (corpus->count() == 0 && input->count() == 0) {
        throw CLI::RequiredError("--corpus or --input");
      }
      run_pos_annotate(*pos_opts);
    });
  }

  // emit-trainer-config
  auto trainer_opts = std::make_shared<TrainerOpts>();
  {
    auto* cmd = app.add_subcommand(
        "emit-trainer-config", "write the seq2seq hyperparameter file");
    cmd->add_option("--output", trainer_opts->output,
                    "config file (default stdout)");
    cmd->add_option("--layers", trainer_opts->config.layers, "LSTM layers")
        ->capture_default_str();
    cmd->add_option("--nodes", trainer_opts->config.nodes, "units per layer")
        ->capture_default_str();
    cmd->add_option("--buckets", trainer_opts->buckets,
                    "source,target bucket sizes (default 510,510)")
        ->delimiter(',')
        ->expected(1, 2);
    cmd->add_option("--epochs", trainer_opts->epochs,
                    "epoch range (default 25,35)")
        ->delimiter(',')
        ->expected(1, 2);
    cmd->add_option("--vocabulary", trainer_opts->vocabulary,
                    "vocabulary size range (default 150,200)")
        ->delimiter(',')
        ->expected(1, 2);
    cmd->add_option("--learning-rate", trainer_opts->config.learning_rate,
                    "initial learning rate")
        ->capture_default_str();
    cmd->add_option("--decay-factor", trainer_opts->config.decay_factor,
                    "learning-rate decay")
        ->capture_default_str();
    cmd->add_option("--gradient-norm", trainer_opts->config.gradient_norm,
                    "gradient clipping norm")
        ->capture_default_str();
    cmd->callback([trainer_opts] { run_emit_trainer_config(*trainer_opts); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CommandFailure& failure) {
    return failure.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
