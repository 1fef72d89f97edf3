// kasus — learns and applies subject/object assignment for German clauses
// whose case morphology is ambiguous.
//
//   extract   corpus + lexicon -> training/test tuple files
//   train     training tuples  -> count model
//   decide    model + test     -> per-tuple decisions
//   eval      decisions + gold -> accuracy-by-level report
//   run       extract, train, decide, eval in one pass
//   gen       seeded synthetic corpus/lexicon/gold for experiments

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "kasus/backoff.hpp"
#include "kasus/decision.hpp"
#include "kasus/evaluation.hpp"
#include "kasus/extraction.hpp"
#include "kasus/morphology.hpp"
#include "kasus/synth.hpp"

namespace {

kasus::UnknownWords parse_policy(const std::string& name) {
  return name == "ambiguous-noun" ? kasus::UnknownWords::AmbiguousNoun
                                  : kasus::UnknownWords::SkipClause;
}

// Relabels pipeline errors with the stage that raised them, keeping the
// io-vs-data distinction (and with it the exit code) intact.
template <class Fn>
decltype(auto) stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const kasus::IoError& e) {
    throw kasus::IoError("run: stage " + std::string(name) + ": " + e.what());
  } catch (const kasus::ParseError& e) {
    throw kasus::DataError("run: stage " + std::string(name) + ": " + e.what());
  } catch (const kasus::DataError& e) {
    throw kasus::DataError("run: stage " + std::string(name) + ": " + e.what());
  }
}

std::string slurp(const std::string& path, const char* what) {
  try {
    return kasus::read_file(path);
  } catch (const kasus::IoError&) {
    throw kasus::IoError("cannot open " + std::string(what) + ": " + path);
  }
}

struct ExtractOutput {
  kasus::ExtractionResult result;
  std::string dump;
};

ExtractOutput do_extract(const std::string& lexicon_path, const std::string& corpus_path,
                         kasus::UnknownWords policy, bool want_dump) {
  kasus::Lexicon lex = kasus::load_lexicon_file(lexicon_path);
  std::istringstream corpus(slurp(corpus_path, "corpus"));
  ExtractOutput out;
  if (want_dump) {
    std::ostringstream dump;
    out.result = kasus::extract_corpus(lex, corpus, policy, &dump);
    out.dump = dump.str();
  } else {
    out.result = kasus::extract_corpus(lex, corpus, policy);
  }
  return out;
}

void write_tuple_files(const std::string& workdir, const kasus::ExtractionResult& res) {
  std::filesystem::create_directories(workdir);
  std::ostringstream tr;
  kasus::write_training(tr, res.training);
  kasus::write_file(workdir + "/training.tsv", tr.str());
  std::ostringstream te;
  kasus::write_test(te, res.test);
  kasus::write_file(workdir + "/test.tsv", te.str());
}

std::string save_model(const kasus::CountModel& m) {
  std::ostringstream out;
  m.save(out);
  return out.str();
}

int cmd_extract(const std::string& lexicon, const std::string& corpus,
                const std::string& unknown, const std::string& workdir,
                const std::string& dump_path) {
  ExtractOutput out =
      do_extract(lexicon, corpus, parse_policy(unknown), !dump_path.empty());
  write_tuple_files(workdir, out.result);
  if (!dump_path.empty()) kasus::write_file(dump_path, out.dump);
  std::cout << "training=" << out.result.training.size()
            << " test=" << out.result.test.size() << "\n";
  return 0;
}

int cmd_train(const std::string& training_path, const std::string& model_path) {
  std::istringstream in(slurp(training_path, "training file"));
  kasus::CountModel m;
  m.train(kasus::read_training(in));
  kasus::write_file(model_path, save_model(m));
  return 0;
}

int cmd_decide(const std::string& model_path, const std::string& test_path,
               const std::string& out_path) {
  std::istringstream min(slurp(model_path, "model"));
  kasus::CountModel m = kasus::CountModel::load(min);
  std::istringstream tin(slurp(test_path, "test file"));
  std::vector<kasus::DecisionRow> rows = kasus::decide_batch(m, kasus::read_test(tin));
  std::ostringstream out;
  kasus::write_decisions(out, rows);
  kasus::write_file(out_path, out.str());
  return 0;
}

int cmd_eval(const std::string& decisions_path, const std::string& gold_path,
             const std::string& out_path) {
  std::istringstream din(slurp(decisions_path, "decisions"));
  std::vector<kasus::DecisionRow> decisions = kasus::read_decisions(din);
  std::istringstream gin(slurp(gold_path, "gold file"));
  std::vector<kasus::GoldTuple> gold = kasus::read_gold(gin);
  std::string text = kasus::render_report(kasus::evaluate(decisions, gold));
  std::cout << text;
  if (!out_path.empty()) kasus::write_file(out_path, text);
  return 0;
}

int cmd_run(const std::string& lexicon, const std::string& corpus,
            const std::string& unknown, const std::string& gold_path,
            const std::string& workdir, const std::string& out_path) {
  ExtractOutput ext = stage("extract", [&] {
    return do_extract(lexicon, corpus, parse_policy(unknown), false);
  });
  stage("extract", [&] { write_tuple_files(workdir, ext.result); });
  std::cout << "training=" << ext.result.training.size()
            << " test=" << ext.result.test.size() << "\n";

  kasus::CountModel model = stage("train", [&] {
    kasus::CountModel m;
    m.train(ext.result.training);
    kasus::write_file(workdir + "/model.tsv", save_model(m));
    return m;
  });

  std::vector<kasus::DecisionRow> decisions = stage("decide", [&] {
    std::vector<kasus::DecisionRow> rows = kasus::decide_batch(model, ext.result.test);
    std::ostringstream out;
    kasus::write_decisions(out, rows);
    kasus::write_file(workdir + "/decisions.tsv", out.str());
    return rows;
  });

  std::string text = stage("eval", [&] {
    std::istringstream gin(slurp(gold_path, "gold file"));
    std::vector<kasus::GoldTuple> gold = kasus::read_gold(gin);
    std::string rendered = kasus::render_report(kasus::evaluate(decisions, gold));
    kasus::write_file(workdir + "/report.txt", rendered);
    return rendered;
  });
  std::cout << text;
  if (!out_path.empty()) kasus::write_file(out_path, text);
  return 0;
}

int cmd_gen(std::uint64_t seed, std::size_t clauses, const std::string& out_corpus,
            const std::string& out_lexicon, const std::string& out_gold) {
  kasus::SynthConfig cfg;
  cfg.seed = seed;
  cfg.clauses = clauses;
  kasus::SynthDataset ds = kasus::generate_dataset(cfg);
  kasus::write_file(out_corpus, ds.corpus);
  kasus::write_file(out_lexicon, ds.lexicon_tsv);
  kasus::write_file(out_gold, ds.gold_tsv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subject/object assignment for case-ambiguous German clauses"};
  app.require_subcommand(1);

  const std::vector<std::string> policies{"skip-clause", "ambiguous-noun"};

  std::string lexicon, corpus, unknown = "skip-clause", workdir, dump_path;
  std::string training_path, model_path, test_path, decisions_path, gold_path, out_path;
  std::uint64_t seed = 1;
  std::size_t clauses = 2400;
  std::string gen_corpus, gen_lexicon, gen_gold;

  CLI::App* ext = app.add_subcommand("extract", "corpus -> training/test tuples");
  ext->add_option("--lexicon", lexicon, "lexicon TSV")->required();
  ext->add_option("--corpus", corpus, "text, one sentence per line")->required();
  ext->add_option("--unknown", unknown, "unknown-word policy")
      ->check(CLI::IsMember(policies));
  ext->add_option("--workdir", workdir, "output directory")->required();
  ext->add_option("--dump-structures", dump_path, "also write chunked clauses here");

  CLI::App* tr = app.add_subcommand("train", "training tuples -> count model");
  tr->add_option("--training", training_path, "training tuple TSV")->required();
  tr->add_option("--model", model_path, "model output path")->required();

  CLI::App* dec = app.add_subcommand("decide", "model + test tuples -> decisions");
  dec->add_option("--model", model_path, "model TSV")->required();
  dec->add_option("--test", test_path, "test tuple TSV")->required();
  dec->add_option("--out", out_path, "decision output path")->required();

  CLI::App* ev = app.add_subcommand("eval", "decisions + gold -> report");
  ev->add_option("--decisions", decisions_path, "decision TSV")->required();
  ev->add_option("--gold", gold_path, "gold label TSV")->required();
  ev->add_option("--out", out_path, "also write the report here");

  CLI::App* run = app.add_subcommand("run", "extract, train, decide, eval");
  run->add_option("--lexicon", lexicon, "lexicon TSV")->required();
  run->add_option("--corpus", corpus, "text, one sentence per line")->required();
  run->add_option("--unknown", unknown, "unknown-word policy")
      ->check(CLI::IsMember(policies));
  run->add_option("--gold", gold_path, "gold labels for the extracted test tuples")
      ->required();
  run->add_option("--workdir", workdir, "directory for intermediate files")->required();
  run->add_option("--out", out_path, "also write the report here");

  CLI::App* gen = app.add_subcommand("gen", "seeded synthetic dataset");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--clauses", clauses, "number of clauses");
  gen->add_option("--out-corpus", gen_corpus, "corpus output path")->required();
  gen->add_option("--out-lexicon", gen_lexicon, "lexicon output path")->required();
  gen->add_option("--out-gold", gen_gold, "gold output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*ext) return cmd_extract(lexicon, corpus, unknown, workdir, dump_path);
    if (*tr) return cmd_train(training_path, model_path);
    if (*dec) return cmd_decide(model_path, test_path, out_path);
    if (*ev) return cmd_eval(decisions_path, gold_path, out_path);
    if (*run) return cmd_run(lexicon, corpus, unknown, gold_path, workdir, out_path);
    if (*gen) return cmd_gen(seed, clauses, gen_corpus, gen_lexicon, gen_gold);
  } catch (const kasus::IoError& e) {
    std::cerr << "kasus: " << e.what() << "\n";
    return 1;
  } catch (const kasus::ParseError& e) {
    std::cerr << "kasus: " << e.what() << "\n";
    return 2;
  } catch (const kasus::DataError& e) {
    std::cerr << "kasus: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "kasus: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
