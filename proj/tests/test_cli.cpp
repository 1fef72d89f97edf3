// End-to-end checks of the command-line tool: exit codes, output files,
// stream output, and rerun determinism.

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "kasus/morphology.hpp"
#include "kasus/tsv.hpp"
#include "support/helpers.hpp"

using testutil::data_path;
using testutil::run_cli;
using testutil::scratch_dir;

namespace {

const std::string kWorkedReport =
    "P_n    Number  Percent  Correct  Accuracy\n"
    "P_3         1   100.00        1    100.00\n"
    "P_2         0     0.00        0      0.00\n"
    "P_1         0     0.00        0      0.00\n"
    "P_0         0     0.00        0      0.00\n"
    "Total       1   100.00        1    100.00\n"
    "Baseline 0.00\n";

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("extract writes tuple files and reports the counts") {
  std::string dir = scratch_dir("cli_extract");
  auto res = run_cli("extract --lexicon " + q(data_path("lexicon.tsv")) + " --corpus " +
                         q(data_path("corpus_worked.txt")) + " --workdir " + q(dir),
                     dir);
  CHECK(res.code == 0);
  CHECK(res.out == "training=5 test=1\n");
  CHECK(res.err.empty());

  std::string training = kasus::read_file(dir + "/training.tsv");
  CHECK(training ==
        "Inflationsrate\terwarten\tÖkonom\t0\tcase_nom\n"
        "Ökonom\terwarten\tInflationsrate\t1\tagreement\n"
        "Gesellschaft\terwarten\tUmsatz\t1\tcase_acc\n"
        "Ökonomin\terwarten\tInflationsrate\t1\theuristic\n"
        "Ökonomin\terwarten\tInflationsrate\t1\theuristic\n");
  CHECK(kasus::read_file(dir + "/test.tsv") ==
        "Inflationsrate\terwarten\tÖkonomin\t0\t0\n");
}

TEST_CASE("extract can dump the chunked clause structures") {
  std::string dir = scratch_dir("cli_dump");
  auto res = run_cli("extract --lexicon " + q(data_path("lexicon.tsv")) + " --corpus " +
                         q(data_path("corpus_worked.txt")) + " --workdir " + q(dir) +
                         " --dump-structures " + q(dir + "/structures.txt"),
                     dir);
  REQUIRE(res.code == 0);
  std::string dump = kasus::read_file(dir + "/structures.txt");
  CHECK(dump.substr(0, 2) == "S\t");
  CHECK(dump.find("VC\t") != std::string::npos);
  CHECK(dump.find("verb_final") != std::string::npos);
}

TEST_CASE("extract is deterministic across reruns") {
  std::string dir = scratch_dir("cli_extract_rerun");
  std::string args = "extract --lexicon " + q(data_path("lexicon.tsv")) + " --corpus " +
                     q(data_path("corpus_worked.txt")) + " --workdir " + q(dir);
  REQUIRE(run_cli(args, dir).code == 0);
  std::string training = kasus::read_file(dir + "/training.tsv");
  std::string test = kasus::read_file(dir + "/test.tsv");
  REQUIRE(run_cli(args, dir).code == 0);
  CHECK(kasus::read_file(dir + "/training.tsv") == training);
  CHECK(kasus::read_file(dir + "/test.tsv") == test);
}

TEST_CASE("usage problems exit with code 1") {
  std::string dir = scratch_dir("cli_usage");
  CHECK(run_cli("", dir).code == 1);                       // no subcommand
  CHECK(run_cli("frobnicate", dir).code == 1);             // unknown subcommand
  CHECK(run_cli("extract", dir).code == 1);                // missing required flags
  CHECK(run_cli("extract --lexicon " + q(data_path("lexicon.tsv")) + " --corpus " +
                    q(data_path("corpus_worked.txt")) + " --workdir " + q(dir) +
                    " --unknown guess",
                dir)
            .code == 1);                                   // bad policy value
  CHECK(run_cli("--help", dir).code == 0);
  CHECK(run_cli("extract --help", dir).code == 0);
}

TEST_CASE("missing input files exit with code 1 and say which file") {
  std::string dir = scratch_dir("cli_missing");
  auto res = run_cli("extract --lexicon " + q(data_path("lexicon.tsv")) +
                         " --corpus " + q(dir + "/no_such.txt") + " --workdir " + q(dir),
                     dir);
  CHECK(res.code == 1);
  CHECK(res.err.find("cannot open corpus") != std::string::npos);
}

TEST_CASE("malformed inputs exit with code 2") {
  std::string dir = scratch_dir("cli_malformed");
  kasus::write_file(dir + "/bad_lexicon.tsv", "der\tDeterminer\n");
  auto res = run_cli("extract --lexicon " + q(dir + "/bad_lexicon.tsv") + " --corpus " +
                         q(data_path("corpus_worked.txt")) + " --workdir " + q(dir),
                     dir);
  CHECK(res.code == 2);
  CHECK(res.err.find("kasus:") != std::string::npos);

  kasus::write_file(dir + "/bad_model.tsv", "A\tv\tB\t1\t1\n");  // header missing
  res = run_cli("decide --model " + q(dir + "/bad_model.tsv") + " --test " +
                    q(dir + "/test.tsv") + " --out " + q(dir + "/decisions.tsv"),
                dir);
  CHECK(res.code == 2);
}

TEST_CASE("train, decide, and eval chain over files") {
  std::string dir = scratch_dir("cli_chain");
  REQUIRE(run_cli("extract --lexicon " + q(data_path("lexicon.tsv")) + " --corpus " +
                      q(data_path("corpus_worked.txt")) + " --workdir " + q(dir),
                  dir)
              .code == 0);

  auto trained = run_cli("train --training " + q(dir + "/training.tsv") + " --model " +
                             q(dir + "/model.tsv"),
                         dir);
  REQUIRE(trained.code == 0);
  std::string model = kasus::read_file(dir + "/model.tsv");
  CHECK(model.substr(0, 16) == "#kasus-model v1\n");
  CHECK(model.find("Ökonomin\terwarten\tInflationsrate\t1\t2\n") != std::string::npos);

  auto decided = run_cli("decide --model " + q(dir + "/model.tsv") + " --test " +
                             q(dir + "/test.tsv") + " --out " + q(dir + "/decisions.tsv"),
                         dir);
  REQUIRE(decided.code == 0);
  CHECK(kasus::read_file(dir + "/decisions.tsv") ==
        "Inflationsrate\terwarten\tÖkonomin\tobject\t3\t0.0000\n");

  auto evaled = run_cli("eval --decisions " + q(dir + "/decisions.tsv") + " --gold " +
                            q(data_path("gold_worked.tsv")) + " --out " +
                            q(dir + "/report.txt"),
                        dir);
  REQUIRE(evaled.code == 0);
  CHECK(evaled.out == kWorkedReport);
  CHECK(kasus::read_file(dir + "/report.txt") == kWorkedReport);
}

TEST_CASE("eval rejects gold that does not match the decisions") {
  std::string dir = scratch_dir("cli_eval_mismatch");
  kasus::write_file(dir + "/decisions.tsv", "A\tv\tB\tsubject\t3\t1.0000\n");
  kasus::write_file(dir + "/gold.tsv", "A\tv\tC\t1\n");
  auto res = run_cli("eval --decisions " + q(dir + "/decisions.tsv") + " --gold " +
                         q(dir + "/gold.tsv"),
                     dir);
  CHECK(res.code == 2);
  CHECK(res.err.find("mismatch") != std::string::npos);
}

TEST_CASE("run does the whole pipeline in one call") {
  std::string dir = scratch_dir("cli_run");
  std::string work = dir + "/work";
  auto res = run_cli("run --lexicon " + q(data_path("lexicon.tsv")) + " --corpus " +
                         q(data_path("corpus_worked.txt")) + " --gold " +
                         q(data_path("gold_worked.tsv")) + " --workdir " + q(work),
                     dir);
  REQUIRE(res.code == 0);
  CHECK(res.out == "training=5 test=1\n" + kWorkedReport);

  for (const char* name : {"training.tsv", "test.tsv", "model.tsv", "decisions.tsv"})
    CHECK(!kasus::read_file(work + "/" + name).empty());
  CHECK(kasus::read_file(work + "/report.txt") == kWorkedReport);
}

TEST_CASE("run is deterministic across reruns") {
  std::string dir = scratch_dir("cli_run_rerun");
  std::string args = "run --lexicon " + q(data_path("lexicon.tsv")) + " --corpus " +
                     q(data_path("corpus_worked.txt")) + " --gold " +
                     q(data_path("gold_worked.tsv")) + " --workdir " + q(dir + "/work");
  auto first = run_cli(args, dir);
  REQUIRE(first.code == 0);
  std::string model = kasus::read_file(dir + "/work/model.tsv");
  std::string report = kasus::read_file(dir + "/work/report.txt");
  auto second = run_cli(args, dir);
  REQUIRE(second.code == 0);
  CHECK(second.out == first.out);
  CHECK(kasus::read_file(dir + "/work/model.tsv") == model);
  CHECK(kasus::read_file(dir + "/work/report.txt") == report);
}

TEST_CASE("run labels the stage that failed") {
  std::string dir = scratch_dir("cli_run_stage");
  auto res = run_cli("run --lexicon " + q(data_path("lexicon.tsv")) + " --corpus " +
                         q(data_path("corpus_worked.txt")) + " --gold " +
                         q(dir + "/no_gold.tsv") + " --workdir " + q(dir + "/work"),
                     dir);
  CHECK(res.code == 1);  // the gold file is missing, an io problem
  CHECK(res.err.find("run: stage eval") != std::string::npos);

  kasus::write_file(dir + "/bad_gold.tsv", "A\tv\tB\tmaybe\n");
  res = run_cli("run --lexicon " + q(data_path("lexicon.tsv")) + " --corpus " +
                    q(data_path("corpus_worked.txt")) + " --gold " +
                    q(dir + "/bad_gold.tsv") + " --workdir " + q(dir + "/work"),
                dir);
  CHECK(res.code == 2);
  CHECK(res.err.find("run: stage eval") != std::string::npos);
}

TEST_CASE("gen writes a seeded dataset and is reproducible") {
  std::string dir = scratch_dir("cli_gen");
  std::string args = "gen --seed 7 --clauses 40 --out-corpus " + q(dir + "/corpus.txt") +
                     " --out-lexicon " + q(dir + "/lexicon.tsv") + " --out-gold " +
                     q(dir + "/gold.tsv");
  REQUIRE(run_cli(args, dir).code == 0);
  std::string corpus = kasus::read_file(dir + "/corpus.txt");
  std::string gold = kasus::read_file(dir + "/gold.tsv");
  CHECK(!corpus.empty());
  CHECK(!gold.empty());

  // The lexicon it writes is valid input for the rest of the tool.
  kasus::Lexicon lex = kasus::load_lexicon_file(dir + "/lexicon.tsv");
  CHECK(lex.surface_count() == 200);

  REQUIRE(run_cli(args, dir).code == 0);
  CHECK(kasus::read_file(dir + "/corpus.txt") == corpus);
  CHECK(kasus::read_file(dir + "/gold.tsv") == gold);

  std::string other = "gen --seed 8 --clauses 40 --out-corpus " + q(dir + "/c2.txt") +
                      " --out-lexicon " + q(dir + "/l2.tsv") + " --out-gold " +
                      q(dir + "/g2.tsv");
  REQUIRE(run_cli(other, dir).code == 0);
  CHECK(kasus::read_file(dir + "/c2.txt") != corpus);
}
