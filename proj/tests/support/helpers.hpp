#pragma once

// Shared glue for the test binaries: bundled fixtures, one-line extraction,
// and spawning the command-line tool.

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "kasus/extraction.hpp"
#include "kasus/morphology.hpp"
#include "kasus/tsv.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(KASUS_DATA_DIR) + "/" + name;
}

inline std::string test_data_path(const std::string& name) {
  return std::string(KASUS_TEST_DATA_DIR) + "/" + name;
}

inline const kasus::Lexicon& sample_lexicon() {
  static kasus::Lexicon lex = kasus::load_lexicon_file(data_path("lexicon.tsv"));
  return lex;
}

inline kasus::ExtractionResult extract_text(
    const std::string& text,
    kasus::UnknownWords policy = kasus::UnknownWords::SkipClause,
    std::ostream* dump = nullptr) {
  std::istringstream in(text);
  return kasus::extract_corpus(sample_lexicon(), in, policy, dump);
}

// Fresh scratch directory under the system temp dir; wiped on reuse so
// reruns start clean.
inline std::string scratch_dir(const std::string& name) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / ("kasus_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

struct CmdResult {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI with the given argument string, capturing exit code and both
// streams via shell redirection.
inline CmdResult run_cli(const std::string& args, const std::string& dir) {
  std::string out_path = dir + "/cmd_stdout.txt";
  std::string err_path = dir + "/cmd_stderr.txt";
  std::string cmd = std::string(KASUS_CLI_PATH) + " " + args + " > " + out_path +
                    " 2> " + err_path;
  int status = std::system(cmd.c_str());
  CmdResult res;
  if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
  res.out = kasus::read_file(out_path);
  res.err = kasus::read_file(err_path);
  return res;
}

}  // namespace testutil
