#pragma once

// Scores decisions against gold labels, broken down by the back-off level
// that made each decision, and renders the fixed-width result table.

#include <array>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "kasus/decision.hpp"
#include "kasus/tsv.hpp"

namespace kasus {

// Gold label for one test tuple: x == 1 when the first noun is the subject.
struct GoldTuple {
  std::string n1, v, n2;
  int x = 1;

  bool operator==(const GoldTuple&) const = default;
};

inline void write_gold(std::ostream& out, const std::vector<GoldTuple>& ts) {
  for (const GoldTuple& t : ts)
    out << t.n1 << '\t' << t.v << '\t' << t.n2 << '\t' << t.x << '\n';
}

inline std::vector<GoldTuple> read_gold(std::istream& in) {
  std::vector<GoldTuple> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto f = split_tabs(line);
    if (f.size() != 4) throw ParseError("expected 4 fields in gold tuple", line_no);
    auto x = parse_int(f[3]);
    if (!x || (*x != 0 && *x != 1)) throw ParseError("label must be 0 or 1", line_no);
    out.push_back(GoldTuple{std::string(f[0]), std::string(f[1]), std::string(f[2]),
                            static_cast<int>(*x)});
  }
  return out;
}

struct LevelReport {
  std::size_t count = 0;
  std::size_t correct = 0;
};

struct EvaluationReport {
  std::array<LevelReport, 4> levels;  // indexed by back-off level 0..3
  std::size_t evaluated = 0;          // decisions that were not skipped
  std::size_t correct = 0;
  std::size_t skipped = 0;
  std::size_t gold_subject_first = 0;  // of the evaluated rows

  // Accuracy of always answering "subject": the trivial reference point.
  std::size_t baseline_correct() const { return gold_subject_first; }
};

// Rows are matched by position; the tuple keys must agree row for row, so a
// truncated or reordered file fails loudly instead of skewing the scores.
inline EvaluationReport evaluate(const std::vector<DecisionRow>& decisions,
                                 const std::vector<GoldTuple>& gold) {
  if (decisions.size() != gold.size())
    throw DataError("decision/gold row count mismatch: " +
                    std::to_string(decisions.size()) + " vs " +
                    std::to_string(gold.size()));
  std::string mismatches;
  std::size_t mismatch_count = 0;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    const DecisionRow& d = decisions[i];
    const GoldTuple& g = gold[i];
    if (d.n1 != g.n1 || d.v != g.v || d.n2 != g.n2) {
      ++mismatch_count;
      if (mismatch_count <= 5)
        mismatches += " row " + std::to_string(i + 1) + ": (" + d.n1 + "," + d.v +
                      "," + d.n2 + ") vs (" + g.n1 + "," + g.v + "," + g.n2 + ")";
    }
  }
  if (mismatch_count > 0)
    throw DataError("decision/gold key mismatch on " + std::to_string(mismatch_count) +
                    " row(s):" + mismatches);

  EvaluationReport rep;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    const DecisionRow& d = decisions[i];
    if (d.outcome == Outcome::Skipped) {
      ++rep.skipped;
      continue;
    }
    ++rep.evaluated;
    if (gold[i].x == 1) ++rep.gold_subject_first;
    bool correct = (d.outcome == Outcome::Subject) == (gold[i].x == 1);
    LevelReport& lvl = rep.levels[static_cast<std::size_t>(d.level)];
    ++lvl.count;
    if (correct) {
      ++lvl.correct;
      ++rep.correct;
    }
  }
  return rep;
}

namespace detail {

inline std::string pad_left(std::string s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline std::string pad_right(std::string s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline std::string report_line(std::string label, std::string number, std::string percent,
                               std::string correct, std::string accuracy) {
  return pad_right(std::move(label), 5) + pad_left(std::move(number), 8) +
         pad_left(std::move(percent), 9) + pad_left(std::move(correct), 9) +
         pad_left(std::move(accuracy), 10) + "\n";
}

}  // namespace detail

// Fixed-width table, most specific level first, then the total and the
// always-subject baseline.
inline std::string render_report(const EvaluationReport& rep) {
  std::string out = detail::report_line("P_n", "Number", "Percent", "Correct", "Accuracy");
  for (int level = 3; level >= 0; --level) {
    const LevelReport& lvl = rep.levels[static_cast<std::size_t>(level)];
    out += detail::report_line(
        "P_" + std::to_string(level), std::to_string(lvl.count),
        format_percent(lvl.count, rep.evaluated), std::to_string(lvl.correct),
        format_percent(lvl.correct, lvl.count));
  }
  out += detail::report_line("Total", std::to_string(rep.evaluated),
                             format_percent(rep.evaluated, rep.evaluated),
                             std::to_string(rep.correct),
                             format_percent(rep.correct, rep.evaluated));
  out += "Baseline " + format_percent(rep.baseline_correct(), rep.evaluated) + "\n";
  return out;
}

}  // namespace kasus
