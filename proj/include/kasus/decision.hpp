#pragma once

// Applies the count model to test tuples: the first noun is called the
// subject when the estimated probability reaches one half. Tuples where both
// slots are pronouns carry no lexical evidence at all and are skipped.

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "kasus/backoff.hpp"
#include "kasus/extraction.hpp"
#include "kasus/tsv.hpp"

namespace kasus {

enum class Outcome { Subject, Object, Skipped };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Subject: return "subject";
    case Outcome::Object: return "object";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

inline std::optional<Outcome> parse_outcome(std::string_view s) {
  if (s == "subject") return Outcome::Subject;
  if (s == "object") return Outcome::Object;
  if (s == "skipped") return Outcome::Skipped;
  return std::nullopt;
}

struct DecisionRow {
  std::string n1, v, n2;
  Outcome outcome = Outcome::Skipped;
  int level = -1;     // back-off level; -1 when skipped
  std::string p = "-";  // rendered probability; "-" when skipped

  bool operator==(const DecisionRow&) const = default;
};

inline DecisionRow decide_one(const CountModel& model, const TestTuple& t) {
  DecisionRow row;
  row.n1 = t.n1;
  row.v = t.v;
  row.n2 = t.n2;
  if (t.p1 && t.p2) return row;  // skipped
  CountModel::Estimate e = model.estimate(t.n1, t.v, t.n2, t.p1, t.p2);
  row.level = e.level;
  if (e.level == 0) {
    // empty chain: probability 1 by definition
    row.outcome = Outcome::Subject;
    row.p = "1.0000";
    return row;
  }
  // num/den >= 1/2, exactly, without leaving integers
  row.outcome = 2 * e.num >= e.den ? Outcome::Subject : Outcome::Object;
  row.p = format_ratio(e.num, e.den, 4);
  return row;
}

inline std::vector<DecisionRow> decide_batch(const CountModel& model,
                                             const std::vector<TestTuple>& ts) {
  std::vector<DecisionRow> out;
  out.reserve(ts.size());
  for (const TestTuple& t : ts) out.push_back(decide_one(model, t));
  return out;
}

// ---------------------------------------------------------------------------
// Decision files

inline void write_decisions(std::ostream& out, const std::vector<DecisionRow>& rows) {
  for (const DecisionRow& r : rows) {
    out << r.n1 << '\t' << r.v << '\t' << r.n2 << '\t' << to_string(r.outcome) << '\t';
    if (r.outcome == Outcome::Skipped)
      out << "-\t-";
    else
      out << r.level << '\t' << r.p;
    out << '\n';
  }
}

inline std::vector<DecisionRow> read_decisions(std::istream& in) {
  std::vector<DecisionRow> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto f = split_tabs(line);
    if (f.size() != 6) throw ParseError("expected 6 fields in decision row", line_no);
    auto outcome = parse_outcome(f[3]);
    if (!outcome) throw ParseError("unknown outcome '" + std::string(f[3]) + "'", line_no);
    DecisionRow r;
    r.n1 = std::string(f[0]);
    r.v = std::string(f[1]);
    r.n2 = std::string(f[2]);
    r.outcome = *outcome;
    if (*outcome == Outcome::Skipped) {
      if (f[4] != "-" || f[5] != "-")
        throw ParseError("skipped rows must use '-' for level and probability", line_no);
      r.level = -1;
      r.p = "-";
    } else {
      auto level = parse_int(f[4]);
      if (!level || *level < 0 || *level > 3)
        throw ParseError("level must be between 0 and 3", line_no);
      r.level = static_cast<int>(*level);
      r.p = std::string(f[5]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace kasus
