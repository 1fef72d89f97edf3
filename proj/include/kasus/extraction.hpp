#pragma once

// Turns chunked clauses into labeled training tuples and unlabeled test
// tuples. A clause qualifies when it has exactly two noun chunks that could
// be nominative or accusative; four rules try to label it, and whatever they
// cannot decide becomes a test tuple.

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kasus/chunker.hpp"
#include "kasus/core.hpp"
#include "kasus/morphology.hpp"
#include "kasus/tsv.hpp"

namespace kasus {

enum class Rule { CaseNominative, CaseAccusative, Agreement, Heuristic };

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::CaseNominative: return "case_nom";
    case Rule::CaseAccusative: return "case_acc";
    case Rule::Agreement: return "agreement";
    case Rule::Heuristic: return "heuristic";
  }
  return "?";
}

inline std::optional<Rule> parse_rule(std::string_view s) {
  if (s == "case_nom") return Rule::CaseNominative;
  if (s == "case_acc") return Rule::CaseAccusative;
  if (s == "agreement") return Rule::Agreement;
  if (s == "heuristic") return Rule::Heuristic;
  return std::nullopt;
}

// A clause whose subject is known: x == 1 when the first noun chunk is the
// subject, x == 0 when it is the object.
struct TrainingTuple {
  std::string n1, v, n2;
  int x = 1;
  Rule rule = Rule::CaseNominative;

  bool operator==(const TrainingTuple&) const = default;
};

// A clause the rules could not label; p1/p2 flag pronoun heads.
struct TestTuple {
  std::string n1, v, n2;
  bool p1 = false, p2 = false;

  bool operator==(const TestTuple&) const = default;
};

struct ClauseOutcome {
  std::optional<TrainingTuple> training;
  std::optional<TestTuple> test;
  bool ineligible = false;
  bool contradictory = false;  // both chunks claimed the same marked case
};

// Applies the labeling rules to one chunked clause.
inline ClauseOutcome analyze_clause(const ClauseStructure& s) {
  ClauseOutcome out;
  static const CaseSet kNomAcc{Case::Nom, Case::Acc};

  std::vector<const Constituent*> cand;
  const Constituent* vc = nullptr;
  for (const Constituent& c : s.constituents) {
    if (c.kind == ConstituentKind::NounChunk && c.cases.intersects(kNomAcc))
      cand.push_back(&c);
    else if (c.kind == ConstituentKind::VerbComplex)
      vc = &c;
  }
  if (cand.size() != 2 || !vc) {
    out.ineligible = true;
    return out;
  }
  const Constituent& nc1 = *cand[0];
  const Constituent& nc2 = *cand[1];

  auto training = [&](int x, Rule rule) {
    out.training = TrainingTuple{nc1.head_lemma, s.main_verb_lemma, nc2.head_lemma, x, rule};
  };

  // Unambiguously nominative masculine chunk -> it is the subject.
  bool nom1 = nc1.head_gender == Gender::Masc && nc1.cases.is_exactly(Case::Nom);
  bool nom2 = nc2.head_gender == Gender::Masc && nc2.cases.is_exactly(Case::Nom);
  if (nom1 && nom2) {
    out.contradictory = true;
    return out;
  }
  if (nom1 || nom2) {
    training(nom1 ? 1 : 0, Rule::CaseNominative);
    return out;
  }

  // Unambiguously accusative masculine chunk -> it is the object.
  bool acc1 = nc1.head_gender == Gender::Masc && nc1.cases.is_exactly(Case::Acc);
  bool acc2 = nc2.head_gender == Gender::Masc && nc2.cases.is_exactly(Case::Acc);
  if (acc1 && acc2) {
    out.contradictory = true;
    return out;
  }
  if (acc1 || acc2) {
    training(acc1 ? 0 : 1, Rule::CaseAccusative);
    return out;
  }

  // Exactly one chunk agrees with the finite verb in person and number.
  auto agrees = [&](const Constituent& nc) {
    return nc.persons.intersects(vc->persons) && nc.numbers.intersects(vc->numbers);
  };
  bool agr1 = agrees(nc1);
  bool agr2 = agrees(nc2);
  if (agr1 != agr2) {
    training(agr1 ? 1 : 0, Rule::Agreement);
    return out;
  }

  // Word-order heuristic: subject first in plain declaratives with a fronted
  // adverbial and in conjunction-opened verb-final clauses. Relative and
  // interrogative clauses front whatever the shared item is, so they are
  // left undecided.
  bool heuristic =
      (s.type == ClauseType::VerbSecond && s.introducer == Introducer::AdverbialFirst) ||
      (s.type == ClauseType::VerbFinal &&
       (s.introducer == Introducer::SubordConjunction ||
        s.introducer == Introducer::Complementizer));
  if (heuristic) {
    training(1, Rule::Heuristic);
    return out;
  }

  out.test = TestTuple{nc1.head_lemma, s.main_verb_lemma, nc2.head_lemma,
                       nc1.head_is_pronoun, nc2.head_is_pronoun};
  return out;
}

struct ExtractionStats {
  std::size_t sentences = 0;
  std::size_t clauses = 0;
  std::size_t skipped_unknown = 0;  // clause had an out-of-lexicon word
  std::size_t rejected = 0;         // no verb complex / word-order mismatch
  std::size_t ineligible = 0;       // not exactly two candidate noun chunks
  std::size_t contradictory = 0;    // conflicting case evidence
};

struct ExtractionResult {
  std::vector<TrainingTuple> training;
  std::vector<TestTuple> test;
  ExtractionStats stats;
};

// Runs the whole pipeline over a corpus, one sentence per line. When `dump`
// is given, every accepted clause structure is written to it.
inline ExtractionResult extract_corpus(const Lexicon& lex, std::istream& corpus,
                                       UnknownWords policy, std::ostream* dump = nullptr) {
  ExtractionResult res;
  std::string line;
  while (std::getline(corpus, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++res.stats.sentences;
    std::vector<Token> tokens = make_tokens(lex, line, policy);
    for (RawClause& clause : segment_clauses(tokens)) {
      ++res.stats.clauses;
      if (policy == UnknownWords::SkipClause) {
        bool unknown = false;
        for (const Token& t : clause.tokens)
          if (t.unknown()) unknown = true;
        if (unknown) {
          ++res.stats.skipped_unknown;
          continue;
        }
      }
      std::optional<ClauseStructure> s = chunk(clause);
      if (!s) {
        ++res.stats.rejected;
        continue;
      }
      if (dump) *dump << dump_structure(*s) << '\n';
      ClauseOutcome outcome = analyze_clause(*s);
      if (outcome.training)
        res.training.push_back(std::move(*outcome.training));
      else if (outcome.test)
        res.test.push_back(std::move(*outcome.test));
      else if (outcome.contradictory)
        ++res.stats.contradictory;
      else
        ++res.stats.ineligible;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Tuple files

inline void write_training(std::ostream& out, const std::vector<TrainingTuple>& ts) {
  for (const TrainingTuple& t : ts)
    out << t.n1 << '\t' << t.v << '\t' << t.n2 << '\t' << t.x << '\t'
        << to_string(t.rule) << '\n';
}

inline std::vector<TrainingTuple> read_training(std::istream& in) {
  std::vector<TrainingTuple> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto f = split_tabs(line);
    if (f.size() != 5)
      throw ParseError("expected 5 fields in training tuple", line_no);
    auto x = parse_int(f[3]);
    if (!x || (*x != 0 && *x != 1))
      throw ParseError("label must be 0 or 1", line_no);
    auto rule = parse_rule(f[4]);
    if (!rule) throw ParseError("unknown rule '" + std::string(f[4]) + "'", line_no);
    out.push_back(TrainingTuple{std::string(f[0]), std::string(f[1]),
                                std::string(f[2]), static_cast<int>(*x), *rule});
  }
  return out;
}

inline void write_test(std::ostream& out, const std::vector<TestTuple>& ts) {
  for (const TestTuple& t : ts)
    out << t.n1 << '\t' << t.v << '\t' << t.n2 << '\t' << (t.p1 ? 1 : 0) << '\t'
        << (t.p2 ? 1 : 0) << '\n';
}

inline std::vector<TestTuple> read_test(std::istream& in) {
  std::vector<TestTuple> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto f = split_tabs(line);
    if (f.size() != 5)
      throw ParseError("expected 5 fields in test tuple", line_no);
    auto p1 = parse_int(f[3]);
    auto p2 = parse_int(f[4]);
    if (!p1 || !p2 || (*p1 != 0 && *p1 != 1) || (*p2 != 0 && *p2 != 1))
      throw ParseError("pronoun flags must be 0 or 1", line_no);
    out.push_back(TestTuple{std::string(f[0]), std::string(f[1]), std::string(f[2]),
                            *p1 == 1, *p2 == 1});
  }
  return out;
}

}  // namespace kasus
