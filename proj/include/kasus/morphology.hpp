#pragma once

// Lexicon-driven morphology. The lexicon is a closed list of surface forms;
// analysis never guesses beyond the sentence-initial capitalization retry
// and two built-ins (punctuation, digit strings).

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kasus/core.hpp"
#include "kasus/tsv.hpp"

namespace kasus {

struct MorphReading {
  std::string lemma;
  Category category = Category::Other;
  Gender gender = Gender::None;
  CaseSet cases;      // non-empty for nominal categories only
  NumberSet numbers;
  PersonSet persons;

  bool operator==(const MorphReading&) const = default;
};

struct Token {
  std::string surface;
  std::size_t position = 0;  // index within the sentence
  std::vector<MorphReading> readings;  // empty = unknown word

  bool has(Category c) const {
    return std::any_of(readings.begin(), readings.end(),
                       [c](const MorphReading& r) { return r.category == c; });
  }
  bool has_nominal() const {
    return std::any_of(readings.begin(), readings.end(), [](const MorphReading& r) {
      return is_nominal(r.category);
    });
  }
  bool has_verbal() const {
    return std::any_of(readings.begin(), readings.end(), [](const MorphReading& r) {
      return is_verbal(r.category);
    });
  }
  bool unknown() const { return readings.empty(); }
};

namespace detail {

// First-character casing for German text. Only ASCII letters and the
// umlauts that can open a sentence are handled; that is all the retry needs.
inline bool starts_uppercase(std::string_view s) {
  if (s.empty()) return false;
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (c0 >= 'A' && c0 <= 'Z') return true;
  if (c0 == 0xC3 && s.size() >= 2) {
    unsigned char c1 = static_cast<unsigned char>(s[1]);
    return c1 == 0x84 || c1 == 0x96 || c1 == 0x9C;  // Ä Ö Ü
  }
  return false;
}

inline std::string lower_first(std::string_view s) {
  std::string out(s);
  if (out.empty()) return out;
  unsigned char c0 = static_cast<unsigned char>(out[0]);
  if (c0 >= 'A' && c0 <= 'Z') {
    out[0] = static_cast<char>(c0 - 'A' + 'a');
  } else if (c0 == 0xC3 && out.size() >= 2) {
    unsigned char c1 = static_cast<unsigned char>(out[1]);
    if (c1 == 0x84 || c1 == 0x96 || c1 == 0x9C)
      out[1] = static_cast<char>(c1 + 0x20);  // Ä->ä Ö->ö Ü->ü
  }
  return out;
}

inline bool is_punct_token(std::string_view s) {
  if (s.empty()) return false;
  return s.find_first_not_of(".,;:!?()\"'-") == std::string_view::npos;
}

inline bool is_digit_token(std::string_view s) {
  if (s.empty()) return false;
  return s.find_first_not_of("0123456789") == std::string_view::npos;
}

}  // namespace detail

class Lexicon {
 public:
  void add(std::string surface, MorphReading reading) {
    entries_[std::move(surface)].push_back(std::move(reading));
  }

  const std::vector<MorphReading>* find(const std::string& surface) const {
    auto it = entries_.find(surface);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t surface_count() const { return entries_.size(); }

  // All readings for a surface form. Capitalized surfaces also pick up the
  // readings of their lowercased variant, so a sentence-initial "Die" finds
  // the article and "Morgen" keeps both its noun and adverb analyses.
  std::vector<MorphReading> analyze(const std::string& surface) const {
    std::vector<MorphReading> out;
    if (detail::is_punct_token(surface)) {
      out.push_back(MorphReading{surface, Category::Punct, Gender::None, {}, {}, {}});
      return out;
    }
    if (const auto* direct = find(surface)) out = *direct;
    if (detail::starts_uppercase(surface)) {
      if (const auto* lowered = find(detail::lower_first(surface))) {
        for (const MorphReading& r : *lowered)
          if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
    }
    if (out.empty() && detail::is_digit_token(surface)) {
      // Cardinal numbers behave like attributive adjectives for chunking.
      out.push_back(MorphReading{surface, Category::Adjective, Gender::None,
                                 CaseSet::all(), NumberSet::all(), {Person::Third}});
    }
    return out;
  }

 private:
  std::unordered_map<std::string, std::vector<MorphReading>> entries_;
};

namespace detail {

inline CaseSet parse_case_field(std::string_view field, std::size_t line) {
  CaseSet out;
  if (field == "-") return out;
  for (std::string_view part : split_on(field, '|')) {
    auto c = parse_case(part);
    if (!c) throw ParseError("unknown case token '" + std::string(part) + "'", line);
    out.set(*c);
  }
  return out;
}

inline NumberSet parse_number_field(std::string_view field, std::size_t line) {
  NumberSet out;
  if (field == "-") return out;
  for (std::string_view part : split_on(field, '|')) {
    auto n = parse_number(part);
    if (!n) throw ParseError("unknown number token '" + std::string(part) + "'", line);
    out.set(*n);
  }
  return out;
}

inline PersonSet parse_person_field(std::string_view field, std::size_t line) {
  PersonSet out;
  if (field == "-") return out;
  for (std::string_view part : split_on(field, '|')) {
    auto p = parse_person(part);
    if (!p) throw ParseError("unknown person token '" + std::string(part) + "'", line);
    out.set(*p);
  }
  return out;
}

}  // namespace detail

// Reads the seven-column lexicon format:
//   surface  category  lemma  gender  case1|case2  num1|num2  pers1|pers2
// '-' marks an inapplicable field, '#' starts a comment line.
inline Lexicon load_lexicon(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 7)
      throw ParseError("expected 7 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    auto category = parse_category(fields[1]);
    if (!category)
      throw ParseError("unknown category '" + std::string(fields[1]) + "'", line_no);
    auto gender = parse_gender(fields[3]);
    if (!gender)
      throw ParseError("unknown gender token '" + std::string(fields[3]) + "'", line_no);

    MorphReading r;
    r.lemma = std::string(fields[2]);
    r.category = *category;
    r.gender = *gender;
    r.cases = detail::parse_case_field(fields[4], line_no);
    r.numbers = detail::parse_number_field(fields[5], line_no);
    r.persons = detail::parse_person_field(fields[6], line_no);

    if (fields[0].empty() || r.lemma.empty())
      throw ParseError("empty surface or lemma", line_no);
    if (is_nominal(r.category)) {
      if (r.cases.empty())
        throw ParseError("nominal reading needs a case set", line_no);
      if (r.numbers.empty())
        throw ParseError("nominal reading needs a number set", line_no);
      if (r.persons.empty())
        throw ParseError("nominal reading needs a person set", line_no);
    } else if (r.category == Category::FiniteVerb) {
      if (r.persons.empty() || r.numbers.empty())
        throw ParseError("finite verb reading needs person and number", line_no);
      if (!r.cases.empty())
        throw ParseError("verbal reading must not carry case", line_no);
    } else if (r.category == Category::NonfiniteVerb && !r.cases.empty()) {
      throw ParseError("verbal reading must not carry case", line_no);
    }
    lex.add(std::string(fields[0]), std::move(r));
  }
  return lex;
}

inline Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon: " + path);
  return load_lexicon(in);
}

// Splits a corpus line into surface tokens: whitespace-separated words with
// leading/trailing punctuation peeled off into tokens of their own.
inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    std::string_view word = line.substr(i, j - i);
    std::size_t lead = 0;
    while (lead < word.size() && detail::is_punct_token(word.substr(lead, 1))) ++lead;
    std::size_t trail = word.size();
    while (trail > lead && detail::is_punct_token(word.substr(trail - 1, 1))) --trail;
    for (std::size_t k = 0; k < lead; ++k) out.emplace_back(1, word[k]);
    if (trail > lead) out.emplace_back(word.substr(lead, trail - lead));
    for (std::size_t k = trail; k < word.size(); ++k) out.emplace_back(1, word[k]);
    i = j;
  }
  return out;
}

// What to do with a word the lexicon does not know.
enum class UnknownWords {
  SkipClause,     // discard any clause containing an unknown word
  AmbiguousNoun,  // read capitalized unknowns as fully ambiguous nouns
};

inline std::vector<Token> make_tokens(const Lexicon& lex, std::string_view line,
                                      UnknownWords policy) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  for (std::string& surface : tokenize(line)) {
    Token t;
    t.readings = lex.analyze(surface);
    if (t.readings.empty() && policy == UnknownWords::AmbiguousNoun &&
        detail::starts_uppercase(surface)) {
      t.readings.push_back(MorphReading{surface, Category::Noun, Gender::None,
                                        CaseSet::all(), NumberSet::all(),
                                        {Person::Third}});
    }
    t.surface = std::move(surface);
    t.position = pos++;
    tokens.push_back(std::move(t));
  }
  return tokens;
}

}  // namespace kasus
