#pragma once

// Shallow clause analysis: split a token stream into clause segments, then
// chunk each segment into noun chunks (NC), prepositional chunks (PC) and a
// verb complex (VC). No full parse is attempted; the output is just enough
// structure for the subject/object extraction rules.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kasus/core.hpp"
#include "kasus/morphology.hpp"

namespace kasus {

enum class ClauseType { VerbSecond, VerbFinal };

// How the clause starts; drives the word-order heuristic.
enum class Introducer {
  NcFirst,           // verb-second, noun chunk in front of the verb
  AdverbialFirst,    // verb-second, adverbial or PC in front of the verb
  CoordConjunction,  // clause attached by a coordinating conjunction
  SubordConjunction, // verb-final, opened by a subordinating conjunction
  Complementizer,    // verb-final, opened by a complementizer
  RelativeItem,      // verb-final, opened by a relative item
  InterrogativeItem, // verb-final, opened by an interrogative item
};

inline std::string_view to_string(Introducer i) {
  switch (i) {
    case Introducer::NcFirst: return "none_nc_first";
    case Introducer::AdverbialFirst: return "adverbial_first";
    case Introducer::CoordConjunction: return "coord_conjunction";
    case Introducer::SubordConjunction: return "subord_conjunction";
    case Introducer::Complementizer: return "complementizer";
    case Introducer::RelativeItem: return "relative_item";
    case Introducer::InterrogativeItem: return "interrogative_item";
  }
  return "?";
}

inline std::string_view to_string(ClauseType t) {
  return t == ClauseType::VerbSecond ? "verb_second" : "verb_final";
}

// ---------------------------------------------------------------------------
// Clause segmentation

enum class ClauseOpener { None, Coord, Relative, Interrogative, Subordinating, Complementizing };

struct RawClause {
  std::vector<Token> tokens;  // opener and punctuation removed
  ClauseOpener opener = ClauseOpener::None;
  std::size_t start = 0;  // sentence position of the first token, for ordering
};

namespace detail {

// Which embedded-clause opener a token could be. Relative items outrank
// interrogatives, which outrank conjunctions, mirroring how ambiguous forms
// like "die" behave after a comma.
inline ClauseOpener opener_of(const Token& t) {
  if (t.has(Category::RelativePronoun)) return ClauseOpener::Relative;
  if (t.has(Category::InterrogativePronoun)) return ClauseOpener::Interrogative;
  if (t.has(Category::SubordConj)) return ClauseOpener::Subordinating;
  if (t.has(Category::Complementizer)) return ClauseOpener::Complementizing;
  return ClauseOpener::None;
}

}  // namespace detail

// Splits one sentence into clause segments. A comma directly in front of a
// clause opener starts an embedded clause that runs to the next comma; the
// host clause resumes after it, so its token list can skip the carve-out.
// Any other comma, and any coordinating conjunction, is a plain boundary.
// Relative and interrogative openers are only recognized after a comma:
// sentence-initial "Die" is an article, not a relative item.
inline std::vector<RawClause> segment_clauses(const std::vector<Token>& toks) {
  std::vector<RawClause> done;
  auto finish = [&](RawClause&& c) {
    if (!c.tokens.empty()) done.push_back(std::move(c));
  };

  RawClause cur;
  std::optional<RawClause> suspended;
  std::size_t i = 0;
  if (!toks.empty()) {
    ClauseOpener op = detail::opener_of(toks[0]);
    if (op == ClauseOpener::Subordinating || op == ClauseOpener::Complementizing) {
      cur.opener = op;
      cur.start = 1;
      i = 1;
    }
  }
  for (; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.has(Category::Punct)) {
      if (t.surface == "," && suspended) {
        // closing comma of an embedded clause; resume the host
        finish(std::move(cur));
        cur = std::move(*suspended);
        suspended.reset();
        continue;
      }
      if (t.surface == "," && i + 1 < toks.size()) {
        ClauseOpener op = detail::opener_of(toks[i + 1]);
        if (op != ClauseOpener::None) {
          suspended = std::move(cur);
          cur = RawClause{};
          cur.opener = op;
          cur.start = i + 1;
          ++i;  // the opener token itself is consumed
          continue;
        }
      }
      // plain boundary ('.', lone comma, ...)
      if (suspended) {
        finish(std::move(cur));
        cur = std::move(*suspended);
        suspended.reset();
      }
      finish(std::move(cur));
      cur = RawClause{};
      cur.start = i + 1;
      continue;
    }
    if (t.has(Category::CoordConj)) {
      finish(std::move(cur));
      cur = RawClause{};
      cur.opener = ClauseOpener::Coord;
      cur.start = i + 1;
      continue;
    }
    cur.tokens.push_back(t);
  }
  finish(std::move(cur));
  if (suspended) finish(std::move(*suspended));
  std::stable_sort(done.begin(), done.end(),
                   [](const RawClause& a, const RawClause& b) { return a.start < b.start; });
  return done;
}

// ---------------------------------------------------------------------------
// Feature unification

namespace detail {

// Agreement works on joint (gender, number, case) combinations, not on the
// three dimensions independently: "der" as feminine is genitive/dative only,
// so "der Wagen" must come out masculine nominative rather than keeping the
// union of everything. One bit per combination: 3 genders x 2 numbers x 4
// cases. A reading without a gender commits to none, so it spans all three.
using ComboMask = std::uint32_t;

inline ComboMask combo_mask(const MorphReading& r) {
  ComboMask m = 0;
  for (unsigned g = 0; g < 3; ++g) {
    if (r.gender != Gender::None && static_cast<unsigned>(r.gender) != g) continue;
    for (unsigned n = 0; n < 2; ++n) {
      if (!r.numbers.test(static_cast<GramNumber>(n))) continue;
      for (unsigned c = 0; c < 4; ++c) {
        if (!r.cases.test(static_cast<Case>(c))) continue;
        m |= 1u << (g * 8 + n * 4 + c);
      }
    }
  }
  return m;
}

inline ComboMask token_nominal_mask(const Token& t) {
  ComboMask m = 0;
  for (const MorphReading& r : t.readings)
    if (is_nominal(r.category)) m |= combo_mask(r);
  return m;
}

inline CaseSet project_cases(ComboMask m) {
  CaseSet out;
  for (unsigned c = 0; c < 4; ++c)
    for (unsigned gn = 0; gn < 6; ++gn)
      if (m & (1u << (gn * 4 + c))) out.set(static_cast<Case>(c));
  return out;
}

inline NumberSet project_numbers(ComboMask m) {
  NumberSet out;
  for (unsigned g = 0; g < 3; ++g)
    for (unsigned n = 0; n < 2; ++n)
      if (m & (0xFu << (g * 8 + n * 4))) out.set(static_cast<GramNumber>(n));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constituents

enum class ConstituentKind { NounChunk, PrepChunk, VerbComplex };

inline std::string_view to_string(ConstituentKind k) {
  switch (k) {
    case ConstituentKind::NounChunk: return "NC";
    case ConstituentKind::PrepChunk: return "PC";
    case ConstituentKind::VerbComplex: return "VC";
  }
  return "?";
}

struct Constituent {
  ConstituentKind kind = ConstituentKind::NounChunk;
  std::size_t begin = 0, end = 0;  // [begin, end) into the clause token list

  // Head word, for noun chunks and the verb complex.
  std::string head_lemma;
  Category head_category = Category::Other;
  bool head_is_pronoun = false;
  Gender head_gender = Gender::None;

  // Unified agreement features. Empty for prepositional chunks.
  CaseSet cases;
  NumberSet numbers;
  PersonSet persons;
};

struct ClauseStructure {
  ClauseType type = ClauseType::VerbSecond;
  Introducer introducer = Introducer::NcFirst;
  std::vector<Token> tokens;
  std::vector<Constituent> constituents;  // NC/PC/VC in textual order
  std::string main_verb_lemma;

  const Constituent* verb_complex() const {
    for (const Constituent& c : constituents)
      if (c.kind == ConstituentKind::VerbComplex) return &c;
    return nullptr;
  }
};

namespace detail {

// Token roles for the chunk scanner, in priority order: a token that could
// be a preposition opens a PC even if it has other readings, and a token
// with any nominal reading is treated as nominal before verbal ("Morgen").
enum class Role { Punct, Prep, Nominal, Verb, Adverb, Inert };

inline Role role_of(const Token& t) {
  if (t.has(Category::Punct)) return Role::Punct;
  if (t.has(Category::Preposition)) return Role::Prep;
  if (t.has_nominal()) return Role::Nominal;
  if (t.has_verbal()) return Role::Verb;
  if (t.has(Category::Adverb)) return Role::Adverb;
  return Role::Inert;
}

inline bool pronoun_only(const Token& t) {
  return t.has(Category::Pronoun) && !t.has(Category::Determiner) &&
         !t.has(Category::Adjective) && !t.has(Category::Noun) &&
         !t.has(Category::ProperNoun);
}

inline bool finite_capable(const Token& t) { return t.has(Category::FiniteVerb); }
inline bool nonfinite_capable(const Token& t) { return t.has(Category::NonfiniteVerb); }

// Fills head-derived features of a noun chunk from the unified mask: only
// head readings compatible with the chunk-wide agreement survive.
inline void fill_nc_features(Constituent& nc, const Token& head, ComboMask mask) {
  std::vector<const MorphReading*> consistent;
  for (const MorphReading& r : head.readings)
    if (is_nominal(r.category) && (combo_mask(r) & mask) != 0) consistent.push_back(&r);

  nc.cases = project_cases(mask);
  nc.numbers = project_numbers(mask);
  nc.persons = {};
  for (const MorphReading* r : consistent) nc.persons = nc.persons | r->persons;

  // Prefer a noun-class reading as the naming head when one survives.
  const MorphReading* naming = nullptr;
  for (const MorphReading* r : consistent)
    if (is_noun_class(r->category)) { naming = r; break; }
  if (!naming && !consistent.empty()) naming = consistent.front();
  if (naming) {
    nc.head_lemma = naming->lemma;
    nc.head_category = naming->category;
  }
  for (const MorphReading* r : consistent)
    if (r->category == Category::Pronoun) nc.head_is_pronoun = true;

  Gender g = Gender::None;
  bool first = true, unique = true;
  for (const MorphReading* r : consistent) {
    if (first) { g = r->gender; first = false; }
    else if (r->gender != g) unique = false;
  }
  nc.head_gender = (!first && unique) ? g : Gender::None;
}

struct NcGroup {
  std::size_t begin = 0, end = 0;
  std::size_t head = 0;                // token index of the head
  std::vector<std::size_t> core;       // tokens subject to agreement
};

// Scans one noun group starting at list index i. The first noun-class token
// closes the agreement core and becomes the head; bare noun-class tokens
// after it (measure/name appositions like "125 Millionen DM") extend the
// span without shifting the head or tightening agreement.
inline NcGroup scan_nc_group(const std::vector<Token>& toks, std::size_t i) {
  NcGroup g;
  g.begin = i;
  if (pronoun_only(toks[i])) {
    g.core = {i};
    g.head = i;
    g.end = i + 1;
    return g;
  }
  std::size_t j = i;
  bool have_head = false;
  while (j < toks.size() && role_of(toks[j]) == Role::Nominal) {
    if (pronoun_only(toks[j])) break;
    g.core.push_back(j);
    if (toks[j].has(Category::Noun) || toks[j].has(Category::ProperNoun)) {
      g.head = j;
      have_head = true;
      ++j;
      break;
    }
    ++j;
  }
  if (have_head) {
    while (j < toks.size() && role_of(toks[j]) == Role::Nominal &&
           (toks[j].has(Category::Noun) || toks[j].has(Category::ProperNoun)) &&
           !toks[j].has(Category::Determiner) && !pronoun_only(toks[j]))
      ++j;
  } else {
    g.head = g.core.back();  // determiner/adjective stub: rightmost token
  }
  g.end = j;
  return g;
}

inline Constituent build_nc(const std::vector<Token>& toks, const NcGroup& g) {
  Constituent nc;
  nc.kind = ConstituentKind::NounChunk;
  nc.begin = g.begin;
  nc.end = g.end;
  ComboMask mask = ~0u;
  for (std::size_t k : g.core) mask &= token_nominal_mask(toks[k]);
  fill_nc_features(nc, toks[g.head], mask);
  return nc;
}

}  // namespace detail

// Chunks one clause segment into a structure. Returns nothing when the
// segment has no usable verb complex or its shape fails the word-order
// check for its clause type.
inline std::optional<ClauseStructure> chunk(const RawClause& raw) {
  using detail::Role;
  const std::vector<Token>& toks = raw.tokens;
  if (toks.empty()) return std::nullopt;

  ClauseStructure s;
  s.tokens = toks;
  s.type = (raw.opener == ClauseOpener::Relative ||
            raw.opener == ClauseOpener::Interrogative ||
            raw.opener == ClauseOpener::Subordinating ||
            raw.opener == ClauseOpener::Complementizing)
               ? ClauseType::VerbFinal
               : ClauseType::VerbSecond;

  struct Item {
    enum Kind { Nc, Pc, VerbRun, AdvRun } kind;
    std::size_t begin, end;
    detail::NcGroup group;  // for Nc
  };
  std::vector<Item> items;

  std::size_t i = 0;
  while (i < toks.size()) {
    switch (detail::role_of(toks[i])) {
      case Role::Prep: {
        // The preposition claims one noun group; a fresh determiner after
        // that head starts the next chunk ("in Südostasien einen Umsatz").
        std::size_t j = i + 1;
        if (j < toks.size() && detail::role_of(toks[j]) == Role::Nominal)
          j = detail::scan_nc_group(toks, j).end;
        items.push_back({Item::Pc, i, j, {}});
        i = j;
        break;
      }
      case Role::Nominal: {
        detail::NcGroup g = detail::scan_nc_group(toks, i);
        items.push_back({Item::Nc, g.begin, g.end, g});
        i = g.end;
        break;
      }
      case Role::Verb: {
        std::size_t j = i;
        while (j < toks.size() && detail::role_of(toks[j]) == Role::Verb) ++j;
        items.push_back({Item::VerbRun, i, j, {}});
        i = j;
        break;
      }
      case Role::Adverb: {
        std::size_t j = i;
        while (j < toks.size() && detail::role_of(toks[j]) == Role::Adverb) ++j;
        items.push_back({Item::AdvRun, i, j, {}});
        i = j;
        break;
      }
      case Role::Punct:
      case Role::Inert:
        ++i;  // no position of its own
        break;
    }
  }

  // Pick the verb complex: the first verb run that can be finite. Other
  // runs must be pure nonfinite clusters (infinitives, participles); a
  // second finite verb means mis-segmentation, so the clause is dropped.
  std::size_t vc_item = items.size();
  std::vector<std::size_t> cluster_tokens;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (items[k].kind != Item::VerbRun) continue;
    bool any_finite = false;
    for (std::size_t t = items[k].begin; t < items[k].end; ++t)
      if (detail::finite_capable(toks[t])) any_finite = true;
    if (any_finite && vc_item == items.size()) {
      vc_item = k;
      continue;
    }
    for (std::size_t t = items[k].begin; t < items[k].end; ++t) {
      if (!detail::nonfinite_capable(toks[t])) return std::nullopt;
      cluster_tokens.push_back(t);
    }
  }
  if (vc_item == items.size()) return std::nullopt;

  // Word-order check over position items; nonfinite clusters do not count
  // as positions.
  std::vector<std::size_t> positions;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (items[k].kind == Item::VerbRun && k != vc_item) continue;
    positions.push_back(k);
  }
  auto pos_of = [&](std::size_t item_index) {
    return std::find(positions.begin(), positions.end(), item_index) - positions.begin();
  };
  std::size_t vc_pos = static_cast<std::size_t>(pos_of(vc_item));

  if (s.type == ClauseType::VerbFinal) {
    if (vc_pos + 1 != positions.size()) return std::nullopt;
    switch (raw.opener) {
      case ClauseOpener::Relative: s.introducer = Introducer::RelativeItem; break;
      case ClauseOpener::Interrogative: s.introducer = Introducer::InterrogativeItem; break;
      case ClauseOpener::Subordinating: s.introducer = Introducer::SubordConjunction; break;
      default: s.introducer = Introducer::Complementizer; break;
    }
  } else {
    // Verb-second: one field in front of the verb. Either a noun chunk plus
    // any directly attached PCs/adverbials, or a run of PCs/adverbials.
    if (vc_pos == 0) return std::nullopt;
    Item::Kind first = items[positions[0]].kind;
    if (first == Item::VerbRun) return std::nullopt;
    std::size_t k = (first == Item::Nc) ? 1 : 0;
    while (k < vc_pos) {
      Item::Kind kk = items[positions[k]].kind;
      if (kk != Item::Pc && kk != Item::AdvRun) return std::nullopt;
      ++k;
    }
    if (raw.opener == ClauseOpener::Coord)
      s.introducer = Introducer::CoordConjunction;
    else
      s.introducer = (first == Item::Nc) ? Introducer::NcFirst : Introducer::AdverbialFirst;
  }

  // Build constituents in textual order.
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Item& it = items[k];
    if (it.kind == Item::Nc) {
      Constituent nc = detail::build_nc(toks, it.group);
      if (nc.cases.empty() && !detail::pronoun_only(toks[it.group.head])) {
        // agreement clash inside the group: fall back to singleton chunks
        for (std::size_t t = it.begin; t < it.end; ++t) {
          detail::NcGroup single{t, t + 1, t, {t}};
          s.constituents.push_back(detail::build_nc(toks, single));
        }
        continue;
      }
      s.constituents.push_back(std::move(nc));
    } else if (it.kind == Item::Pc) {
      Constituent pc;
      pc.kind = ConstituentKind::PrepChunk;
      pc.begin = it.begin;
      pc.end = it.end;
      s.constituents.push_back(std::move(pc));
    } else if (it.kind == Item::VerbRun && k == vc_item) {
      Constituent vc;
      vc.kind = ConstituentKind::VerbComplex;
      vc.begin = it.begin;
      vc.end = it.end;
      // The finite verb: last candidate in the run for verb-final clauses
      // ("zurückweisen wird"), first otherwise.
      std::size_t fin = it.begin;
      for (std::size_t t = it.begin; t < it.end; ++t) {
        if (!detail::finite_capable(toks[t])) continue;
        fin = t;
        if (s.type != ClauseType::VerbFinal) break;
      }
      const MorphReading* fin_reading = nullptr;
      for (const MorphReading& r : toks[fin].readings) {
        if (r.category != Category::FiniteVerb) continue;
        vc.persons = vc.persons | r.persons;
        vc.numbers = vc.numbers | r.numbers;
        if (!fin_reading) fin_reading = &r;
      }
      // Main verb: the first nonfinite verb form anywhere in the complex or
      // its clusters ("wird ... arbeiten" -> arbeiten); simple tense keeps
      // the finite verb's lemma.
      std::vector<std::size_t> verb_tokens;
      for (std::size_t t = it.begin; t < it.end; ++t) verb_tokens.push_back(t);
      verb_tokens.insert(verb_tokens.end(), cluster_tokens.begin(), cluster_tokens.end());
      std::sort(verb_tokens.begin(), verb_tokens.end());
      std::string main;
      for (std::size_t t : verb_tokens) {
        if (t == fin || !detail::nonfinite_capable(toks[t])) continue;
        for (const MorphReading& r : toks[t].readings)
          if (r.category == Category::NonfiniteVerb) { main = r.lemma; break; }
        if (!main.empty()) break;
      }
      if (main.empty() && fin_reading) main = fin_reading->lemma;
      vc.head_lemma = main;
      vc.head_category = Category::FiniteVerb;
      s.main_verb_lemma = std::move(main);
      s.constituents.push_back(std::move(vc));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Structure dump (for --dump-structures)

namespace detail {

inline std::string persons_str(PersonSet p) {
  std::string out;
  for (Person x : {Person::First, Person::Second, Person::Third}) {
    if (!p.test(x)) continue;
    if (!out.empty()) out += '|';
    out += to_string(x);
  }
  return out.empty() ? "-" : out;
}

inline std::string numbers_str(NumberSet n) {
  std::string out;
  if (n.test(GramNumber::Sg)) out += 's';
  if (n.test(GramNumber::Pl)) out += out.empty() ? "p" : "|p";
  return out.empty() ? "-" : out;
}

inline std::string cases_str(CaseSet c) {
  std::string out;
  for (Case x : {Case::Nom, Case::Gen, Case::Dat, Case::Acc}) {
    if (!c.test(x)) continue;
    if (!out.empty()) out += ',';
    out += to_string(x);
  }
  if (out.empty()) return "-";
  return c.count() > 1 ? "{" + out + "}" : out;
}

}  // namespace detail

inline std::string dump_structure(const ClauseStructure& s) {
  std::string out = "S\t";
  out += to_string(s.type);
  out += '\t';
  out += to_string(s.introducer);
  out += '\t';
  out += s.main_verb_lemma;
  out += '\n';
  for (const Constituent& c : s.constituents) {
    out += to_string(c.kind);
    out += '\t';
    if (c.kind == ConstituentKind::NounChunk)
      out += detail::persons_str(c.persons) + "," + detail::numbers_str(c.numbers) +
             "," + detail::cases_str(c.cases);
    else if (c.kind == ConstituentKind::VerbComplex)
      out += detail::persons_str(c.persons) + "," + detail::numbers_str(c.numbers);
    else
      out += '-';
    out += '\t';
    for (std::size_t t = c.begin; t < c.end; ++t) {
      if (t > c.begin) out += ' ';
      out += s.tokens[t].surface;
    }
    out += '\n';
  }
  return out;
}

}  // namespace kasus
