#pragma once

// Core vocabulary shared by every stage: grammatical feature enums, small
// fixed-capacity feature sets, and the closed word-category inventory.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace kasus {

enum class Case : unsigned { Nom = 0, Gen = 1, Dat = 2, Acc = 3 };
enum class GramNumber : unsigned { Sg = 0, Pl = 1 };
enum class Person : unsigned { First = 0, Second = 1, Third = 2 };
enum class Gender : unsigned { Masc = 0, Fem = 1, Neut = 2, None = 3 };

// A set over a small enum, stored as a bitmask. Cheap to copy and compare,
// which the chunker relies on when it intersects readings token by token.
template <typename E, unsigned N>
class FlagSet {
 public:
  constexpr FlagSet() = default;
  constexpr FlagSet(std::initializer_list<E> xs) {
    for (E x : xs) set(x);
  }

  constexpr void set(E x) { bits_ |= bit(x); }
  constexpr bool test(E x) const { return (bits_ & bit(x)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned count() const { return std::popcount(bits_); }

  // True when the set holds exactly the one given member.
  constexpr bool is_exactly(E x) const { return bits_ == bit(x); }
  constexpr bool intersects(FlagSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr FlagSet operator&(FlagSet o) const { return FlagSet(bits_ & o.bits_); }
  constexpr FlagSet operator|(FlagSet o) const { return FlagSet(bits_ | o.bits_); }
  constexpr bool operator==(const FlagSet&) const = default;

  constexpr unsigned raw() const { return bits_; }
  static constexpr FlagSet all() { return FlagSet((1u << N) - 1u); }
  static constexpr unsigned capacity() { return N; }

 private:
  explicit constexpr FlagSet(unsigned raw) : bits_(raw & ((1u << N) - 1u)) {}
  static constexpr unsigned bit(E x) { return 1u << static_cast<unsigned>(x); }
  unsigned bits_ = 0;
};

using CaseSet = FlagSet<Case, 4>;
using NumberSet = FlagSet<GramNumber, 2>;
using PersonSet = FlagSet<Person, 3>;

// Closed category inventory; the lexicon may not introduce new ones.
enum class Category : unsigned {
  Noun,
  ProperNoun,
  Pronoun,
  FiniteVerb,
  NonfiniteVerb,
  VerbPrefix,
  Determiner,
  Adjective,
  Preposition,
  Adverb,
  CoordConj,
  SubordConj,
  Complementizer,
  RelativePronoun,
  InterrogativePronoun,
  Punct,
  Other,
};

inline constexpr std::string_view kCategoryNames[] = {
    "Noun",       "ProperNoun",    "Pronoun",        "FiniteVerb",
    "NonfiniteVerb", "VerbPrefix", "Determiner",     "Adjective",
    "Preposition", "Adverb",       "CoordConj",      "SubordConj",
    "Complementizer", "RelativePronoun", "InterrogativePronoun", "Punct",
    "Other",
};

inline std::string_view to_string(Category c) {
  return kCategoryNames[static_cast<unsigned>(c)];
}

inline std::optional<Category> parse_category(std::string_view s) {
  for (unsigned i = 0; i < std::size(kCategoryNames); ++i)
    if (kCategoryNames[i] == s) return static_cast<Category>(i);
  return std::nullopt;
}

// Categories that may join a noun chunk.
inline constexpr bool is_nominal(Category c) {
  switch (c) {
    case Category::Noun:
    case Category::ProperNoun:
    case Category::Pronoun:
    case Category::Determiner:
    case Category::Adjective:
      return true;
    default:
      return false;
  }
}

inline constexpr bool is_verbal(Category c) {
  return c == Category::FiniteVerb || c == Category::NonfiniteVerb;
}

// A noun-class token that can close a noun chunk and act as its head.
inline constexpr bool is_noun_class(Category c) {
  return c == Category::Noun || c == Category::ProperNoun;
}

inline std::string_view to_string(Case c) {
  switch (c) {
    case Case::Nom: return "nom";
    case Case::Gen: return "gen";
    case Case::Dat: return "dat";
    case Case::Acc: return "acc";
  }
  return "?";
}

inline std::optional<Case> parse_case(std::string_view s) {
  if (s == "nom") return Case::Nom;
  if (s == "gen") return Case::Gen;
  if (s == "dat") return Case::Dat;
  if (s == "acc") return Case::Acc;
  return std::nullopt;
}

inline std::string_view to_string(GramNumber n) {
  return n == GramNumber::Sg ? "sg" : "pl";
}

inline std::optional<GramNumber> parse_number(std::string_view s) {
  if (s == "sg") return GramNumber::Sg;
  if (s == "pl") return GramNumber::Pl;
  return std::nullopt;
}

inline std::string_view to_string(Person p) {
  switch (p) {
    case Person::First: return "1";
    case Person::Second: return "2";
    case Person::Third: return "3";
  }
  return "?";
}

inline std::optional<Person> parse_person(std::string_view s) {
  if (s == "1") return Person::First;
  if (s == "2") return Person::Second;
  if (s == "3") return Person::Third;
  return std::nullopt;
}

inline std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::Masc: return "masc";
    case Gender::Fem: return "fem";
    case Gender::Neut: return "neut";
    case Gender::None: return "-";
  }
  return "?";
}

inline std::optional<Gender> parse_gender(std::string_view s) {
  if (s == "masc") return Gender::Masc;
  if (s == "fem") return Gender::Fem;
  if (s == "neut") return Gender::Neut;
  if (s == "-") return Gender::None;
  return std::nullopt;
}

}  // namespace kasus
