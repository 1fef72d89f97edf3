#pragma once

// Deterministic generator for synthetic end-to-end runs: a small artificial
// German-like lexicon (exactly 200 surface forms) and a clause corpus whose
// argument structure is controlled, so the expected gold labels are known at
// generation time. Same seed, same bytes: randomness comes from one PRNG and
// explicit modulo draws, never from distribution objects.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kasus/core.hpp"

namespace kasus {

struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t clauses = 2400;
};

struct SynthDataset {
  std::string lexicon_tsv;
  std::string corpus;     // one sentence per line
  std::string gold_tsv;   // one row per generated test clause, in order
};

namespace synth_detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  bool pct(unsigned p) { return below(100) < p; }

 private:
  std::mt19937_64 eng_;
};

// Pronounceable pseudo-stems, unique per index: consonant-vowel-consonant.
inline std::string make_stem(std::size_t i) {
  static constexpr char cons[] = "bdfgklmnrt";
  static constexpr char vows[] = "aeiou";
  std::string s;
  s += cons[i % 10];
  s += vows[(i / 10) % 5];
  s += cons[(i / 50) % 10];
  return s;
}

inline std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

}  // namespace synth_detail

// Feminine nouns do the heavy lifting: their determiner never marks case, so
// they become training material only through number agreement or word order,
// and test material otherwise. Each feminine noun is tied to a preferred
// verb as subject and another as object, which gives the count model a
// learnable signal. Masculine nouns appear with case-marked determiners and
// produce the bulk of the unambiguous training data.
class SynthGenerator {
 public:
  explicit SynthGenerator(const SynthConfig& cfg) : cfg_(cfg) {
    for (std::size_t i = 0; i < kFem; ++i) {
      std::string sg = synth_detail::capitalize(synth_detail::make_stem(3 * i)) + "e";
      fem_sg_.push_back(sg);
      fem_pl_.push_back(sg + "n");
    }
    for (std::size_t i = 0; i < kMasc; ++i)
      masc_.push_back(synth_detail::capitalize(synth_detail::make_stem(3 * i + 1)));
    for (std::size_t i = 0; i < kVerb; ++i) {
      std::string stem = synth_detail::make_stem(3 * i + 2);
      verb_sg_.push_back(stem + "et");
      verb_pl_.push_back(stem + "en");
    }
  }

  SynthDataset generate() const {
    SynthDataset out;
    out.lexicon_tsv = lexicon();
    synth_detail::Rng rng(cfg_.seed);
    for (std::size_t i = 0; i < cfg_.clauses; ++i) {
      std::uint64_t kind = rng.below(100);
      if (kind < 35)
        masc_clause(rng, out);
      else if (kind < 50)
        agreement_clause(rng, out);
      else if (kind < 65)
        subordinate_clause(rng, out);
      else if (kind < 95)
        noun_test_clause(rng, out);
      else
        pronoun_test_clause(rng, out);
    }
    return out;
  }

 private:
  static constexpr std::size_t kFem = 68;   // 17 groups of 4
  static constexpr std::size_t kMasc = 26;
  static constexpr std::size_t kVerb = 15;
  static constexpr std::size_t kFillerGroup = 15;  // training-only objects
  static constexpr std::size_t kFreshGroup = 16;   // never seen in training

  // Feminine noun groups by index modulo 17: group k < 15 prefers verb k as
  // subject and verb (k+7) mod 15 as object; the last two groups are
  // reserved as filler and fresh test vocabulary.
  std::size_t pick_group(synth_detail::Rng& rng, std::size_t group) const {
    return group + 17 * rng.below(4);
  }
  std::size_t pick_subject(synth_detail::Rng& rng, std::size_t verb) const {
    return pick_group(rng, verb);
  }
  std::size_t pick_object(synth_detail::Rng& rng, std::size_t verb) const {
    return pick_group(rng, (verb + 7) % kVerb);
  }

  std::string lexicon() const {
    std::string out;
    auto row = [&](const std::string& surface, const char* cat, const std::string& lemma,
                   const char* gender, const char* cases, const char* numbers,
                   const char* persons) {
      out += surface + "\t" + cat + "\t" + lemma + "\t" + gender + "\t" + cases + "\t" +
             numbers + "\t" + persons + "\n";
    };
    for (std::size_t i = 0; i < kFem; ++i) {
      row(fem_sg_[i], "Noun", fem_sg_[i], "fem", "nom|gen|dat|acc", "sg", "3");
      row(fem_pl_[i], "Noun", fem_sg_[i], "fem", "nom|gen|dat|acc", "pl", "3");
    }
    for (const std::string& m : masc_)
      row(m, "Noun", m, "masc", "nom|dat|acc", "sg", "3");
    for (std::size_t i = 0; i < kVerb; ++i) {
      row(verb_sg_[i], "FiniteVerb", verb_pl_[i], "-", "-", "sg", "3");
      row(verb_pl_[i], "FiniteVerb", verb_pl_[i], "-", "-", "pl", "1|3");
      row(verb_pl_[i], "NonfiniteVerb", verb_pl_[i], "-", "-", "-", "-");
    }
    row("der", "Determiner", "der", "masc", "nom", "sg", "3");
    row("der", "Determiner", "der", "fem", "gen|dat", "sg", "3");
    row("der", "Determiner", "der", "-", "gen", "pl", "3");
    row("die", "Determiner", "die", "fem", "nom|acc", "sg", "3");
    row("die", "Determiner", "die", "-", "nom|acc", "pl", "3");
    row("den", "Determiner", "den", "masc", "acc", "sg", "3");
    row("eine", "Determiner", "eine", "fem", "nom|acc", "sg", "3");
    row("einen", "Determiner", "einen", "masc", "acc", "sg", "3");
    row("weil", "SubordConj", "weil", "-", "-", "-", "-");
    row("sie", "Pronoun", "sie", "fem", "nom|acc", "sg", "3");
    row("er", "Pronoun", "er", "masc", "nom", "sg", "3");
    return out;
  }

  // "Der Bak tet die Bake ." or "Den Bak tet die Bake ." -- the masculine
  // determiner marks case, so these always become training data.
  void masc_clause(synth_detail::Rng& rng, SynthDataset& out) const {
    std::size_t v = rng.below(kVerb);
    std::size_t m = rng.below(kMasc);
    bool svo = rng.pct(80);
    std::size_t f = svo ? (rng.pct(70) ? pick_object(rng, v)
                                       : pick_group(rng, kFillerGroup))
                        : pick_subject(rng, v);
    out.corpus += std::string(svo ? "Der" : "Den") + " " + masc_[m] + " " + verb_sg_[v] +
                  " die " + fem_sg_[f] + " .\n";
  }

  // Singular/plural mix forces number agreement to decide the subject.
  void agreement_clause(synth_detail::Rng& rng, SynthDataset& out) const {
    std::size_t v = rng.below(kVerb);
    std::size_t fs = pick_subject(rng, v);
    std::size_t fo = pick_object(rng, v);
    switch (rng.below(4)) {
      case 0:
        out.corpus += "Die " + fem_pl_[fs] + " " + verb_pl_[v] + " die " + fem_sg_[fo] + " .\n";
        break;
      case 1:
        out.corpus += "Die " + fem_sg_[fo] + " " + verb_pl_[v] + " die " + fem_pl_[fs] + " .\n";
        break;
      case 2:
        out.corpus += "Die " + fem_sg_[fs] + " " + verb_sg_[v] + " die " + fem_pl_[fo] + " .\n";
        break;
      default:
        out.corpus += "Die " + fem_pl_[fo] + " " + verb_sg_[v] + " die " + fem_sg_[fs] + " .\n";
        break;
    }
  }

  // "Weil die X die Y tet ." -- labeled subject-first by the word-order
  // heuristic. One in five puts the semantic object first: label noise.
  void subordinate_clause(synth_detail::Rng& rng, SynthDataset& out) const {
    std::size_t v = rng.below(kVerb);
    std::size_t fs = pick_subject(rng, v);
    std::size_t fo = pick_object(rng, v);
    if (!rng.pct(80)) std::swap(fs, fo);
    out.corpus += "Weil die " + fem_sg_[fs] + " die " + fem_sg_[fo] + " " + verb_sg_[v] + " .\n";
  }

  // Two feminine nouns, nothing to decide by: becomes a test tuple. 80%
  // subject-first. Some pairs use vocabulary with thin or no training
  // counts to exercise the lower back-off levels.
  void noun_test_clause(synth_detail::Rng& rng, SynthDataset& out) const {
    std::size_t v = rng.below(kVerb);
    std::uint64_t span = rng.below(10);
    std::size_t fs, fo;
    if (span < 7) {
      fs = pick_subject(rng, v);
      fo = pick_object(rng, v);
    } else if (span < 9) {
      fs = pick_subject(rng, v);
      fo = pick_group(rng, kFreshGroup);
    } else {
      fs = pick_group(rng, kFreshGroup);
      fo = pick_group(rng, kFreshGroup);
    }
    bool subject_first = rng.pct(80);
    std::size_t n1 = subject_first ? fs : fo;
    std::size_t n2 = subject_first ? fo : fs;
    out.corpus += "Die " + fem_sg_[n1] + " " + verb_sg_[v] + " die " + fem_sg_[n2] + " .\n";
    out.gold_tsv += fem_sg_[n1] + "\t" + verb_pl_[v] + "\t" + fem_sg_[n2] + "\t" +
                    (subject_first ? "1" : "0") + "\n";
  }

  // Pronoun slots carry no noun evidence; the model must lean on the noun
  // that is left, or skip when both slots are pronouns.
  void pronoun_test_clause(synth_detail::Rng& rng, SynthDataset& out) const {
    std::size_t v = rng.below(kVerb);
    std::uint64_t shape = rng.below(100);
    if (shape < 60) {
      std::size_t f = pick_object(rng, v);
      out.corpus += "Sie " + verb_sg_[v] + " die " + fem_sg_[f] + " .\n";
      out.gold_tsv += "sie\t" + verb_pl_[v] + "\t" + fem_sg_[f] + "\t1\n";
    } else if (shape < 85) {
      std::size_t f = pick_subject(rng, v);
      out.corpus += "Die " + fem_sg_[f] + " " + verb_sg_[v] + " sie .\n";
      out.gold_tsv += fem_sg_[f] + "\t" + verb_pl_[v] + "\tsie\t1\n";
    } else {
      out.corpus += "Sie " + verb_sg_[v] + " sie .\n";
      out.gold_tsv += "sie\t" + verb_pl_[v] + "\tsie\t1\n";
    }
  }

  SynthConfig cfg_;
  std::vector<std::string> fem_sg_, fem_pl_, masc_, verb_sg_, verb_pl_;
};

inline SynthDataset generate_dataset(const SynthConfig& cfg) {
  return SynthGenerator(cfg).generate();
}

}  // namespace kasus
