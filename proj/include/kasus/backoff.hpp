#pragma once

// Count model over (noun, verb, noun, label) tuples with a hard back-off:
// each query walks from pair counts to single-slot counts to verb counts and
// answers with the first ratio whose denominator is populated. No smoothing
// or discounting; ratios stay exact integers until rendering.

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "kasus/extraction.hpp"
#include "kasus/tsv.hpp"

namespace kasus {

class CountModel {
 public:
  using Count = std::uint64_t;

  void add(const TrainingTuple& t, Count n = 1) {
    raw_[{t.v, t.n1, t.n2, t.x}] += n;
    const std::string& subj = t.x == 1 ? t.n1 : t.n2;
    const std::string& obj = t.x == 1 ? t.n2 : t.n1;
    so_[{t.v, subj, obj}] += n;
    fs_[{t.v, subj}] += n;
    fo_[{t.v, obj}] += n;
    if (t.x == 1)
      fs_v_[t.v] += n;
    else
      fo_v_[t.v] += n;
  }

  void train(const std::vector<TrainingTuple>& ts) {
    for (const TrainingTuple& t : ts) add(t);
  }

  // How often a was the subject and b the object of v.
  Count f_so(const std::string& a, const std::string& v, const std::string& b) const {
    return lookup(so_, std::tuple(v, a, b));
  }
  // How often n was the subject / the object of v, with anything else.
  Count f_s(const std::string& n, const std::string& v) const {
    return lookup(fs_, std::pair(v, n));
  }
  Count f_o(const std::string& n, const std::string& v) const {
    return lookup(fo_, std::pair(v, n));
  }
  // How often v occurred at all, split by label.
  Count f_s(const std::string& v) const { return lookup(fs_v_, v); }
  Count f_o(const std::string& v) const { return lookup(fo_v_, v); }

  Count tuple_count() const {
    Count total = 0;
    for (const auto& [k, n] : raw_) total += n;
    return total;
  }
  std::size_t distinct_tuples() const { return raw_.size(); }

  struct Estimate {
    int level = 0;               // 3 = pair, 2 = single slot, 1 = verb, 0 = none
    Count num = 0, den = 0;      // probability that n1 is the subject
  };

  // Walks the back-off chain for "is n1 the subject of v, with n2 as the
  // other argument". Pronoun slots carry no lexical evidence, so the chain
  // starts one level down and leans on the noun that is left.
  Estimate estimate(const std::string& n1, const std::string& v, const std::string& n2,
                    bool p1 = false, bool p2 = false) const {
    if (!p1 && !p2) {
      Count sv = f_so(n1, v, n2);
      Count os = f_so(n2, v, n1);
      if (sv + os > 0) return {3, sv, sv + os};
      Count num = f_s(n1, v) + f_o(n2, v);
      Count den = f_s(n1, v) + f_o(n1, v) + f_s(n2, v) + f_o(n2, v);
      if (den > 0) return {2, num, den};
    } else if (!p1 && p2) {
      Count den = f_s(n1, v) + f_o(n1, v);
      if (den > 0) return {2, f_s(n1, v), den};
    } else if (p1 && !p2) {
      Count den = f_s(n2, v) + f_o(n2, v);
      if (den > 0) return {2, f_o(n2, v), den};
    }
    Count den = f_s(v) + f_o(v);
    if (den > 0) return {1, f_s(v), den};
    return {0, 0, 0};  // nothing known; reads as probability 1
  }

  // -------------------------------------------------------------------------
  // Persistence: aggregated tuples, sorted, with a versioned header.

  void save(std::ostream& out) const {
    out << "#kasus-model v1\n";
    for (const auto& [key, n] : raw_) {
      const auto& [v, n1, n2, x] = key;
      out << n1 << '\t' << v << '\t' << n2 << '\t' << x << '\t' << n << '\n';
    }
  }

  static CountModel load(std::istream& in) {
    CountModel m;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (line[0] == '#') {
        if (!header_seen && line != "#kasus-model v1")
          throw ParseError("unsupported model header '" + line + "'", line_no);
        header_seen = true;
        continue;
      }
      if (!header_seen) throw ParseError("missing model header", line_no);
      auto f = split_tabs(line);
      if (f.size() != 5) throw ParseError("expected 5 fields in model row", line_no);
      auto x = parse_int(f[3]);
      if (!x || (*x != 0 && *x != 1)) throw ParseError("label must be 0 or 1", line_no);
      auto n = parse_int(f[4]);
      if (!n || *n <= 0) throw ParseError("count must be a positive integer", line_no);
      TrainingTuple t{std::string(f[0]), std::string(f[1]), std::string(f[2]),
                      static_cast<int>(*x), Rule::CaseNominative};
      m.add(t, static_cast<Count>(*n));
    }
    if (!header_seen) throw ParseError("missing model header", 1);
    return m;
  }

 private:
  template <typename Map, typename Key>
  static Count lookup(const Map& m, const Key& k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  }

  // Keyed verb-first so saved rows group by verb.
  std::map<std::tuple<std::string, std::string, std::string, int>, Count> raw_;
  std::map<std::tuple<std::string, std::string, std::string>, Count> so_;
  std::map<std::pair<std::string, std::string>, Count> fs_;
  std::map<std::pair<std::string, std::string>, Count> fo_;
  std::map<std::string, Count> fs_v_;
  std::map<std::string, Count> fo_v_;
};

}  // namespace kasus
