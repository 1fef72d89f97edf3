#pragma once

// Reference implementation of the co-occurrence counts and the back-off
// estimate, written as literal definitions over the raw tuple list. Every
// quantity is a linear scan or a sum over the observed vocabulary: slow on
// purpose, with no shared code or data structures with the real model, so
// the two can check each other.

#include <set>
#include <string>
#include <vector>

#include "kasus/extraction.hpp"

namespace kasus::oracle {

// Number of training tuples equal to (n1, v, n2, x).
inline unsigned long long c(const std::vector<TrainingTuple>& ts, const std::string& n1,
                            const std::string& v, const std::string& n2, int x) {
  unsigned long long total = 0;
  for (const TrainingTuple& t : ts)
    if (t.n1 == n1 && t.v == v && t.n2 == n2 && t.x == x) ++total;
  return total;
}

// How often a appeared as subject and b as object of v.
inline unsigned long long f_so(const std::vector<TrainingTuple>& ts, const std::string& a,
                               const std::string& v, const std::string& b) {
  return c(ts, a, v, b, 1) + c(ts, b, v, a, 0);
}

inline std::set<std::string> noun_vocabulary(const std::vector<TrainingTuple>& ts) {
  std::set<std::string> nouns;
  for (const TrainingTuple& t : ts) {
    nouns.insert(t.n1);
    nouns.insert(t.n2);
  }
  return nouns;
}

// How often n appeared as subject of v, summed over every possible object.
inline unsigned long long f_s(const std::vector<TrainingTuple>& ts, const std::string& n,
                              const std::string& v) {
  unsigned long long total = 0;
  for (const std::string& b : noun_vocabulary(ts)) total += f_so(ts, n, v, b);
  return total;
}

// How often n appeared as object of v, summed over every possible subject.
inline unsigned long long f_o(const std::vector<TrainingTuple>& ts, const std::string& n,
                              const std::string& v) {
  unsigned long long total = 0;
  for (const std::string& a : noun_vocabulary(ts)) total += f_so(ts, a, v, n);
  return total;
}

// How often v occurred with any subject / any object.
inline unsigned long long f_s(const std::vector<TrainingTuple>& ts, const std::string& v) {
  unsigned long long total = 0;
  for (const TrainingTuple& t : ts)
    if (t.v == v && t.x == 1) ++total;
  return total;
}

inline unsigned long long f_o(const std::vector<TrainingTuple>& ts, const std::string& v) {
  unsigned long long total = 0;
  for (const TrainingTuple& t : ts)
    if (t.v == v && t.x == 0) ++total;
  return total;
}

struct Estimate {
  int level = 0;                 // back-off level that produced the value
  unsigned long long num = 0;    // value as an exact ratio num/den
  unsigned long long den = 0;    // den == 0 at level 0, value 1 by definition
};

// Probability that n1 is the subject, by falling back from the most to the
// least specific count ratio whose denominator is populated.
inline Estimate estimate(const std::vector<TrainingTuple>& ts, const std::string& n1,
                         const std::string& v, const std::string& n2, bool p1, bool p2) {
  struct Level {
    int i;
    unsigned long long num, den;
  };
  std::vector<Level> chain;
  if (!p1 && !p2) {
    unsigned long long c3 = f_so(ts, n1, v, n2);
    unsigned long long t3 = c3 + f_so(ts, n2, v, n1);
    chain.push_back({3, c3, t3});
    unsigned long long c2 = f_s(ts, n1, v) + f_o(ts, n2, v);
    unsigned long long t2 = f_s(ts, n1, v) + f_o(ts, n1, v) + f_s(ts, n2, v) + f_o(ts, n2, v);
    chain.push_back({2, c2, t2});
  } else if (!p1 && p2) {
    // only the first noun carries lexical evidence
    chain.push_back({2, f_s(ts, n1, v), f_s(ts, n1, v) + f_o(ts, n1, v)});
  } else if (p1 && !p2) {
    // only the second noun does: n1 is the subject iff n2 is the object
    chain.push_back({2, f_o(ts, n2, v), f_s(ts, n2, v) + f_o(ts, n2, v)});
  }
  chain.push_back({1, f_s(ts, v), f_s(ts, v) + f_o(ts, v)});

  for (const Level& l : chain)
    if (l.den > 0) return Estimate{l.i, l.num, l.den};
  return Estimate{0, 0, 0};
}

}  // namespace kasus::oracle
