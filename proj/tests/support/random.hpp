#pragma once

#include <random>
#include <vector>

#include "sl2/orbits.hpp"

namespace sl2::testing {

// Seeded generators for property tests. Small coefficients keep the
// rationals readable when a failure is printed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar scalar(Field f = Field::rational) {
    Scalar s = Scalar::rational(integer(-7, 7), integer(1, 4));
    if (f == Field::gaussian && coin()) s += Scalar::rational(integer(-3, 3), integer(1, 3)) * Scalar::imaginary_unit();
    return s;
  }

  Scalar nonzero(Field f = Field::rational) {
    Scalar s;
    while (s.is_zero()) s = scalar(f);
    return s;
  }

  /// Degree in [0, max_deg] (zero polynomial possible when max_deg = 0).
  Poly poly(int max_deg, Field f = Field::rational) {
    int d = static_cast<int>(integer(0, max_deg));
    std::vector<Scalar> c;
    for (int i = 0; i < d; ++i) c.push_back(scalar(f));
    c.push_back(d == 0 ? scalar(f) : nonzero(f));
    return Poly(c);
  }

  Poly nonconstant(int max_deg, Field f = Field::rational) {
    int d = static_cast<int>(integer(1, max_deg));
    std::vector<Scalar> c;
    for (int i = 0; i < d; ++i) c.push_back(scalar(f));
    c.push_back(nonzero(f));
    return Poly(c);
  }

  /// Polynomial that is zero, a nonzero constant, or nonconstant.
  Poly any(int max_deg, Field f = Field::rational) {
    switch (integer(0, 3)) {
      case 0: return Poly(0);
      case 1: return Poly(nonzero(f));
      default: return nonconstant(max_deg, f);
    }
  }

  std::vector<Poly> nonconstants(std::size_t k, int max_deg, Field f = Field::rational) {
    std::vector<Poly> u;
    for (std::size_t i = 0; i < k; ++i) u.push_back(nonconstant(max_deg, f));
    return u;
  }

  /// Arbitrary word (zeros and constants included); expands to a unit.
  EWord word(int max_len, int max_deg, Field f = Field::rational) {
    EWord w{{nonzero(f), nonzero(f)}, {}};
    int n = static_cast<int>(integer(0, max_len));
    for (int i = 0; i < n; ++i) w.factors.push_back(any(max_deg, f));
    return w;
  }

  PolyMat2 unit(int max_len, int max_deg, Field f = Field::rational) { return expand(word(max_len, max_deg, f)); }

  /// A word in standard form of length exactly len.
  EWord standard_word(int len, int max_deg, Field f = Field::rational) {
    EWord w{{nonzero(f), nonzero(f)}, {}};
    for (int i = 0; i < len; ++i) {
      bool end = i == 0 || i == len - 1;
      w.factors.push_back(end ? any(max_deg, f) : nonconstant(max_deg, f));
    }
    if (len == 2 && w.factors[0].is_zero() && w.factors[1].is_zero()) w.factors[1] = nonconstant(max_deg, f);
    return w;
  }

  ParamTuple tuple(std::size_t k, int max_deg, Field f = Field::rational) {
    return {nonzero(f), nonzero(f), nonconstants(k, max_deg, f)};
  }

  TripleA triple() {
    auto all = all_triples();
    return all[static_cast<std::size_t>(integer(0, static_cast<long>(all.size()) - 1))];
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace sl2::testing
