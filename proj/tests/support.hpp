#pragma once

#include <random>
#include <vector>

#include "ydtwist/borel.hpp"

namespace ydtwist::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline CycScalar random_scalar(const CycField& F, long bound = 5) {
  std::vector<mpq_class> c(F.degree());
  for (auto& x : c) x = mpq_class(uniform(-bound, bound), uniform(1, 3));
  for (auto& x : c) x.canonicalize();
  return F.from_coeffs(c);
}

inline Monomial random_monomial(int ell) {
  const auto r = [ell] { return static_cast<std::uint8_t>(uniform(0, ell - 1)); };
  return {r(), r(), r(), r(), r()};
}

/// A sum of `terms` random basis monomials with small coefficients.
inline Element random_element(const Borel& h, int terms = 2) {
  Element e(h.field());
  for (int i = 0; i < terms; ++i) e.add_term(random_monomial(h.ell()), random_scalar(h.field(), 3));
  return e;
}

}  // namespace ydtwist::testing
