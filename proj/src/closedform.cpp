#include "ydtwist/closedform.hpp"

#include <numeric>
#include <string>

#include "ydtwist/error.hpp"

namespace ydtwist {

bool gcd_condition(const BorelParams& p) {
  const long y = p.y, z = p.z;
  const long value = y * y - y * z + z * z;
  return std::gcd(value, static_cast<long>(p.ell)) == 1;
}

std::vector<std::pair<GroupLike, Character>> one_dim_modules(const BorelParams& p) {
  std::vector<std::pair<GroupLike, Character>> out;
  out.reserve(static_cast<std::size_t>(p.ell) * p.ell);
  for (int d1 = 0; d1 < p.ell; ++d1)
    for (int d2 = 0; d2 < p.ell; ++d2) {
      const long d[4] = {0, d1, d2, 0};
      Character beta{mod(p.y * (d[1] - d[0]) + p.z * (d[2] - d[1]), p.ell),
                     mod(p.y * (d[2] - d[1]) + p.z * (d[3] - d[2]), p.ell)};
      out.push_back({GroupLike{d1, d2}, beta});
    }
  return out;
}

int inverse_mod(long a, int n) {
  long old_r = mod(a, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    const long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1)
    throw Error(ErrorCode::UnsupportedEll, std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  return mod(old_s, n);
}

namespace {

void require_gcd6(int ell) {
  if (std::gcd(6, ell) != 1)
    throw Error(ErrorCode::UnsupportedEll, "closed forms need gcd(6, ell) = 1, got ell = " + std::to_string(ell));
}

void require_formula_params(const BorelParams& p) {
  if (std::gcd(6, p.ell) != 1)
    throw Error(ErrorCode::FormulaNotApplicable, "closed forms need gcd(6, ell) = 1, got ell = " + std::to_string(p.ell));
  if (mod(p.y - p.z, p.ell) != mod(2, p.ell))
    throw Error(ErrorCode::FormulaNotApplicable, "closed forms need r s^{-1} = q^2, i.e. y - z = 2 mod ell");
  const BorelParams checked = BorelParams::make(p.ell, p.y, p.z);
  (void)checked;
}

int normalise_m(long v, int ell) {
  const int r = mod(v, ell);
  return r == 0 ? ell : r;
}

}  // namespace

CartanSolution cartan_solve(GroupLike g, Character gamma, int ell) {
  require_gcd6(ell);
  const long inv2 = inverse_mod(2, ell);
  const long inv3 = inverse_mod(3, ell);
  // A^{-1} = (1/3) [[2, 1], [1, 2]].
  const long ag1 = inv3 * (2L * gamma.b1 + gamma.b2);
  const long ag2 = inv3 * (1L * gamma.b1 + 2L * gamma.b2);
  const int c1 = mod(inv2 * mod(g.d1 - ag1, ell), ell);
  const int c2 = mod(inv2 * mod(g.d2 - ag2, ell), ell);
  const int chi1 = mod(gamma.b1 + 2L * c1 - c2, ell);
  const int chi2 = mod(gamma.b2 - c1 + 2L * c2, ell);
  return {c1, c2, chi1, chi2};
}

Character cartan_gamma(GroupLike g, Character beta, const BorelParams& p) {
  return {mod(beta.b1 - static_cast<long>(g.d2) * (p.y - 1), p.ell),
          mod(beta.b2 + static_cast<long>(g.d1) * (p.y - 1), p.ell)};
}

DimensionParams m_parameters(GroupLike g, Character beta, const BorelParams& p) {
  require_formula_params(p);
  const long half = inverse_mod(2, p.ell);
  const long y = p.y;
  const long m1 = g.d1 - g.d2 + half * (g.d2 * y - beta.b1) + 1;
  const long m2 = g.d2 - half * (y * g.d1 + beta.b2) + 1;
  return {normalise_m(m1, p.ell), normalise_m(m2, p.ell)};
}

DimensionParams m_parameters_via_cartan(GroupLike g, Character beta, const BorelParams& p) {
  require_formula_params(p);
  const CartanSolution c = cartan_solve(g, cartan_gamma(g, beta, p), p.ell);
  return {normalise_m(2L * c.c1 - c.c2 + 1, p.ell), normalise_m(2L * c.c2 - c.c1 + 1, p.ell)};
}

long dimension_from_params(DimensionParams m, int ell) {
  if (m.m1 <= 0 || m.m1 > ell || m.m2 <= 0 || m.m2 > ell)
    throw Error(ErrorCode::InvalidParams, "m parameters must lie in (0, ell]");
  const auto half_cube = [](long a, long b) { return a * b * (a + b) / 2; };
  if (m.m1 + m.m2 <= ell) return half_cube(m.m1, m.m2);
  return half_cube(m.m1, m.m2) - half_cube(ell - m.m1, ell - m.m2);
}

long predicted_dimension(GroupLike g, Character beta, const BorelParams& p) {
  return dimension_from_params(m_parameters(g, beta, p), p.ell);
}

}  // namespace ydtwist
