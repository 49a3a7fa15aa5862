#pragma once

// Closed-form predictions for simple module dimensions of H_{r,s} (sl_3).

#include <cstddef>
#include <utility>
#include <vector>

#include "ydtwist/radford.hpp"

namespace ydtwist {

/// gcd(y^2 - y z + z^2, ell) = 1, the condition under which u_{r,s}(sl_3) is a
/// Drinfeld double of its Borel subalgebra.
bool gcd_condition(const BorelParams& p);

/// For every g, the unique character making H |>_beta g one-dimensional:
/// b_i = y (d_i - d_{i-1}) + z (d_{i+1} - d_i), d_0 = d_3 = 0. Ordered by g.
std::vector<std::pair<GroupLike, Character>> one_dim_modules(const BorelParams& p);

/// Inverse of a modulo n, or an unsupported-ell error when none exists.
int inverse_mod(long a, int n);

struct CartanSolution {
  int c1 = 0;
  int c2 = 0;
  int chi1 = 0;
  int chi2 = 0;
};

/// Solves (Id, A^{-1}; -A, Id) (c, chi) = (d, gamma) over Z/ell with A the
/// sl_3 Cartan matrix. Requires gcd(6, ell) = 1.
CartanSolution cartan_solve(GroupLike g, Character gamma, int ell);

/// The character gamma with gamma_1 = beta_1 - d_2 (y - 1), gamma_2 = beta_2 + d_1 (y - 1).
Character cartan_gamma(GroupLike g, Character beta, const BorelParams& p);

struct DimensionParams {
  int m1 = 0;  ///< in (0, ell]
  int m2 = 0;
};

/// m_1 = d_1 - d_2 + (d_2 y - beta_1)/2 + 1, m_2 = d_2 - (y d_1 + beta_2)/2 + 1,
/// normalised into (0, ell]. Requires gcd(6, ell) = 1 and y - z = 2 (mod ell).
DimensionParams m_parameters(GroupLike g, Character beta, const BorelParams& p);

/// Same parameters through the Cartan system: m_1 = 2c_1 - c_2 + 1, m_2 = 2c_2 - c_1 + 1.
DimensionParams m_parameters_via_cartan(GroupLike g, Character beta, const BorelParams& p);

/// (1/2) m1 m2 (m1 + m2), minus the same expression in m_i' = ell - m_i when m1 + m2 > ell.
long dimension_from_params(DimensionParams m, int ell);

long predicted_dimension(GroupLike g, Character beta, const BorelParams& p);

}  // namespace ydtwist
