#pragma once

// Group 2-cocycles on G = (Z/ell)^2, cocycle twists of H_{r,s}, and the
// induced correspondence of simple Yetter-Drinfeld modules.

#include <string>
#include <vector>

#include "ydtwist/radford.hpp"

namespace ydtwist {

/// sigma(w1^i1 w2^i2, w1^j1 w2^j2) = q^{a12 * i1 * j2}.
struct Cocycle {
  int ell = 0;
  int a12 = 0;

  /// q-exponent of sigma(g, h), reduced mod ell.
  int exponent(GroupLike g, GroupLike h) const noexcept;
  CycScalar eval(GroupLike g, GroupLike h) const;

  /// Pointwise product of cocycles.
  Cocycle operator*(const Cocycle& o) const;
};

/// The cocycle sigma_{r,r'} with q^{a12} = r (r')^{-1}. Throws an
/// incompatible-params error unless ell' = ell and y - z = y' - z' (mod ell).
Cocycle sigma_for_pair(const BorelParams& from, const BorelParams& to);

/// Whether sigma_for_pair would succeed.
bool twist_compatible(const BorelParams& from, const BorelParams& to) noexcept;

/// beta_{g,sigma}(h) = beta(h) sigma(g,h) sigma(h,g)^{-1}.
Character beta_twisted(Character beta, GroupLike g, const Cocycle& sigma);

/// x ._sigma y = sigma(lambda(x), lambda(y)) sigma(rho(x), rho(y))^{-1} x y on
/// basis monomials, extended bilinearly; (lambda, rho) are the weights.
Element twisted_product(const Element& x, const Element& y, const Cocycle& sigma, const Borel& h);

struct RelationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PresentationReport {
  BorelParams from;
  BorelParams to;
  Cocycle sigma;
  std::vector<RelationCheck> checks;
  bool all_passed() const;
};

/// Verifies inside (H_{r,s}, ._sigma) the defining relations of H_{r',s'}:
/// both quantum Serre relations, the w_i' f_j commutation scalars,
/// F21 rebuilt with s' under ._sigma, and nilpotency of f_1, F21, f_2.
PresentationReport check_twisted_presentation(const BorelParams& from, const BorelParams& to);

struct PairComparison {
  GroupLike g;
  Character beta;
  Character beta_twisted;
  std::size_t dim_from = 0;
  std::size_t dim_to = 0;
  bool equal() const noexcept { return dim_from == dim_to; }
};

struct CorrespondenceReport {
  BorelParams from;
  BorelParams to;
  Cocycle sigma;
  std::vector<PairComparison> pairs;  ///< sweep order of (g, beta)
  std::map<std::size_t, std::size_t> multiset_from;
  std::map<std::size_t, std::size_t> multiset_to;
  bool all_equal() const;
};

/// dim(H_{r,s} |>_beta g) against dim(H_{r',s'} |>_{beta_{g,sigma}} g) for all pairs.
CorrespondenceReport twist_correspondence_check(const BorelParams& from, const BorelParams& to, unsigned jobs = 1);

}  // namespace ydtwist
