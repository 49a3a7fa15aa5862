#pragma once

// Radford's Yetter-Drinfeld action on H_{r,s} and the simple modules H |>_beta g.

#include <cstddef>
#include <map>
#include <vector>

#include "ydtwist/borel.hpp"

namespace ydtwist {

/// beta(w_i') = q^{b_i}.
struct Character {
  int b1 = 0;
  int b2 = 0;
  friend auto operator<=>(const Character&, const Character&) = default;
};

struct BlockIndex {
  int u = 0;  ///< deg_1
  int v = 0;  ///< deg_2
  friend auto operator<=>(const BlockIndex&, const BlockIndex&) = default;
};

/// The Radford action x |>_beta a for a fixed character, realised by
/// generator recursion:
///   w_i' |> x = beta(w_i') w_i' x (w_i')^{-1}
///   f_i  |> x = -x f_i (w_i')^{-1} + beta(w_i') f_i x (w_i')^{-1}
///   F21  |> x = f_2 |> (f_1 |> x) - s f_1 |> (f_2 |> x)
class RadfordAction {
 public:
  RadfordAction(const Borel& algebra, Character beta);

  const Borel& algebra() const noexcept { return *h_; }
  Character beta() const noexcept { return beta_; }

  Element act_omega(int i, const Element& x) const;
  Element act_f(int i, const Element& x) const;
  Element act_F21(const Element& x) const;

  /// (f_1^k F21^t f_2^m) |> start; the rightmost factor acts first.
  Element act_monomial(const Monomial& w, const Element& start) const;

  /// x |> a for arbitrary x, decomposed into basis monomials.
  Element act(const Element& x, const Element& a) const;

 private:
  const Borel* h_;
  Character beta_;
  CycScalar beta_w1_;
  CycScalar beta_w2_;
};

/// A_{(u,v)} = { f_1^{u-i} F21^i f_2^{v-i} : n_{u,v} <= i <= m_{u,v} } in increasing i.
std::vector<Monomial> block_monomials(BlockIndex idx, int ell);

/// Every nonempty block, keyed by (u, v).
std::map<BlockIndex, std::vector<Monomial>> block_partition(const BorelParams& p);

struct BlockRank {
  BlockIndex block;
  std::size_t rank = 0;
};

struct SimpleModuleReport {
  BorelParams params;
  Character beta;
  GroupLike g;
  std::size_t dimension = 0;
  std::vector<BlockRank> blocks;  ///< lexicographic (u, v)
  std::vector<Element> basis;     ///< pivot coefficient 1, grouped by block
  std::size_t images_checked = 0; ///< images verified to stay in their block and degree
};

struct ModuleOptions {
  bool with_basis = true;
};

/// Computes H |>_beta g block by block. Each image f |>_beta g must lie in the
/// span of B_{(u,v)} = { f (w_1')^{-u} (w_2')^{-v} g : f in A_{(u,v)} }; an
/// image escaping its block raises an internal-consistency error.
SimpleModuleReport simple_module(const Borel& h, Character beta, GroupLike g, ModuleOptions opts = {});

struct SweepEntry {
  GroupLike g;
  Character beta;
  std::size_t dimension = 0;
};

struct SweepResult {
  BorelParams params;
  std::vector<SweepEntry> entries;                   ///< g-major, then beta, lexicographic
  std::map<std::size_t, std::size_t> multiset;       ///< dimension -> count
  std::size_t images_checked = 0;
};

/// Index of (g, beta) in sweep order.
std::size_t sweep_index(GroupLike g, Character beta, int ell);

/// All ell^4 pairs. `jobs` = 0 picks the hardware concurrency; the result is
/// identical for every value of `jobs`.
SweepResult sweep(const Borel& h, unsigned jobs = 1);

/// "1^16 3^32 ..." with dimensions ascending.
std::string format_multiset(const std::map<std::size_t, std::size_t>& multiset);

}  // namespace ydtwist
