#pragma once

// The Borel-type algebra H_{r,s} for sl_3 on its PBW basis
//   f_1^k F21^t f_2^m (w_1')^a (w_2')^b,   0 <= k,t,m,a,b < ell,
// with F21 = f_2 f_1 - s f_1 f_2, r = q^y, s = q^z, q = zeta_ell.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ydtwist/cyclotomic.hpp"

namespace ydtwist {

/// Reduces v into [0, ell).
constexpr int mod(long v, int ell) noexcept {
  long r = v % ell;
  return static_cast<int>(r < 0 ? r + ell : r);
}

struct BorelParams {
  int ell = 0;
  int y = 0;  ///< r = q^y
  int z = 0;  ///< s = q^z

  /// Reduces y, z mod ell and enforces r != s and lcm(|r|, |s|) = ell.
  static BorelParams make(int ell, long y, long z);

  /// Order of q^e as a root of unity.
  static int order_of(int ell, long e);

  friend bool operator==(const BorelParams&, const BorelParams&) = default;
};

/// g = (w_1')^d1 (w_2')^d2.
struct GroupLike {
  int d1 = 0;
  int d2 = 0;
  friend auto operator<=>(const GroupLike&, const GroupLike&) = default;
};

struct Monomial {
  std::uint8_t k = 0;  ///< f_1
  std::uint8_t t = 0;  ///< F21
  std::uint8_t m = 0;  ///< f_2
  std::uint8_t a = 0;  ///< w_1'
  std::uint8_t b = 0;  ///< w_2'

  static Monomial f_part(int k, int t, int m) {
    return {static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(m), 0, 0};
  }
  static Monomial group(GroupLike g) {
    return {0, 0, 0, static_cast<std::uint8_t>(g.d1), static_cast<std::uint8_t>(g.d2)};
  }

  int deg1() const noexcept { return k + t; }
  int deg2() const noexcept { return t + m; }
  bool has_group_part() const noexcept { return a != 0 || b != 0; }
  GroupLike group_part() const noexcept { return {a, b}; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Finite linear combination of basis monomials; zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Monomial, CycScalar>;

  explicit Element(const CycField& field) : field_(&field) {}
  Element(const CycField& field, const Monomial& mono) : field_(&field) { terms_.emplace(mono, field.one()); }

  const CycField& field() const noexcept { return *field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of `mono` (zero when absent).
  CycScalar coeff(const Monomial& mono) const;

  void add_term(const Monomial& mono, const CycScalar& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const CycScalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const CycScalar& c, Element a) { return a *= c; }

  friend bool operator==(const Element& a, const Element& b);

 private:
  const CycField* field_;
  Terms terms_;
};

/// Coefficients of the defining relations x_j x_i = C_ij x_i x_j + D_ij on the
/// ordered generators x_1..x_5 = f_1, F21, f_2, w_1', w_2'. Every C_ij is a
/// power of q, so the table stores exponents; D_13 = F21 is the only nonzero D.
struct RelationTable {
  std::array<std::array<int, 5>, 5> c_exponent{};  ///< [i][j], 0-based, i < j

  CycScalar c(int i, int j, const CycField& field) const { return field.root_power(c_exponent[i - 1][j - 1]); }
  /// True exactly for (i, j) = (1, 3).
  static bool has_d(int i, int j) noexcept { return i == 1 && j == 3; }
};

RelationTable relation_table(const BorelParams& p);

/// Letters of a word over the generators, 0-based in the canonical order.
enum Letter : std::uint8_t { kF1 = 0, kF21 = 1, kF2 = 2, kW1 = 3, kW2 = 4 };
using Word = std::vector<std::uint8_t>;

/// The algebra H_{r,s}. Products of F-parts are memoized; the object is safe
/// to share between threads.
class Borel {
 public:
  explicit Borel(const BorelParams& params);

  const BorelParams& params() const noexcept { return params_; }
  const CycField& field() const noexcept { return *field_; }
  int ell() const noexcept { return params_.ell; }
  const RelationTable& table() const noexcept { return table_; }

  CycScalar r() const { return field_->root_power(params_.y); }
  CycScalar s() const { return field_->root_power(params_.z); }

  Element one() const { return Element(*field_, Monomial{}); }
  Element gen_f1() const { return Element(*field_, Monomial::f_part(1, 0, 0)); }
  Element gen_F21() const { return Element(*field_, Monomial::f_part(0, 1, 0)); }
  Element gen_f2() const { return Element(*field_, Monomial::f_part(0, 0, 1)); }
  Element group(GroupLike g) const { return Element(*field_, Monomial::group(reduce(g))); }
  Element gen_f(int i) const { return i == 1 ? gen_f1() : gen_f2(); }
  Element gen_w(int i) const { return group(i == 1 ? GroupLike{1, 0} : GroupLike{0, 1}); }

  GroupLike reduce(GroupLike g) const { return {mod(g.d1, ell()), mod(g.d2, ell())}; }

  /// q-exponent of lambda with g f_i = lambda f_i g.
  int conjugation_exponent(int i, GroupLike g) const;
  CycScalar group_conjugation_scalar(int i, GroupLike g) const;

  Element product(const Monomial& x, const Monomial& y) const;
  Element product(const Element& x, const Element& y) const;

  /// Normal form of an arbitrary word, by repeatedly rewriting the leftmost
  /// out-of-order adjacent pair. Used directly for verification; `product`
  /// goes through the memoized F-part table built with the same rewriting.
  Element normal_form(const Word& word) const;

  /// All ell^5 basis monomials in lexicographic (k, t, m, a, b) order.
  std::vector<Monomial> basis() const;

 private:
  using FKey = std::uint64_t;
  const std::vector<std::pair<Monomial, CycScalar>>& f_product(const Monomial& x, const Monomial& y) const;

  BorelParams params_;
  const CycField* field_;
  RelationTable table_;
  mutable std::shared_mutex cache_mu_;
  mutable std::unordered_map<FKey, std::vector<std::pair<Monomial, CycScalar>>> cache_;
};

/// G-degrees of a monomial under (pi (x) id) Delta and (id (x) pi) Delta:
/// left = (k + t + a, t + m + b), right = (a, b), componentwise mod ell.
std::pair<GroupLike, GroupLike> weights(const Monomial& x, int ell);

}  // namespace ydtwist
