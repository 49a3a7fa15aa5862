#include <doctest.h>

#include <set>

#include "support.hpp"
#include "ydtwist/error.hpp"
#include "ydtwist/radford.hpp"

using namespace ydtwist;
using ydtwist::testing::random_element;
using ydtwist::testing::uniform;

namespace {

Element mono(const Borel& h, int k, int t, int m, int a = 0, int b = 0) {
  return Element(h.field(), Monomial{std::uint8_t(k), std::uint8_t(t), std::uint8_t(m), std::uint8_t(a), std::uint8_t(b)});
}

std::size_t rational_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("action of generators on grouplikes") {
  const Borel h(BorelParams::make(4, 0, 1));
  const auto& F = h.field();
  const Character beta{1, 3};
  const RadfordAction act(h, beta);
  CHECK(act.act_omega(1, h.one()) == F.root_power(1) * h.one());
  CHECK(act.act_omega(2, h.one()) == F.root_power(3) * h.one());
  CHECK(act.act_f(1, h.one()) == (F.root_power(1) - F.one()) * mono(h, 1, 0, 0, 3, 0));
  const GroupLike g{2, 1};
  for (int i = 1; i <= 2; ++i) {
    const CycScalar bi = F.root_power(i == 1 ? beta.b1 : beta.b2);
    const Monomial fi_g_winv = i == 1 ? Monomial{1, 0, 0, 1, 1} : Monomial{0, 0, 1, 2, 0};
    CHECK(act.act_f(i, h.group(g)) == (bi - h.group_conjugation_scalar(i, g)) * Element(F, fi_g_winv));
  }
  // Grouplikes act by beta times conjugation.
  const Element x = h.gen_F21();
  CHECK(act.act(h.gen_w(1), x) == F.root_power(beta.b1) * h.product(h.product(h.gen_w(1), x), mono(h, 0, 0, 0, 3, 0)));
  CHECK_THROWS_AS(act.act_monomial(Monomial{1, 0, 0, 1, 0}, h.one()), Error);
}

TEST_CASE("left module axiom on random triples") {
  int checked = 0;
  for (const auto& p : {BorelParams::make(4, 0, 1), BorelParams::make(5, 3, 1), BorelParams::make(4, 1, 3)}) {
    const Borel h(p);
    for (int trial = 0; trial < 60; ++trial) {
      const Character beta{int(uniform(0, p.ell - 1)), int(uniform(0, p.ell - 1))};
      const RadfordAction act(h, beta);
      const Element x = random_element(h, 1), y = random_element(h, 1), a = random_element(h, 2);
      CHECK(act.act(h.product(x, y), a) == act.act(x, act.act(y, a)));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("one acts trivially") {
  const Borel h(BorelParams::make(4, 1, 3));
  const RadfordAction act(h, {2, 1});
  const Element a = random_element(h, 3);
  CHECK(act.act(h.one(), a) == a);
}

TEST_CASE("block partition") {
  CHECK(block_monomials({0, 0}, 4) == std::vector<Monomial>{Monomial::f_part(0, 0, 0)});
  CHECK(block_monomials({3, 3}, 4) == std::vector<Monomial>{Monomial::f_part(3, 0, 3), Monomial::f_part(2, 1, 2),
                                                              Monomial::f_part(1, 2, 1), Monomial::f_part(0, 3, 0)});
  CHECK(block_monomials({6, 6}, 4) == std::vector<Monomial>{Monomial::f_part(3, 3, 3)});
  CHECK(block_monomials({4, 1}, 4) == std::vector<Monomial>{Monomial::f_part(3, 1, 0)});
  CHECK(block_monomials({5, 1}, 4).empty());
  for (int l : {2, 3, 4, 5, 7}) {
    const auto blocks = block_partition(BorelParams::make(l, 0, 1));
    std::set<Monomial> seen;
    std::size_t total = 0;
    for (const auto& [idx, mons] : blocks)
      for (const auto& m : mons) {
        CHECK(m.deg1() == idx.u);
        CHECK(m.deg2() == idx.v);
        CHECK(int(m.k) < l);
        CHECK(int(m.t) < l);
        CHECK(int(m.m) < l);
        seen.insert(m);
        ++total;
      }
    CHECK(total == std::size_t(l * l * l));
    CHECK(seen.size() == total);
  }
}

TEST_CASE("trivial module") {
  for (const auto& p : {BorelParams::make(4, 0, 1), BorelParams::make(5, 3, 1), BorelParams::make(3, 1, 2)}) {
    const Borel h(p);
    const auto rep = simple_module(h, {0, 0}, {0, 0});
    CHECK(rep.dimension == 1);
    CHECK(rep.images_checked == std::size_t(p.ell * p.ell * p.ell));
    REQUIRE(rep.basis.size() == 1);
    CHECK(rep.basis[0] == h.one());
  }
}

TEST_CASE("module basis is reduced and grouped by block") {
  const Borel h(BorelParams::make(4, 0, 1));
  const auto rep = simple_module(h, {1, 2}, {3, 1});
  std::size_t sum = 0;
  for (const auto& b : rep.blocks) sum += b.rank;
  CHECK(sum == rep.dimension);
  CHECK(rep.basis.size() == rep.dimension);
  for (const auto& e : rep.basis) {
    REQUIRE_FALSE(e.is_zero());
    CHECK(e.terms().begin()->second.is_one());
  }
  const auto again = simple_module(h, {1, 2}, {3, 1}, {.with_basis = false});
  CHECK(again.dimension == rep.dimension);
  CHECK(again.basis.empty());
}

TEST_CASE("dense oracle at ell = 2") {
  // Every f |> g written in the full PBW basis, with no block decomposition;
  // the rank is taken by plain rational elimination.
  const Borel h(BorelParams::make(2, 0, 1));
  const auto basis = h.basis();
  REQUIRE(basis.size() == 32);
  for (int d1 = 0; d1 < 2; ++d1)
    for (int d2 = 0; d2 < 2; ++d2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) {
          const RadfordAction act(h, {b1, b2});
          std::vector<std::vector<mpq_class>> dense(32, std::vector<mpq_class>(8));
          int col = 0;
          for (int k = 0; k < 2; ++k)
            for (int t = 0; t < 2; ++t)
              for (int m = 0; m < 2; ++m, ++col) {
                const Element img = act.act(mono(h, k, t, m), h.group({d1, d2}));
                for (std::size_t r = 0; r < 32; ++r) dense[r][col] = img.coeff(basis[r]).coords()[0];
              }
          CHECK(simple_module(h, {b1, b2}, {d1, d2}).dimension == rational_rank(dense));
        }
}

TEST_CASE("sweep is independent of the number of jobs") {
  const Borel h(BorelParams::make(3, 0, 1));
  const SweepResult a = sweep(h, 1);
  const SweepResult b = sweep(h, 4);
  REQUIRE(a.entries.size() == 81);
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].g == b.entries[i].g);
    CHECK(a.entries[i].beta == b.entries[i].beta);
    CHECK(a.entries[i].dimension == b.entries[i].dimension);
    CHECK(sweep_index(a.entries[i].g, a.entries[i].beta, 3) == i);
  }
  CHECK(a.multiset == b.multiset);
  CHECK(a.images_checked == 81 * 27);
  CHECK(format_multiset(a.multiset) == "1^9 3^18 6^18 7^9 15^18 27^9");
}

TEST_CASE("ell^2 one-dimensional modules") {
  for (int l : {2, 3}) {
    const SweepResult res = sweep(Borel(BorelParams::make(l, 0, 1)), 1);
    CHECK(res.multiset.at(1) == std::size_t(l * l));
  }
  CHECK(format_multiset(sweep(Borel(BorelParams::make(2, 0, 1))).multiset) == "1^4 3^8 8^4");
}
