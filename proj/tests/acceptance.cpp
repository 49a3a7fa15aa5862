// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ydtwist/closedform.hpp"
#include "ydtwist/error.hpp"
#include "ydtwist/twist.hpp"

using namespace ydtwist;

namespace {

using Multiset = std::map<std::size_t, std::size_t>;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::mt19937_64 rng(977);
int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Sweeps shared between criteria.
std::map<std::tuple<int, int, int>, SweepResult> sweeps;

const SweepResult& sweep_of(int l, int y, int z) {
  const auto key = std::tuple{l, y, z};
  auto it = sweeps.find(key);
  if (it == sweeps.end()) it = sweeps.emplace(key, sweep(Borel(BorelParams::make(l, y, z)), 0)).first;
  return it->second;
}

Outcome multiset_criterion(int y, int z, const Multiset& expected) {
  const SweepResult& res = sweep_of(4, y, z);
  return {res.entries.size() == 256 && res.multiset == expected,
          "got " + format_multiset(res.multiset) + ", expected " + format_multiset(expected)};
}

Outcome criterion1() {
  return multiset_criterion(0, 1, {{1, 16}, {3, 32}, {6, 32}, {8, 16}, {10, 32}, {12, 32}, {24, 32}, {26, 16}, {42, 32}, {64, 16}});
}

Outcome criterion2() { return multiset_criterion(1, 3, {{1, 16}, {3, 32}, {8, 16}, {16, 96}, {32, 96}}); }

Outcome criterion3() {
  const BorelParams from = BorelParams::make(4, 0, 1);
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [y, z] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 0}}) {
    const CorrespondenceReport rep = twist_correspondence_check(from, BorelParams::make(4, y, z), 0);
    std::size_t equal = 0;
    for (const auto& p : rep.pairs) equal += p.equal();
    ok = ok && rep.pairs.size() == 256 && equal == 256;
    detail << "(" << y << "," << z << "): " << equal << "/" << rep.pairs.size() << "; ";
  }
  return {ok, detail.str()};
}

Outcome criterion4() {
  const BorelParams a = BorelParams::make(4, 0, 1), b = BorelParams::make(4, 1, 3);
  bool rejected = false;
  try {
    (void)sigma_for_pair(a, b);
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::IncompatibleParams;
  }
  const bool differ = sweep_of(4, 0, 1).multiset != sweep_of(4, 1, 3).multiset;
  return {rejected && !twist_compatible(a, b) && differ,
          std::string("rejected: ") + (rejected ? "yes" : "no") + ", multisets differ: " + (differ ? "yes" : "no")};
}

Outcome criterion5() {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [from, to] : {std::pair{BorelParams::make(4, 0, 1), BorelParams::make(4, 1, 2)},
                                 std::pair{BorelParams::make(5, 3, 1), BorelParams::make(5, 1, 4)}}) {
    const PresentationReport rep = check_twisted_presentation(from, to);
    std::size_t passed = 0;
    for (const auto& c : rep.checks) {
      passed += c.passed;
      if (!c.passed) detail << "[" << c.name << ": " << c.detail << "] ";
    }
    ok = ok && rep.all_passed() && rep.checks.size() == 10;
    detail << "ell=" << from.ell << ": " << passed << "/" << rep.checks.size() << " relations; ";
  }
  return {ok, detail.str()};
}

Outcome criterion6() {
  const BorelParams p = BorelParams::make(5, 3, 1);
  const SweepResult& res = sweep_of(5, 3, 1);
  std::size_t equal = 0;
  for (const auto& e : res.entries) equal += predicted_dimension(e.g, e.beta, p) == long(e.dimension);
  return {res.entries.size() == 625 && equal == 625, std::to_string(equal) + "/" + std::to_string(res.entries.size())};
}

Outcome criterion7() {
  bool ok = true;
  std::ostringstream detail;
  for (int l : {2, 3, 4, 5}) {
    const SweepResult& res = sweep_of(l, 0, 1);
    std::set<std::pair<GroupLike, Character>> computed, predicted;
    for (const auto& e : res.entries)
      if (e.dimension == 1) computed.insert({e.g, e.beta});
    for (const auto& m : one_dim_modules(res.params)) predicted.insert(m);
    ok = ok && computed == predicted && computed.size() == std::size_t(l * l);
    detail << "ell=" << l << ": " << computed.size() << "; ";
  }
  return {ok, detail.str()};
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

Outcome criterion8() {
  const Borel h(BorelParams::make(2, 0, 1));
  const auto basis = h.basis();
  std::size_t agree = 0;
  for (int d1 = 0; d1 < 2; ++d1)
    for (int d2 = 0; d2 < 2; ++d2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) {
          const RadfordAction act(h, {b1, b2});
          std::vector<std::vector<mpq_class>> dense(basis.size(), std::vector<mpq_class>(8));
          std::size_t col = 0;
          for (int k = 0; k < 2; ++k)
            for (int t = 0; t < 2; ++t)
              for (int m = 0; m < 2; ++m, ++col) {
                const Element img = act.act(Element(h.field(), Monomial::f_part(k, t, m)), h.group({d1, d2}));
                for (std::size_t r = 0; r < basis.size(); ++r) dense[r][col] = img.coeff(basis[r]).coords()[0];
              }
          agree += simple_module(h, {b1, b2}, {d1, d2}).dimension == rational_rank(dense);
        }
  return {agree == 16, std::to_string(agree) + "/16 pairs, 32x8 dense matrices"};
}

Monomial random_monomial(int l) {
  const auto r = [l] { return std::uint8_t(uniform(0, l - 1)); };
  return {r(), r(), r(), r(), r()};
}

Element random_element(const Borel& h, int terms) {
  Element e(h.field());
  for (int i = 0; i < terms; ++i) e.add_term(random_monomial(h.ell()), h.field().from_int(uniform(-3, 3)) + h.field().root_power(uniform(0, h.ell() - 1)));
  return e;
}

CycScalar random_scalar(const CycField& F) {
  std::vector<mpq_class> c(F.degree());
  for (auto& x : c) {
    x = mpq_class(uniform(-9, 9), uniform(1, 5));
    x.canonicalize();
  }
  return F.from_coeffs(c);
}

Outcome criterion9() {
  std::size_t module_fail = 0, module_n = 0, assoc_fail = 0, assoc_n = 0, cocycle_fail = 0, cocycle_n = 0,
              field_fail = 0, field_n = 0;
  for (const auto& p : {BorelParams::make(4, 0, 1), BorelParams::make(5, 3, 1)}) {
    const Borel h(p);
    for (int i = 0; i < 60; ++i, ++module_n) {
      const RadfordAction act(h, {uniform(0, p.ell - 1), uniform(0, p.ell - 1)});
      const Element x = random_element(h, 1), y = random_element(h, 1), a = random_element(h, 2);
      module_fail += !(act.act(h.product(x, y), a) == act.act(x, act.act(y, a)));
    }
  }
  for (const auto& p : {BorelParams::make(3, 0, 1), BorelParams::make(4, 0, 1), BorelParams::make(4, 1, 3),
                        BorelParams::make(5, 3, 1)}) {
    const Borel h(p);
    for (int i = 0; i < 60; ++i, ++assoc_n) {
      const Element x = random_element(h, 2), y = random_element(h, 2), z = random_element(h, 2);
      assoc_fail += !(h.product(h.product(x, y), z) == h.product(x, h.product(y, z)));
    }
  }
  for (int i = 0; i < 120; ++i, ++cocycle_n) {
    const int l = uniform(2, 9);
    const Cocycle s{l, uniform(0, l - 1)};
    const auto g = [l] { return GroupLike{uniform(0, l - 1), uniform(0, l - 1)}; };
    const GroupLike x = g(), y = g(), z = g();
    const GroupLike xy{mod(x.d1 + y.d1, l), mod(x.d2 + y.d2, l)}, yz{mod(y.d1 + z.d1, l), mod(y.d2 + z.d2, l)};
    cocycle_fail += !(s.eval(x, y) * s.eval(xy, z) == s.eval(y, z) * s.eval(x, yz));
  }
  for (int i = 0; i < 120; ++i, ++field_n) {
    const CycField& F = CycField::of(uniform(2, 12));
    const CycScalar a = random_scalar(F), b = random_scalar(F), c = random_scalar(F);
    bool ok = a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a;
    if (!a.is_zero()) ok = ok && (a * a.inv()).is_one();
    field_fail += !ok;
  }
  // simple_module raises on any image leaving its block or degree, so a
  // completed sweep with every image counted means zero violations.
  const std::size_t images = sweep_of(4, 0, 1).images_checked + sweep_of(4, 1, 3).images_checked;
  const std::size_t expected_images = 2 * 256 * 64;
  std::ostringstream detail;
  detail << "module axiom " << module_n - module_fail << "/" << module_n << ", associativity " << assoc_n - assoc_fail
         << "/" << assoc_n << ", cocycle " << cocycle_n - cocycle_fail << "/" << cocycle_n << ", field "
         << field_n - field_fail << "/" << field_n << ", block-checked images " << images << "/" << expected_images;
  const bool ok = module_fail + assoc_fail + cocycle_fail + field_fail == 0 && module_n >= 100 && assoc_n >= 200 &&
                  cocycle_n >= 100 && field_n >= 100 && images == expected_images;
  return {ok, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"ell=4 (r,s)=(1,q) dimension multiset", criterion1},
      {"ell=4 (r,s)=(q,q^-1) dimension multiset", criterion2},
      {"ell=4 twist correspondence to (1,2), (2,3), (3,0)", criterion3},
      {"ell=4 (0,1) vs (1,3) rejected as incompatible", criterion4},
      {"twisted presentation relations", criterion5},
      {"ell=5 (3,1) closed form on all 625 pairs", criterion6},
      {"one-dimensional classification, ell = 2..5", criterion7},
      {"ell=2 dense oracle", criterion8},
      {"property suites", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("criterion %zu: %s  %s [%s] (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
