#include "ydtwist/radford.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include "ydtwist/error.hpp"
#include "ydtwist/exactla.hpp"

namespace ydtwist {

RadfordAction::RadfordAction(const Borel& algebra, Character beta)
    : h_(&algebra),
      beta_{mod(beta.b1, algebra.ell()), mod(beta.b2, algebra.ell())},
      beta_w1_(algebra.field().root_power(beta_.b1)),
      beta_w2_(algebra.field().root_power(beta_.b2)) {}

namespace {

Monomial inverse_w(int i, int ell) {
  const auto inv = static_cast<std::uint8_t>(ell - 1);
  return i == 1 ? Monomial{0, 0, 0, inv, 0} : Monomial{0, 0, 0, 0, inv};
}

}  // namespace

Element RadfordAction::act_omega(int i, const Element& x) const {
  const Borel& h = *h_;
  const Element conj = h.product(h.product(h.gen_w(i), x), Element(h.field(), inverse_w(i, h.ell())));
  return (i == 1 ? beta_w1_ : beta_w2_) * conj;
}

Element RadfordAction::act_f(int i, const Element& x) const {
  const Borel& h = *h_;
  const int l = h.ell();
  Monomial f = i == 1 ? Monomial::f_part(1, 0, 0) : Monomial::f_part(0, 0, 1);
  Monomial f_winv = f;
  const Monomial winv = inverse_w(i, l);
  f_winv.a = winv.a;
  f_winv.b = winv.b;
  const CycScalar& bw = i == 1 ? beta_w1_ : beta_w2_;

  Element out(h.field());
  for (const auto& [mono, c] : x.terms()) {
    const CycScalar minus_c = -c;
    const Element right = h.product(mono, f_winv);
    for (const auto& [m, v] : right.terms()) out.add_term(m, minus_c * v);
    const CycScalar bc = bw * c;
    const Element left = h.product(f, mono);
    for (const auto& [m, v] : left.terms()) {
      // Right multiplication by a grouplike only shifts the group exponents.
      Monomial shifted = m;
      shifted.a = static_cast<std::uint8_t>((m.a + winv.a) % l);
      shifted.b = static_cast<std::uint8_t>((m.b + winv.b) % l);
      out.add_term(shifted, bc * v);
    }
  }
  return out;
}

Element RadfordAction::act_F21(const Element& x) const {
  Element out = act_f(2, act_f(1, x));
  out -= h_->s() * act_f(1, act_f(2, x));
  return out;
}

Element RadfordAction::act_monomial(const Monomial& w, const Element& start) const {
  if (w.has_group_part())
    throw Error(ErrorCode::InvalidParams, "act_monomial expects a monomial without group part");
  Element cur = start;
  for (int j = 0; j < w.m; ++j) cur = act_f(2, cur);
  for (int j = 0; j < w.t; ++j) cur = act_F21(cur);
  for (int j = 0; j < w.k; ++j) cur = act_f(1, cur);
  return cur;
}

Element RadfordAction::act(const Element& x, const Element& a) const {
  Element out(h_->field());
  for (const auto& [mono, c] : x.terms()) {
    Element cur = a;
    for (int j = 0; j < mono.b; ++j) cur = act_omega(2, cur);
    for (int j = 0; j < mono.a; ++j) cur = act_omega(1, cur);
    cur = act_monomial(Monomial::f_part(mono.k, mono.t, mono.m), cur);
    out += c * std::move(cur);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Monomial> block_monomials(BlockIndex idx, int ell) {
  const int lo = std::max({0, idx.u - (ell - 1), idx.v - (ell - 1)});
  const int hi = std::min({ell - 1, idx.u, idx.v});
  std::vector<Monomial> out;
  for (int i = lo; i <= hi; ++i) out.push_back(Monomial::f_part(idx.u - i, i, idx.v - i));
  return out;
}

std::map<BlockIndex, std::vector<Monomial>> block_partition(const BorelParams& p) {
  std::map<BlockIndex, std::vector<Monomial>> out;
  const int top = 2 * (p.ell - 1);
  for (int u = 0; u <= top; ++u)
    for (int v = 0; v <= top; ++v) {
      if (std::abs(u - v) > p.ell - 1) continue;
      auto mons = block_monomials({u, v}, p.ell);
      if (!mons.empty()) out.emplace(BlockIndex{u, v}, std::move(mons));
    }
  return out;
}

SimpleModuleReport simple_module(const Borel& h, Character beta, GroupLike g, ModuleOptions opts) {
  const int l = h.ell();
  g = h.reduce(g);
  beta = {mod(beta.b1, l), mod(beta.b2, l)};
  const RadfordAction action(h, beta);
  SimpleModuleReport report{h.params(), beta, g, 0, {}, {}, 0};

  // images[(k*l + t)*l + m] = (f_1^k F21^t f_2^m) |> g, built by extending
  // already computed images one generator at a time.
  const auto at = [l](int k, int t, int m) { return (static_cast<std::size_t>(k) * l + t) * l + m; };
  std::vector<std::optional<Element>> images(static_cast<std::size_t>(l) * l * l);
  images[at(0, 0, 0)] = h.group(g);
  for (int m = 1; m < l; ++m) images[at(0, 0, m)] = action.act_f(2, *images[at(0, 0, m - 1)]);
  for (int m = 0; m < l; ++m)
    for (int t = 1; t < l; ++t) images[at(0, t, m)] = action.act_F21(*images[at(0, t - 1, m)]);
  for (int t = 0; t < l; ++t)
    for (int m = 0; m < l; ++m)
      for (int k = 1; k < l; ++k) images[at(k, t, m)] = action.act_f(1, *images[at(k - 1, t, m)]);

  const CycField& field = h.field();
  for (const auto& [idx, mons] : block_partition(h.params())) {
    const auto ga = static_cast<std::uint8_t>(mod(g.d1 - idx.u, l));
    const auto gb = static_cast<std::uint8_t>(mod(g.d2 - idx.v, l));
    const std::size_t n = mons.size();
    std::vector<Monomial> rows(mons);
    for (auto& r : rows) {
      r.a = ga;
      r.b = gb;
    }

    CycMatrix mat(field, n, n);
    for (std::size_t c = 0; c < n; ++c) {
      const Element& img = *images[at(mons[c].k, mons[c].t, mons[c].m)];
      std::size_t matched = 0;
      for (std::size_t r = 0; r < n; ++r) {
        auto it = img.terms().find(rows[r]);
        if (it == img.terms().end()) continue;
        mat(r, c) = it->second;
        ++matched;
      }
      if (matched != img.size()) {
        std::ostringstream msg;
        msg << "image of f_1^" << int(mons[c].k) << " F21^" << int(mons[c].t) << " f_2^" << int(mons[c].m)
            << " leaves block (" << idx.u << "," << idx.v << ")";
        throw Error(ErrorCode::InternalConsistency, msg.str());
      }
      for (const auto& [mono, coeff] : img.terms())
        if (mono.deg1() != idx.u || mono.deg2() != idx.v)
          throw Error(ErrorCode::InternalConsistency, "image is not degree homogeneous");
      ++report.images_checked;
    }

    const ColumnReduction red = column_reduce(mat);
    report.blocks.push_back({idx, red.rank});
    report.dimension += red.rank;
    if (!opts.with_basis) continue;
    for (std::size_t c = 0; c < red.rank; ++c) {
      Element e(field);
      for (std::size_t r = 0; r < n; ++r) e.add_term(rows[r], red.reduced(r, c));
      report.basis.push_back(std::move(e));
    }
  }
  return report;
}

std::size_t sweep_index(GroupLike g, Character beta, int ell) {
  const auto l = static_cast<std::size_t>(ell);
  return ((static_cast<std::size_t>(g.d1) * l + g.d2) * l + beta.b1) * l + beta.b2;
}

SweepResult sweep(const Borel& h, unsigned jobs) {
  const int l = h.ell();
  const std::size_t total = static_cast<std::size_t>(l) * l * l * l;
  SweepResult result{h.params(), std::vector<SweepEntry>(total), {}, 0};
  std::vector<std::size_t> checked(total, 0);

  const auto work = [&](std::size_t idx) {
    const int b2 = static_cast<int>(idx % l);
    const int b1 = static_cast<int>(idx / l % l);
    const int d2 = static_cast<int>(idx / l / l % l);
    const int d1 = static_cast<int>(idx / l / l / l);
    const GroupLike g{d1, d2};
    const Character beta{b1, b2};
    const auto rep = simple_module(h, beta, g, {.with_basis = false});
    result.entries[idx] = {g, beta, rep.dimension};
    checked[idx] = rep.images_checked;
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, total));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < total; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < total; i = next++) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t i = 0; i < total; ++i) {
    ++result.multiset[result.entries[i].dimension];
    result.images_checked += checked[i];
  }
  return result;
}

std::string format_multiset(const std::map<std::size_t, std::size_t>& multiset) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [dim, count] : multiset) {
    if (!first) os << ' ';
    os << dim << '^' << count;
    first = false;
  }
  return os.str();
}

}  // namespace ydtwist
