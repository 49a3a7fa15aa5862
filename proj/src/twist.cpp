#include "ydtwist/twist.hpp"

#include <algorithm>
#include <sstream>

#include "ydtwist/error.hpp"

namespace ydtwist {

int Cocycle::exponent(GroupLike g, GroupLike h) const noexcept {
  return mod(static_cast<long>(a12) * g.d1 % ell * h.d2, ell);
}

CycScalar Cocycle::eval(GroupLike g, GroupLike h) const { return CycField::of(ell).root_power(exponent(g, h)); }

Cocycle Cocycle::operator*(const Cocycle& o) const {
  if (ell != o.ell) throw Error(ErrorCode::ContextMismatch, "cocycles on groups of different order");
  return {ell, mod(a12 + o.a12, ell)};
}

bool twist_compatible(const BorelParams& from, const BorelParams& to) noexcept {
  return from.ell == to.ell && mod(from.y - from.z, from.ell) == mod(to.y - to.z, to.ell);
}

Cocycle sigma_for_pair(const BorelParams& from, const BorelParams& to) {
  if (from.ell != to.ell)
    throw Error(ErrorCode::IncompatibleParams, "lcm(|r|,|s|) = " + std::to_string(from.ell) +
                                                   " differs from lcm(|r'|,|s'|) = " + std::to_string(to.ell));
  if (!twist_compatible(from, to))
    throw Error(ErrorCode::IncompatibleParams, "r s^{-1} != r' s'^{-1}: no cocycle twist relates the two algebras");
  return {from.ell, mod(from.y - to.y, from.ell)};
}

Character beta_twisted(Character beta, GroupLike g, const Cocycle& sigma) {
  const int l = sigma.ell;
  return {mod(static_cast<long>(beta.b1) - static_cast<long>(g.d2) * sigma.a12, l),
          mod(static_cast<long>(beta.b2) + static_cast<long>(g.d1) * sigma.a12, l)};
}

Element twisted_product(const Element& x, const Element& y, const Cocycle& sigma, const Borel& h) {
  const int l = h.ell();
  if (sigma.ell != l) throw Error(ErrorCode::ContextMismatch, "cocycle and algebra have different ell");
  Element out(h.field());
  for (const auto& [mx, cx] : x.terms()) {
    const auto [lx, rx] = weights(mx, l);
    for (const auto& [my, cy] : y.terms()) {
      const auto [ly, ry] = weights(my, l);
      const int e = sigma.exponent(lx, ly) - sigma.exponent(rx, ry);
      const CycScalar c = cx * cy * h.field().root_power(e);
      const Element prod = h.product(mx, my);
      for (const auto& [m, v] : prod.terms()) out.add_term(m, c * v);
    }
  }
  return out;
}

bool PresentationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

namespace {

std::string describe(const Element& e) {
  std::ostringstream os;
  if (e.is_zero()) return "0";
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) os << " + ";
    os << c << "*[" << int(m.k) << ',' << int(m.t) << ',' << int(m.m) << ',' << int(m.a) << ',' << int(m.b) << ']';
    first = false;
  }
  return os.str();
}

}  // namespace

PresentationReport check_twisted_presentation(const BorelParams& from_in, const BorelParams& to_in) {
  const BorelParams from = BorelParams::make(from_in.ell, from_in.y, from_in.z);
  const BorelParams to = BorelParams::make(to_in.ell, to_in.y, to_in.z);
  const Cocycle sigma = sigma_for_pair(from, to);
  PresentationReport report{from, to, sigma, {}};

  const Borel h(from);
  const Borel target(to);
  const CycField& F = h.field();
  const auto tp = [&](const Element& a, const Element& b) { return twisted_product(a, b, sigma, h); };
  const auto tp3 = [&](const Element& a, const Element& b, const Element& c) { return tp(tp(a, b), c); };
  const auto record = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const CycScalar r_inv = F.root_power(-to.y);
  const CycScalar s_inv = F.root_power(-to.z);
  const CycScalar mid = r_inv + s_inv;
  const CycScalar last = r_inv * s_inv;
  const Element f1 = h.gen_f1();
  const Element f2 = h.gen_f2();

  {
    Element serre = tp3(f1, f1, f2);
    serre -= mid * tp3(f1, f2, f1);
    serre += last * tp3(f2, f1, f1);
    record("serre f1 f1 f2", serre.is_zero(), "residual " + describe(serre));
  }
  {
    Element serre = tp3(f1, f2, f2);
    serre -= mid * tp3(f2, f1, f2);
    serre += last * tp3(f2, f2, f1);
    record("serre f1 f2 f2", serre.is_zero(), "residual " + describe(serre));
  }

  // w_i' ._sigma f_j = c_ij f_j ._sigma w_i' with c_ij = s', r'/s', 1/r' for
  // j = i-1, i, i+1.
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      int c_exp = 0;
      if (j == i - 1) c_exp = to.z;
      else if (j == i) c_exp = to.y - to.z;
      else if (j == i + 1) c_exp = -to.y;
      const CycScalar c = F.root_power(c_exp);
      const Element lhs = tp(h.gen_w(i), h.gen_f(j));
      const Element rhs = c * tp(h.gen_f(j), h.gen_w(i));
      const GroupLike w = i == 1 ? GroupLike{1, 0} : GroupLike{0, 1};
      const bool table_ok = mod(c_exp, to.ell) == target.conjugation_exponent(j, w);
      std::ostringstream name;
      name << "w" << i << "' f" << j << " commutation";
      record(name.str(), lhs == rhs && table_ok,
             "c = q^" + std::to_string(mod(c_exp, to.ell)) + (table_ok ? "" : " (disagrees with target algebra)") +
                 "; lhs " + describe(lhs) + "; rhs " + describe(rhs));
    }

  {
    Element f21 = tp(f2, f1);
    f21 -= F.root_power(to.z) * tp(f1, f2);
    record("F21 under twist", f21 == h.gen_F21(), "F21^sigma = " + describe(f21));
  }

  struct Root {
    const char* name;
    Element gen;
    GroupLike weight;
  };
  const Root roots[] = {{"f1", f1, {1, 0}}, {"F21", h.gen_F21(), {1, 1}}, {"f2", f2, {0, 1}}};
  for (const auto& root : roots) {
    Element twisted = root.gen;
    Element plain = root.gen;
    const int w = sigma.exponent(root.weight, root.weight);
    bool ok = true;
    std::ostringstream detail;
    for (int m = 2; m <= h.ell(); ++m) {
      twisted = tp(twisted, root.gen);
      plain = h.product(plain, root.gen);
      const long binom = static_cast<long>(m) * (m - 1) / 2;
      const bool scaled = twisted == F.root_power(static_cast<long>(w) * binom) * plain;
      const bool same_zero = twisted.is_zero() == plain.is_zero();
      const bool expect_zero = m == h.ell();
      ok = ok && scaled && same_zero && (plain.is_zero() == expect_zero);
      if (!scaled || !same_zero) detail << "power " << m << " mismatch; ";
    }
    detail << "power " << h.ell() << (twisted.is_zero() ? " vanishes" : " does not vanish");
    record(std::string("nilpotency ") + root.name, ok, detail.str());
  }
  return report;
}

bool CorrespondenceReport::all_equal() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairComparison& p) { return p.equal(); });
}

CorrespondenceReport twist_correspondence_check(const BorelParams& from_in, const BorelParams& to_in, unsigned jobs) {
  const BorelParams from = BorelParams::make(from_in.ell, from_in.y, from_in.z);
  const BorelParams to = BorelParams::make(to_in.ell, to_in.y, to_in.z);
  const Cocycle sigma = sigma_for_pair(from, to);
  const Borel h_from(from);
  const Borel h_to(to);
  const SweepResult s_from = sweep(h_from, jobs);
  const SweepResult s_to = from == to ? s_from : sweep(h_to, jobs);

  CorrespondenceReport report{from, to, sigma, {}, s_from.multiset, s_to.multiset};
  report.pairs.reserve(s_from.entries.size());
  for (const auto& e : s_from.entries) {
    const Character bt = beta_twisted(e.beta, e.g, sigma);
    const auto& other = s_to.entries[sweep_index(e.g, bt, from.ell)];
    report.pairs.push_back({e.g, e.beta, bt, e.dimension, other.dimension});
  }
  return report;
}

}  // namespace ydtwist
