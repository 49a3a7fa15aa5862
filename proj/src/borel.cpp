#include "ydtwist/borel.hpp"

#include <numeric>
#include <string>

#include "ydtwist/error.hpp"

namespace ydtwist {

int BorelParams::order_of(int ell, long e) {
  return ell / std::gcd(ell, mod(e, ell));
}

BorelParams BorelParams::make(int ell, long y, long z) {
  if (ell < 2 || ell > 255)
    throw Error(ErrorCode::InvalidParams, "ell must lie in [2, 255], got " + std::to_string(ell));
  BorelParams p{ell, mod(y, ell), mod(z, ell)};
  if (p.y == p.z) throw Error(ErrorCode::InvalidParams, "r = s: y and z must differ mod ell");
  const int ry = order_of(ell, p.y);
  const int rz = order_of(ell, p.z);
  if (std::lcm(ry, rz) != ell)
    throw Error(ErrorCode::InvalidParams, "lcm(|r|, |s|) = " + std::to_string(std::lcm(ry, rz)) + " differs from ell");
  return p;
}

// ---------------------------------------------------------------------------

CycScalar Element::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? field_->zero() : it->second;
}

void Element::add_term(const Monomial& mono, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

Element& Element::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::ContextMismatch, "elements over different cyclotomic fields");
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

RelationTable relation_table(const BorelParams& p) {
  RelationTable t;
  auto set = [&](int i, int j, int e) { t.c_exponent[i - 1][j - 1] = mod(e, p.ell); };
  set(1, 2, p.y);
  set(2, 3, p.y);
  set(2, 5, p.y);
  set(1, 3, p.z);
  set(1, 5, p.z);
  set(2, 4, -p.z);
  set(3, 4, -p.y);
  set(1, 4, p.y - p.z);
  set(3, 5, p.y - p.z);
  set(4, 5, 0);
  return t;
}

std::pair<GroupLike, GroupLike> weights(const Monomial& x, int ell) {
  GroupLike left{mod(x.k + x.t + x.a, ell), mod(x.t + x.m + x.b, ell)};
  GroupLike right{mod(x.a, ell), mod(x.b, ell)};
  return {left, right};
}

Borel::Borel(const BorelParams& params)
    : params_(BorelParams::make(params.ell, params.y, params.z)),
      field_(&CycField::of(params.ell)),
      table_(relation_table(params_)) {}

int Borel::conjugation_exponent(int i, GroupLike g) const {
  // g f_i = r^{d_i - d_{i-1}} s^{d_{i+1} - d_i} f_i g with d_0 = d_3 = 0.
  const long d[4] = {0, g.d1, g.d2, 0};
  return mod(params_.y * (d[i] - d[i - 1]) + params_.z * (d[i + 1] - d[i]), ell());
}

CycScalar Borel::group_conjugation_scalar(int i, GroupLike g) const {
  return field_->root_power(conjugation_exponent(i, g));
}

Element Borel::normal_form(const Word& word) const {
  const int l = ell();
  Element result(*field_);
  std::map<Word, CycScalar> pending;
  pending.emplace(word, field_->one());
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word w = std::move(node.key());
    CycScalar c = std::move(node.mapped());
    if (c.is_zero()) continue;

    // A run of ell equal F-letters lies in the defining ideal.
    bool killed = false;
    for (std::size_t i = 0, run = 0; i < w.size(); ++i) {
      run = (i > 0 && w[i] == w[i - 1]) ? run + 1 : 1;
      if (w[i] <= kF2 && static_cast<int>(run) >= l) {
        killed = true;
        break;
      }
    }
    if (killed) continue;

    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
    if (pos + 1 >= w.size()) {
      int counts[5] = {0, 0, 0, 0, 0};
      for (auto letter : w) ++counts[letter];
      Monomial mono{static_cast<std::uint8_t>(counts[0]), static_cast<std::uint8_t>(counts[1]),
                    static_cast<std::uint8_t>(counts[2]), static_cast<std::uint8_t>(counts[3] % l),
                    static_cast<std::uint8_t>(counts[4] % l)};
      result.add_term(mono, c);
      continue;
    }

    // x_j x_i -> C_ij x_i x_j + D_ij.
    const int i = w[pos + 1] + 1;
    const int j = w[pos] + 1;
    if (RelationTable::has_d(i, j)) {
      Word d = w;
      d[pos] = kF21;
      d.erase(d.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      auto [it, inserted] = pending.try_emplace(std::move(d), c);
      if (!inserted) it->second += c;
    }
    std::swap(w[pos], w[pos + 1]);
    CycScalar swapped = c * table_.c(i, j, *field_);
    auto [it, inserted] = pending.try_emplace(std::move(w), swapped);
    if (!inserted) it->second += swapped;
  }
  return result;
}

const std::vector<std::pair<Monomial, CycScalar>>& Borel::f_product(const Monomial& x, const Monomial& y) const {
  const FKey key = (FKey{x.k} << 40) | (FKey{x.t} << 32) | (FKey{x.m} << 24) | (FKey{y.k} << 16) |
                   (FKey{y.t} << 8) | FKey{y.m};
  {
    std::shared_lock lock(cache_mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Word w;
  w.insert(w.end(), x.k, kF1);
  w.insert(w.end(), x.t, kF21);
  w.insert(w.end(), x.m, kF2);
  w.insert(w.end(), y.k, kF1);
  w.insert(w.end(), y.t, kF21);
  w.insert(w.end(), y.m, kF2);
  Element nf = normal_form(w);
  std::vector<std::pair<Monomial, CycScalar>> terms(nf.terms().begin(), nf.terms().end());
  std::unique_lock lock(cache_mu_);
  // unordered_map references stay valid across rehashing.
  return cache_.try_emplace(key, std::move(terms)).first->second;
}

Element Borel::product(const Monomial& x, const Monomial& y) const {
  Element out(*field_);
  const int e = conjugation_exponent(1, x.group_part()) * (y.k + y.t) +
                conjugation_exponent(2, x.group_part()) * (y.t + y.m);
  const CycScalar conj = field_->root_power(e);
  const std::uint8_t a = static_cast<std::uint8_t>((x.a + y.a) % ell());
  const std::uint8_t b = static_cast<std::uint8_t>((x.b + y.b) % ell());
  for (const auto& [mono, c] : f_product(x, y)) {
    Monomial m = mono;
    m.a = a;
    m.b = b;
    out.add_term(m, conj.is_one() ? c : c * conj);
  }
  return out;
}

Element Borel::product(const Element& x, const Element& y) const {
  Element out(*field_);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      const CycScalar c = cx * cy;
      const Element prod = product(mx, my);
      for (const auto& [m, v] : prod.terms()) out.add_term(m, c * v);
    }
  return out;
}

std::vector<Monomial> Borel::basis() const {
  std::vector<Monomial> out;
  const int l = ell();
  out.reserve(static_cast<std::size_t>(l) * l * l * l * l);
  for (int k = 0; k < l; ++k)
    for (int t = 0; t < l; ++t)
      for (int m = 0; m < l; ++m)
        for (int a = 0; a < l; ++a)
          for (int b = 0; b < l; ++b)
            out.push_back({static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(m),
                           static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
  return out;
}

}  // namespace ydtwist
