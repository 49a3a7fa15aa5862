#include "ydtwist/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "ydtwist/error.hpp"

namespace ydtwist {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParams: return "invalid-params";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::ContextMismatch: return "context-mismatch";
    case ErrorCode::IncompatibleParams: return "incompatible-params";
    case ErrorCode::UnsupportedEll: return "unsupported-ell";
    case ErrorCode::FormulaNotApplicable: return "formula-not-applicable";
    case ErrorCode::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
IntPoly int_exact_div(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) {
    trim(num);
    if (!num.empty()) throw Error(ErrorCode::InternalConsistency, "inexact cyclotomic division");
    return {};
  }
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    mpz_class c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw Error(ErrorCode::InternalConsistency, "inexact cyclotomic division");
  return quot;
}

// Remainder and quotient in Q[x]; b must be nonzero and trimmed.
void q_divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const mpq_class lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / lead;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  rem = std::move(a);
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly q_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

IntPoly cyclotomic_polynomial(int ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidParams, "cyclotomic_polynomial requires ell >= 1");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(ell); it != cache.end()) return it->second;
  }
  IntPoly num(ell + 1, 0);
  num[0] = -1;
  num[ell] = 1;
  IntPoly den{1};
  for (int d = 1; d < ell; ++d)
    if (ell % d == 0) den = int_mul(den, cyclotomic_polynomial(d));
  IntPoly phi = int_exact_div(std::move(num), den);
  std::lock_guard lock(mu);
  cache.emplace(ell, phi);
  return phi;
}

int totient(int ell) {
  int result = ell;
  int n = ell;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// ---------------------------------------------------------------------------

CycField::CycField(int ell) : ell_(ell), phi_(cyclotomic_polynomial(ell)) {
  degree_ = static_cast<int>(phi_.size()) - 1;
  const int table_size = std::max(ell_, 2 * degree_);
  power_table_.assign(table_size, std::vector<std::int64_t>(degree_, 0));
  // x^j for j < degree is a unit vector; higher powers by x * (x^{j-1}).
  std::vector<mpz_class> cur(degree_, 0);
  for (int j = 0; j < table_size; ++j) {
    if (j < degree_) {
      std::fill(cur.begin(), cur.end(), 0);
      cur[j] = 1;
    } else {
      // cur holds x^{j-1}; shift and reduce the overflow with phi (monic).
      mpz_class top = cur[degree_ - 1];
      for (int k = degree_ - 1; k > 0; --k) cur[k] = cur[k - 1];
      cur[0] = 0;
      for (int k = 0; k < degree_; ++k) cur[k] -= top * phi_[k];
    }
    for (int k = 0; k < degree_; ++k) power_table_[j][k] = cur[k].get_si();
  }
}

const CycField& CycField::of(int ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidParams, "cyclotomic field requires ell >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[ell];
  if (!slot) slot.reset(new CycField(ell));
  return *slot;
}

CycScalar CycField::zero() const { return CycScalar(*this, std::vector<mpq_class>(degree_, 0)); }

CycScalar CycField::one() const { return from_int(1); }

CycScalar CycField::from_int(long v) const { return from_rational(mpq_class(v)); }

CycScalar CycField::from_rational(const mpq_class& v) const {
  std::vector<mpq_class> c(degree_, 0);
  c[0] = v;
  return CycScalar(*this, std::move(c));
}

CycScalar CycField::from_coeffs(std::span<const mpq_class> coeffs) const {
  std::vector<mpq_class> c(degree_, 0);
  // Powers beyond the table are folded with x^ell = 1 first.
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const int e = static_cast<int>(j % static_cast<std::size_t>(ell_));
    const auto& row = power_table_[e];
    for (int k = 0; k < degree_; ++k)
      if (row[k] != 0) c[k] += coeffs[j] * row[k];
  }
  return CycScalar(*this, std::move(c));
}

CycScalar CycField::root_power(long e) const {
  long r = e % ell_;
  if (r < 0) r += ell_;
  const auto& row = power_table_[r];
  std::vector<mpq_class> c(degree_);
  for (int k = 0; k < degree_; ++k) c[k] = row[k];
  return CycScalar(*this, std::move(c));
}

// ---------------------------------------------------------------------------

CycScalar::CycScalar(const CycField& field, std::vector<mpq_class> coords)
    : field_(&field), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field.degree())
    throw Error(ErrorCode::InternalConsistency, "scalar coordinate count does not match field degree");
}

bool CycScalar::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return c == 0; });
}

bool CycScalar::is_one() const noexcept {
  if (coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return c == 0; });
}

void CycScalar::check_same_field(const CycScalar& o) const {
  if (field_ != o.field_)
    throw Error(ErrorCode::ContextMismatch, "scalars from Q(zeta_" + std::to_string(field_->ell()) +
                                                ") and Q(zeta_" + std::to_string(o.field_->ell()) + ") mixed");
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  check_same_field(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  check_same_field(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  a.check_same_field(b);
  const CycField& f = *a.field_;
  const int n = f.degree();
  std::vector<mpq_class> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (a.coords_[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b.coords_[j] != 0) prod[i + j] += a.coords_[i] * b.coords_[j];
  }
  std::vector<mpq_class> out(prod.begin(), prod.begin() + n);
  for (int j = n; j < 2 * n - 1; ++j) {
    if (prod[j] == 0) continue;
    const auto& row = f.reduced_power(j);
    for (int k = 0; k < n; ++k)
      if (row[k] != 0) out[k] += prod[j] * row[k];
  }
  return CycScalar(f, std::move(out));
}

CycScalar& CycScalar::operator*=(const CycScalar& o) { return *this = *this * o; }

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  a.check_same_field(b);
  return a.coords_ == b.coords_;
}

CycScalar CycScalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(field_->ell()) + ")");
  // Extended Euclid on (phi, a): track t with t * a == r (mod phi).
  QPoly r0(field_->phi().begin(), field_->phi().end());
  QPoly r1 = coords_;
  trim(r1);
  QPoly t0, t1{1};
  while (r1.size() > 1) {
    QPoly quot, rem;
    q_divmod(r0, r1, quot, rem);
    QPoly t2 = q_sub(t0, q_mul(quot, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r1 is a nonzero constant since phi is irreducible.
  const mpq_class c = r1[0];
  for (auto& v : t1) v /= c;
  QPoly quot, rem;
  QPoly phi(field_->phi().begin(), field_->phi().end());
  q_divmod(t1, phi, quot, rem);
  rem.resize(field_->degree(), 0);
  return CycScalar(*field_, std::move(rem));
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycScalar result = field_->one();
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::vector<std::string> CycScalar::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(rational_string(c));
  return out;
}

std::string rational_string(const mpq_class& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& x) {
  os << '[';
  for (std::size_t k = 0; k < x.coords().size(); ++k) {
    if (k) os << ", ";
    os << x.coords()[k].get_str();
  }
  return os << ']';
}

}  // namespace ydtwist
