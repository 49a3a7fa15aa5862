#pragma once

// Exact arithmetic in Q(zeta_ell), represented as Q[x]/(Phi_ell(x)).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ydtwist {

using IntPoly = std::vector<mpz_class>;  // coefficients, lowest degree first

/// Phi_ell, computed by exact division of x^ell - 1 by Phi_d for every
/// proper divisor d of ell.
IntPoly cyclotomic_polynomial(int ell);

/// Euler's totient.
int totient(int ell);

class CycScalar;

/// Shared context for one cyclotomic field. Instances are interned per ell
/// and live for the whole process, so scalars hold a plain pointer.
class CycField {
 public:
  static const CycField& of(int ell);

  int ell() const noexcept { return ell_; }
  int degree() const noexcept { return degree_; }
  const IntPoly& phi() const noexcept { return phi_; }

  CycScalar zero() const;
  CycScalar one() const;
  CycScalar from_int(long v) const;
  CycScalar from_rational(const mpq_class& v) const;
  /// Canonical representative of an arbitrary polynomial in zeta.
  CycScalar from_coeffs(std::span<const mpq_class> coeffs) const;
  /// zeta^e for any integer e (reduced mod ell).
  CycScalar root_power(long e) const;

  /// x^j mod Phi_ell for 0 <= j < 2*degree, integer coordinates.
  const std::vector<std::int64_t>& reduced_power(int j) const { return power_table_[j]; }

  CycField(const CycField&) = delete;
  CycField& operator=(const CycField&) = delete;

 private:
  explicit CycField(int ell);

  int ell_;
  int degree_;
  IntPoly phi_;
  std::vector<std::vector<std::int64_t>> power_table_;
};

/// Element of Q(zeta_ell). Always stored in canonical reduced form, so
/// equality is coordinate equality.
class CycScalar {
 public:
  CycScalar(const CycField& field, std::vector<mpq_class> coords);

  const CycField& field() const noexcept { return *field_; }
  const std::vector<mpq_class>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  CycScalar inv() const;
  CycScalar pow(long e) const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// Coordinates as "num/den" strings in the power basis.
  std::vector<std::string> to_strings() const;

 private:
  void check_same_field(const CycScalar& o) const;

  const CycField* field_;
  std::vector<mpq_class> coords_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& x);

/// Formats a rational as "num/den" (denominator always present).
std::string rational_string(const mpq_class& v);

}  // namespace ydtwist
