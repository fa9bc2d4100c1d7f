#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "iyb/errors.hpp"

namespace iyb::exactalg {

using Integer = mpz_class;
using Rational = mpq_class;

// Every scalar ring below exposes the same small interface so that matrices,
// Lie algebras and polynomials can be written once:
//   value_type, is_field, zero(), one(), from_int(), from_integer(),
//   add/sub/neg/mul, is_zero, equal, to_string, name, operator==.

/// The integers, arbitrary precision.
class IntegerRing {
 public:
  using value_type = Integer;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return Integer(static_cast<long>(v)); }
  value_type from_integer(const Integer& v) const { return v; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "Z"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// The rationals. mpq_class keeps numerator and denominator coprime with a
/// positive denominator after every arithmetic operation.
class RationalRing {
 public:
  using value_type = Rational;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return Rational(static_cast<long>(v)); }
  value_type from_integer(const Integer& v) const { return Rational(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw DomainError("division by zero in Q");
    return 1 / a;
  }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
};

/// Make a reduced rational from a numerator/denominator pair.
Rational make_rational(const Integer& num, const Integer& den);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

}  // namespace iyb::exactalg
