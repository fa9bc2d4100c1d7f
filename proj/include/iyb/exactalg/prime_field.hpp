#pragma once

#include <cstdint>
#include <string>

#include "iyb/exactalg/rings.hpp"

namespace iyb::exactalg {

/// The prime field F_p with residues stored in a machine word. Products are
/// formed in 128 bits before reduction.
class PrimeField {
 public:
  using value_type = std::uint64_t;
  static constexpr bool is_field = true;

  /// Throws NotPrime unless p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  value_type from_integer(const Integer& v) const;

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const;
  /// Throws DomainError for a == 0.
  value_type inv(value_type a) const;

  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// A residue bundled with its field, for ad-hoc scalar arithmetic.
class FieldElement {
 public:
  FieldElement(PrimeField field, long long value) : field_(field), value_(field.from_int(value)) {}

  const PrimeField& field() const { return field_; }
  std::uint64_t value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const { return {field_, check(o).add(value_, o.value_), raw}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, check(o).sub(value_, o.value_), raw}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, check(o).mul(value_, o.value_), raw}; }
  FieldElement operator/(const FieldElement& o) const {
    return {field_, check(o).mul(value_, field_.inv(o.value_)), raw};
  }
  FieldElement operator-() const { return {field_, field_.neg(value_), raw}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(value_, e), raw}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  struct RawTag {};
  static constexpr RawTag raw{};
  FieldElement(PrimeField field, std::uint64_t value, RawTag) : field_(field), value_(value) {}

  const PrimeField& check(const FieldElement& o) const {
    if (!(field_ == o.field_)) throw RingMismatch("field elements over " + field_.name() + " and " + o.field_.name());
    return field_;
  }

  PrimeField field_;
  std::uint64_t value_;
};

}  // namespace iyb::exactalg
