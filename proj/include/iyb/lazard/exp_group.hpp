#pragma once

#include <cstdint>
#include <vector>

#include "iyb/lazard/bch.hpp"
#include "iyb/liealg/lie_algebra.hpp"

namespace iyb::lazard {

using exactalg::PrimeField;
using liealg::LieAlgebra;

/// The group exp(g) on the underlying set of a nilpotent Lie algebra g over
/// F_p of class c < p, with product given by the BCH series of degree c.
class ExpGroup {
 public:
  using Vec = LieAlgebra<PrimeField>::vector_type;

  /// Throws DomainError when g is not nilpotent or its class is >= p.
  explicit ExpGroup(LieAlgebra<PrimeField> lie);

  const LieAlgebra<PrimeField>& algebra() const { return lie_; }
  unsigned nilpotency_class() const { return class_; }

  Vec product(const Vec& x, const Vec& y) const;
  Vec inverse(const Vec& x) const;
  Vec power(const Vec& x, std::uint64_t k) const;
  /// Multiplicative order by repeated multiplication.
  std::uint64_t order(const Vec& x) const;

 private:
  struct Term {
    std::string word;
    std::uint64_t coeff;
  };

  LieAlgebra<PrimeField> lie_;
  unsigned class_ = 0;
  std::vector<Term> terms_;
};

/// One-shot helpers that build the ExpGroup each call.
ExpGroup::Vec exp_product(const LieAlgebra<PrimeField>& lie, const ExpGroup::Vec& x, const ExpGroup::Vec& y);
std::uint64_t group_element_order(const LieAlgebra<PrimeField>& lie, const ExpGroup::Vec& x);

/// Additive order of a vector over F_p: 1 for zero, p otherwise.
std::uint64_t additive_order(const PrimeField& field, const ExpGroup::Vec& x);

}  // namespace iyb::lazard
