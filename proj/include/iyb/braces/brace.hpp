#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iyb/braces/abelian_group.hpp"
#include "iyb/errors.hpp"

namespace iyb::braces {

/// Finite left brace on the carrier {0..n-1}: (B,+) abelian, (B,·) a group,
/// both with identity 0, and a·(b+c) + a = a·b + a·c.
class Brace {
 public:
  std::size_t order() const { return add_.size(); }
  const FiniteAbelian& additive() const { return add_; }
  Element add(Element a, Element b) const { return add_.add(a, b); }
  Element mul(Element a, Element b) const { return mul_[a * order() + b]; }
  Element mul_inverse(Element a) const { return mul_inv_[a]; }
  const std::vector<Element>& mul_table() const { return mul_; }

  /// Builds without re-checking the brace axioms. Only for constructions
  /// that are braces by theory (e.g. from a verified regular subgroup).
  static Brace unchecked(FiniteAbelian additive, std::vector<Element> mul);

  friend bool operator==(const Brace& a, const Brace& b) {
    return a.add_.table() == b.add_.table() && a.mul_ == b.mul_;
  }

 private:
  Brace(FiniteAbelian add, std::vector<Element> mul, std::vector<Element> mul_inv)
      : add_(std::move(add)), mul_(std::move(mul)), mul_inv_(std::move(mul_inv)) {}

  FiniteAbelian add_;
  std::vector<Element> mul_;
  std::vector<Element> mul_inv_;
};

enum class BraceAxiom {
  AdditiveNotAbelianGroup,
  MultiplicativeNotGroup,
  IdentityMismatch,
  Compatibility,
};

std::string axiom_name(BraceAxiom axiom);

/// Named axiom violation. `witness` holds the offending elements (a, b, c)
/// where meaningful.
class BraceAxiomError : public DomainError {
 public:
  BraceAxiomError(BraceAxiom axiom, std::string detail, std::optional<std::array<Element, 3>> witness = std::nullopt);
  BraceAxiom axiom() const { return axiom_; }
  const std::optional<std::array<Element, 3>>& witness() const { return witness_; }

 private:
  BraceAxiom axiom_;
  std::optional<std::array<Element, 3>> witness_;
};

/// Validate both tables (n x n, row-major as nested vectors) and return the
/// brace, or throw BraceAxiomError.
Brace validate_brace(const std::vector<std::vector<Element>>& add, const std::vector<std::vector<Element>>& mul);

/// λ_g(h) = g·h - g, an automorphism of (B,+).
Perm lambda_map(const Brace& brace, Element g);

/// Brace on Z/n with a·b = a + b.
Brace trivial_brace(std::size_t n);

/// The brace 2Z/(2^k Z) on {0, 2, ..., 2^k - 2} with a∘b = a + b + ab,
/// labelled by x ↦ x/2. For k = 3 it has additive group C4 and
/// multiplicative group C2 x C2.
Brace radical_ring_brace(unsigned k);

}  // namespace iyb::braces
