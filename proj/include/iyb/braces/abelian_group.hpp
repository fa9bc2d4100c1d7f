#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "iyb/errors.hpp"

namespace iyb::braces {

/// Elements of a finite carrier are labelled 0..n-1; 0 is always the zero of
/// the additive group (and the identity of a brace's multiplicative group).
using Element = std::uint32_t;

/// Permutation of a finite carrier: perm[x] is the image of x.
using Perm = std::vector<Element>;

/// Finite abelian group presented by its Cayley table, zero = 0.
class FiniteAbelian {
 public:
  /// Checks closure, zero, inverses, commutativity and associativity; throws
  /// DomainError describing the first failure.
  static FiniteAbelian from_table(std::size_t n, std::vector<Element> table);

  std::size_t size() const { return n_; }
  Element add(Element a, Element b) const { return table_[a * n_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg_[b]); }
  Element multiple(std::uint64_t k, Element a) const;
  std::uint64_t order(Element a) const;
  const std::vector<Element>& table() const { return table_; }

 private:
  FiniteAbelian(std::size_t n, std::vector<Element> table, std::vector<Element> neg)
      : n_(n), table_(std::move(table)), neg_(std::move(neg)) {}
  friend class AbelianGroup;

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> neg_;
};

/// Primary decomposition: for each prime p dividing |A| the exponents
/// alpha_1 <= ... <= alpha_m with A_p = Z/p^alpha_1 x ... x Z/p^alpha_m.
struct PrimaryPart {
  std::uint64_t prime;
  std::vector<unsigned> exponents;
  friend bool operator==(const PrimaryPart&, const PrimaryPart&) = default;
};

struct AbelianType {
  std::vector<PrimaryPart> parts;  // ascending by prime
  /// d_1 | d_2 | ... | d_k.
  std::vector<std::uint64_t> invariant_factors() const;
  bool is_p_group() const { return parts.size() == 1; }
  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

/// Isomorphism type read off from element-order counts.
AbelianType abelian_type(const FiniteAbelian& group);

/// Z/d_1 x ... x Z/d_m in coordinates. Element index is mixed radix with the
/// first coordinate least significant.
class AbelianGroup {
 public:
  /// Every d_i must be >= 2; an empty list gives the trivial group.
  explicit AbelianGroup(std::vector<std::uint32_t> cyclic_orders);

  const std::vector<std::uint32_t>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return group_.size(); }
  const FiniteAbelian& table() const { return group_; }

  Element add(Element a, Element b) const { return group_.add(a, b); }
  Element neg(Element a) const { return group_.neg(a); }
  Element sub(Element a, Element b) const { return group_.sub(a, b); }

  std::vector<std::uint32_t> coords(Element a) const;
  Element index(std::span<const std::uint32_t> coords) const;
  /// The i-th unit vector.
  Element generator(std::size_t i) const;

  /// If every d_i is a power of one prime p, that p; otherwise 0.
  std::uint64_t prime() const;
  /// All d_i equal to the same prime.
  bool is_elementary_abelian() const;

 private:
  std::vector<std::uint32_t> orders_;
  FiniteAbelian group_;
};

/// Exponent of p in n when n is a power of p (n > 1), else throws.
unsigned log_prime_power(std::uint64_t n, std::uint64_t p);

/// Smallest prime factor of n >= 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

}  // namespace iyb::braces
