#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "iyb/braces/abelian_group.hpp"
#include "iyb/braces/automorphisms.hpp"
#include "iyb/braces/brace.hpp"
#include "iyb/exactalg/matrix.hpp"

namespace iyb::braces {

/// Element (v, M) of Hol(A) = A ⋊ Aut(A), acting on A by w ↦ v + M(w).
struct HolElement {
  Element v;
  Perm m;
  friend bool operator==(const HolElement&, const HolElement&) = default;
  friend auto operator<=>(const HolElement&, const HolElement&) = default;
};

/// (v, M)(w, N) = (v + M(w), M∘N).
HolElement compose(const FiniteAbelian& group, const HolElement& g, const HolElement& h);
Element act(const FiniteAbelian& group, const HolElement& g, Element w);
HolElement inverse(const FiniteAbelian& group, const HolElement& g);

/// Hol(A) with Aut(A) listed once; elements are numbered v + |A|·k for the
/// k-th automorphism.
class Holomorph {
 public:
  const AbelianGroup& group() const { return group_; }
  const std::vector<Perm>& automorphisms() const { return auts_; }
  std::size_t size() const { return group_.size() * auts_.size(); }
  HolElement element(std::size_t id) const;
  std::size_t id_of(const HolElement& h) const;
  std::size_t aut_index(const Perm& m) const;
  std::vector<HolElement> elements() const;

 private:
  Holomorph(AbelianGroup group, std::vector<Perm> auts);
  friend Holomorph holomorph(const AbelianGroup&, std::size_t);

  AbelianGroup group_;
  std::vector<Perm> auts_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Throws BudgetExceeded when |A| > max_group_order.
Holomorph holomorph(const AbelianGroup& group, std::size_t max_group_order = 64);

/// Regular subgroup of Hol(A) stored by its λ-table: lambdas()[a] is the
/// automorphism paired with translation a. Because every translation occurs
/// exactly once this is the sorted element list in compact form, and the
/// ordering below is lexicographic on that list.
class RegularSubgroup {
 public:
  explicit RegularSubgroup(std::vector<Perm> lambdas) : lambdas_(std::move(lambdas)) {}

  std::size_t size() const { return lambdas_.size(); }
  const std::vector<Perm>& lambdas() const { return lambdas_; }
  std::vector<HolElement> elements() const;

  friend bool operator==(const RegularSubgroup&, const RegularSubgroup&) = default;
  friend auto operator<=>(const RegularSubgroup&, const RegularSubgroup&) = default;

 private:
  std::vector<Perm> lambdas_;
};

struct RegularSubgroupHash {
  std::size_t operator()(const RegularSubgroup& h) const noexcept;
};

/// True iff |H| = |A| and w ↦ (the element of H sending w to 0) is a
/// bijection. Throws DomainError if H is not closed under composition.
bool is_regular(const FiniteAbelian& group, const std::vector<HolElement>& subgroup);

/// Checks regularity and packs H into λ-table form; throws DomainError otherwise.
RegularSubgroup to_regular_subgroup(const FiniteAbelian& group, const std::vector<HolElement>& subgroup);

/// a·b := a + λ_a(b) where (a, λ_a) is the element of H over a.
Brace brace_from_regular(const FiniteAbelian& group, const RegularSubgroup& subgroup);

/// {(a, λ_a)} in Hol(B,+). Verifies closure (λ_{a·b} = λ_a∘λ_b).
RegularSubgroup regular_from_brace(const Brace& brace);

/// g ↦ (g, λ_g), checked to be an injective homomorphism (B,·) → Hol(B,+).
struct GammaEmbedding {
  std::vector<HolElement> images;  // images[g]
};
GammaEmbedding gamma_embed(const Brace& brace);

/// Same check as gamma_embed without materializing the image list; returns
/// false instead of throwing.
bool gamma_is_monomorphism(const Brace& brace);

/// Affine map x ↦ Mx + v on F_p^m, the matrix form of an element of
/// Hol((Z/p)^m).
struct AffineElement {
  exactalg::Matrix<exactalg::PrimeField> linear;
  std::vector<std::uint64_t> translation;
};

AffineElement compose(const AffineElement& g, const AffineElement& h);

/// Matrix form of a holomorph element over an elementary abelian group
/// (column j of M holds the coordinates of M(e_j)). Throws DomainError if A
/// is not elementary abelian.
AffineElement to_affine(const AbelianGroup& group, const HolElement& h);

/// (v, M) ↦ [[M, v], [0, 1]] in GL_{m+1}(F_p).
exactalg::Matrix<exactalg::PrimeField> hol_to_gl(const AffineElement& h);
exactalg::Matrix<exactalg::PrimeField> hol_to_gl(const AbelianGroup& group, const HolElement& h);

}  // namespace iyb::braces
