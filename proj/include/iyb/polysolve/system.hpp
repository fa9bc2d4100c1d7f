#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iyb/exactalg/linalg.hpp"
#include "iyb/exactalg/matrix.hpp"
#include "iyb/liealg/presented.hpp"
#include "iyb/polysolve/polynomial.hpp"

namespace iyb::polysolve {

using liealg::PresentedLieAlgebra;

template <class R>
struct PolySystem {
  R ring;
  std::vector<std::string> vars;
  /// Variables [0, matrix_vars) are matrix unknowns, the rest auxiliaries.
  std::size_t matrix_vars = 0;
  std::vector<Polynomial<R>> polys;
  /// Human-readable origin of each polynomial; may be empty for loaded systems.
  std::vector<std::string> labels;

  std::size_t aux_vars() const { return vars.size() - matrix_vars; }
};

inline PolySystem<PrimeField> reduce_mod_p(const PolySystem<IntegerRing>& s, const PrimeField& field) {
  // Polynomials that vanish mod p are dropped together with their labels,
  // matching what generation over F_p would have produced.
  const bool labelled = s.labels.size() == s.polys.size();
  PolySystem<PrimeField> out{field, s.vars, s.matrix_vars, {}, {}};
  for (std::size_t i = 0; i < s.polys.size(); ++i) {
    auto f = reduce_mod_p(s.polys[i], field);
    if (f.is_zero()) continue;
    out.polys.push_back(std::move(f));
    if (labelled) out.labels.push_back(s.labels[i]);
  }
  return out;
}

/// Positions (r, c), r < c, of an n x n strictly upper matrix in row-major order.
std::vector<std::pair<std::size_t, std::size_t>> strict_upper_slots(std::size_t n);

/// Basis index spanning the centre, when the centre is one-dimensional and
/// spanned by a basis vector; nullopt otherwise. Computed over Q for Z.
std::optional<std::size_t> central_basis_index(const liealg::LieAlgebra<IntegerRing>& lie);
std::optional<std::size_t> central_basis_index(const liealg::LieAlgebra<PrimeField>& lie);

namespace detail {

template <class R>
using PolyMatrix = exactalg::Matrix<PolynomialRing<R>>;

/// Images of every basis vector given generator images, built by the rules.
template <class R, class Scalar>
std::vector<exactalg::Matrix<Scalar>> derive_images(const PresentedLieAlgebra<R>& p,
                                                    const std::vector<exactalg::Matrix<Scalar>>& generator_images) {
  std::vector<std::optional<exactalg::Matrix<Scalar>>> images(p.base().dim());
  for (std::size_t g = 0; g < p.generators().size(); ++g) images[p.generators()[g]] = generator_images[g];
  for (const auto& r : p.rules()) images[r.target] = exactalg::commutator(*images[r.left], *images[r.right]);
  std::vector<exactalg::Matrix<Scalar>> out;
  for (auto& m : images) out.push_back(std::move(*m));
  return out;
}

}  // namespace detail

/// The polynomial system whose solutions over a ring S are the Lie
/// morphisms L ⊗ S -> u_n(S): one strictly upper unknown matrix per
/// generator, the other basis images built by the rules, and one polynomial
/// per strictly upper entry of each remaining bracket relation (zero
/// polynomials dropped). With `rabinowitsch`, appends Σ f_t z_t - 1 over the
/// entries f_t of the image of the central basis vector `central` (found
/// automatically when omitted).
template <class R>
PolySystem<R> generate_system(const PresentedLieAlgebra<R>& p, std::size_t n, bool rabinowitsch,
                              std::optional<std::size_t> central = std::nullopt) {
  if (n < 2) throw DomainError("target matrix size must be at least 2");
  const R& ring = p.base().ring();
  const PolynomialRing<R> pr(ring);
  const auto slots = strict_upper_slots(n);

  PolySystem<R> sys{ring, {}, 0, {}, {}};
  std::vector<detail::PolyMatrix<R>> gens;
  for (std::size_t g = 0; g < p.generators().size(); ++g) {
    detail::PolyMatrix<R> m(pr, n, n);
    for (const auto& [r, c] : slots) {
      auto var = static_cast<std::uint32_t>(sys.vars.size());
      sys.vars.push_back("y" + std::to_string(g) + "_" + std::to_string(r) + "_" + std::to_string(c));
      m.set(r, c, Polynomial<R>::variable(ring, var));
    }
    gens.push_back(std::move(m));
  }
  sys.matrix_vars = sys.vars.size();
  auto images = detail::derive_images(p, gens);

  for (const auto& [i, j] : p.relation_pairs()) {
    auto residual = exactalg::commutator(images[i], images[j]);
    for (const auto& t : p.base().structure(i, j)) {
      residual = residual - exactalg::scale(Polynomial<R>::constant(ring, t.coeff), images[t.index]);
    }
    for (const auto& [r, c] : slots) {
      if (residual(r, c).is_zero()) continue;
      sys.polys.push_back(residual(r, c));
      sys.labels.push_back("[e" + std::to_string(i) + ",e" + std::to_string(j) + "] entry (" + std::to_string(r) +
                           "," + std::to_string(c) + ")");
    }
  }

  if (rabinowitsch) {
    if (!central) {
      central = central_basis_index(p.base());
      if (!central) throw DomainError("centre is not spanned by a single basis vector; name the central element");
    }
    if (*central >= p.base().dim()) throw DomainError("central element index out of range");
    Polynomial<R> f = Polynomial<R>::constant(ring, ring.neg(ring.one()));
    for (const auto& [r, c] : slots) {
      auto z = static_cast<std::uint32_t>(sys.vars.size());
      sys.vars.push_back("z_" + std::to_string(r) + "_" + std::to_string(c));
      f = f + images[*central](r, c) * Polynomial<R>::variable(ring, z);
    }
    sys.polys.push_back(std::move(f));
    sys.labels.push_back("image of e" + std::to_string(*central) + " is nonzero");
  }
  return sys;
}

/// Matrices for the generators of a presented algebra over F_p.
struct Witness {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::vector<exactalg::Matrix<PrimeField>> images;  // one per generator, in order
};

/// Witness entries as a point of generate_system's matrix variables.
std::vector<std::uint64_t> witness_point(const Witness& w);

struct RelationResidual {
  std::size_t i = 0, j = 0;
  bool satisfied = false;
  std::size_t nonzero_entries = 0;
};

struct WitnessReport {
  std::vector<RelationResidual> relations;
  bool morphism = false;
  /// Images of a basis of the centre; the morphism is injective exactly when
  /// they are linearly independent, because every nonzero ideal of a
  /// nilpotent Lie algebra meets the centre.
  std::vector<exactalg::Matrix<PrimeField>> central_images;
  bool central_images_independent = false;
  bool injective = false;
  std::size_t relations_failed() const;
};

/// Builds all basis images from the witness, checks every relation and the
/// centre criterion. `p` is reduced into the witness field first.
WitnessReport substitute_witness(const PresentedLieAlgebra<IntegerRing>& p, const Witness& w);
WitnessReport substitute_witness(const PresentedLieAlgebra<PrimeField>& p, const Witness& w);

/// All images ρ(e_k) for a witness.
std::vector<exactalg::Matrix<PrimeField>> witness_images(const PresentedLieAlgebra<PrimeField>& p, const Witness& w);

}  // namespace iyb::polysolve
