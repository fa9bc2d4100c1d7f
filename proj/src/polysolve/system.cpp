#include "iyb/polysolve/system.hpp"

namespace iyb::polysolve {

namespace {

template <class R>
std::optional<std::size_t> single_basis_vector(const std::vector<exactalg::Vector<R>>& basis, const R& ring) {
  if (basis.size() != 1) return std::nullopt;
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < basis[0].size(); ++k) {
    if (ring.is_zero(basis[0][k])) continue;
    if (found) return std::nullopt;
    found = k;
  }
  return found;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> strict_upper_slots(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) out.emplace_back(r, c);
  }
  return out;
}

std::optional<std::size_t> central_basis_index(const liealg::LieAlgebra<IntegerRing>& lie) {
  exactalg::RationalRing q;
  return single_basis_vector(liealg::center(liealg::change_ring(lie, q)), q);
}

std::optional<std::size_t> central_basis_index(const liealg::LieAlgebra<PrimeField>& lie) {
  return single_basis_vector(liealg::center(lie), lie.ring());
}

std::vector<std::uint64_t> witness_point(const Witness& w) {
  std::vector<std::uint64_t> point;
  for (const auto& m : w.images) {
    for (const auto& [r, c] : strict_upper_slots(w.n)) point.push_back(m(r, c));
  }
  return point;
}

std::size_t WitnessReport::relations_failed() const {
  std::size_t k = 0;
  for (const auto& r : relations) k += r.satisfied ? 0 : 1;
  return k;
}

namespace {

void check_witness(const PresentedLieAlgebra<PrimeField>& p, const Witness& w) {
  if (w.images.size() != p.generators().size()) {
    throw DimensionMismatch("witness has " + std::to_string(w.images.size()) + " matrices for " +
                            std::to_string(p.generators().size()) + " generators");
  }
  if (!(p.base().ring() == PrimeField(w.p))) throw RingMismatch("witness field differs from the algebra's field");
  for (const auto& m : w.images) {
    if (m.rows() != w.n || m.cols() != w.n) throw DimensionMismatch("witness matrix size differs from n");
    if (!(m.ring() == p.base().ring())) throw RingMismatch("witness matrix over the wrong field");
    if (!exactalg::is_strictly_upper(m)) throw DomainError("witness matrix is not strictly upper triangular");
  }
}

}  // namespace

std::vector<exactalg::Matrix<PrimeField>> witness_images(const PresentedLieAlgebra<PrimeField>& p, const Witness& w) {
  check_witness(p, w);
  return detail::derive_images(p, w.images);
}

WitnessReport substitute_witness(const PresentedLieAlgebra<PrimeField>& p, const Witness& w) {
  auto images = witness_images(p, w);
  const auto& f = p.base().ring();
  WitnessReport report;
  for (const auto& [i, j] : p.relation_pairs()) {
    auto residual = exactalg::commutator(images[i], images[j]);
    for (const auto& t : p.base().structure(i, j)) residual = residual - exactalg::scale(t.coeff, images[t.index]);
    RelationResidual rr{i, j, true, 0};
    for (const auto& v : residual.entries()) rr.nonzero_entries += v != 0 ? 1 : 0;
    rr.satisfied = rr.nonzero_entries == 0;
    report.relations.push_back(rr);
  }
  report.morphism = report.relations_failed() == 0;

  const std::size_t nn = w.n * w.n;
  auto centre = liealg::center(p.base());
  exactalg::Matrix<PrimeField> stacked(f, centre.size(), nn);
  for (std::size_t b = 0; b < centre.size(); ++b) {
    exactalg::Matrix<PrimeField> img(f, w.n, w.n);
    for (std::size_t k = 0; k < centre[b].size(); ++k) {
      if (centre[b][k] != 0) img = img + exactalg::scale(centre[b][k], images[k]);
    }
    for (std::size_t e = 0; e < nn; ++e) stacked.set(b, e, img.entries()[e]);
    report.central_images.push_back(std::move(img));
  }
  report.central_images_independent = exactalg::rank(stacked) == centre.size();
  report.injective = report.morphism && report.central_images_independent;
  return report;
}

WitnessReport substitute_witness(const PresentedLieAlgebra<IntegerRing>& p, const Witness& w) {
  return substitute_witness(liealg::change_ring(p, PrimeField(w.p)), w);
}

}  // namespace iyb::polysolve
