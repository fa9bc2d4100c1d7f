#include "iyb/braces/holomorph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace iyb::braces {

HolElement compose(const FiniteAbelian& group, const HolElement& g, const HolElement& h) {
  return {group.add(g.v, g.m[h.v]), braces::compose(g.m, h.m)};
}

Element act(const FiniteAbelian& group, const HolElement& g, Element w) { return group.add(g.v, g.m[w]); }

HolElement inverse(const FiniteAbelian& group, const HolElement& g) {
  Perm inv = braces::inverse(g.m);
  return {group.neg(inv[g.v]), std::move(inv)};
}

Holomorph::Holomorph(AbelianGroup group, std::vector<Perm> auts) : group_(std::move(group)), auts_(std::move(auts)) {
  for (std::size_t k = 0; k < auts_.size(); ++k) index_.emplace(auts_[k], k);
}

HolElement Holomorph::element(std::size_t id) const {
  return {static_cast<Element>(id % group_.size()), auts_.at(id / group_.size())};
}

std::size_t Holomorph::aut_index(const Perm& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw DomainError("permutation is not an automorphism of A");
  return it->second;
}

std::size_t Holomorph::id_of(const HolElement& h) const { return h.v + group_.size() * aut_index(h.m); }

std::vector<HolElement> Holomorph::elements() const {
  std::vector<HolElement> out;
  out.reserve(size());
  for (std::size_t id = 0; id < size(); ++id) out.push_back(element(id));
  return out;
}

Holomorph holomorph(const AbelianGroup& group, std::size_t max_group_order) {
  if (group.size() > max_group_order) {
    throw BudgetExceeded("|A| = " + std::to_string(group.size()) + " exceeds the holomorph bound " +
                         std::to_string(max_group_order));
  }
  return Holomorph(group, automorphisms(group));
}

std::vector<HolElement> RegularSubgroup::elements() const {
  std::vector<HolElement> out;
  out.reserve(lambdas_.size());
  for (std::size_t a = 0; a < lambdas_.size(); ++a) out.push_back({static_cast<Element>(a), lambdas_[a]});
  return out;
}

std::size_t RegularSubgroupHash::operator()(const RegularSubgroup& h) const noexcept {
  std::size_t seed = 0;
  PermHash ph;
  for (const auto& l : h.lambdas()) seed ^= ph(l) + 0x9e3779b97f4a7c15ULL + (seed << 6U) + (seed >> 2U);
  return seed;
}

namespace {

struct HolHash {
  std::size_t operator()(const HolElement& h) const noexcept { return PermHash{}(h.m) * 31U + h.v; }
};

void require_closed(const FiniteAbelian& group, const std::vector<HolElement>& subgroup) {
  if (subgroup.empty()) throw DomainError("empty subset of Hol(A)");
  std::unordered_set<HolElement, HolHash> members(subgroup.begin(), subgroup.end());
  for (const auto& g : subgroup) {
    if (g.m.size() != group.size() || g.v >= group.size()) throw DomainError("element does not belong to Hol(A)");
  }
  for (const auto& g : subgroup) {
    for (const auto& h : subgroup) {
      if (!members.contains(compose(group, g, h))) throw DomainError("subset is not closed under composition");
    }
  }
}

}  // namespace

bool is_regular(const FiniteAbelian& group, const std::vector<HolElement>& subgroup) {
  require_closed(group, subgroup);
  if (subgroup.size() != group.size()) return false;
  // For each w exactly one element sends w to 0.
  for (Element w = 0; w < group.size(); ++w) {
    std::size_t hits = 0;
    for (const auto& g : subgroup) {
      if (act(group, g, w) == 0) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

RegularSubgroup to_regular_subgroup(const FiniteAbelian& group, const std::vector<HolElement>& subgroup) {
  if (!is_regular(group, subgroup)) throw DomainError("subgroup is not regular");
  std::vector<Perm> lambdas(group.size());
  for (const auto& g : subgroup) lambdas[g.v] = g.m;
  return RegularSubgroup(std::move(lambdas));
}

Brace brace_from_regular(const FiniteAbelian& group, const RegularSubgroup& subgroup) {
  const std::size_t n = group.size();
  if (subgroup.size() != n) throw DomainError("regular subgroup must have |A| elements");
  // π₁(H) = A holds by the λ-table shape; the multiplication below is the
  // group law of H transported along π₁.
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a) {
    const Perm& la = subgroup.lambdas()[a];
    if (la.size() != n) throw DomainError("λ-table entry has the wrong length");
    for (Element b = 0; b < n; ++b) mul[a * n + b] = group.add(a, la[b]);
  }
  return Brace::unchecked(group, std::move(mul));
}

RegularSubgroup regular_from_brace(const Brace& brace) {
  const std::size_t n = brace.order();
  std::vector<Perm> lambdas(n);
  for (Element a = 0; a < n; ++a) lambdas[a] = lambda_map(brace, a);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Perm& lab = lambdas[brace.mul(a, b)];
      for (Element x = 0; x < n; ++x) {
        if (lab[x] != lambdas[a][lambdas[b][x]]) throw DomainError("λ-image is not closed; input is not a brace");
      }
    }
  }
  return RegularSubgroup(std::move(lambdas));
}

bool gamma_is_monomorphism(const Brace& brace) {
  const std::size_t n = brace.order();
  const auto& add = brace.additive();
  std::vector<Perm> lambdas(n);
  for (Element g = 0; g < n; ++g) {
    lambdas[g] = lambda_map(brace, g);
    if (!is_automorphism(add, lambdas[g])) return false;
  }
  // γ(g)γ(h) = (g + λ_g(h), λ_g∘λ_h) must equal γ(g·h) = (g·h, λ_{g·h}).
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      Element gh = brace.mul(g, h);
      if (add.add(g, lambdas[g][h]) != gh) return false;
      for (Element x = 0; x < n; ++x) {
        if (lambdas[gh][x] != lambdas[g][lambdas[h][x]]) return false;
      }
    }
  }
  // Injective: the translation component is g itself.
  return true;
}

GammaEmbedding gamma_embed(const Brace& brace) {
  if (!gamma_is_monomorphism(brace)) throw DomainError("γ is not a monomorphism; input is not a brace");
  GammaEmbedding out;
  for (Element g = 0; g < brace.order(); ++g) out.images.push_back({g, lambda_map(brace, g)});
  return out;
}

AffineElement compose(const AffineElement& g, const AffineElement& h) {
  const auto& f = g.linear.ring();
  AffineElement out{g.linear * h.linear, g.translation};
  for (std::size_t i = 0; i < out.translation.size(); ++i) {
    std::uint64_t acc = g.translation[i];
    for (std::size_t j = 0; j < h.translation.size(); ++j) acc = f.add(acc, f.mul(g.linear(i, j), h.translation[j]));
    out.translation[i] = acc;
  }
  return out;
}

AffineElement to_affine(const AbelianGroup& group, const HolElement& h) {
  if (!group.is_elementary_abelian()) throw DomainError("matrix form needs an elementary abelian group");
  const std::size_t m = group.rank();
  exactalg::PrimeField f(group.prime());
  exactalg::Matrix<exactalg::PrimeField> lin(f, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    auto c = group.coords(h.m[group.generator(j)]);
    for (std::size_t i = 0; i < m; ++i) lin.set(i, j, c[i]);
  }
  auto v = group.coords(h.v);
  return {std::move(lin), std::vector<std::uint64_t>(v.begin(), v.end())};
}

exactalg::Matrix<exactalg::PrimeField> hol_to_gl(const AffineElement& h) {
  const std::size_t m = h.linear.rows();
  if (!h.linear.is_square() || h.translation.size() != m) throw DimensionMismatch("affine element shape mismatch");
  const auto& f = h.linear.ring();
  exactalg::Matrix<exactalg::PrimeField> out(f, m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.set(i, j, h.linear(i, j));
    out.set(i, m, f.from_int(static_cast<long long>(h.translation[i] % f.p())));
  }
  out.set(m, m, f.one());
  return out;
}

exactalg::Matrix<exactalg::PrimeField> hol_to_gl(const AbelianGroup& group, const HolElement& h) {
  return hol_to_gl(to_affine(group, h));
}

}  // namespace iyb::braces
