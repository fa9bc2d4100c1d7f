#include "iyb/braces/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <omp.h>

namespace iyb::braces {

namespace {

/// Partial λ-table of a subgroup under construction together with the
/// generators that produced it.
struct SearchState {
  std::vector<std::optional<Perm>> lambda;
  std::vector<HolElement> generators;
  std::size_t assigned = 0;
};

/// Adds `gen` and closes up. Returns false as soon as two elements share a
/// translation, which rules out regularity of anything containing them.
bool extend(const FiniteAbelian& group, SearchState& state, const HolElement& gen) {
  state.generators.push_back(gen);
  std::vector<HolElement> queue;
  for (Element v = 0; v < group.size(); ++v) {
    if (state.lambda[v]) queue.push_back({v, *state.lambda[v]});
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : state.generators) {
      HolElement y = compose(group, queue[head], s);
      auto& slot = state.lambda[y.v];
      if (!slot) {
        slot = y.m;
        ++state.assigned;
        queue.push_back(std::move(y));
      } else if (*slot != y.m) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Element> first_free(const SearchState& state) {
  for (Element v = 0; v < state.lambda.size(); ++v) {
    if (!state.lambda[v]) return v;
  }
  return std::nullopt;
}

RegularSubgroup finish(const SearchState& state) {
  std::vector<Perm> lambdas;
  lambdas.reserve(state.lambda.size());
  for (const auto& l : state.lambda) lambdas.push_back(*l);
  return RegularSubgroup(std::move(lambdas));
}

void dfs(const FiniteAbelian& group, const std::vector<Perm>& candidates, const SearchState& state,
         std::vector<RegularSubgroup>& out) {
  auto a = first_free(state);
  if (!a) {
    out.push_back(finish(state));
    return;
  }
  for (const auto& m : candidates) {
    SearchState next = state;
    if (extend(group, next, {*a, m})) dfs(group, candidates, next, out);
  }
}

std::vector<RegularSubgroup> search(const FiniteAbelian& group, const std::vector<Perm>& candidates, bool parallel) {
  SearchState root;
  root.lambda.assign(group.size(), std::nullopt);
  root.lambda[0] = identity_perm(group.size());
  root.assigned = 1;
  if (group.size() == 1) return {finish(root)};

  const Element a = 1;
  const auto branches = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<std::vector<RegularSubgroup>> per_branch(candidates.size());
  auto run_branch = [&](std::ptrdiff_t i) {
    SearchState next = root;
    if (extend(group, next, {a, candidates[static_cast<std::size_t>(i)]})) {
      dfs(group, candidates, next, per_branch[static_cast<std::size_t>(i)]);
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < branches; ++i) run_branch(i);
  } else {
    for (std::ptrdiff_t i = 0; i < branches; ++i) run_branch(i);
  }
  std::vector<RegularSubgroup> out;
  for (auto& b : per_branch) {
    for (auto& h : b) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> orders_dividing(const std::vector<Perm>& auts, std::uint64_t n) {
  std::vector<Perm> out;
  for (const auto& m : auts) {
    if (n % perm_order(m) == 0) out.push_back(m);
  }
  return out;
}

/// Left coset representatives g of S in Aut(A), so that the g S g^{-1}
/// run over all Sylow subgroups (with repetition).
std::vector<Perm> coset_representatives(const std::vector<Perm>& auts, const std::vector<Perm>& sylow) {
  std::unordered_set<Perm, PermHash> covered;
  std::vector<Perm> reps;
  for (const auto& g : auts) {
    if (covered.contains(g)) continue;
    reps.push_back(g);
    for (const auto& s : sylow) covered.insert(braces::compose(g, s));
  }
  return reps;
}

std::vector<RegularSubgroup> sylow_conjugates(const AbelianGroup& group, const std::vector<Perm>& auts,
                                              bool parallel) {
  const auto& table = group.table();
  auto sylow = sylow_automorphisms(group);
  auto inside = search(table, sylow, parallel);
  auto reps = coset_representatives(auts, sylow);

  std::unordered_set<RegularSubgroup, RegularSubgroupHash> seen;
  std::vector<RegularSubgroup> out;
  for (const auto& g : reps) {
    for (const auto& h : inside) {
      auto c = conjugate(table, h, g);
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Greedy generating set: walk Aut(A) in order and keep every element not
/// already in the subgroup generated so far.
std::vector<Perm> generating_set(const std::vector<Perm>& auts) {
  if (auts.empty()) return {};
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> span{identity_perm(auts.front().size())};
  for (const auto& g : auts) {
    if (span.contains(g)) continue;
    gens.push_back(g);
    std::vector<Perm> queue(span.begin(), span.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& s : gens) {
        Perm y = braces::compose(queue[head], s);
        if (span.insert(y).second) queue.push_back(std::move(y));
      }
    }
    if (span.size() == auts.size()) break;
  }
  return gens;
}

}  // namespace

RegularSubgroup conjugate(const FiniteAbelian& group, const RegularSubgroup& subgroup, const Perm& phi) {
  const std::size_t n = group.size();
  Perm phi_inv = braces::inverse(phi);
  std::vector<Perm> lambdas(n);
  for (Element a = 0; a < n; ++a) {
    lambdas[phi[a]] = braces::compose(phi, braces::compose(subgroup.lambdas()[a], phi_inv));
  }
  return RegularSubgroup(std::move(lambdas));
}

std::vector<RegularSubgroup> enumerate_regular_subgroups(const AbelianGroup& group, const EnumerationOptions& options) {
  const exactalg::Integer hol_order = automorphism_count(group) * static_cast<unsigned long>(group.size());
  if (hol_order > static_cast<unsigned long>(options.hol_bound)) {
    throw BudgetExceeded("|Hol(A)| = " + hol_order.get_str() + " exceeds the bound " +
                         std::to_string(options.hol_bound));
  }
  auto auts = automorphisms(group);
  auto candidates = orders_dividing(auts, group.size());

  EnumerationStrategy strategy = options.strategy;
  if (strategy == EnumerationStrategy::Auto) {
    bool sylow_pays = group.prime() != 0 && candidates.size() > 512;
    strategy = sylow_pays ? EnumerationStrategy::SylowConjugates : EnumerationStrategy::Direct;
  }
  if (strategy == EnumerationStrategy::SylowConjugates) {
    if (group.prime() == 0) throw DomainError("Sylow strategy needs a p-group");
    return sylow_conjugates(group, auts, options.parallel);
  }
  return search(group.table(), candidates, options.parallel);
}

OrbitClassification classify_up_to_aut(const AbelianGroup& group, const std::vector<RegularSubgroup>& subgroups) {
  const auto& table = group.table();
  auto gens = generating_set(automorphisms(group));

  std::unordered_map<RegularSubgroup, std::size_t, RegularSubgroupHash> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i) index.emplace(subgroups[i], i);

  // Process in lexicographic order so the first unvisited member of each
  // orbit is its least element.
  std::vector<std::size_t> order(subgroups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return subgroups[x] < subgroups[y]; });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  OrbitClassification out;
  out.orbit_of.assign(subgroups.size(), kUnset);
  for (std::size_t start : order) {
    if (out.orbit_of[start] != kUnset) continue;
    const std::size_t orbit = out.representatives.size();
    out.representatives.push_back(subgroups[start]);
    out.orbit_of[start] = orbit;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        auto it = index.find(conjugate(table, subgroups[cur], g));
        if (it == index.end()) throw DomainError("subgroup list is not closed under conjugation by Aut(A)");
        if (out.orbit_of[it->second] == kUnset) {
          out.orbit_of[it->second] = orbit;
          queue.push_back(it->second);
        }
      }
    }
  }
  return out;
}

}  // namespace iyb::braces
