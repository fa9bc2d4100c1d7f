#include "iyb/polysolve/solve_small.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

namespace iyb::polysolve {

namespace {

struct CompiledTerm {
  std::uint64_t coeff;
  std::vector<Monomial::Factor> factors;
};

using Compiled = std::vector<std::vector<CompiledTerm>>;

bool vanishes_everywhere(const Compiled& polys, const PrimeField& f, const std::vector<std::uint64_t>& x) {
  for (const auto& poly : polys) {
    std::uint64_t acc = 0;
    for (const auto& t : poly) {
      std::uint64_t v = t.coeff;
      for (const auto& [var, e] : t.factors) v = f.mul(v, f.pow(x[var], e));
      acc = f.add(acc, v);
    }
    if (acc != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> decode(std::uint64_t index, std::size_t n, std::uint64_t p) {
  // Variable 0 is the most significant digit, so index order is lexicographic.
  std::vector<std::uint64_t> x(n);
  for (std::size_t k = n; k-- > 0;) {
    x[k] = index % p;
    index /= p;
  }
  return x;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> solve_small(const PolySystem<PrimeField>& system, bool parallel) {
  const auto& f = system.ring;
  const std::size_t n = system.vars.size();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (total > kSolveSmallLimit / f.p()) {
      throw BudgetExceeded("search space " + std::to_string(f.p()) + "^" + std::to_string(n) + " exceeds " +
                           std::to_string(kSolveSmallLimit) + " points");
    }
    total *= f.p();
  }
  Compiled polys;
  for (const auto& p : system.polys) {
    if (p.var_bound() > n) throw DimensionMismatch("polynomial uses a variable outside the system");
    std::vector<CompiledTerm> terms;
    for (const auto& [m, c] : p.terms()) terms.push_back({c, m.factors()});
    polys.push_back(std::move(terms));
  }

  std::vector<std::uint64_t> hits;
  const auto count = static_cast<std::int64_t>(total);
  if (parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < count; ++i) {
        if (vanishes_everywhere(polys, f, decode(static_cast<std::uint64_t>(i), n, f.p()))) {
          local.push_back(static_cast<std::uint64_t>(i));
        }
      }
#pragma omp critical
      hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      if (vanishes_everywhere(polys, f, decode(static_cast<std::uint64_t>(i), n, f.p()))) {
        hits.push_back(static_cast<std::uint64_t>(i));
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(hits.size());
  for (auto i : hits) out.push_back(decode(i, n, f.p()));
  return out;
}

PolySystem<PrimeField> random_system(std::mt19937_64& rng, const PrimeField& field, std::size_t nvars,
                                     std::size_t count, unsigned max_degree, std::size_t max_terms) {
  if (nvars == 0 || max_terms == 0) throw DomainError("random system needs variables and terms");
  PolySystem<PrimeField> sys{field, {}, nvars, {}, {}};
  for (std::size_t v = 0; v < nvars; ++v) sys.vars.push_back("x" + std::to_string(v));
  for (std::size_t k = 0; k < count; ++k) {
    Polynomial<PrimeField> poly(field);
    const std::size_t terms = 1 + rng() % max_terms;
    for (std::size_t t = 0; t < terms; ++t) {
      const unsigned deg = static_cast<unsigned>(rng() % (max_degree + 1));
      std::vector<Monomial::Factor> fs;
      for (unsigned d = 0; d < deg; ++d) fs.emplace_back(static_cast<std::uint32_t>(rng() % nvars), 1);
      poly.add_term(Monomial(std::move(fs)), 1 + rng() % (field.p() - 1));
    }
    sys.polys.push_back(std::move(poly));
    sys.labels.push_back("random " + std::to_string(k));
  }
  return sys;
}

}  // namespace iyb::polysolve
