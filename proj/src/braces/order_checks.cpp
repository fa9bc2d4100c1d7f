#include "iyb/braces/order_checks.hpp"

#include <functional>
#include <unordered_set>

#include "iyb/braces/automorphisms.hpp"

namespace iyb::braces {

std::uint64_t multiplicative_order(const Brace& brace, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != 0; y = brace.mul(y, x)) ++k;
  return k;
}

OrderEqualityReport check_order_equality(const Brace& brace) {
  const std::size_t n = brace.order();
  const auto& add = brace.additive();
  AbelianType type = abelian_type(add);
  if (!type.is_p_group()) throw DomainError("brace order " + std::to_string(n) + " is not a prime power");

  OrderEqualityReport r;
  r.prime = type.parts.front().prime;
  r.additive_exponents = type.parts.front().exponents;
  r.hypothesis_holds = r.additive_exponents.size() + 2 <= r.prime;
  for (Element x = 0; x < n; ++x) {
    r.additive_orders.push_back(add.order(x));
    r.multiplicative_orders.push_back(multiplicative_order(brace, x));
    if (r.additive_orders.back() != r.multiplicative_orders.back() && !r.first_mismatch) {
      r.orders_equal = false;
      r.first_mismatch = x;
    }
  }

  r.multiplicative_abelian = true;
  for (Element a = 0; a < n && r.multiplicative_abelian; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (brace.mul(a, b) != brace.mul(b, a)) {
        r.multiplicative_abelian = false;
        break;
      }
    }
  }
  if (r.multiplicative_abelian) {
    auto mul_group = FiniteAbelian::from_table(n, brace.mul_table());
    r.isomorphic_groups = abelian_type(mul_group) == type;
  }
  return r;
}

bool unipotent_power_is_identity(const exactalg::Matrix<exactalg::PrimeField>& u) {
  if (!exactalg::is_unipotent_upper(u)) throw DomainError("matrix is not unipotent upper triangular");
  const auto& f = u.ring();
  return exactalg::mat_pow(u, f.p()) == exactalg::Matrix<exactalg::PrimeField>::identity(f, u.rows());
}

bool automorphism_is_p_nilpotent(const AbelianGroup& group, const Perm& m) {
  const std::uint64_t p = group.prime();
  if (p == 0) throw DomainError("A is not a p-group");
  const auto& a = group.table();
  std::vector<bool> in_pa(group.size(), false);
  for (Element x = 0; x < group.size(); ++x) in_pa[a.multiple(p, x)] = true;

  for (Element x = 0; x < group.size(); ++x) {
    Element y = x;
    for (std::size_t i = 0; i < group.rank(); ++i) y = a.sub(m[y], y);
    if (!in_pa[y]) return false;
  }
  return true;
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

PNilpotenceReport check_p_nilpotence(const AbelianGroup& group, std::size_t brute_force_limit) {
  const std::uint64_t p = group.prime();
  if (p == 0) throw DomainError("A is not a p-group");
  PNilpotenceReport r;
  std::vector<Perm> pool;
  if (automorphism_count(group) <= static_cast<unsigned long>(brute_force_limit)) {
    r.method = "all automorphisms";
    for (auto& m : automorphisms(group, brute_force_limit)) {
      if (is_power_of(perm_order(m), p)) pool.push_back(std::move(m));
    }
  } else {
    r.method = "sylow subgroup";
    pool = sylow_automorphisms(group);
  }
  for (const auto& m : pool) {
    ++r.checked;
    if (!automorphism_is_p_nilpotent(group, m)) r.failures.push_back(m);
  }
  return r;
}

namespace {

/// Partitions of k into parts >= 1, each listed in ascending order.
void partitions(unsigned k, unsigned min_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = min_part; part <= k; ++part) {
    cur.push_back(part);
    partitions(k - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AbelianGroup> abelian_p_groups_up_to(std::size_t max_order) {
  std::vector<AbelianGroup> out;
  for (std::uint64_t p = 2; p <= max_order; ++p) {
    if (!exactalg::is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned k = 1; q <= max_order; ++k, q *= p) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(k, 1, cur, parts);
      for (const auto& alpha : parts) {
        std::vector<std::uint32_t> orders;
        for (unsigned e : alpha) {
          std::uint32_t d = 1;
          for (unsigned i = 0; i < e; ++i) d *= static_cast<std::uint32_t>(p);
          orders.push_back(d);
        }
        out.emplace_back(std::move(orders));
      }
    }
  }
  return out;
}

std::vector<AbelianGroup> abelian_groups_up_to(std::size_t max_order) {
  std::vector<AbelianGroup> out;
  // d_1 | d_2 | ... | d_k with product n; extend by multiples of the last.
  std::function<void(std::uint32_t, std::uint32_t, std::vector<std::uint32_t>&)> grow =
      [&](std::uint32_t remaining, std::uint32_t last, std::vector<std::uint32_t>& cur) {
        if (remaining == 1) {
          out.emplace_back(cur);
          return;
        }
        for (std::uint32_t d = last; d <= remaining; d += last) {
          if (d < 2 || remaining % d != 0) continue;
          // Later factors are multiples of d, so d must divide what is left after it.
          if ((remaining / d) % d != 0 && remaining / d != 1) continue;
          cur.push_back(d);
          grow(remaining / d, d, cur);
          cur.pop_back();
        }
      };
  for (std::uint32_t n = 2; n <= max_order; ++n) {
    std::vector<std::uint32_t> cur;
    grow(n, 1, cur);
  }
  return out;
}

}  // namespace iyb::braces
