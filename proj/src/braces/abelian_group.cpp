#include "iyb/braces/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace iyb::braces {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) throw DomainError("smallest_prime_factor of " + std::to_string(n));
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

unsigned log_prime_power(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) throw DomainError("not a power of " + std::to_string(p));
  return e;
}

FiniteAbelian FiniteAbelian::from_table(std::size_t n, std::vector<Element> table) {
  if (n == 0) throw DomainError("empty carrier");
  if (table.size() != n * n) throw DomainError("addition table is not n x n");
  for (auto x : table) {
    if (x >= n) throw DomainError("addition table entry out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a) throw DomainError("element 0 is not the additive identity");
  }
  std::vector<Element> neg(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (at(a, b) != at(b, a)) {
        throw DomainError("addition is not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      if (at(a, b) == 0) {
        neg[a] = static_cast<Element>(b);
        found = true;
      }
    }
    if (!found) throw DomainError("element " + std::to_string(a) + " has no additive inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw DomainError("addition is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
        }
      }
    }
  }
  return FiniteAbelian(n, std::move(table), std::move(neg));
}

Element FiniteAbelian::multiple(std::uint64_t k, Element a) const {
  Element acc = 0;
  Element base = a;
  while (k != 0) {
    if (k & 1U) acc = add(acc, base);
    base = add(base, base);
    k >>= 1U;
  }
  return acc;
}

std::uint64_t FiniteAbelian::order(Element a) const {
  std::uint64_t k = 1;
  for (Element x = a; x != 0; x = add(x, a)) ++k;
  return k;
}

std::vector<std::uint64_t> AbelianType::invariant_factors() const {
  std::size_t len = 0;
  for (const auto& part : parts) len = std::max(len, part.exponents.size());
  std::vector<std::uint64_t> factors(len, 1);
  for (const auto& part : parts) {
    // Largest exponents go to the largest invariant factor.
    std::size_t offset = len - part.exponents.size();
    for (std::size_t i = 0; i < part.exponents.size(); ++i) {
      for (unsigned e = 0; e < part.exponents[i]; ++e) factors[offset + i] *= part.prime;
    }
  }
  return factors;
}

AbelianType abelian_type(const FiniteAbelian& group) {
  AbelianType type;
  std::uint64_t n = group.size();
  std::uint64_t rest = n;
  while (rest > 1) {
    std::uint64_t p = smallest_prime_factor(rest);
    while (rest % p == 0) rest /= p;
    // log_p |A[p^k]| = sum_i min(alpha_i, k); its increments count the
    // alpha_i that are >= k.
    std::vector<unsigned> log_counts{0};
    std::uint64_t pk = 1;
    while (true) {
      pk *= p;
      std::uint64_t count = 0;
      for (Element x = 0; x < n; ++x) {
        if (group.multiple(pk, x) == 0) ++count;
      }
      log_counts.push_back(log_prime_power(count, p));
      if (log_counts.back() == log_counts[log_counts.size() - 2]) break;
    }
    // at_least[k] = #{i : alpha_i >= k}
    std::vector<unsigned> exps;
    for (std::size_t k = log_counts.size() - 1; k >= 1; --k) {
      unsigned at_least = log_counts[k] - log_counts[k - 1];
      unsigned at_least_next = k + 1 < log_counts.size() ? log_counts[k + 1] - log_counts[k] : 0;
      for (unsigned c = at_least_next; c < at_least; ++c) exps.push_back(static_cast<unsigned>(k));
    }
    std::sort(exps.begin(), exps.end());
    type.parts.push_back({p, std::move(exps)});
  }
  return type;
}

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)), group_(1, {0}, {0}) {
  std::size_t n = 1;
  for (auto d : orders_) {
    if (d < 2) throw DomainError("cyclic factor orders must be >= 2");
    n *= d;
    if (n > (1U << 20)) throw BudgetExceeded("abelian group too large to tabulate");
  }
  std::vector<Element> table(n * n);
  std::vector<Element> neg(n);
  std::vector<std::uint32_t> ca, cb, cs(orders_.size());
  for (Element a = 0; a < n; ++a) {
    ca = coords(a);
    for (std::size_t i = 0; i < orders_.size(); ++i) cs[i] = (orders_[i] - ca[i]) % orders_[i];
    neg[a] = index(cs);
    for (Element b = 0; b < n; ++b) {
      cb = coords(b);
      for (std::size_t i = 0; i < orders_.size(); ++i) cs[i] = (ca[i] + cb[i]) % orders_[i];
      table[a * n + b] = index(cs);
    }
  }
  group_ = FiniteAbelian(n, std::move(table), std::move(neg));
}

std::vector<std::uint32_t> AbelianGroup::coords(Element a) const {
  std::vector<std::uint32_t> c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    c[i] = a % orders_[i];
    a /= orders_[i];
  }
  return c;
}

Element AbelianGroup::index(std::span<const std::uint32_t> coords) const {
  if (coords.size() != orders_.size()) throw DimensionMismatch("coordinate count mismatch");
  Element idx = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) idx = idx * orders_[i] + coords[i] % orders_[i];
  return idx;
}

Element AbelianGroup::generator(std::size_t i) const {
  std::vector<std::uint32_t> c(orders_.size(), 0);
  c.at(i) = 1;
  return index(c);
}

std::uint64_t AbelianGroup::prime() const {
  if (orders_.empty()) return 0;
  std::uint64_t p = smallest_prime_factor(orders_.front());
  for (auto d : orders_) {
    std::uint64_t x = d;
    while (x % p == 0) x /= p;
    if (x != 1) return 0;
  }
  return p;
}

bool AbelianGroup::is_elementary_abelian() const {
  if (orders_.empty()) return false;
  std::uint64_t p = prime();
  return p != 0 && std::all_of(orders_.begin(), orders_.end(), [p](auto d) { return d == p; });
}

}  // namespace iyb::braces
