#include "iyb/braces/automorphisms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace iyb::braces {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Element{0});
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<Element>(x);
  return out;
}

std::uint64_t perm_order(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  std::uint64_t order = 1;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = a[y]) {
      seen[y] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : p) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool is_automorphism(const FiniteAbelian& group, const Perm& perm) {
  const std::size_t n = group.size();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto y : perm) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (perm[group.add(a, b)] != group.add(perm[a], perm[b])) return false;
    }
  }
  return true;
}

namespace {

struct PrimaryExponents {
  std::uint64_t p;
  std::vector<unsigned> e;  // ascending
};

std::vector<PrimaryExponents> primary_exponents(const AbelianGroup& group) {
  std::vector<PrimaryExponents> parts;
  for (auto d : group.cyclic_orders()) {
    std::uint64_t rest = d;
    while (rest > 1) {
      std::uint64_t p = smallest_prime_factor(rest);
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      auto it = std::find_if(parts.begin(), parts.end(), [p](const auto& x) { return x.p == p; });
      if (it == parts.end()) {
        parts.push_back({p, {}});
        it = parts.end() - 1;
      }
      it->e.push_back(e);
    }
  }
  for (auto& part : parts) std::sort(part.e.begin(), part.e.end());
  return parts;
}

exactalg::Integer ipow(std::uint64_t p, std::uint64_t e) {
  exactalg::Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

// |Aut| of Z/p^e_1 x ... x Z/p^e_n with e ascending:
// prod_k (p^{d_k} - p^{k-1}) * prod_j p^{e_j (n - d_j)} * prod_i p^{(e_i - 1)(n - c_i + 1)}
// where d_k = max{l : e_l = e_k}, c_k = min{l : e_l = e_k} (1-based).
exactalg::Integer p_group_aut_count(std::uint64_t p, const std::vector<unsigned>& e, bool p_part_only) {
  const std::size_t n = e.size();
  exactalg::Integer total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t d = k;
    while (d + 1 < n && e[d + 1] == e[k]) ++d;
    std::size_t c = k;
    while (c > 0 && e[c - 1] == e[k]) --c;
    const std::uint64_t dk = d + 1, ck = c + 1, kk = k + 1;
    exactalg::Integer factor = ipow(p, dk) - ipow(p, kk - 1);
    if (p_part_only) {
      // p^{d_k} - p^{k-1} = p^{k-1} (p^{d_k - k + 1} - 1); the bracket is prime to p.
      factor = ipow(p, kk - 1);
    }
    total *= factor;
    total *= ipow(p, e[k] * (n - dk));
    total *= ipow(p, (e[k] - 1) * (n - ck + 1));
  }
  return total;
}

}  // namespace

exactalg::Integer automorphism_count(const AbelianGroup& group) {
  exactalg::Integer total = 1;
  for (const auto& part : primary_exponents(group)) total *= p_group_aut_count(part.p, part.e, false);
  return total;
}

exactalg::Integer sylow_order(const AbelianGroup& group) {
  auto parts = primary_exponents(group);
  if (parts.size() != 1) throw DomainError("sylow_order needs a p-group");
  return p_group_aut_count(parts.front().p, parts.front().e, true);
}

std::vector<Perm> automorphisms(const AbelianGroup& group, std::size_t limit) {
  if (automorphism_count(group) > limit) {
    throw BudgetExceeded("|Aut(A)| = " + automorphism_count(group).get_str() + " exceeds the limit of " +
                         std::to_string(limit));
  }
  const std::size_t n = group.size();
  const std::size_t m = group.rank();
  const auto& ab = group.table();
  std::vector<std::vector<Element>> candidates(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (Element x = 0; x < n; ++x) {
      if (ab.order(x) == group.cyclic_orders()[i]) candidates[i].push_back(x);
    }
  }

  std::vector<Perm> result;
  std::vector<Element> images(m);
  // span[i] marks the subgroup generated by images[0..i).
  std::vector<std::vector<bool>> span(m + 1, std::vector<bool>(n, false));
  span[0][0] = true;
  std::vector<std::size_t> span_size(m + 1, 1);

  auto extend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == m) {
      // Image of the element with coordinates c is sum c_i * images[i].
      Perm perm(n);
      for (Element a = 0; a < n; ++a) {
        auto c = group.coords(a);
        Element y = 0;
        for (std::size_t i = 0; i < m; ++i) y = ab.add(y, ab.multiple(c[i], images[i]));
        perm[a] = y;
      }
      result.push_back(std::move(perm));
      return;
    }
    const std::uint64_t d = group.cyclic_orders()[depth];
    for (Element x : candidates[depth]) {
      // <previous images> + <x> must have order |previous| * d.
      auto& next = span[depth + 1];
      std::fill(next.begin(), next.end(), false);
      std::size_t count = 0;
      for (Element s = 0; s < n; ++s) {
        if (!span[depth][s]) continue;
        Element y = s;
        for (std::uint64_t k = 0; k < d; ++k) {
          if (!next[y]) {
            next[y] = true;
            ++count;
          }
          y = ab.add(y, x);
        }
      }
      if (count != span_size[depth] * d) continue;
      span_size[depth + 1] = count;
      images[depth] = x;
      self(self, depth + 1);
    }
  };
  extend(extend, 0);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Perm> sylow_automorphisms(const AbelianGroup& group, std::size_t limit) {
  const std::uint64_t p = group.prime();
  if (p == 0) throw DomainError("sylow_automorphisms needs a p-group");
  if (sylow_order(group) > limit) {
    throw BudgetExceeded("Sylow subgroup of Aut(A) has order " + sylow_order(group).get_str() +
                         ", above the limit of " + std::to_string(limit));
  }
  const std::size_t m = group.rank();
  const auto& orders = group.cyclic_orders();
  std::vector<unsigned> e(m);
  for (std::size_t i = 0; i < m; ++i) e[i] = log_prime_power(orders[i], p);
  // position of each coordinate in the ascending-exponent order
  std::vector<std::size_t> by_exp(m);
  std::iota(by_exp.begin(), by_exp.end(), std::size_t{0});
  std::stable_sort(by_exp.begin(), by_exp.end(), [&](auto a, auto b) { return e[a] < e[b]; });
  std::vector<std::size_t> pos(m);
  for (std::size_t k = 0; k < m; ++k) pos[by_exp[k]] = k;

  // a(i, j) = coefficient of g_i in the image of g_j, taken from `choices`.
  std::vector<std::vector<std::uint32_t>> choices(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint32_t mod = orders[i];
      std::uint32_t step = 1;
      for (unsigned k = e[j]; k < e[i]; ++k) step *= static_cast<std::uint32_t>(p);  // p^{max(0, e_i - e_j)}
      auto& c = choices[i * m + j];
      for (std::uint32_t v = 0; v < mod; v += step) {
        if (i == j) {
          if (v % p == 1) c.push_back(v);
        } else if (e[i] == e[j] && pos[i] > pos[j]) {
          if (v % p == 0) c.push_back(v);
        } else {
          c.push_back(v);
        }
      }
    }
  }

  const std::size_t n = group.size();
  std::vector<std::vector<std::uint32_t>> coords(n);
  for (Element a = 0; a < n; ++a) coords[a] = group.coords(a);

  std::vector<Perm> result;
  std::vector<std::size_t> odometer(m * m, 0);
  std::vector<std::uint32_t> img(m);
  while (true) {
    Perm perm(n);
    for (Element a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc += static_cast<std::uint64_t>(choices[i * m + j][odometer[i * m + j]]) * coords[a][j];
        img[i] = static_cast<std::uint32_t>(acc % orders[i]);
      }
      perm[a] = group.index(img);
    }
    result.push_back(std::move(perm));
    std::size_t k = 0;
    while (k < odometer.size()) {
      if (++odometer[k] < choices[k].size()) break;
      odometer[k] = 0;
      ++k;
    }
    if (k == odometer.size()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

Perm isomorphism_to(const FiniteAbelian& group, const AbelianGroup& coords) {
  const std::size_t n = group.size();
  if (!coords.is_elementary_abelian() || coords.size() != n) {
    throw DomainError("target must be elementary abelian of the same order");
  }
  const std::uint64_t p = coords.prime();
  for (Element x = 0; x < n; ++x) {
    if (group.multiple(p, x) != 0) throw DomainError("group is not elementary abelian");
  }
  // span[x] = coordinate index of x, filled as basis vectors are chosen.
  constexpr Element kUnset = static_cast<Element>(-1);
  Perm iso(n, kUnset);
  iso[0] = 0;
  std::vector<Element> spanned{0};
  std::size_t basis = 0;
  for (Element x = 0; x < n && spanned.size() < n; ++x) {
    if (iso[x] != kUnset) continue;
    const Element unit = coords.generator(basis++);
    std::vector<Element> grown;
    for (Element s : spanned) {
      Element elem = s;
      Element img = iso[s];
      for (std::uint64_t k = 1; k < p; ++k) {
        elem = group.add(elem, x);
        img = coords.add(img, unit);
        iso[elem] = img;
        grown.push_back(elem);
      }
    }
    spanned.insert(spanned.end(), grown.begin(), grown.end());
  }
  return iso;
}

}  // namespace iyb::braces
