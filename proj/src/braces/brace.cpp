#include "iyb/braces/brace.hpp"

#include <string>

namespace iyb::braces {

std::string axiom_name(BraceAxiom axiom) {
  switch (axiom) {
    case BraceAxiom::AdditiveNotAbelianGroup:
      return "not-abelian(+)";
    case BraceAxiom::MultiplicativeNotGroup:
      return "not-group(*)";
    case BraceAxiom::IdentityMismatch:
      return "identity mismatch";
    case BraceAxiom::Compatibility:
      return "compatibility";
  }
  return "unknown";
}

namespace {

std::string triple(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<Element> flatten(const std::vector<std::vector<Element>>& t, std::size_t n, const char* name) {
  if (t.size() != n) throw DomainError(std::string(name) + " table has the wrong number of rows");
  std::vector<Element> out;
  out.reserve(n * n);
  for (const auto& row : t) {
    if (row.size() != n) throw DomainError(std::string(name) + " table is not square");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

BraceAxiomError::BraceAxiomError(BraceAxiom axiom, std::string detail, std::optional<std::array<Element, 3>> witness)
    : DomainError(axiom_name(axiom) + ": " + detail), axiom_(axiom), witness_(witness) {}

Brace Brace::unchecked(FiniteAbelian additive, std::vector<Element> mul) {
  const std::size_t n = additive.size();
  std::vector<Element> inv(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (mul[a * n + b] == 0) inv[a] = b;
    }
  }
  return Brace(std::move(additive), std::move(mul), std::move(inv));
}

Brace validate_brace(const std::vector<std::vector<Element>>& add, const std::vector<std::vector<Element>>& mul) {
  const std::size_t n = add.size();
  if (n == 0) throw DomainError("empty brace");
  auto add_flat = flatten(add, n, "addition");
  auto mul_flat = flatten(mul, n, "multiplication");

  std::optional<FiniteAbelian> additive;
  try {
    additive = FiniteAbelian::from_table(n, add_flat);
  } catch (const DomainError& e) {
    throw BraceAxiomError(BraceAxiom::AdditiveNotAbelianGroup, e.what());
  }

  auto m = [&](Element a, Element b) { return mul_flat[a * n + b]; };
  for (auto x : mul_flat) {
    if (x >= n) throw BraceAxiomError(BraceAxiom::MultiplicativeNotGroup, "entry out of range");
  }
  // Identity: the unique e with e·x = x·e = x must be 0 (the additive zero).
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = m(e, x) == x && m(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw BraceAxiomError(BraceAxiom::MultiplicativeNotGroup, "no identity element");
  if (*identity != 0) {
    throw BraceAxiomError(BraceAxiom::IdentityMismatch,
                          "multiplicative identity is " + std::to_string(*identity) + ", additive zero is 0");
  }
  for (Element a = 0; a < n; ++a) {
    // Latin-square rows and columns give unique solutions, hence inverses.
    std::vector<bool> row(n, false), col(n, false);
    for (Element b = 0; b < n; ++b) {
      if (row[m(a, b)] || col[m(b, a)]) {
        throw BraceAxiomError(BraceAxiom::MultiplicativeNotGroup,
                              "element " + std::to_string(a) + " is not invertible");
      }
      row[m(a, b)] = col[m(b, a)] = true;
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (m(m(a, b), c) != m(a, m(b, c))) {
          throw BraceAxiomError(BraceAxiom::MultiplicativeNotGroup, "not associative at " + triple(a, b, c),
                                std::array<Element, 3>{a, b, c});
        }
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        Element lhs = additive->add(m(a, additive->add(b, c)), a);
        Element rhs = additive->add(m(a, b), m(a, c));
        if (lhs != rhs) {
          throw BraceAxiomError(BraceAxiom::Compatibility, "a(b+c)+a != ab+ac at " + triple(a, b, c),
                                std::array<Element, 3>{a, b, c});
        }
      }
    }
  }
  return Brace::unchecked(std::move(*additive), std::move(mul_flat));
}

Perm lambda_map(const Brace& brace, Element g) {
  Perm out(brace.order());
  for (Element h = 0; h < brace.order(); ++h) out[h] = brace.additive().sub(brace.mul(g, h), g);
  return out;
}

Brace trivial_brace(std::size_t n) {
  AbelianGroup z({static_cast<std::uint32_t>(n)});
  return Brace::unchecked(z.table(), z.table().table());
}

Brace radical_ring_brace(unsigned k) {
  const std::uint32_t mod = 1U << k;
  const std::uint32_t n = mod / 2;
  std::vector<std::vector<Element>> add(n, std::vector<Element>(n)), mul(n, std::vector<Element>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t a = 2 * i, b = 2 * j;
      add[i][j] = ((a + b) % mod) / 2;
      mul[i][j] = ((a + b + a * b) % mod) / 2;
    }
  }
  return validate_brace(add, mul);
}

}  // namespace iyb::braces
