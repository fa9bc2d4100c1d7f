#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "iyb/braces/automorphisms.hpp"
#include "iyb/braces/brace.hpp"
#include "iyb/braces/enumerate.hpp"
#include "iyb/braces/holomorph.hpp"
#include "iyb/braces/order_checks.hpp"
#include "iyb/exactalg/linalg.hpp"

using namespace iyb;
using namespace iyb::braces;
using exactalg::Matrix;
using exactalg::PrimeField;

namespace {

std::vector<std::vector<Element>> square(std::size_t n, auto f) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = static_cast<Element>(f(a, b));
  return t;
}

bool is_subgroup_oracle(const FiniteAbelian& g, const std::vector<HolElement>& s) {
  std::set<HolElement> set(s.begin(), s.end());
  for (const auto& a : s)
    for (const auto& b : s)
      if (!set.contains(compose(g, a, b))) return false;
  return true;
}

bool regular_oracle(const FiniteAbelian& g, const std::vector<HolElement>& s) {
  if (s.size() != g.size()) return false;
  std::set<Element> hit;
  for (const auto& h : s) hit.insert(act(g, h, 0));
  return hit.size() == g.size();
}

}  // namespace

TEST_CASE("brace validation") {
  SUBCASE("trivial brace on Z/n") {
    for (std::size_t n : {1, 2, 5, 12}) {
      auto add = square(n, [&](Element a, Element b) { return (a + b) % n; });
      CHECK_NOTHROW(validate_brace(add, add));
    }
  }
  SUBCASE("the only Klein table on Z/4 with identity 0 is the radical ring brace") {
    auto add = square(4, [](Element a, Element b) { return (a + b) % 4; });
    auto klein = square(4, [](Element a, Element b) { return a ^ b; });
    CHECK(validate_brace(add, klein) == radical_ring_brace(3));
  }
  SUBCASE("Z/4 with a relabelled cyclic multiplication fails compatibility") {
    auto add = square(4, [](Element a, Element b) { return (a + b) % 4; });
    const Element pi[4] = {0, 2, 1, 3};  // an involution, so it is its own inverse
    auto mul = square(4, [&](Element a, Element b) { return pi[(pi[a] + pi[b]) % 4]; });
    try {
      validate_brace(add, mul);
      FAIL("expected a compatibility failure");
    } catch (const BraceAxiomError& err) {
      CHECK(err.axiom() == BraceAxiom::Compatibility);
      REQUIRE(err.witness().has_value());
      auto [a, b, c] = *err.witness();
      CHECK((mul[a][add[b][c]] + a) % 4 != (mul[a][b] + mul[a][c]) % 4);
    }
  }
  SUBCASE("other axiom failures") {
    auto add = square(3, [](Element a, Element b) { return (a + b) % 3; });
    auto bad_mul = square(3, [](Element, Element) { return 0; });
    CHECK_THROWS_AS(validate_brace(add, bad_mul), BraceAxiomError);
    auto nonabelian = square(3, [](Element a, Element) { return a; });
    CHECK_THROWS_AS(validate_brace(nonabelian, add), BraceAxiomError);
  }
  SUBCASE("radical ring 2Z/8Z") {
    auto b = radical_ring_brace(3);
    REQUIRE(b.order() == 4);
    // Labels are ring elements halved: label 1 is the ring element 2.
    CHECK(b.mul(1, 1) == 0);
    std::vector<std::uint64_t> add_orders, mul_orders;
    for (Element x = 0; x < 4; ++x) {
      add_orders.push_back(b.additive().order(x));
      mul_orders.push_back(multiplicative_order(b, x));
    }
    CHECK(add_orders == std::vector<std::uint64_t>{1, 4, 2, 4});
    CHECK(mul_orders == std::vector<std::uint64_t>{1, 2, 2, 2});
  }
}

TEST_CASE("lambda maps") {
  auto t = trivial_brace(6);
  for (Element g = 0; g < 6; ++g) CHECK(lambda_map(t, g) == identity_perm(6));
  for (const auto& group : abelian_groups_up_to(8)) {
    for (const auto& h : enumerate_regular_subgroups(group)) {
      auto b = brace_from_regular(group.table(), h);
      CHECK(lambda_map(b, 0) == identity_perm(b.order()));
      for (Element g = 0; g < b.order(); ++g) {
        CHECK(is_automorphism(b.additive(), lambda_map(b, g)));
        for (Element k = 0; k < b.order(); ++k) {
          CHECK(compose(lambda_map(b, g), lambda_map(b, k)) == lambda_map(b, b.mul(g, k)));
        }
      }
    }
  }
}

TEST_CASE("holomorph sizes") {
  CHECK(holomorph(AbelianGroup({3})).size() == 6);
  CHECK(holomorph(AbelianGroup({2, 2})).size() == 24);
  CHECK(holomorph(AbelianGroup({27})).size() == 486);
  CHECK(automorphisms(AbelianGroup({2, 2})).size() == 6);
  // Units of Z/27 by brute force.
  std::size_t units = 0;
  for (unsigned u = 1; u < 27; ++u) units += std::gcd(u, 27u) == 1;
  CHECK(automorphisms(AbelianGroup({27})).size() == units);
  CHECK_THROWS_AS(holomorph(AbelianGroup({2, 2, 2, 2, 2, 2, 2})), BudgetExceeded);
}

TEST_CASE("regularity") {
  AbelianGroup a({2, 2});
  const auto& g = a.table();
  std::vector<HolElement> translations;
  for (Element v = 0; v < 4; ++v) translations.push_back({v, identity_perm(4)});
  CHECK(is_regular(g, translations));

  // Swap the two generators; (1,1) is fixed, so {0, v} x {id, s} is a subgroup of order 4 fixing 0 twice.
  Perm s(4);
  for (Element x = 0; x < 4; ++x) {
    auto c = a.coords(x);
    std::swap(c[0], c[1]);
    s[x] = a.index(c);
  }
  Element v = a.index(std::vector<std::uint32_t>{1, 1});
  std::vector<HolElement> h{{0, identity_perm(4)}, {0, s}, {v, identity_perm(4)}, {v, s}};
  CHECK(is_subgroup_oracle(g, h));
  CHECK_FALSE(is_regular(g, h));

  std::vector<HolElement> not_closed{{0, identity_perm(4)}, {1, identity_perm(4)}, {0, s}, {2, s}};
  CHECK_THROWS_AS(is_regular(g, not_closed), DomainError);
}

TEST_CASE("regular subgroups of Hol(Z/2 x Z/2) against a subset oracle") {
  AbelianGroup a({2, 2});
  const auto& g = a.table();
  auto hol = holomorph(a).elements();
  REQUIRE(hol.size() == 24);
  std::set<std::vector<HolElement>> found;
  std::vector<std::size_t> idx(4);
  for (idx[0] = 0; idx[0] < 24; ++idx[0])
    for (idx[1] = idx[0] + 1; idx[1] < 24; ++idx[1])
      for (idx[2] = idx[1] + 1; idx[2] < 24; ++idx[2])
        for (idx[3] = idx[2] + 1; idx[3] < 24; ++idx[3]) {
          std::vector<HolElement> s;
          for (auto i : idx) s.push_back(hol[i]);
          if (!is_subgroup_oracle(g, s) || !regular_oracle(g, s)) continue;
          std::sort(s.begin(), s.end());
          found.insert(s);
        }
  auto subs = enumerate_regular_subgroups(a);
  CHECK(subs.size() == found.size());
  std::set<std::vector<HolElement>> listed;
  for (const auto& h : subs) {
    auto e = h.elements();
    std::sort(e.begin(), e.end());
    listed.insert(e);
  }
  CHECK(listed == found);
  CHECK(classify_up_to_aut(a, subs).orbit_count() == 2);

  bool has_cyclic = false;
  for (const auto& h : subs) {
    auto b = brace_from_regular(g, h);
    for (Element x = 0; x < 4; ++x) has_cyclic = has_cyclic || multiplicative_order(b, x) == 4;
  }
  CHECK(has_cyclic);
}

TEST_CASE("cyclic groups of prime order have only the translations") {
  for (std::uint32_t p : {2, 3, 5, 7, 11, 13}) {
    auto subs = enumerate_regular_subgroups(AbelianGroup({p}));
    REQUIRE(subs.size() == 1);
    auto b = brace_from_regular(AbelianGroup({p}).table(), subs[0]);
    CHECK(b == trivial_brace(p));
  }
}

TEST_CASE("known counts for order 8") {
  struct Row {
    std::vector<std::uint32_t> orders;
    std::size_t subgroups, orbits;
  };
  for (const auto& row : {Row{{2, 2, 2}, 232, 8}, Row{{2, 4}, 28, 14}, Row{{8}, 6, 5}}) {
    AbelianGroup a(row.orders);
    auto subs = enumerate_regular_subgroups(a);
    CHECK(subs.size() == row.subgroups);
    CHECK(classify_up_to_aut(a, subs).orbit_count() == row.orbits);
  }
}

TEST_CASE("strategies and parallelism agree") {
  for (auto orders : {std::vector<std::uint32_t>{2, 2, 2}, {2, 4}, {3, 3}, {2, 2, 4}}) {
    AbelianGroup a(orders);
    EnumerationOptions direct{.strategy = EnumerationStrategy::Direct, .parallel = false};
    EnumerationOptions direct_par{.strategy = EnumerationStrategy::Direct, .parallel = true};
    EnumerationOptions sylow{.strategy = EnumerationStrategy::SylowConjugates, .parallel = true};
    auto reference = enumerate_regular_subgroups(a, direct);
    CHECK(enumerate_regular_subgroups(a, direct_par) == reference);
    CHECK(enumerate_regular_subgroups(a, sylow) == reference);
  }
  EnumerationOptions tight{.hol_bound = 10};
  CHECK_THROWS_AS(enumerate_regular_subgroups(AbelianGroup({2, 2}), tight), BudgetExceeded);
}

TEST_CASE("brace and regular subgroup round trips") {
  for (const auto& group : abelian_groups_up_to(12)) {
    const auto& g = group.table();
    for (const auto& h : enumerate_regular_subgroups(group)) {
      auto b = brace_from_regular(g, h);
      CHECK(regular_from_brace(b) == h);
      CHECK(gamma_is_monomorphism(b));
      auto image = gamma_embed(b).images;
      CHECK(regular_oracle(g, image));
      CHECK(is_subgroup_oracle(g, image));
    }
  }
  auto t = trivial_brace(5);
  auto h = regular_from_brace(t);
  for (const auto& m : h.lambdas()) CHECK(m == identity_perm(5));
}

TEST_CASE("the 2Z/8Z brace") {
  auto b = radical_ring_brace(3);
  auto h = regular_from_brace(b);
  auto subs = enumerate_regular_subgroups(AbelianGroup({4}));
  CHECK(std::find(subs.begin(), subs.end(), h) != subs.end());
  auto gamma = gamma_embed(b).images;
  CHECK(compose(b.additive(), gamma[1], gamma[1]) == gamma[0]);
  CHECK(gamma[0] == HolElement{0, identity_perm(4)});
  // The regular image is elementary abelian: every element squares to the identity.
  for (const auto& x : gamma) CHECK(compose(b.additive(), x, x) == gamma[0]);

  auto report = check_order_equality(b);
  CHECK_FALSE(report.orders_equal);
  REQUIRE(report.first_mismatch.has_value());
  CHECK(*report.first_mismatch == 1);
  CHECK(report.additive_orders[1] == 4);
  CHECK(report.multiplicative_orders[1] == 2);
  CHECK_FALSE(report.hypothesis_holds);
  CHECK(report.multiplicative_abelian);
  CHECK(report.isomorphic_groups == false);
}

TEST_CASE("order equality on Z/27") {
  auto trivial = check_order_equality(trivial_brace(27));
  CHECK(trivial.orders_equal);
  CHECK(trivial.hypothesis_holds);
  CHECK(trivial.isomorphic_groups == true);

  AbelianGroup a({27});
  auto subs = enumerate_regular_subgroups(a);
  CHECK(subs.size() == 9);
  for (const auto& h : subs) {
    auto r = check_order_equality(brace_from_regular(a.table(), h));
    CHECK(r.prime == 3);
    CHECK(r.hypothesis_holds);
    CHECK(r.orders_equal);
  }
  CHECK_THROWS_AS(check_order_equality(trivial_brace(6)), DomainError);
}

TEST_CASE("matrix form of the holomorph") {
  SUBCASE("identity and a hand example") {
    AbelianGroup a({3});
    CHECK(hol_to_gl(a, {0, identity_perm(3)}) == Matrix<PrimeField>::identity(PrimeField(3), 2));
    Perm doubling{0, 2, 1};
    CHECK(hol_to_gl(a, {1, doubling}) == Matrix<PrimeField>::from_ints(PrimeField(3), {{2, 1}, {0, 1}}));
    CHECK_THROWS_AS(hol_to_gl(AbelianGroup({4}), {0, identity_perm(4)}), DomainError);
  }
  SUBCASE("multiplicativity on random affine maps of (Z/11)^10") {
    PrimeField f(11);
    std::mt19937_64 rng(42);
    auto random_affine = [&] {
      for (;;) {
        Matrix<PrimeField> m(f, 10, 10);
        for (std::size_t i = 0; i < 10; ++i)
          for (std::size_t j = 0; j < 10; ++j) m.set(i, j, rng() % 11);
        if (exactalg::rank(m) < 10) continue;
        std::vector<std::uint64_t> v(10);
        for (auto& x : v) x = rng() % 11;
        return AffineElement{m, v};
      }
    };
    for (int k = 0; k < 500; ++k) {
      auto g = random_affine(), h = random_affine();
      CHECK(hol_to_gl(compose(g, h)) == hol_to_gl(g) * hol_to_gl(h));
    }
  }
  SUBCASE("permutation and matrix composition agree") {
    AbelianGroup a({3, 3});
    auto hol = holomorph(a).elements();
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
      const auto& g = hol[rng() % hol.size()];
      const auto& h = hol[rng() % hol.size()];
      CHECK(hol_to_gl(a, compose(a.table(), g, h)) == hol_to_gl(a, g) * hol_to_gl(a, h));
    }
  }
  SUBCASE("gamma followed by the matrix form is a faithful representation") {
    for (const auto& group : abelian_groups_up_to(16)) {
      if (!group.is_elementary_abelian() || group.size() > 9) continue;
      for (const auto& h : enumerate_regular_subgroups(group)) {
        auto b = brace_from_regular(group.table(), h);
        auto gamma = gamma_embed(b).images;
        std::vector<Matrix<PrimeField>> mats;
        for (const auto& x : gamma) mats.push_back(hol_to_gl(group, x));
        for (std::size_t i = 0; i < mats.size(); ++i) {
          for (std::size_t j = 0; j < mats.size(); ++j) {
            if (i != j) CHECK_FALSE(mats[i] == mats[j]);
            CHECK(mats[i] * mats[j] == mats[b.mul(static_cast<Element>(i), static_cast<Element>(j))]);
          }
        }
      }
    }
  }
}

TEST_CASE("orbit counts do not depend on coordinate labels") {
  AbelianGroup a({2, 4}), b({4, 2});
  auto sa = enumerate_regular_subgroups(a);
  auto sb = enumerate_regular_subgroups(b);
  CHECK(sa.size() == sb.size());
  CHECK(classify_up_to_aut(a, sa).orbit_count() == classify_up_to_aut(b, sb).orbit_count());

  // Relabel every subgroup through a random automorphism; the orbit partition is unchanged.
  auto auts = automorphisms(a);
  std::mt19937_64 rng(3);
  const auto& phi = auts[rng() % auts.size()];
  std::vector<RegularSubgroup> moved;
  for (const auto& h : sa) moved.push_back(conjugate(a.table(), h, phi));
  std::sort(moved.begin(), moved.end());
  CHECK(moved == sa);
  CHECK(classify_up_to_aut(a, moved).orbit_count() == classify_up_to_aut(a, sa).orbit_count());
}

TEST_CASE("unipotent matrices have exponent dividing p") {
  std::mt19937_64 rng(8);
  for (std::uint64_t p : {5, 7, 11}) {
    PrimeField f(p);
    for (std::size_t size = 2; size <= p; ++size) {
      for (int k = 0; k < 10; ++k) CHECK(unipotent_power_is_identity(random_unipotent(f, size, rng)));
    }
  }
  CHECK(unipotent_power_is_identity(Matrix<PrimeField>::identity(PrimeField(5), 3)));
  // Size p + 1 breaks the identity: the Jordan block of size 3 over F_2 has order 4.
  auto j3 = Matrix<PrimeField>::from_ints(PrimeField(2), {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK_FALSE(unipotent_power_is_identity(j3));
}

TEST_CASE("automorphisms of p-power order are p-nilpotent") {
  SUBCASE("Z/9 by hand") {
    AbelianGroup a({9});
    for (std::uint32_t u = 1; u < 9; ++u) {
      if (u % 3 == 0) continue;
      Perm m(9);
      for (Element x = 0; x < 9; ++x) m[x] = (u * x) % 9;
      // p-power order exactly when u = 1 mod 3, and then (u - 1) x lies in 3A.
      if (perm_order(m) % 2 == 0) continue;
      CHECK(u % 3 == 1);
      CHECK(automorphism_is_p_nilpotent(a, m));
    }
  }
  for (const auto& a : abelian_p_groups_up_to(32)) {
    auto r = check_p_nilpotence(a);
    CHECK(r.failures.empty());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("abelian group bookkeeping") {
  AbelianGroup a({2, 4, 3});
  CHECK(a.size() == 24);
  for (Element x = 0; x < 24; ++x) CHECK(a.index(a.coords(x)) == x);
  auto t = abelian_type(a.table());
  CHECK(t.invariant_factors() == std::vector<std::uint64_t>{2, 12});
  CHECK_FALSE(t.is_p_group());
  CHECK(AbelianGroup({3, 3}).is_elementary_abelian());
  CHECK_FALSE(AbelianGroup({3, 9}).is_elementary_abelian());
  CHECK_THROWS(AbelianGroup({1}));
  std::size_t order16 = 0;
  for (const auto& g : abelian_groups_up_to(16)) order16 += g.size() == 16;
  CHECK(order16 == 5);
}
