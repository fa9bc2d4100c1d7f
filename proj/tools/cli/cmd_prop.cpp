#include <memory>
#include <random>
#include <sstream>

#include "common.hpp"
#include "iyb/braces/order_checks.hpp"
#include "iyb/lazard/exp_group.hpp"
#include "iyb/polysolve/groebner.hpp"
#include "iyb/polysolve/solve_small.hpp"

namespace iyb::cli {

namespace {

lazard::ExpGroup::Vec random_vec(std::mt19937_64& rng, std::size_t dim, std::uint64_t p) {
  lazard::ExpGroup::Vec v(dim);
  for (auto& x : v) x = rng() % p;
  return v;
}

Report prop_assoc(const Globals& g, std::uint64_t p, std::size_t samples) {
  lazard::ExpGroup grp(liealg::paper_L(exactalg::PrimeField(p)).base());
  std::mt19937_64 rng(g.seed);
  std::size_t failures = 0, wrong_orders = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    auto x = random_vec(rng, 10, p), y = random_vec(rng, 10, p), z = random_vec(rng, 10, p);
    if (grp.product(grp.product(x, y), z) != grp.product(x, grp.product(y, z))) ++failures;
    if (grp.order(x) != lazard::additive_order(grp.algebra().ring(), x)) ++wrong_orders;
  }
  std::ostringstream os;
  os << "associativity failures: " << failures << " of " << samples << "\n"
     << "elements whose order differs from the additive order: " << wrong_orders;
  return Report{failures + wrong_orders == 0 ? kOk : kRefuted, os.str(),
                json{{"samples", samples}, {"associativity_failures", failures}, {"order_mismatches", wrong_orders}}};
}

Report prop_unipotent(const Globals& g, std::uint64_t p, std::size_t size, std::size_t samples) {
  exactalg::PrimeField f(p);
  std::mt19937_64 rng(g.seed);
  std::size_t failures = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    if (!braces::unipotent_power_is_identity(braces::random_unipotent(f, size, rng))) ++failures;
  }
  std::ostringstream os;
  os << "U^" << p << " != Id for " << failures << " of " << samples << " random " << size << "x" << size << " matrices";
  if (size > p) os << " (size exceeds p, so failures are expected)";
  return Report{failures == 0 ? kOk : kRefuted, os.str(), json{{"samples", samples}, {"failures", failures}}};
}

Report prop_gb_oracle(const Globals& g, std::size_t systems) {
  std::mt19937_64 rng(g.seed);
  const std::uint64_t primes[] = {2, 3, 5, 7};
  std::size_t disagreements = 0, not_groebner = 0, inconsistent = 0;
  for (std::size_t k = 0; k < systems; ++k) {
    exactalg::PrimeField f(primes[rng() % 4]);
    const std::size_t nvars = 1 + rng() % 4;
    auto sys = polysolve::random_system(rng, f, nvars, 1 + rng() % 3, 3, 3);
    auto res = polysolve::buchberger(polysolve::with_field_equations(sys));
    bool none = polysolve::solve_small(sys).empty();
    if (none != res.inconsistent) ++disagreements;
    if (!polysolve::is_groebner_basis(res.basis, polysolve::MonomialOrder::Grevlex)) ++not_groebner;
    inconsistent += res.inconsistent ? 1 : 0;
  }
  std::ostringstream os;
  os << systems << " random systems, " << inconsistent << " inconsistent\n"
     << "verdict disagreements with exhaustive search: " << disagreements << "\n"
     << "outputs failing the S-polynomial test: " << not_groebner;
  return Report{disagreements + not_groebner == 0 ? kOk : kRefuted, os.str(),
                json{{"systems", systems},
                     {"inconsistent", inconsistent},
                     {"disagreements", disagreements},
                     {"not_groebner", not_groebner}}};
}

}  // namespace

void register_prop(CLI::App& app, const Globals& g, Runner& run) {
  auto* prop = app.add_subcommand("prop", "Seeded randomized property checks");
  prop->require_subcommand(1);

  struct Args {
    std::uint64_t p = 11;
    std::size_t samples = 200, size = 11;
  };
  auto aa = std::make_shared<Args>();
  auto* assoc = prop->add_subcommand("assoc", "BCH product on the 10-dimensional algebra: associativity and orders");
  assoc->add_option("--p", aa->p, "Prime above the nilpotency class")->capture_default_str();
  assoc->add_option("--samples", aa->samples, "Random triples")->capture_default_str();
  assoc->callback([aa, &g, &run] { run = [aa, &g] { return prop_assoc(g, aa->p, aa->samples); }; });

  auto ua = std::make_shared<Args>();
  auto* uni = prop->add_subcommand("unipotent", "U^p = Id for random unipotent upper triangular U over F_p");
  uni->add_option("--p", ua->p, "Prime")->capture_default_str();
  uni->add_option("--size", ua->size, "Matrix size")->capture_default_str();
  uni->add_option("--samples", ua->samples, "Random matrices")->capture_default_str();
  uni->callback([ua, &g, &run] { run = [ua, &g] { return prop_unipotent(g, ua->p, ua->size, ua->samples); }; });

  auto oa = std::make_shared<Args>();
  oa->samples = 50;
  auto* orc = prop->add_subcommand("gb-oracle", "Groebner verdicts against exhaustive search on random systems");
  orc->add_option("--systems", oa->samples, "Number of random systems")->capture_default_str();
  orc->callback([oa, &g, &run] { run = [oa, &g] { return prop_gb_oracle(g, oa->samples); }; });
}

}  // namespace iyb::cli
