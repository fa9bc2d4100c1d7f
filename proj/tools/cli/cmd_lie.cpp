#include <memory>

#include "common.hpp"

namespace iyb::cli {

namespace {

template <class R>
Report check_algebra(const liealg::LieAlgebra<R>& lie) {
  Report r;
  auto jacobi = liealg::validate(lie);
  auto cls = liealg::nilpotency_class(lie);
  std::size_t center_dim = 0;
  std::vector<std::vector<std::string>> center_basis;
  auto record_center = [&](const auto& basis, const auto& ring) {
    center_dim = basis.size();
    for (const auto& v : basis) {
      std::vector<std::string> row;
      for (const auto& c : v) row.push_back(ring.to_string(c));
      center_basis.push_back(std::move(row));
    }
  };
  if constexpr (std::is_same_v<R, exactalg::IntegerRing>) {
    exactalg::RationalRing q;
    record_center(liealg::center(liealg::change_ring(lie, q)), q);
  } else {
    record_center(liealg::center(lie), lie.ring());
  }

  json failures = json::array();
  for (const auto& t : jacobi.failures) failures.push_back(json::array({t[0], t[1], t[2]}));
  r.data = json{{"ring", lie.ring().name()},
                {"dim", lie.dim()},
                {"valid", jacobi.valid()},
                {"jacobi_failures", failures},
                {"lower_central_series", liealg::lower_central_series(lie)},
                {"nilpotency_class", cls ? json(*cls) : json("infinite")},
                {"center_dim", center_dim},
                {"center_basis", center_basis}};
  if (!jacobi.valid()) {
    r.code = kRefuted;
    r.text = "invalid; Jacobi fails on " + std::to_string(jacobi.failures.size()) + " basis triples";
    return r;
  }
  r.text = "valid; class " + (cls ? std::to_string(*cls) : std::string("infinite")) + "; center dim " +
           std::to_string(center_dim);
  return r;
}

}  // namespace

void register_lie(CLI::App& app, const Globals& g, Runner& run) {
  (void)g;
  auto* lie = app.add_subcommand("lie", "Structure-constant Lie algebras");
  lie->require_subcommand(1);

  auto src = std::make_shared<LieSource>();
  auto* check = lie->add_subcommand("check", "Jacobi identity, nilpotency class and centre");
  src->add_options(check);
  check->callback([src, &run] {
    run = [src] {
      return std::visit([](const auto& f) { return check_algebra(f.algebra); }, src->load());
    };
  });

  auto lambdas = std::make_shared<std::string>();
  auto burde_p = std::make_shared<std::uint64_t>(0);
  auto burde_out = std::make_shared<std::string>();
  auto* burde = lie->add_subcommand("burde", "Build the lambda-parametrized family member and check it");
  burde->add_option("--lambda", *lambdas, "lambda1..lambda13, comma separated")->required();
  burde->add_option("--p", *burde_p, "Work over F_p instead of Z");
  burde->add_option("-o,--output", *burde_out, "Write the algebra as JSON");
  burde->callback([=, &run] {
    run = [=] {
      auto vals = parse_int_list(*lambdas, "--lambda");
      if (vals.size() != 13) throw InputError("--lambda: expected 13 values, got " + std::to_string(vals.size()));
      std::array<long long, 13> arr{};
      std::copy(vals.begin(), vals.end(), arr.begin());
      auto build = [&](const auto& ring) -> Report {
        using R = std::decay_t<decltype(ring)>;
        try {
          auto alg = liealg::burde_family(ring, liealg::LambdaParams<R>::from_ints(ring, arr));
          if (!burde_out->empty()) io::save_text(*burde_out, io::lie_to_json(alg).dump(2) + "\n");
          return check_algebra(alg);
        } catch (const liealg::BurdeConstraintError& e) {
          return Report{kRefuted, std::string("constraint violated: ") + liealg::constraint_name(e.constraint()),
                        json{{"valid", false}, {"violated", liealg::constraint_name(e.constraint())}}};
        }
      };
      if (*burde_p != 0) return build(exactalg::PrimeField(*burde_p));
      return build(exactalg::IntegerRing{});
    };
  });

  auto esrc = std::make_shared<LieSource>();
  auto out = std::make_shared<std::string>();
  auto* exp = lie->add_subcommand("export", "Write an algebra (with its presentation) as JSON");
  esrc->add_options(exp);
  exp->add_option("-o,--output", *out, "Output file (stdout if omitted)");
  exp->callback([=, &run] {
    run = [=] {
      json j = std::visit([](const auto& f) { return io::lie_to_json(f.algebra, f.generators, f.rules); }, esrc->load());
      Report r{kOk, j.dump(2), j};
      if (!out->empty()) {
        io::save_text(*out, j.dump(2) + "\n");
        r.text = "wrote " + *out;
      }
      return r;
    };
  });
}

}  // namespace iyb::cli
