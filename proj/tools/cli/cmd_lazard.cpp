#include <memory>
#include <sstream>

#include "common.hpp"
#include "iyb/lazard/exp_group.hpp"

namespace iyb::cli {

namespace {

lazard::ExpGroup::Vec parse_vector(const std::string& s, const exactalg::PrimeField& f, std::size_t dim,
                                   const std::string& what) {
  auto vals = parse_int_list(s, what);
  if (vals.size() != dim) {
    throw InputError(what + ": expected " + std::to_string(dim) + " coordinates, got " + std::to_string(vals.size()));
  }
  lazard::ExpGroup::Vec v;
  for (auto x : vals) v.push_back(f.from_int(x));
  return v;
}

/// The refusal for class >= p is a verdict about the input, reported as exit 1.
template <class F>
Report guarded(F&& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    return Report{kRefuted, std::string("refused: ") + e.what(), json{{"refused", e.what()}}};
  }
}

}  // namespace

void register_lazard(CLI::App& app, const Globals& g, Runner& run) {
  (void)g;
  auto* lz = app.add_subcommand("lazard", "BCH products on nilpotent Lie algebras over F_p");
  lz->require_subcommand(1);

  struct Args {
    LieSource src;
    std::string x, y;
  };
  auto pa = std::make_shared<Args>();
  auto* prod = lz->add_subcommand("product", "x * y = log(exp(x) exp(y))");
  pa->src.add_options(prod);
  prod->add_option("--x", pa->x, "Coordinates of x, comma separated")->required();
  prod->add_option("--y", pa->y, "Coordinates of y, comma separated")->required();
  prod->callback([pa, &run] {
    run = [pa] {
      auto lf = pa->src.load_mod_p();
      const auto& f = lf.algebra.ring();
      auto x = parse_vector(pa->x, f, lf.algebra.dim(), "--x");
      auto y = parse_vector(pa->y, f, lf.algebra.dim(), "--y");
      return guarded([&] {
        lazard::ExpGroup grp(lf.algebra);
        auto z = grp.product(x, y);
        return Report{kOk, join_numbers(z), json{{"class", grp.nilpotency_class()}, {"product", z}}};
      });
    };
  });

  auto oa = std::make_shared<Args>();
  auto* ord = lz->add_subcommand("order", "Multiplicative order of x in exp(L)");
  oa->src.add_options(ord);
  ord->add_option("--x", oa->x, "Coordinates of x, comma separated")->required();
  ord->callback([oa, &run] {
    run = [oa] {
      auto lf = oa->src.load_mod_p();
      const auto& f = lf.algebra.ring();
      auto x = parse_vector(oa->x, f, lf.algebra.dim(), "--x");
      return guarded([&] {
        lazard::ExpGroup grp(lf.algebra);
        auto mo = grp.order(x);
        auto ao = lazard::additive_order(f, x);
        std::ostringstream os;
        os << "multiplicative order " << mo << "; additive order " << ao << (mo == ao ? "; equal" : "; DIFFERENT");
        return Report{mo == ao ? kOk : kRefuted, os.str(),
                      json{{"multiplicative_order", mo}, {"additive_order", ao}, {"equal", mo == ao}}};
      });
    };
  });

  auto degree = std::make_shared<unsigned>(3);
  auto* bch = lz->add_subcommand("bch", "Print the BCH series in the Lyndon basis");
  bch->add_option("--degree", *degree, "Truncation degree (1..12)")->capture_default_str();
  bch->callback([degree, &run] {
    run = [degree] {
      if (*degree < 1 || *degree > lazard::kMaxBchDegree) throw InputError("--degree must be in 1..12");
      const auto& s = lazard::bch_symbolic(*degree);
      json terms = json::array();
      for (const auto& t : s.terms) {
        terms.push_back(json{{"word", t.word}, {"bracket", t.bracket()}, {"coeff", t.coeff.get_str()}});
      }
      return Report{kOk, s.to_string(), json{{"degree", *degree}, {"terms", terms}}};
    };
  });
}

}  // namespace iyb::cli
