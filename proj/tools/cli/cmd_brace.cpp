#include <memory>
#include <sstream>

#include "common.hpp"
#include "iyb/braces/order_checks.hpp"

namespace iyb::cli {

namespace {

Report brace_enum(const std::string& additive, const std::string& strategy, std::size_t bound, bool serial,
                  const std::string& out) {
  std::vector<std::uint32_t> orders;
  for (auto d : parse_int_list(additive, "--additive")) {
    if (d < 2 || d > 1'000'000) throw InputError("--additive: cyclic orders must be >= 2");
    orders.push_back(static_cast<std::uint32_t>(d));
  }
  braces::AbelianGroup group(orders);
  braces::EnumerationOptions opt;
  opt.hol_bound = bound;
  opt.parallel = !serial;
  if (strategy == "direct") {
    opt.strategy = braces::EnumerationStrategy::Direct;
  } else if (strategy == "sylow") {
    opt.strategy = braces::EnumerationStrategy::SylowConjugates;
  } else if (strategy != "auto") {
    throw InputError("--strategy: expected auto, direct or sylow");
  }
  auto subs = braces::enumerate_regular_subgroups(group, opt);
  auto orbits = braces::classify_up_to_aut(group, subs);
  json report = io::enumeration_report(group, subs, orbits);

  std::size_t equal = 0;
  for (const auto& e : report) equal += e["order_equality"].get<bool>() ? 1 : 0;
  Report r;
  r.data = json{{"additive", orders},
                {"hol_order", exactalg::Integer(braces::automorphism_count(group) * static_cast<unsigned long>(group.size())).get_str()},
                {"regular_subgroups", subs.size()},
                {"orbits", orbits.orbit_count()},
                {"order_equality_holds", equal}};
  std::ostringstream os;
  os << "A = Z/" << join_numbers(orders, " x Z/") << "\n"
     << "regular subgroups: " << subs.size() << "\n"
     << "braces up to isomorphism (Aut(A)-orbits): " << orbits.orbit_count() << "\n"
     << "order equality holds in " << equal << " of " << subs.size();
  r.text = os.str();
  if (!out.empty()) {
    io::save_text(out, report.dump(2) + "\n");
    r.text += "\nreport written to " + out;
  } else {
    r.data["subgroups"] = std::move(report);
  }
  return r;
}

Report check_orders(const std::string& file) {
  braces::Brace b = io::parse_brace(io::load_json(file));
  auto rep = braces::check_order_equality(b);
  Report r;
  json elems = json::array();
  std::ostringstream os;
  os << "x  o+(x)  o*(x)\n";
  for (braces::Element x = 0; x < b.order(); ++x) {
    elems.push_back(json{{"x", x}, {"additive", rep.additive_orders[x]}, {"multiplicative", rep.multiplicative_orders[x]}});
    os << x << "  " << rep.additive_orders[x] << "  " << rep.multiplicative_orders[x]
       << (rep.additive_orders[x] != rep.multiplicative_orders[x] ? "  differ" : "") << "\n";
  }
  const std::size_t m = rep.additive_exponents.size();
  os << "p = " << rep.prime << ", m = " << m << ", hypothesis m+2 <= p: " << (rep.hypothesis_holds ? "holds" : "fails")
     << "\n";
  os << "orders " << (rep.orders_equal ? "agree for every element" : "differ at element " + std::to_string(*rep.first_mismatch));
  if (rep.isomorphic_groups) {
    os << "\n(B,*) abelian; " << (*rep.isomorphic_groups ? "isomorphic to" : "not isomorphic to") << " (B,+)";
  }
  r.text = os.str();
  r.data = json{{"prime", rep.prime},
                {"additive_exponents", rep.additive_exponents},
                {"hypothesis_holds", rep.hypothesis_holds},
                {"orders_equal", rep.orders_equal},
                {"multiplicative_abelian", rep.multiplicative_abelian},
                {"elements", elems}};
  if (rep.isomorphic_groups) r.data["isomorphic_groups"] = *rep.isomorphic_groups;
  // Differing orders refute the equality only when the hypothesis holds.
  r.code = !rep.orders_equal && rep.hypothesis_holds ? kRefuted : kOk;
  return r;
}

Report gamma(const std::string& file, bool gl) {
  braces::Brace b = io::parse_brace(io::load_json(file));
  Report r;
  if (!braces::gamma_is_monomorphism(b)) {
    r.code = kRefuted;
    r.text = "gamma is not a monomorphism";
    r.data = json{{"monomorphism", false}};
    return r;
  }
  auto emb = braces::gamma_embed(b);
  std::vector<braces::HolElement> image = emb.images;
  bool regular = braces::is_regular(b.additive(), image);
  json images = json::array();
  std::ostringstream os;
  os << "gamma: (B,*) -> Hol(B,+) is an injective homomorphism; image regular: " << (regular ? "yes" : "no") << "\n";
  for (std::size_t g = 0; g < image.size(); ++g) {
    images.push_back(json{{"g", g}, {"v", image[g].v}, {"lambda", image[g].m}});
    os << "gamma(" << g << ") = (" << image[g].v << ", [" << join_numbers(image[g].m) << "])\n";
  }
  r.data = json{{"monomorphism", true}, {"image_regular", regular}, {"images", images}};

  if (gl) {
    auto type = braces::abelian_type(b.additive());
    const auto& part = type.parts.front();
    bool elementary = type.is_p_group() && std::all_of(part.exponents.begin(), part.exponents.end(), [](unsigned e) { return e == 1; });
    if (!elementary) throw InputError("--gl needs an elementary abelian additive group");
    // Coordinates: identify (B,+) with (Z/p)^m through an explicit isomorphism.
    braces::AbelianGroup coords(std::vector<std::uint32_t>(part.exponents.size(), static_cast<std::uint32_t>(part.prime)));
    auto iso = braces::isomorphism_to(b.additive(), coords);
    json mats = json::array();
    for (std::size_t g = 0; g < image.size(); ++g) {
      braces::HolElement h{iso[image[g].v], braces::compose(iso, braces::compose(image[g].m, braces::inverse(iso)))};
      mats.push_back(io::matrix_to_json(braces::hol_to_gl(coords, h)));
    }
    r.data["gl_images"] = std::move(mats);
    os << "GL_" << part.exponents.size() + 1 << "(F_" << part.prime << ") images included in --json output\n";
  }
  r.text = os.str();
  return r;
}

}  // namespace

void register_brace(CLI::App& app, const Globals& g, Runner& run) {
  (void)g;
  auto* brace = app.add_subcommand("brace", "Left braces and regular subgroups of holomorphs");
  brace->require_subcommand(1);

  struct EnumArgs {
    std::string additive, strategy = "auto", out;
    std::size_t bound = 100'000;
    bool serial = false;
  };
  auto ea = std::make_shared<EnumArgs>();
  auto* en = brace->add_subcommand("enum", "Enumerate and classify the regular subgroups of Hol(A)");
  en->add_option("--additive", ea->additive, "Cyclic orders of A, e.g. 2,2")->required();
  en->add_option("--strategy", ea->strategy, "auto, direct or sylow")->capture_default_str();
  en->add_option("--hol-bound", ea->bound, "Refuse when |Hol(A)| exceeds this")->capture_default_str();
  en->add_flag("--serial", ea->serial, "Use the single-threaded search");
  en->add_option("-o,--output", ea->out, "Write the per-subgroup report here");
  en->callback([ea, &run] { run = [ea] { return brace_enum(ea->additive, ea->strategy, ea->bound, ea->serial, ea->out); }; });

  auto file = std::make_shared<std::string>();
  auto* co = brace->add_subcommand("check-orders", "Compare additive and multiplicative orders of every element");
  co->add_option("--file", *file, "Brace JSON file")->required();
  co->callback([file, &run] { run = [file] { return check_orders(*file); }; });

  auto gfile = std::make_shared<std::string>();
  auto gl = std::make_shared<bool>(false);
  auto* ga = brace->add_subcommand("gamma", "Verify the embedding g -> (g, lambda_g) into the holomorph");
  ga->add_option("--file", *gfile, "Brace JSON file")->required();
  ga->add_flag("--gl", *gl, "Also give the block matrices in GL_{m+1}(F_p)");
  ga->callback([gfile, gl, &run] { run = [gfile, gl] { return gamma(*gfile, *gl); }; });

  struct ExportArgs {
    unsigned radical = 0;
    std::size_t trivial = 0;
    std::string out;
  };
  auto xa = std::make_shared<ExportArgs>();
  auto* ex = brace->add_subcommand("export", "Write a standard brace as JSON");
  auto* rad = ex->add_option("--radical", xa->radical, "The brace 2Z/2^kZ with a*b = a+b+ab");
  auto* tri = ex->add_option("--trivial", xa->trivial, "The trivial brace on Z/n");
  rad->excludes(tri);
  ex->add_option("-o,--output", xa->out, "Output file (stdout if omitted)");
  ex->callback([xa, &run] {
    run = [xa] {
      if (xa->radical == 0 && xa->trivial == 0) throw InputError("give --radical K or --trivial N");
      auto b = xa->radical != 0 ? braces::radical_ring_brace(xa->radical) : braces::trivial_brace(xa->trivial);
      json j = io::brace_to_json(b);
      Report r{kOk, j.dump(), j};
      if (!xa->out.empty()) {
        io::save_text(xa->out, j.dump() + "\n");
        r.text = "wrote " + xa->out;
      }
      return r;
    };
  });
}

}  // namespace iyb::cli
