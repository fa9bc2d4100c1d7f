#include "common.hpp"

#include <sstream>

namespace iyb::cli {

void LieSource::add_options(CLI::App* cmd, bool require_p) {
  auto* b = cmd->add_option("--builtin", builtin, "Named algebra: paper-L, heisenberg, filiform4");
  auto* f = cmd->add_option("--lie", file, "Lie algebra JSON file");
  b->excludes(f);
  auto* p_opt = cmd->add_option("--p", p, "Reduce coefficients modulo this prime");
  if (require_p) p_opt->required();
}

namespace {

template <class R>
io::LieFile<R> builtin_over(const std::string& name, const R& ring) {
  liealg::PresentedLieAlgebra<R> pres = [&] {
    if (name == "paper-L") return liealg::paper_L(ring);
    if (name == "heisenberg") return liealg::heisenberg(ring);
    if (name == "filiform4") return liealg::filiform4(ring);
    throw InputError("--builtin: unknown algebra '" + name + "' (paper-L, heisenberg, filiform4)");
  }();
  return {pres.base(), pres.generators(), pres.rules()};
}

}  // namespace

io::AnyLieFile LieSource::load() const {
  if (builtin.empty() && file.empty()) throw InputError("give --builtin NAME or --lie FILE");
  io::AnyLieFile base = builtin.empty() ? io::parse_lie(io::load_json(file))
                                        : io::AnyLieFile(builtin_over(builtin, exactalg::IntegerRing{}));
  if (p == 0) return base;
  return io::AnyLieFile(load_mod_p());
}

io::LieFile<exactalg::PrimeField> LieSource::load_mod_p(std::uint64_t fallback) const {
  if (builtin.empty() && file.empty()) throw InputError("give --builtin NAME or --lie FILE");
  std::uint64_t q = p != 0 ? p : fallback;
  if (q != 0 && !exactalg::is_prime(q)) throw InputError("--p: " + std::to_string(q) + " is not prime");
  if (!builtin.empty()) {
    if (q == 0) throw InputError("--p is required");
    return builtin_over(builtin, exactalg::PrimeField(q));
  }
  auto loaded = io::parse_lie(io::load_json(file));
  if (auto* z = std::get_if<io::LieFile<exactalg::IntegerRing>>(&loaded)) {
    if (q == 0) throw InputError("algebra is over Z; give --p");
    exactalg::PrimeField f(q);
    return {liealg::change_ring(z->algebra, f), z->generators, z->rules};
  }
  auto& fp = std::get<io::LieFile<exactalg::PrimeField>>(loaded);
  if (q != 0 && q != fp.algebra.ring().p()) throw InputError("--p differs from the field of " + file);
  return fp;
}

std::vector<long long> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(what + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw InputError(what + ": empty list");
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

}  // namespace iyb::cli
