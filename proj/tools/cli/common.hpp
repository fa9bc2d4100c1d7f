#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iyb/io/json_io.hpp"
#include "iyb/liealg/burde.hpp"

namespace iyb::cli {

using io::json;

enum ExitCode : int { kOk = 0, kRefuted = 1, kBudget = 2, kInputError = 3 };

struct Globals {
  bool json = false;
  std::uint64_t seed = 20240611;
  std::size_t budget = 20'000;
  int threads = 0;
};

/// What a command hands back: exit code plus both renderings.
struct Report {
  int code = kOk;
  std::string text;
  json data = json::object();
};

/// --builtin NAME | --lie FILE, optionally reduced mod --p.
struct LieSource {
  std::string builtin;
  std::string file;
  std::uint64_t p = 0;

  void add_options(CLI::App* cmd, bool require_p = false);
  /// Over Z unless p is set or the file is over F_p.
  io::AnyLieFile load() const;
  /// Always over F_p; p comes from --p, from the file, or from `fallback`.
  io::LieFile<exactalg::PrimeField> load_mod_p(std::uint64_t fallback = 0) const;
};

std::vector<long long> parse_int_list(const std::string& s, const std::string& what);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

/// Registration hooks; each adds its subcommands and sets `run`.
using Runner = std::function<Report()>;
void register_lie(CLI::App& app, const Globals& g, Runner& run);
void register_brace(CLI::App& app, const Globals& g, Runner& run);
void register_lazard(CLI::App& app, const Globals& g, Runner& run);
void register_repr(CLI::App& app, const Globals& g, Runner& run);
void register_prop(CLI::App& app, const Globals& g, Runner& run);

}  // namespace iyb::cli
