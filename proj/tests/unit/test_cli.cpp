#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run iyb(const std::string& args) {
  std::string cmd = std::string(IYB_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& text, const std::string& pattern) {
  return std::regex_search(text, std::regex(pattern));
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "iyb_cli_test";
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const std::string kWitness = IYB_DATA_DIR "/witness_p11.json";

}  // namespace

TEST_CASE("lie commands") {
  auto r = iyb("lie check --builtin paper-L --p 11");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "valid; class 9; center dim 1"));
  CHECK(iyb("lie check --builtin paper-L").code == 0);
  auto bad = iyb("lie burde --lambda 0,1,0,0,0,0,-1,-2,-25,0,3,-2,1");
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "lambda1 != 0"));
  auto out = scratch() / "heis.json";
  CHECK(iyb("lie export --builtin heisenberg -o " + out.string()).code == 0);
  CHECK(contains(iyb("lie check --lie " + out.string()).out, "class 2"));
}

TEST_CASE("witness verification") {
  auto r = iyb("repr verify --builtin paper-L --witness " + kWitness);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "morphism: yes; injective: yes"));
  CHECK(contains(r.out, "relations satisfied: 37 of 37"));
  auto j = nlohmann::json::parse(iyb("--json repr verify --builtin paper-L --witness " + kWitness).out);
  CHECK(j["exit_code"] == 0);

  auto w = nlohmann::json::parse(std::ifstream(kWitness));
  w["p"] = 23;
  auto p23 = scratch() / "w23.json";
  write(p23, w.dump());
  auto r23 = iyb("repr verify --builtin paper-L --witness " + p23.string());
  CHECK(r23.code == 1);
  CHECK(contains(r23.out, "morphism: no"));
}

TEST_CASE("certificate verification") {
  auto dir = scratch();
  write(dir / "sys.json", R"({"ring": "Z", "vars": ["y"], "polys": [
      [{"coeff": "1", "exps": [[0, 1]]}],
      [{"coeff": "1", "exps": []}, {"coeff": "-1", "exps": [[0, 1]]}]]})");
  write(dir / "good.json", R"({"k": "1", "cofactors": [[{"coeff": "1", "exps": []}], [{"coeff": "1", "exps": []}]]})");
  write(dir / "bad.json", R"({"k": "1", "cofactors": [[{"coeff": "2", "exps": []}], [{"coeff": "1", "exps": []}]]})");
  auto sys = (dir / "sys.json").string();
  auto good = iyb("cert verify --system " + sys + " --cert " + (dir / "good.json").string() + " --p 5");
  CHECK(good.code == 0);
  CHECK(contains(good.out, "certified unsolvable"));
  auto bad = iyb("cert verify --system " + sys + " --cert " + (dir / "bad.json").string() + " --p 5");
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "identity check failed"));
}

TEST_CASE("Groebner command exit codes") {
  auto dir = scratch();
  write(dir / "incons.json", R"({"ring": {"Fp": 5}, "vars": ["x"], "polys": [
      [{"coeff": "1", "exps": [[0, 1]]}],
      [{"coeff": "1", "exps": [[0, 1]]}, {"coeff": "1", "exps": []}]]})");
  auto r = iyb("gb solve --system " + (dir / "incons.json").string());
  CHECK(r.code == 1);
  auto sys = dir / "L.json";
  REQUIRE(iyb("repr gen --builtin paper-L --target 11 --rabinowitsch -o " + sys.string()).code == 0);
  auto budget = iyb("gb solve --system " + sys.string() + " --p 23");
  CHECK(budget.code == 2);
  CHECK(contains(budget.out, "budget exceeded"));
}

TEST_CASE("input errors exit with code 3") {
  auto dir = scratch();
  write(dir / "broken.json", "{\n  \"p\": 11,\n  \"n\": 11,\n  \"E0\": [\n}\n");
  auto r = iyb("repr verify --builtin paper-L --witness " + (dir / "broken.json").string());
  CHECK(r.code == 3);
  CHECK(contains(r.out, "line 5"));
  CHECK(iyb("lie check --no-such-flag").code == 3);
  CHECK(iyb("brace enum --additive 2,x").code == 3);
  CHECK(iyb("repr verify --builtin paper-L --witness /does/not/exist.json").code == 3);
}

TEST_CASE("brace and lazard commands") {
  auto dir = scratch();
  auto first = iyb("brace enum --additive 2,4");
  CHECK(first.code == 0);
  CHECK(first.out == iyb("brace enum --additive 2,4").out);
  CHECK(first.out == iyb("brace enum --additive 2,4 --serial").out);
  CHECK(contains(first.out, "28"));
  CHECK(contains(first.out, "14"));
  auto rad = dir / "rad.json";
  REQUIRE(iyb("brace export --radical 3 -o " + rad.string()).code == 0);
  auto orders = iyb("brace check-orders --file " + rad.string());
  CHECK(orders.code == 0);
  CHECK(contains(orders.out, "hypothesis m\\+2 <= p: fails"));
  CHECK(iyb("brace gamma --file " + rad.string()).code == 0);

  auto refused = iyb("lazard product --builtin paper-L --p 7 --x 1,0,0,0,0,0,0,0,0,0 --y 0,1,0,0,0,0,0,0,0,0");
  CHECK(refused.code == 1);
  CHECK(contains(refused.out, "refused"));
  auto order = iyb("lazard order --builtin paper-L --p 11 --x 1,2,3,4,5,6,7,8,9,10");
  CHECK(order.code == 0);
  CHECK(contains(order.out, "11"));
  CHECK(contains(iyb("lazard bch --degree 2").out, "x \\+ y \\+ 1/2\\*\\[x,y\\]"));
}

TEST_CASE("property commands are reproducible") {
  auto a = iyb("--seed 7 prop assoc --p 11 --samples 20");
  CHECK(a.code == 0);
  CHECK(a.out == iyb("--seed 7 prop assoc --p 11 --samples 20").out);
  CHECK(iyb("prop unipotent --p 11 --size 11 --samples 20").code == 0);
  CHECK(iyb("prop gb-oracle --systems 10").code == 0);
}
