// Exercises the installed CLI binary end to end through a shell.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ssr/core.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SSR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

fs::path write_instance(const std::string& name, const std::string& body) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("solve finds the perfect split and reports it in both formats") {
  auto p = write_instance("ssr_cli_358.txt", "3\n5\n8\n");
  auto text = run("solve " + p.string() + " --epsilon 1/2");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("ratio:    8/8") != std::string::npos);  // reported unreduced

  auto js = run("solve " + p.string() + " --epsilon 1/2 --format json");
  CHECK(js.exit_code == 0);
  json j = json::parse(js.out);
  CHECK(j["epsilon"] == "1/2");
  CHECK(j["epsilon_prime"] == "1/5");
  CHECK(j["ratio"]["num"] == j["ratio"]["den"]);
}

TEST_CASE("json solve report round-trips through recomputation") {
  auto p = write_instance("ssr_cli_127.txt", "1\n2\n7\n");
  auto js = run("solve " + p.string() + " --epsilon 1/10 --strategy mim --format json");
  REQUIRE(js.exit_code == 0);
  json j = json::parse(js.out);
  std::vector<ssr::BigInt> elems{1, 2, 7};
  ssr::BigInt s1 = 0, s2 = 0;
  for (auto& i : j["set1_indices"]) s1 += elems.at(i.get<std::size_t>());
  for (auto& i : j["set2_indices"]) s2 += elems.at(i.get<std::size_t>());
  ssr::RatioValue r = ssr::ratio_of(s1, s2);
  CHECK(r.num.str() == j["ratio"]["num"].get<std::string>());
  CHECK(r.den.str() == j["ratio"]["den"].get<std::string>());
  // guarantee vs oracle optimum 2: ratio <= 11/5
  CHECK(r.num * 5 <= r.den * 11);
}

TEST_CASE("text and json agree on the reported fraction") {
  auto p = write_instance("ssr_cli_agree.txt", "4\n9\n23\n61\n");
  auto text = run("solve " + p.string() + " --epsilon 1/4 --strategy trim");
  auto js = run("solve " + p.string() + " --epsilon 1/4 --strategy trim --format json");
  REQUIRE(text.exit_code == 0);
  REQUIRE(js.exit_code == 0);
  json j = json::parse(js.out);
  std::string frac = j["ratio"]["num"].get<std::string>() + "/" +
                     j["ratio"]["den"].get<std::string>();
  CHECK(text.out.find("ratio:    " + frac) != std::string::npos);
}

TEST_CASE("duplicates short-circuit to ratio 1") {
  auto p = write_instance("ssr_cli_dup.txt", "5\n5\n2\n");
  auto js = run("solve " + p.string() + " --epsilon 1/2 --format json");
  CHECK(js.exit_code == 0);
  json j = json::parse(js.out);
  CHECK(j["ratio"]["num"] == "5");
  CHECK(j["ratio"]["den"] == "5");
}

TEST_CASE("malformed input exits with code 2") {
  auto p = write_instance("ssr_cli_bad.txt", "4\n0\n");
  CHECK(run("solve " + p.string() + " --epsilon 1/2").exit_code == 2);
  auto q = write_instance("ssr_cli_junk.txt", "4\nxyz\n");
  CHECK(run("solve " + q.string() + " --epsilon 1/2").exit_code == 2);
  CHECK(run("solve " + p.string() + " --epsilon 5/2").exit_code == 2);
}

TEST_CASE("oracle subcommand with and without the max restriction") {
  auto p = write_instance("ssr_cli_oracle.txt", "1\n2\n7\n");
  auto r = run("oracle " + p.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("2/1") != std::string::npos);
  auto rm = run("oracle " + p.string() + " --require-max");
  CHECK(rm.out.find("7/3") != std::string::npos);

  std::string many;
  for (int i = 1; i <= 21; ++i) many += std::to_string(i) + "\n";
  auto big = write_instance("ssr_cli_big.txt", many);
  CHECK(run("oracle " + big.string()).exit_code == 3);
}

TEST_CASE("gen is deterministic and guarded") {
  fs::path a = fs::temp_directory_path() / "ssr_gen_a.txt";
  fs::path b = fs::temp_directory_path() / "ssr_gen_b.txt";
  CHECK(run("gen -n 5 -m 100 --seed 7 -o " + a.string()).exit_code == 0);
  CHECK(run("gen -n 5 -m 100 --seed 7 -o " + b.string()).exit_code == 0);
  std::ifstream fa(a), fb(b);
  std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
  std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
  CHECK(ca == cb);
  CHECK(!ca.empty());

  CHECK(run("gen -n 5 -m 3 --seed 1 -o " + a.string()).exit_code == 2);

  auto tiny = run("gen -n 2 -m 2 --seed 3");
  CHECK(tiny.exit_code == 0);
  CHECK(tiny.out == "1\n2\n");
}

TEST_CASE("bench emits one row per run plus a summary, reproducibly") {
  auto r = run("bench --sizes 8 12 --epsilons 1/4 --strategies trim mim --trials 2 --seed 9 "
               "-m 1000");
  REQUIRE(r.exit_code == 0);
  std::size_t rows = 0, comments = 0;
  std::string header;
  std::istringstream is(r.out);
  std::string line;
  std::string data;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') { ++comments; continue; }
    if (header.empty()) { header = line; continue; }
    ++rows;
    data += line + "\n";
  }
  CHECK(header ==
        "n,epsilon,strategy,trial,seed,elapsed_ms,ratio_num,ratio_den,large_count,"
        "bin_count,partition_calls,collision_exit,error");
  CHECK(rows == 2 * 1 * 2 * 2);
  CHECK(comments >= 1);

  // identical instance stream: seeds and ratios repeat, timings may differ
  auto r2 = run("bench --sizes 8 12 --epsilons 1/4 --strategies trim mim --trials 2 --seed 9 "
                "-m 1000");
  std::istringstream is2(r2.out);
  std::string data2;
  bool skipped_header = false;
  while (std::getline(is2, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!skipped_header) { skipped_header = true; continue; }
    data2 += line + "\n";
  }
  auto strip_timing = [](const std::string& csv) {
    std::string out;
    std::istringstream ss(csv);
    std::string l;
    while (std::getline(ss, l)) {
      // drop column 6 (elapsed_ms)
      std::vector<std::string> cols;
      std::istringstream ls(l);
      std::string c;
      while (std::getline(ls, c, ',')) cols.push_back(c);
      cols.erase(cols.begin() + 5);
      for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
      out += "\n";
    }
    return out;
  };
  CHECK(strip_timing(data) == strip_timing(data2));
}
