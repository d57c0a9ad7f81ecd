// Command-line front end: solve | oracle | gen | bench.
//
// Exit codes: 0 success, 2 malformed input, 3 guard violations.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssr/core.hpp"
#include "ssr/driver.hpp"
#include "ssr/gen.hpp"
#include "ssr/oracle.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;

int exit_code_for(const ssr::Error& e) {
  switch (e.code()) {
    case ssr::Errc::size_guard:
    case ssr::Errc::capacity_guard:
    case ssr::Errc::too_large:
      return kExitGuard;
    default:
      return kExitBadInput;
  }
}

// One positive decimal integer per line; blank lines and '#' comments allowed.
std::vector<ssr::BigInt> read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ssr::Error(ssr::Errc::empty_input, "cannot open input file: " + path);
  std::vector<ssr::BigInt> values;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::string token = line.substr(start);
    bool ok = !token.empty();
    for (std::size_t i = 0; i < token.size(); ++i) {
      char c = token[i];
      if (!((c >= '0' && c <= '9') || (i == 0 && c == '-'))) { ok = false; break; }
    }
    if (!ok)
      throw ssr::Error(ssr::Errc::non_positive_element, "malformed integer line: '" + line + "'");
    values.emplace_back(token);
  }
  return values;
}

ssr::PartitionStrategy parse_strategy(const std::string& name) {
  if (name == "mim") return ssr::PartitionStrategy::meet_in_middle;
  if (name == "dp") return ssr::PartitionStrategy::dynamic_programming;
  if (name == "trim") return ssr::PartitionStrategy::trim_approx;
  throw ssr::Error(ssr::Errc::bad_epsilon, "unknown strategy '" + name + "' (mim|dp|trim)");
}

ssr::PartitionLimits limits_from_env() {
  ssr::PartitionLimits limits;
  if (const char* cap = std::getenv("SSR_MIM_CAP")) {
    limits.mim_size_cap = static_cast<std::size_t>(std::strtoull(cap, nullptr, 10));
  }
  return limits;
}

json subset_to_json(const ssr::Instance& inst, const ssr::SubsetSel& s) {
  json idx = json::array(), vals = json::array();
  for (std::size_t i : s.indices) {
    idx.push_back(i);
    vals.push_back(inst.at(i).str());
  }
  return json{{"indices", idx}, {"values", vals}};
}

std::string subset_values_str(const ssr::Instance& inst, const ssr::SubsetSel& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < s.indices.size(); ++k) {
    if (k) os << ", ";
    os << inst.at(s.indices[k]);
  }
  os << "}";
  return os.str();
}

std::string subset_indices_str(const ssr::SubsetSel& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < s.indices.size(); ++k) {
    if (k) os << ", ";
    os << s.indices[k];
  }
  os << "]";
  return os.str();
}

void print_solve_report(const ssr::Instance& inst, const ssr::Epsilon& eps,
                        const std::string& strategy_name, const ssr::CandidateSolution& sol,
                        double elapsed_ms, const std::string& format) {
  ssr::Epsilon eps_prime = ssr::derived_epsilon_prime(eps);
  if (format == "json") {
    json j;
    j["n"] = inst.n();
    j["epsilon"] = eps.str();
    j["epsilon_prime"] = eps_prime.str();
    j["strategy"] = strategy_name;
    j["ratio"] = json{{"num", sol.ratio.num.str()}, {"den", sol.ratio.den.str()}};
    j["ratio_approx"] = ssr::ratio_decimal(sol.ratio);
    json s1 = subset_to_json(inst, sol.set1), s2 = subset_to_json(inst, sol.set2);
    j["set1_indices"] = s1["indices"];
    j["set2_indices"] = s2["indices"];
    j["set1_values"] = s1["values"];
    j["set2_values"] = s2["values"];
    j["elapsed_ms"] = elapsed_ms;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "n:        " << inst.n() << "\n"
            << "epsilon:  " << eps.str() << "  (epsilon' = " << eps_prime.str() << ")\n"
            << "strategy: " << strategy_name << "\n"
            << "ratio:    " << sol.ratio.str() << "  ~= " << ssr::ratio_decimal(sol.ratio) << "\n"
            << "set1:     " << subset_values_str(inst, sol.set1) << "  indices "
            << subset_indices_str(sol.set1) << "\n"
            << "set2:     " << subset_values_str(inst, sol.set2) << "  indices "
            << subset_indices_str(sol.set2) << "\n"
            << "elapsed:  " << elapsed_ms << " ms\n";
}

int cmd_solve(const std::string& input, const std::string& eps_text,
              const std::string& strategy_name, const std::string& format) {
  std::vector<ssr::BigInt> raw = read_instance_file(input);
  ssr::Epsilon eps = ssr::Epsilon::parse(eps_text);
  ssr::PartitionStrategy strategy = parse_strategy(strategy_name);
  ssr::PartitionLimits limits = limits_from_env();

  auto t0 = std::chrono::steady_clock::now();
  ssr::ValidateResult vr = ssr::validate_instance(raw);
  if (auto* dup = std::get_if<ssr::DuplicatePair>(&vr)) {
    // Two equal values: the pair of singletons is an exact ratio-1 solution.
    std::vector<ssr::BigInt> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end());
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (format == "json") {
      json j;
      j["n"] = raw.size();
      j["epsilon"] = eps.str();
      j["epsilon_prime"] = ssr::derived_epsilon_prime(eps).str();
      j["strategy"] = strategy_name;
      j["ratio"] = json{{"num", dup->value.str()}, {"den", dup->value.str()}};
      j["ratio_approx"] = "1.000000";
      j["set1_indices"] = json::array({dup->first_pos});
      j["set2_indices"] = json::array({dup->second_pos});
      j["set1_values"] = json::array({dup->value.str()});
      j["set2_values"] = json::array({dup->value.str()});
      j["elapsed_ms"] = ms;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "duplicate value " << dup->value
                << ": two equal singletons give ratio exactly 1\n"
                << "ratio:    " << dup->value << "/" << dup->value << "  ~= 1.000000\n"
                << "set1:     {" << dup->value << "}  indices [" << dup->first_pos << "]\n"
                << "set2:     {" << dup->value << "}  indices [" << dup->second_pos << "]\n";
    }
    return 0;
  }

  const ssr::Instance& inst = std::get<ssr::Instance>(vr);
  ssr::CandidateSolution sol = ssr::solve_ssr(inst, eps, strategy, limits);
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  print_solve_report(inst, eps, strategy_name, sol, ms, format);
  return 0;
}

int cmd_oracle(const std::string& input, bool require_max, const std::string& format) {
  std::vector<ssr::BigInt> raw = read_instance_file(input);
  ssr::ValidateResult vr = ssr::validate_instance(raw);
  if (auto* dup = std::get_if<ssr::DuplicatePair>(&vr)) {
    if (format == "json") {
      json j;
      j["ratio"] = json{{"num", dup->value.str()}, {"den", dup->value.str()}};
      j["ratio_approx"] = "1.000000";
      j["set1_indices"] = json::array({dup->first_pos});
      j["set2_indices"] = json::array({dup->second_pos});
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "r_opt: " << dup->value << "/" << dup->value << "  ~= 1.000000\n";
    }
    return 0;
  }
  const ssr::Instance& inst = std::get<ssr::Instance>(vr);
  ssr::OracleResult res = ssr::brute_force_ssr(inst, require_max);
  if (format == "json") {
    json j;
    j["ratio"] = json{{"num", res.ratio.num.str()}, {"den", res.ratio.den.str()}};
    j["ratio_approx"] = ssr::ratio_decimal(res.ratio);
    json s1 = subset_to_json(inst, res.witness.set1), s2 = subset_to_json(inst, res.witness.set2);
    j["set1_indices"] = s1["indices"];
    j["set2_indices"] = s2["indices"];
    j["set1_values"] = s1["values"];
    j["set2_values"] = s2["values"];
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "r_opt: " << res.ratio.str() << "  ~= " << ssr::ratio_decimal(res.ratio) << "\n"
              << "set1:  " << subset_values_str(inst, res.witness.set1) << "\n"
              << "set2:  " << subset_values_str(inst, res.witness.set2) << "\n";
  }
  return 0;
}

int cmd_gen(std::size_t n, std::uint64_t max_value, std::uint64_t seed,
            const std::string& output) {
  if (n < 2) throw ssr::Error(ssr::Errc::instance_too_small, "need n >= 2");
  if (max_value < n)
    throw ssr::Error(ssr::Errc::non_positive_element,
                     "max_value must be >= n for distinct values");
  std::vector<std::uint64_t> vals = ssr::generate_values(n, max_value, seed);
  std::ostringstream body;
  for (std::uint64_t v : vals) body << v << "\n";
  if (output.empty() || output == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw ssr::Error(ssr::Errc::empty_input, "cannot open output file: " + output);
    out << body.str();
  }
  return 0;
}

struct BenchRow {
  std::size_t n;
  std::string epsilon;
  std::string strategy;
  unsigned trial;
  std::uint64_t seed;
  double elapsed_ms = 0;
  std::string ratio_num, ratio_den;
  std::size_t large_count = 0;
  std::string bin_count;
  std::uint64_t partition_calls = 0;
  bool collision_exit = false;
  std::string error;
};

int cmd_bench(const std::vector<std::size_t>& sizes, const std::vector<std::string>& epsilons,
              const std::vector<std::string>& strategies, unsigned trials, std::uint64_t seed,
              std::uint64_t max_value, const std::string& output, const std::string& format) {
  for (const std::string& s : strategies) parse_strategy(s);  // validate upfront
  std::vector<ssr::Epsilon> eps_parsed;
  for (const std::string& e : epsilons) eps_parsed.push_back(ssr::Epsilon::parse(e));
  ssr::PartitionLimits limits = limits_from_env();

  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    for (std::size_t ei = 0; ei < epsilons.size(); ++ei) {
      for (const std::string& strat_name : strategies) {
        for (unsigned trial = 0; trial < trials; ++trial) {
          BenchRow row;
          row.n = n;
          row.epsilon = eps_parsed[ei].str();
          row.strategy = strat_name;
          row.trial = trial;
          row.seed = ssr::mix_seed(seed, n, trial);  // instance depends on (n, trial) only
          try {
            ssr::Instance inst = ssr::generate_instance(n, max_value, row.seed);
            ssr::SsrStats stats;
            auto t0 = std::chrono::steady_clock::now();
            ssr::CandidateSolution sol =
                ssr::solve_ssr(inst, eps_parsed[ei], parse_strategy(strat_name), limits, &stats);
            auto t1 = std::chrono::steady_clock::now();
            row.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            row.ratio_num = sol.ratio.num.str();
            row.ratio_den = sol.ratio.den.str();
            row.large_count = stats.large_count;
            row.bin_count = stats.bin_count.str();
            row.partition_calls = stats.partition_calls;
            row.collision_exit = stats.collision_exit;
          } catch (const ssr::Error& e) {
            row.error = e.what();
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }

  std::size_t failures = 0;
  double total_ms = 0;
  for (const BenchRow& r : rows) {
    if (!r.error.empty()) ++failures;
    total_ms += r.elapsed_ms;
  }

  std::ostringstream body;
  if (format == "json") {
    json out;
    out["rows"] = json::array();
    for (const BenchRow& r : rows) {
      out["rows"].push_back(json{{"n", r.n},
                                 {"epsilon", r.epsilon},
                                 {"strategy", r.strategy},
                                 {"trial", r.trial},
                                 {"seed", r.seed},
                                 {"elapsed_ms", r.elapsed_ms},
                                 {"ratio_num", r.ratio_num},
                                 {"ratio_den", r.ratio_den},
                                 {"large_count", r.large_count},
                                 {"bin_count", r.bin_count},
                                 {"partition_calls", r.partition_calls},
                                 {"collision_exit", r.collision_exit},
                                 {"error", r.error}});
    }
    out["summary"] = json{{"runs", rows.size()}, {"failures", failures},
                          {"total_elapsed_ms", total_ms}};
    body << out.dump(2) << "\n";
  } else {
    body << "n,epsilon,strategy,trial,seed,elapsed_ms,ratio_num,ratio_den,large_count,"
            "bin_count,partition_calls,collision_exit,error\n";
    for (const BenchRow& r : rows) {
      body << r.n << ',' << r.epsilon << ',' << r.strategy << ',' << r.trial << ',' << r.seed
           << ',' << r.elapsed_ms << ',' << r.ratio_num << ',' << r.ratio_den << ','
           << r.large_count << ',' << r.bin_count << ',' << r.partition_calls << ','
           << (r.collision_exit ? 1 : 0) << ',' << r.error << "\n";
    }
    body << "# runs=" << rows.size() << " failures=" << failures
         << " total_elapsed_ms=" << total_ms << "\n";
  }
  if (output.empty() || output == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw ssr::Error(ssr::Errc::empty_input, "cannot open output file: " + output);
    out << body.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset Sum Ratio approximation solver"};
  app.require_subcommand(1);

  std::string input, eps_text = "1/2", strategy = "trim", format = "text", output;
  bool require_max = false;
  std::size_t gen_n = 10;
  std::uint64_t max_value = 1000000000ULL, seed = 1;
  unsigned trials = 3;
  std::vector<std::size_t> sizes;
  std::vector<std::string> epsilons, strategies;

  CLI::App* solve = app.add_subcommand("solve", "Approximate subset sum ratio for an instance");
  solve->add_option("input", input, "instance file (one integer per line)")->required();
  solve->add_option("-e,--epsilon", eps_text, "error margin as p/q or decimal")->required();
  solve->add_option("-s,--strategy", strategy, "partition back-end: mim|dp|trim");
  solve->add_option("-f,--format", format, "text|json");

  CLI::App* oracle = app.add_subcommand("oracle", "Exact optimum by exhaustion (n <= 20)");
  oracle->add_option("input", input, "instance file")->required();
  oracle->add_flag("--require-max", require_max, "restrict to solutions containing max(A)");
  oracle->add_option("-f,--format", format, "text|json");

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("-n,--count", gen_n, "number of elements")->required();
  gen->add_option("-m,--max-value", max_value, "values drawn from [1, max]");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("-o,--output", output, "output file ('-' for stdout)");

  CLI::App* bench = app.add_subcommand("bench", "Benchmark over a size/epsilon/strategy grid");
  bench->add_option("--sizes", sizes, "instance sizes")->required();
  bench->add_option("--epsilons", epsilons, "error margins (p/q)")->required();
  bench->add_option("--strategies", strategies, "mim|dp|trim")->required();
  bench->add_option("--trials", trials, "trials per configuration");
  bench->add_option("--seed", seed, "master seed for the instance stream");
  bench->add_option("-m,--max-value", max_value, "values drawn from [1, max]");
  bench->add_option("-o,--output", output, "output file ('-' for stdout)");
  bench->add_option("-f,--format", format, "csv|json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(input, eps_text, strategy, format);
    if (*oracle) return cmd_oracle(input, require_max, format);
    if (*gen) return cmd_gen(gen_n, max_value, seed, output);
    if (*bench) return cmd_bench(sizes, epsilons, strategies, trials, seed, max_value,
                                 output, format);
  } catch (const ssr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
