#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "plectic/acceptance.hpp"
#include "plectic/random.hpp"
#include "plectic/scenario.hpp"

namespace fs = std::filesystem;
using namespace plectic;

namespace {

struct Settings {
  int jobs = 1;
  bool no_timing = false;
  std::string format = "text";
  std::uint64_t seed = seed_from_env();
};

// A scenario or the error that prevented building it; the error becomes a failed report.
struct Job {
  std::string label;
  std::function<Scenario()> load;
};

ScenarioReport run_job(const Job& job, const RunOptions& opt) {
  try {
    return run_scenario(job.load(), opt);
  } catch (const std::exception& e) {
    ScenarioReport r;
    r.scenario = job.label;
    r.checks.push_back({"load", false, e.what(), {}, 0});
    return r;
  }
}

std::vector<ScenarioReport> run_jobs(const std::vector<Job>& jobs, const Settings& s) {
  RunOptions opt;
  opt.seed = s.seed;
  opt.timing = !s.no_timing;
  std::vector<ScenarioReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = run_job(jobs[i], opt);
  };
  const int threads = std::max(1, std::min<int>(s.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Job file_job(const std::string& path) {
  return {path, [path] { return scenario_from_json(read_file(path)); }};
}

Job builtin_job(const std::string& name) {
  return {name, [name] { return builtin_scenario(name); }};
}

std::vector<Job> every_builtin() {
  std::vector<Job> jobs;
  for (const auto& n : list_builtins()) jobs.push_back(builtin_job(n));
  return jobs;
}

int emit(const std::vector<ScenarioReport>& reports, const Settings& s) {
  const bool timing = !s.no_timing;
  std::cout << (s.format == "json" ? report_json(reports, timing) : report_text(reports, timing));
  for (const auto& r : reports)
    if (!r.ok()) return 1;
  return 0;
}

int list() {
  for (const auto& n : list_builtins()) std::cout << n << "  " << builtin_scenario(n).summary << "\n";
  return 0;
}

int export_builtins(const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& n : list_builtins()) {
    const fs::path path = fs::path(dir) / (n + ".json");
    std::ofstream out(path, std::ios::binary);
    out << scenario_to_json(builtin_scenario(n));
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
    std::cout << path.string() << "\n";
  }
  return 0;
}

int all(const Settings& s) {
  int failed = 0;
  for (const auto& r : run_acceptance(s.seed)) {
    std::cout << format_criterion(r, !s.no_timing) << "\n" << std::flush;
    if (!r.passed()) ++failed;
  }
  auto reports = run_jobs(every_builtin(), s);
  int scenario_failures = 0;
  for (const auto& r : reports)
    if (!r.ok()) {
      ++scenario_failures;
      std::cout << report_text({r}, !s.no_timing);
    }
  std::cout << criterion_count() - failed << " of " << criterion_count() << " criteria pass; "
            << reports.size() - scenario_failures << " of " << reports.size() << " builtin scenarios pass\n";
  return failed == 0 && scenario_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of homotopy moment maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  std::string seed_text;
  app.add_option("-j,--jobs", s.jobs, "Scenarios to run in parallel")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", s.no_timing, "Omit timings so reports are byte-identical across runs");
  app.add_option("--seed", seed_text, "Seed for randomized checks (default: PLECTIC_SEED or built-in)");
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("-f,--format", s.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };

  std::vector<std::string> files, names;
  auto* check = app.add_subcommand("check", "Run scenario files");
  check->add_option("files", files, "Scenario JSON files")->required()->check(CLI::ExistingFile);
  add_format(check);
  auto* builtin = app.add_subcommand("builtin", "Run builtin scenarios by name");
  builtin->add_option("names", names, "Builtin names (see list)")->required();
  add_format(builtin);
  auto* report = app.add_subcommand("report", "Run every builtin scenario and print the report");
  add_format(report);
  app.add_subcommand("list", "List builtin scenarios");
  std::string dir;
  auto* exporter = app.add_subcommand("export", "Write every builtin as a scenario file");
  exporter->add_option("dir", dir, "Output directory")->required();
  auto* acceptance = app.add_subcommand("all", "Run the acceptance criteria and every builtin scenario");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!seed_text.empty()) s.seed = std::stoull(seed_text, nullptr, 0);
    if (*check) {
      std::vector<Job> jobs;
      for (const auto& f : files) jobs.push_back(file_job(f));
      return emit(run_jobs(jobs, s), s);
    }
    if (*builtin) {
      std::vector<Job> jobs;
      for (const auto& n : names) jobs.push_back(builtin_job(n));
      return emit(run_jobs(jobs, s), s);
    }
    if (*report) return emit(run_jobs(every_builtin(), s), s);
    if (*exporter) return export_builtins(dir);
    if (*acceptance) return all(s);
    return list();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
