// ringmatch: construct, normalize, enumerate and verify rainbow matchings of
// circularly colored complete graphs, and build round-robin schedules.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringmatch/canon.hpp"
#include "ringmatch/constructions.hpp"
#include "ringmatch/family.hpp"
#include "ringmatch/io.hpp"
#include "ringmatch/matching.hpp"
#include "ringmatch/oracle.hpp"
#include "ringmatch/scheduler.hpp"

namespace {

using namespace ringmatch;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << data;
}

std::string dumped(const nlohmann::json& j) { return j.dump() + "\n"; }

Matching build_matching(const std::string& method, int n) {
  if (method == "kirkman") return kirkman(n);
  if (method == "t") return t_matching(n);
  if (method == "ars") return ars(n);
  throw std::invalid_argument("unknown method: " + method);
}

std::string rpm_kind(const Matching& m) {
  return m.n() % 2 == 0 ? "rainbow perfect matching"
                        : "rainbow near-perfect matching";
}

int run_generate(int n, const std::string& method, const std::string& out) {
  Matching m = build_matching(method, n);
  if (!is_rpm(m)) {
    std::cerr << "note: " << method << " matching on " << n
              << " vertices is not rainbow\n";
  }
  emit(dumped(nlohmann::json(m)), out);
  return kExitOk;
}

int run_normalize(const std::string& in, const std::string& out) {
  emit(dumped(nlohmann::json(normalize(load_matching(in)))), out);
  return kExitOk;
}

int run_verify(const std::string& in, bool cuttable) {
  Matching m = load_matching(in);
  if (auto why = rpm_failure(m)) {
    std::cerr << "not a rainbow matching: " << *why << "\n";
    return kExitVerifyFailed;
  }
  if (cuttable) {
    if (auto why = cuttable_failure(m)) {
      std::cerr << "not cuttable: " << *why << "\n";
      return kExitVerifyFailed;
    }
  }
  std::cerr << "ok: " << rpm_kind(m) << " on " << m.n() << " vertices"
            << (cuttable ? ", cuttable" : "") << "\n";
  return kExitOk;
}

int run_family(int n, bool count_only, const std::string& out) {
  RpmFamily fam = family(n);
  nlohmann::json j;
  if (count_only) {
    j = {{"n", fam.n}, {"count", fam.count()}};
  } else {
    j = fam;
  }
  emit(dumped(j), out);
  return kExitOk;
}

int run_enumerate(int n, bool do_census, std::optional<std::uint64_t> limit,
                  bool force, const std::string& out) {
  EnumerationOptions opts;
  opts.limit = limit;
  opts.force = force;
  if (do_census) {
    emit(dumped(nlohmann::json(census(n, opts))), out);
  } else {
    emit(dumped(nlohmann::json(enumerate_rpms(n, opts))), out);
  }
  return kExitOk;
}

int run_schedule(std::optional<int> teams, const std::string& method,
                 const std::string& in, const std::string& variant_name,
                 const std::string& out, std::string format) {
  Matching m;
  if (!in.empty()) {
    m = load_matching(in);
    if (teams && *teams != m.n() + 1) {
      throw std::invalid_argument(
          "--teams " + std::to_string(*teams) + " contradicts the input (" +
          std::to_string(m.n()) + " vertices schedule " +
          std::to_string(m.n() + 1) + " teams)");
    }
  } else {
    if (!teams) throw std::invalid_argument("need --teams or --in");
    if (method.empty()) {
      throw std::invalid_argument("need --method when constructing from --teams");
    }
    if (*teams < 2 || *teams % 2 != 0) {
      throw std::invalid_argument("--teams must be an even number >= 2");
    }
    m = build_matching(method, *teams - 1);
  }

  ScheduleVariant variant = variant_name == "reversed"
                                ? ScheduleVariant::reversed
                                : ScheduleVariant::direct;
  Schedule s = schedule_from_rpm(m, variant);
  if (!validate_schedule(s).empty()) {
    throw std::logic_error("generated schedule failed validation");
  }

  if (format.empty()) {
    if (out.ends_with(".json")) format = "json";
    else if (out.ends_with(".csv") || out.empty()) format = "csv";
    else throw std::invalid_argument(
        "cannot infer format from " + out + "; pass --format");
  }
  emit(format == "json" ? dumped(nlohmann::json(s)) : schedule_to_csv(s), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow matchings of circularly colored complete graphs and "
               "round-robin schedules built from them"};
  app.require_subcommand(1);

  int n = 0;
  std::string method;
  std::string in_path;
  std::string out_path;

  auto* gen = app.add_subcommand("generate", "construct a matching");
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--method", method, "kirkman, t or ars")
      ->required()
      ->check(CLI::IsMember({"kirkman", "t", "ars"}));
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* norm = app.add_subcommand("normalize", "canonical representative");
  norm->add_option("--in", in_path, "matching JSON file, - for stdin")
      ->required();
  norm->add_option("--out", out_path, "output file (default stdout)");

  bool check_cuttable = false;
  auto* verify = app.add_subcommand("verify", "check a matching file");
  verify->add_option("--in", in_path, "matching JSON file, - for stdin")
      ->required();
  verify->add_flag("--cuttable", check_cuttable, "also require cuttability");

  bool count_only = false;
  auto* fam = app.add_subcommand("family", "generated family of RPMs");
  fam->add_option("--n", n, "odd vertex count")->required();
  fam->add_flag("--count-only", count_only, "emit only the member count");
  fam->add_option("--out", out_path, "output file (default stdout)");

  bool do_census = false;
  bool force = false;
  std::optional<std::uint64_t> limit;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive RPM search");
  enumerate->add_option("--n", n, "vertex count")->required();
  enumerate->add_flag("--census", do_census, "group by equivalence class");
  enumerate->add_option("--limit", limit, "stop after this many matchings");
  enumerate->add_flag("--force", force, "lift the size guard");
  enumerate->add_option("--out", out_path, "output file (default stdout)");

  auto* cen = app.add_subcommand("census", "class census (enumerate --census)");
  cen->add_option("--n", n, "vertex count")->required();
  cen->add_option("--limit", limit, "stop after this many matchings");
  cen->add_flag("--force", force, "lift the size guard");
  cen->add_option("--out", out_path, "output file (default stdout)");

  std::optional<int> teams;
  std::string variant_name = "direct";
  std::string format;
  auto* sched = app.add_subcommand("schedule", "round-robin schedule");
  sched->add_option("--teams", teams, "even team count");
  sched->add_option("--method", method, "kirkman, t or ars")
      ->check(CLI::IsMember({"kirkman", "t", "ars"}));
  sched->add_option("--in", in_path, "matching JSON file, - for stdin");
  sched->add_option("--variant", variant_name, "direct or reversed")
      ->check(CLI::IsMember({"direct", "reversed"}));
  sched->add_option("--out", out_path, "output file (.csv or .json)");
  sched->add_option("--format", format, "csv or json (default csv on stdout)")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_generate(n, method, out_path);
    if (norm->parsed()) return run_normalize(in_path, out_path);
    if (verify->parsed()) return run_verify(in_path, check_cuttable);
    if (fam->parsed()) return run_family(n, count_only, out_path);
    if (enumerate->parsed())
      return run_enumerate(n, do_census, limit, force, out_path);
    if (cen->parsed()) return run_enumerate(n, true, limit, force, out_path);
    if (sched->parsed())
      return run_schedule(teams, method, in_path, variant_name, out_path,
                          format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
