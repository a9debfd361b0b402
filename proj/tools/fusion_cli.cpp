// fusion: build, inspect and verify fusion systems of small finite groups.
//
// Exit codes: 0 success (verify: every check passed), 1 a check failed or an
// internal-consistency alarm fired, 2 bad input or usage.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fusion/fusion.hpp"

namespace fs = std::filesystem;
using namespace fusion;

namespace {

struct Common {
  std::size_t prime = 0;
  std::size_t order_cap = Limits{}.group_order_cap;
  std::size_t lattice_cap = Limits{}.lattice_cap;

  Limits limits() const { return {order_cap, lattice_cap}; }
};

void add_common(CLI::App *cmd, Common &c)
{
  cmd->add_option("-p,--prime", c.prime, "prime (default: first prime listed in the group file)");
  cmd->add_option("--group-order-cap", c.order_cap, "largest group order accepted")->capture_default_str();
  cmd->add_option("--lattice-cap", c.lattice_cap, "largest subgroup lattice enumerated")->capture_default_str();
}

/// `corpus` names the bundled corpus when no such path exists here.
fs::path resolve(const std::string &arg)
{
  fs::path p(arg);
  if (fs::exists(p))
    return p;
#ifdef FUSION_CORPUS_DIR
  fs::path bundled(FUSION_CORPUS_DIR);
  if (arg == "corpus")
    return bundled;
  if (fs::exists(bundled / p))
    return bundled / p;
  if (fs::exists(bundled / (arg + ".json")))
    return bundled / (arg + ".json");
#endif
  throw Error(ErrorCode::ParseError, "no such file: " + arg);
}

/// Errors in user-supplied specs are input errors, whatever code the parser
/// raised (order:k with no such subgroup comes back as NotFound).
template <class Fn> auto from_input(Fn &&fn)
{
  try {
    return fn();
  } catch (const Error &e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
}

FusionSystem normal_from_options(const LoadedSystem &ls, const std::string &spec, std::size_t order,
                                 std::optional<std::size_t> index)
{
  std::string s = spec;
  if (s.empty()) {
    s = "order:" + std::to_string(order);
    if (index)
      s += "#" + std::to_string(*index);
  }
  auto N = from_input([&] { return parse_subgroup(ls.group, s, ls.system.prime()); });
  return normal_subsystem_from_group(ls.system, N);
}

void print_system(std::ostream &out, const std::string &label, const FusionSystem &F)
{
  const auto &U = F.universe();
  out << label << ": over " << U.describe(F.support()) << ", " << F.morphism_count() << " morphisms, "
      << generator_record(F).classes.size() << " classes of subgroups\n";
}

int cmd_build(const std::string &group, const std::string &out_path, const Common &c)
{
  auto g = load_group(resolve(group), c.limits());
  std::size_t p = c.prime ? c.prime : (g.primes.empty() ? 0 : g.primes.front());
  if (!p)
    throw Error(ErrorCode::ParseError, "no prime given and the group file lists none");
  auto F = fusion_of_group(Universe::create(g.group, p, c.limits()));
  auto out = out_path.empty() ? fs::path(group).stem().string() + ".fsk" : out_path;
  std::ofstream file(out);
  if (!(file << save_system(g, F).dump(2) << "\n"))
    throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
  std::cout << g.name << " (order " << g.group->order() << ") at p = " << p << "\n";
  print_system(std::cout, "F_S(G)", F);
  std::cout << "saved to " << out << "\n";
  return 0;
}

int cmd_centralizer(const std::string &sys, const std::string &spec, std::size_t order,
                    std::optional<std::size_t> index, const Common &c)
{
  auto ls = load_any(resolve(sys), c.prime, c.limits());
  const auto &F = ls.system;
  const auto &U = F.universe();
  auto E = normal_from_options(ls, spec, order, index);
  auto data = centralizer_data(F, E);
  print_system(std::cout, "F", F);
  print_system(std::cout, "E", E);
  std::cout << "X: " << data.xset.size() << " subgroups of C_S(T) = " << U.describe(U.centralizer(E.support()))
            << "\n";
  for (auto X : data.xset)
    std::cout << "  " << U.describe(X) << "\n";
  std::cout << "C_S(E) = " << U.describe(data.c_s_e) << "\n";
  if (data.r_star)
    std::cout << "R* = " << U.describe(data.r_star->r_star) << " (model of order " << data.r_star->model.group->order()
              << ")\n";
  std::cout << "R* by definition = " << U.describe(r_star_by_definition(F, E)) << "\n";
  print_system(std::cout, "C_F(E)", data.c_f_e);
  return 0;
}

int cmd_product(const std::string &sys, const std::string &f1, const std::string &f2, const Common &c)
{
  auto ls = load_any(resolve(sys), c.prime, c.limits());
  const auto &F = ls.system;
  const auto &U = F.universe();
  auto E1 = normal_from_options(ls, f1, 0, {});
  auto E2 = normal_from_options(ls, f2, 0, {});
  print_system(std::cout, "F1", E1);
  print_system(std::cout, "F2", E2);
  std::cout << "[S1,S2] = " << U.describe(U.commutator(E1.support(), E2.support())) << "\n";
  bool ce = centralize_each_other(F, E1, E2);
  std::cout << "centralize each other: " << (ce ? "yes" : "no") << "\n";
  auto D = central_product_candidate(F, E1, E2);
  print_system(std::cout, "F1*F2", D);
  auto cp = is_central_product(D, E1, E2);
  std::cout << "central product: " << (cp ? "yes" : "no: " + cp.counterexample) << "\n";
  if (ce) {
    std::cout << "saturated: " << (is_saturated(D) ? "yes" : "no") << "\n";
    std::cout << "normal in F: " << (is_normal_subsystem(F, D) ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_alperin(const std::string &sys, const std::string &spec, const Common &c)
{
  auto ls = load_any(resolve(sys), c.prime, c.limits());
  const auto &F = ls.system;
  const auto &U = F.universe();
  auto phi = from_input([&] { return parse_morphism(ls.group, U, spec); });
  auto steps = alperin_decompose(F, phi);
  std::cout << "phi = " << format_morphism(U, phi) << "\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto &s = steps[i];
    std::cout << "  " << i + 1 << ". R = " << U.describe(s.R) << ": " << U.describe(s.from) << " -> "
              << U.describe(s.to) << " by " << format_morphism(U, s.automorphism) << "\n";
  }
  bool ok = recompose(U, phi.dom, steps) == phi;
  std::cout << "recomposes to phi: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

std::set<std::string> select_checks(const std::vector<std::string> &asked)
{
  std::set<std::string> out;
  for (auto &a : asked) {
    if (a == "all")
      return {};
    bool hit = false;
    for (auto &id : check_ids())
      if (id == a || id.rfind(a + ".", 0) == 0) {
        out.insert(id);
        hit = true;
      }
    if (!hit)
      throw Error(ErrorCode::InvalidArgument, "unknown check " + a);
  }
  return out;
}

int cmd_verify(const std::string &target, const std::vector<std::string> &checks, const std::string &json_path,
               bool timings, std::size_t jobs, const Common &c)
{
  SuiteOptions opts;
  opts.checks = select_checks(checks);
  opts.timings = timings;
  opts.limits = c.limits();

  struct Job {
    GroupFile group;
    std::size_t prime = 0;
    std::optional<FusionSystem> system;
  };
  std::vector<Job> todo;
  auto path = resolve(target);
  if (fs::is_directory(path)) {
    for (auto &g : load_corpus(path, opts.limits))
      for (auto p : g.primes)
        if (!c.prime || p == c.prime)
          todo.push_back({g, p, {}});
  } else {
    auto ls = load_any(path, c.prime, opts.limits);
    todo.push_back({ls.group, ls.system.prime(), ls.system});
  }

  std::vector<EntryReport> reports(todo.size());
  std::vector<std::string> errors(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) {
      try {
        reports[i] = todo[i].system ? run_suite(todo[i].group, *todo[i].system, opts)
                                    : run_suite(todo[i].group, todo[i].prime, opts);
      } catch (const std::exception &e) {
        reports[i].entry = todo[i].group.name + "@" + std::to_string(todo[i].prime);
        reports[i].prime = todo[i].prime;
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  std::size_t failed = 0, total = 0;
  nlohmann::json all = nlohmann::json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    auto &r = reports[i];
    if (!errors[i].empty()) {
      r.checks.push_back({"Setup", "F", false, "error: " + errors[i], 0});
    }
    std::size_t bad = 0;
    for (auto &cr : r.checks)
      bad += !cr.passed;
    std::cout << r.entry << ": " << r.checks.size() << " checks, " << bad << " failed\n";
    for (auto &cr : r.checks)
      if (!cr.passed)
        std::cout << "  FAIL " << cr.id << " [" << cr.subject << "] " << cr.counterexample << "\n";
    failed += bad;
    total += r.checks.size();
    all.push_back(to_json(r));
  }
  if (!json_path.empty())
    std::ofstream(json_path) << all.dump(2) << "\n";
  std::cout << (failed ? std::to_string(failed) + " of " + std::to_string(total) + " checks failed"
                       : "all " + std::to_string(total) + " checks passed")
            << "\n";
  return failed ? 1 : 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Saturated fusion systems of small finite groups"};
  app.require_subcommand(1);
  Common common;

  std::string group, out_path;
  auto *build = app.add_subcommand("build", "construct F_S(G) and save it");
  build->add_option("group", group, "group file")->required();
  build->add_option("--out", out_path, "output file (default: <group>.fsk)");
  add_common(build, common);

  std::string sys, normal_spec;
  std::size_t normal_order = 0;
  std::size_t normal_index = 0;
  auto *cent = app.add_subcommand("centralizer", "X, C_S(E), R* and C_F(E) for a normal subsystem E");
  cent->add_option("system", sys, "group file or saved system")->required();
  auto *o_spec = cent->add_option("--normal", normal_spec, "normal subgroup N of G; E = F_{S n N}(N)");
  auto *o_order = cent->add_option("--normal-subgroup-of-order", normal_order, "pick N by its order");
  auto *o_index = cent->add_option("--index", normal_index, "which normal subgroup of that order (canonical order)");
  o_index->needs(o_order);
  o_spec->excludes(o_order);
  add_common(cent, common);

  std::string f1, f2;
  auto *prod = app.add_subcommand("product", "F1*F2 for two normal subsystems and the central-product verdict");
  prod->add_option("system", sys, "group file or saved system")->required();
  prod->add_option("--f1", f1, "normal subgroup giving F1")->required();
  prod->add_option("--f2", f2, "normal subgroup giving F2")->required();
  add_common(prod, common);

  std::string morphism;
  auto *alp = app.add_subcommand("alperin", "factor a morphism through F^cr n F^f");
  alp->add_option("system", sys, "group file or saved system")->required();
  alp->add_option("--morphism", morphism, "<subgroup>^<element>, e.g. \"gens:(1,2)^(1,3)\"")->required();
  add_common(alp, common);

  std::string target, json_path;
  std::vector<std::string> checks;
  bool timings = false;
  std::size_t jobs = 1;
  auto *ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("target", target, "corpus directory, group file or saved system")->required();
  ver->add_option("--checks", checks, "check ids or labels, or all")->delimiter(',');
  ver->add_option("--json", json_path, "write the JSON report here");
  ver->add_flag("--timings", timings, "record per-check milliseconds (reports stop being reproducible)");
  ver->add_option("-j,--jobs", jobs, "entries verified in parallel")->capture_default_str();
  add_common(ver, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2; // --help exits 0
  }

  try {
    if (*build)
      return cmd_build(group, out_path, common);
    if (*cent) {
      if (normal_spec.empty() && !*o_order)
        throw Error(ErrorCode::InvalidArgument, "give --normal or --normal-subgroup-of-order");
      std::optional<std::size_t> idx;
      if (*o_index)
        idx = normal_index;
      return cmd_centralizer(sys, normal_spec, normal_order, idx, common);
    }
    if (*prod)
      return cmd_product(sys, f1, f2, common);
    if (*alp)
      return cmd_alperin(sys, morphism, common);
    if (*ver)
      return cmd_verify(target, checks, json_path, timings, jobs, common);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_alarm() ? 1 : 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
