// Acceptance run over the bundled corpus: one PASS/FAIL line per criterion.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include "fusion/fusion.hpp"

using namespace fusion;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Entry {
  GroupFile group;
  std::size_t prime;
  std::string name() const { return group.name + "@" + std::to_string(prime); }
};

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string &why)
  {
    if (ok)
      detail = why;
    ok = false;
  }
};

/// Tally of one group of check ids over all reports.
struct Tally {
  std::size_t evaluated = 0;
  std::string first_failure;
};

Tally tally(const std::vector<EntryReport> &reports, const std::set<std::string> &ids)
{
  Tally t;
  for (auto &r : reports)
    for (auto &c : r.checks) {
      if (!ids.count(c.id))
        continue;
      ++t.evaluated;
      if (!c.passed && t.first_failure.empty())
        t.first_failure = r.entry + " " + c.id + " [" + c.subject + "]: " + c.counterexample;
    }
  return t;
}

Verdict from_tally(const std::vector<EntryReport> &reports, const std::set<std::string> &ids, std::string &summary)
{
  Verdict v;
  auto t = tally(reports, ids);
  if (t.evaluated == 0)
    v.fail("no applicable instance");
  if (!t.first_failure.empty())
    v.fail(t.first_failure);
  summary = std::to_string(t.evaluated) + " checks";
  return v;
}

void print(int n, const std::string &title, const Verdict &v, const std::string &summary)
{
  std::cout << (v.ok ? "PASS" : "FAIL") << "  " << n << ". " << title << ": " << summary;
  if (!v.ok)
    std::cout << " -- " << v.detail;
  std::cout << std::endl;
}

bool has_product_instance(const std::vector<EntryReport> &reports, const std::string &group)
{
  for (auto &r : reports)
    if (r.entry.rfind(group + "@", 0) == 0)
      for (auto &c : r.checks)
        if (c.id == "MainCentralProduct")
          return true;
  return false;
}

} // namespace

int main(int argc, char **argv)
{
  std::string dir = argc > 1 ? argv[1] : FUSION_CORPUS_DIR;
  std::vector<Entry> entries;
  for (auto &g : load_corpus(dir))
    for (auto p : g.primes)
      entries.push_back({g, p});

  bool all = true;
  auto report = [&](int n, const std::string &title, const Verdict &v, const std::string &summary) {
    print(n, title, v, summary);
    all = all && v.ok;
  };

  // 1
  {
    Verdict v;
    double worst = 0;
    std::string worst_name;
    for (auto &e : entries) {
      auto t0 = Clock::now();
      auto r = check_saturation(fusion_of_group(Universe::create(e.group.group, e.prime)));
      double s = seconds_since(t0);
      if (s > worst) {
        worst = s;
        worst_name = e.name();
      }
      if (!r)
        v.fail(e.name() + ": " + r.reason);
      if (s >= 60)
        v.fail(e.name() + " took " + std::to_string(s) + " s");
    }
    std::ostringstream sum;
    sum << entries.size() << " entries, slowest " << worst_name << " " << worst << " s";
    report(1, "saturation of realized systems", v, sum.str());
  }

  auto t0 = Clock::now();
  std::vector<EntryReport> reports;
  for (auto &e : entries)
    reports.push_back(run_suite(e.group, e.prime));
  double suite_seconds = seconds_since(t0);

  // 2
  {
    std::string sum;
    auto v = from_tally(reports, {"MainCSE.a", "MainCSE.b", "MainCSE.c", "FirstCharacterization"}, sum);
    if (suite_seconds >= 600)
      v.fail("full corpus took " + std::to_string(suite_seconds) + " s");
    std::ostringstream s;
    s << sum << ", full suite " << suite_seconds << " s";
    report(2, "MainCSE (C_S(E) in X, R* characterization, closure of C_S(E) in R*)", v, s.str());
  }
  // 3
  {
    std::string sum;
    auto v = from_tally(reports, {"FocProp"}, sum);
    report(3, "FocProp (foc and hyp of C_F(T) inside C_S(E))", v, sum);
  }
  // 4
  {
    std::string sum;
    auto v = from_tally(reports, {"CFENormal", "MainCFE", "ShowWeaklyNormal"}, sum);
    report(4, "MainCFE (C_F(E) normal; D <= C_F(E) iff D and E centralize each other)", v, sum);
  }
  // 5
  {
    std::string sum;
    auto v = from_tally(reports, {"Coincide"}, sum);
    report(5, "Coincide (Aut_C(P) = O^p(Aut_{C_F(T)}(P)) Aut_{C_S(E)}(P))", v, sum);
  }
  // 6
  {
    std::string sum;
    auto v = from_tally(reports,
                        {"L:F1F2Centralize", "P:F1F2Centralize", "MainCentralProduct", "NormalCentralizeEachOther",
                         "RadicalIntersect", "ZCentralize"},
                        sum);
    for (auto g : {"Q8oC4", "A4xA4", "D8xC2", "S4xC2"})
      if (!has_product_instance(reports, g))
        v.fail(std::string("no product instance on ") + g);
    // F1 x F2 against F_{S1 x S2}(G1 x G2)
    for (auto [a, b] : {std::pair{"S4", "C2"}, std::pair{"A4", "A4"}}) {
      GroupFile ga, gb;
      for (auto &e : entries) {
        if (e.group.name == a)
          ga = e.group;
        if (e.group.name == b)
          gb = e.group;
      }
      auto F1 = fusion_of_group(Universe::create(ga.group, 2));
      auto F2 = fusion_of_group(Universe::create(gb.group, 2));
      auto D = direct_product(F1, F2);
      auto pg = direct_product(*ga.group, *gb.group);
      GroupHom sigma{D.universe->sylow(), std::vector<Elem>(D.universe->group().order(), kNoElem)};
      std::vector<Elem> syl;
      for (auto z : D.universe->sylow().members())
        syl.push_back(sigma.image[z] = pg.pair(D.left[z], D.right[z]));
      std::sort(syl.begin(), syl.end());
      auto FG = fusion_of_group(Universe::create(pg.group, 2, Subgroup(syl, pg.group->order())));
      if (!subsystem_equal(transport(D.system, FG.universe_ptr(), sigma), FG))
        v.fail(std::string(a) + " x " + b + " differs from the fusion system of the group product");
      if (!is_central_product(D.system, D.hat1, D.hat2))
        v.fail(std::string(a) + " x " + b + " is not the central product of its factors");
    }
    report(6, "products (P:F1F2Centralize, MainCentralProduct, NormalCentralizeEachOther, RadicalIntersect)", v,
           sum + ", incl. Q8oC4, A4xA4, D8xC2, S4xC2");
  }
  // 7
  {
    const std::vector<std::string> lemmas{"FfEf", "Wellknown", "LocalNormalSubsystems", "EasyCentralizer",
                                          "FrattiniCons", "XInvariant", "WeaklyClosedCentralized", "GN",
                                          "CFCG0", "PropHelp", "ZCentralize", "L:F1F2Centralize"};
    std::string sum;
    auto v = from_tally(reports, {lemmas.begin(), lemmas.end()}, sum);
    std::vector<std::pair<GroupFile, std::size_t>> pool;
    for (auto &e : entries)
      if (e.group.group->order() <= 48)
        pool.push_back({e.group, e.prime});
    std::size_t witnessed = 0;
    for (auto &id : lemmas) {
      if (tally(reports, {id}).evaluated == 0)
        v.fail(id + " never applies");
      if (find_failing_mutation(id, pool))
        ++witnessed;
      else
        v.fail(id + " fails on no mutated instance");
    }
    report(7, "lemma suite", v, sum + ", " + std::to_string(witnessed) + "/12 killed by a mutation");
  }
  // 8
  {
    std::string sum;
    auto v = from_tally(reports, {"Oracle.focal", "Oracle.CSE"}, sum);
    report(8, "oracle cross-checks (foc = S n [G,G]; brute-force C_S(E))", v, sum);
  }
  // 9
  {
    Verdict v;
    std::size_t bytes = 0;
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (auto &r : reports)
      a.push_back(to_json(r));
    for (auto &e : entries)
      b.push_back(to_json(run_suite(e.group, e.prime)));
    auto da = a.dump(2), db = b.dump(2);
    bytes = da.size();
    if (da != db)
      v.fail("reports differ");
    report(9, "determinism (two full corpus runs, byte-identical JSON)", v, std::to_string(bytes) + " bytes");
  }

  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
