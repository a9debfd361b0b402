#include "fusion/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "fusion/autgroup.hpp"
#include "fusion/group_ops.hpp"

namespace fusion {

namespace {

using Outcome = std::optional<ConditionResult>;

ConditionResult fail(std::string why) { return {false, std::move(why)}; }

SubId join_all(const Universe &U, const std::vector<SubId> &subs)
{
  SubId J = U.bottom();
  for (auto X : subs)
    J = U.join(J, X);
  return J;
}

/// [over, psi] <= target, i.e. x^-1 x^psi in target for x in over.
bool commutator_within(const Universe &U, const Morphism &psi, SubId over, SubId target)
{
  const auto &G = U.group();
  const auto &tgt = U.at(target);
  for (auto x : U.at(over).members())
    if (!tgt.contains(G.mul(G.inv(x), apply(U, psi, x))))
      return false;
  return true;
}

bool contains_sorted(const std::vector<SubId> &v, SubId x) { return std::binary_search(v.begin(), v.end(), x); }

// Shared per-system caches.
class EntryCtx {
public:
  explicit EntryCtx(FusionSystem F) : F(std::move(F)), U(this->F.universe()) {}

  FusionSystem F;
  const Universe &U;
  std::vector<FusionSystem> normal_systems;

  const Classification &cls()
  {
    if (!cls_)
      cls_ = classify(F);
    return *cls_;
  }

  const FusionSystem &centralizer(SubId X)
  {
    auto it = cent_.find(X);
    if (it == cent_.end())
      it = cent_.emplace(X, centralizer_subsystem(F, X)).first;
    return it->second;
  }

  /// E contained in C_F(X).
  bool centralized_by(const FusionSystem &E, SubId X) { return subsystem_contains(centralizer(X), E); }

  bool centralize_each_other(const FusionSystem &A, const FusionSystem &B)
  {
    return centralized_by(A, B.support()) && centralized_by(B, A.support());
  }

  /// Saturated subsystems the centralizer theorem is quantified over.
  const std::vector<FusionSystem> &candidates()
  {
    if (cand_)
      return *cand_;
    std::vector<FusionSystem> pool = normal_systems;
    for (auto P : F.objects()) {
      pool.push_back(inner_system(F.universe_ptr(), P));
      if (cls()[P].fully_normalized)
        pool.push_back(normalizer_subsystem(F, P));
      if (cls()[P].fully_centralized)
        pool.push_back(centralizer(P));
    }
    cand_.emplace();
    for (auto &D : pool) {
      bool seen = std::any_of(cand_->begin(), cand_->end(),
                              [&](const FusionSystem &x) { return subsystem_equal(x, D); });
      if (!seen && is_saturated(D))
        cand_->push_back(D);
    }
    return *cand_;
  }

  bool realized() const { return F.realizer().has_value(); }

private:
  std::optional<Classification> cls_;
  std::map<SubId, FusionSystem> cent_;
  std::optional<std::vector<FusionSystem>> cand_;
};

class PairCtx {
public:
  PairCtx(EntryCtx &ec, FusionSystem E)
  : ec(ec), E(std::move(E)), T(this->E.support()), CT(ec.U.centralizer(T))
  {}

  EntryCtx &ec;
  FusionSystem E;
  SubId T, CT;

  const std::vector<SubId> &xset()
  {
    if (!xset_) {
      xset_.emplace();
      for (auto X : ec.U.below(CT))
        if (ec.centralized_by(E, X))
          xset_->push_back(X);
      std::sort(xset_->begin(), xset_->end());
    }
    return *xset_;
  }
  bool in_x(SubId X) { return contains_sorted(xset(), X); }
  SubId cse() { return join_all(ec.U, xset()); }

  const FusionSystem &ne()
  {
    if (!ne_)
      ne_ = normalizer_subsystem(E, T);
    return *ne_;
  }

  const FusionSystem &ct() { return ec.centralizer(T); }

  SubId rstar_def()
  {
    if (!rdef_) {
      std::vector<SubId> hit;
      for (auto X : ec.U.below(CT))
        if (ec.centralized_by(ne(), X))
          hit.push_back(X);
      rdef_ = join_all(ec.U, hit);
    }
    return *rdef_;
  }

  /// R* = C_S(N) from a model; only for realized systems.
  std::optional<SubId> rstar_model()
  {
    if (!ec.realized())
      return std::nullopt;
    if (!rmodel_)
      rmodel_ = r_star(ec.F, E).r_star;
    return rmodel_;
  }

  SubId rstar()
  {
    auto m = rstar_model();
    return m ? *m : rstar_def();
  }

  const FusionSystem &script()
  {
    if (!script_)
      script_ = script_g(ec.F, E);
    return *script_;
  }

  const FusionSystem &cfe()
  {
    if (!cfe_)
      cfe_ = c_F_of(ec.F, E, cse(), false);
    return *cfe_;
  }

  const NormalityReport &cfe_normality()
  {
    if (!cfe_rep_)
      cfe_rep_ = normality(ec.F, cfe());
    return *cfe_rep_;
  }

  const Classification &clsE()
  {
    if (!clsE_)
      clsE_ = classify(E);
    return *clsE_;
  }

private:
  std::optional<std::vector<SubId>> xset_;
  std::optional<FusionSystem> ne_, script_, cfe_;
  std::optional<SubId> rdef_, rmodel_;
  std::optional<NormalityReport> cfe_rep_;
  std::optional<Classification> clsE_;
};

struct ProdCtx {
  ProdCtx(EntryCtx &ec, FusionSystem E1, FusionSystem E2)
  : ec(ec), E1(std::move(E1)), E2(std::move(E2))
  {
    const auto &U = ec.U;
    S1 = this->E1.support();
    S2 = this->E2.support();
    I = U.meet(S1, S2);
    T = U.join(S1, S2);
  }

  EntryCtx &ec;
  FusionSystem E1, E2;
  SubId S1, S2, I, T;

  const FusionSystem &factor(int i) const { return i == 0 ? E1 : E2; }
  SubId support(int i) const { return i == 0 ? S1 : S2; }

  bool centralizing() { return ec.centralize_each_other(E1, E2); }

  const FusionSystem &candidate()
  {
    if (!cand_)
      cand_ = central_product_candidate(ec.F, E1, E2);
    return *cand_;
  }

private:
  std::optional<FusionSystem> cand_;
};

std::string d(const Universe &U, SubId X) { return U.describe(X); }

// ---- entry checks ----

Outcome check_saturation_entry(EntryCtx &c)
{
  if (auto bad = check_axioms(c.F))
    return fail("axioms: " + *bad);
  auto sat = check_saturation(c.F);
  if (!sat)
    return fail(sat.reason);
  return ConditionResult{};
}

Outcome check_oracle_focal(EntryCtx &c)
{
  if (!c.realized())
    return std::nullopt;
  const auto &G = c.U.group();
  const auto &H = *c.F.realizer();
  auto oracle = meet(G, commutator_subgroup(G, H, H), c.U.at(c.F.support()));
  SubId f = focal(c.F);
  if (!(c.U.at(f) == oracle))
    return fail("foc(F) = " + d(c.U, f) + " but S n [G,G] has order " + std::to_string(oracle.order()));
  return ConditionResult{};
}

Outcome check_model1_a(EntryCtx &c)
{
  if (!c.realized() || !is_constrained(c.F))
    return std::nullopt;
  auto m = model_of(c.F);
  if (auto bad = verify_model(c.F, m))
    return fail(*bad);
  for (auto Q : normal_centric_subgroups(c.F)) {
    auto other = model_from(c.F, Q);
    if (!models_isomorphic_over_support(m, other))
      return fail("models from O_p(F) and " + d(c.U, Q) + " are not isomorphic over S");
  }
  return ConditionResult{};
}

Outcome check_model1_b(EntryCtx &c)
{
  if (!c.realized() || !is_constrained(c.F))
    return std::nullopt;
  auto m = model_of(c.F);
  const auto &M = *m.group;
  auto whole = whole_group(M);
  for (auto P : c.F.objects()) {
    bool in_f = is_normal_subgroup(c.F, P);
    bool in_m = is_normal(M, m.image(c.U.at(P)), whole);
    if (in_f != in_m)
      return fail(d(c.U, P) + (in_f ? " is normal in F but not in M" : " is normal in M but not in F"));
  }
  for (auto Q : normal_centric_subgroups(c.F)) {
    auto sQ = m.image(c.U.at(Q));
    if (!centralizer(M, sQ).is_subset_of(sQ))
      return fail("C_M(Q) not in Q for Q = " + d(c.U, Q));
  }
  return ConditionResult{};
}

// ---- pair checks ----

Outcome check_cse_a(PairCtx &c)
{
  const auto &U = c.ec.U;
  SubId J = c.cse();
  if (!c.in_x(J))
    return fail("C_S(E) = " + d(U, J) + " is not centralized by E");
  for (auto X : c.xset())
    if (!U.le(X, J))
      return fail(d(U, X) + " in X is not below C_S(E)");
  if (auto v = strong_closure_violation(c.ec.F, J))
    return fail("C_S(E) = " + d(U, J) + " is not strongly closed: " + format_morphism(U, *v));
  return ConditionResult{};
}

Outcome check_cse_b(PairCtx &c)
{
  const auto &U = c.ec.U;
  const auto &G = c.script();
  if (G.support() != c.ec.F.support())
    return fail("G is not a system over S");
  if (!is_constrained(G))
    return fail("G is not constrained");
  auto rep = normality(G, c.ne());
  if (!rep.normal())
    return fail("N_E(T) is not normal in G: " + rep.counterexample);
  SubId Rd = c.rstar_def();
  if (!c.ec.centralized_by(c.ne(), Rd))
    return fail("no largest subgroup centralized by N_E(T); join " + d(U, Rd) + " is not");
  if (auto Rm = c.rstar_model()) {
    if (*Rm != Rd)
      return fail("R* from the model is " + d(U, *Rm) + ", by definition " + d(U, Rd));
    for (auto Q : normal_centric_subgroups(G)) {
      SubId other = r_star(c.ec.F, c.E, Q).r_star;
      if (other != *Rm)
        return fail("R* from the model built on " + d(U, Q) + " is " + d(U, other));
    }
  }
  return ConditionResult{};
}

Outcome check_cse_c(PairCtx &c)
{
  const auto &U = c.ec.U;
  const auto &F = c.ec.F;
  SubId R = c.rstar(), J = c.cse();
  if (!U.le(J, R))
    return fail("C_S(E) = " + d(U, J) + " is not in R* = " + d(U, R));
  if (!is_weakly_closed(F, J))
    return fail("C_S(E) is not weakly closed");
  if (!is_strongly_closed(F, J))
    return fail("C_S(E) is not strongly closed");
  for (auto Y : U.below(R)) {
    bool wc = is_weakly_closed(F, Y);
    if (wc && !c.in_x(Y))
      return fail("weakly closed " + d(U, Y) + " <= R* is not centralized by E");
    if (wc && !U.le(Y, J))
      return fail("weakly closed " + d(U, Y) + " <= R* is not in C_S(E)");
    if (!wc && is_strongly_closed(F, Y))
      return fail("strongly closed " + d(U, Y) + " is not weakly closed");
    if (is_strongly_closed(F, Y) && !U.le(Y, J))
      return fail("strongly closed " + d(U, Y) + " <= R* is not in C_S(E)");
  }
  return ConditionResult{};
}

Outcome check_first_characterization(PairCtx &c)
{
  const auto &U = c.ec.U;
  SubId R = c.rstar();
  for (auto X : U.below(c.CT)) {
    bool cb = c.ec.centralized_by(c.ne(), X);
    if (cb != U.le(X, R))
      return fail(d(U, X) + (cb ? " is centralized by N_E(T) but not in R*"
                                : " is in R* but not centralized by N_E(T)"));
  }
  return ConditionResult{};
}

Outcome check_focprop(PairCtx &c)
{
  const auto &U = c.ec.U;
  SubId J = c.cse();
  SubId f = focal(c.ct()), h = hyperfocal(c.ct());
  if (!U.le(f, J))
    return fail("foc(C_F(T)) = " + d(U, f) + " is not in C_S(E) = " + d(U, J));
  if (!U.le(h, J))
    return fail("hyp(C_F(T)) = " + d(U, h) + " is not in C_S(E) = " + d(U, J));
  return ConditionResult{};
}

Outcome check_main_cfe(PairCtx &c)
{
  const auto &U = c.ec.U;
  const auto &C = c.cfe();
  if (!c.cfe_normality().normal())
    return fail("C_F(E) is not normal: " + c.cfe_normality().counterexample);
  auto pool = c.ec.candidates();
  pool.push_back(C);
  for (auto &D : pool) {
    bool inside = subsystem_contains(C, D);
    bool ce = c.ec.centralize_each_other(D, c.E);
    if (inside != ce)
      return fail("D over " + d(U, D.support()) +
                  (inside ? " lies in C_F(E) but does not centralize E" : " centralizes E but is not in C_F(E)"));
  }
  return ConditionResult{};
}

Outcome check_show_weakly_normal(PairCtx &c)
{
  auto &rep = c.cfe_normality();
  if (!rep.weakly_normal())
    return fail("C_F(E) is not weakly normal: " + rep.counterexample);
  return ConditionResult{};
}

Outcome check_cfe_normal(PairCtx &c)
{
  auto &rep = c.cfe_normality();
  if (!rep.normal())
    return fail("C_F(E) is not normal: " + rep.counterexample);
  if (!rep.extension_support)
    return fail("extension property with [C_S(R), a] <= R fails");
  return ConditionResult{};
}

Outcome check_coincide(PairCtx &c) { return coincide_check(c.ec.F, c.E, c.cfe()); }

Outcome check_ffef(PairCtx &c)
{
  const auto &U = c.ec.U;
  if (!is_strongly_closed(c.ec.F, c.T))
    return std::nullopt;
  for (auto P : U.below(c.T))
    if (c.ec.cls()[P].fully_normalized && !c.clsE()[P].fully_normalized)
      return fail(d(U, P) + " is fully F-normalized but not fully E-normalized");
  return ConditionResult{};
}

Outcome check_wellknown(PairCtx &c)
{
  const auto &U = c.ec.U;
  for (auto P : U.below(c.T)) {
    if (!c.clsE()[P].centric_radical)
      continue;
    for (auto &phi : c.ec.F.isos(P))
      if (!U.le(phi.img, c.T) || !c.clsE()[phi.img].centric_radical)
        return fail(d(U, P) + " in E^cr has F-conjugate " + d(U, phi.img) + " outside E^cr");
  }
  return ConditionResult{};
}

Outcome check_local_normal(PairCtx &c)
{
  const auto &U = c.ec.U;
  const auto &F = c.ec.F;
  for (auto Q : U.below(c.T)) {
    if (!c.ec.cls()[Q].fully_normalized)
      continue;
    if (!c.clsE()[Q].fully_normalized)
      return fail(d(U, Q) + " is not fully E-normalized");
    auto NF = normalizer_subsystem(F, Q);
    if (!is_saturated(NF))
      return fail("N_F(Q) is not saturated for Q = " + d(U, Q));
    auto NE = normalizer_subsystem(c.E, Q);
    if (!is_saturated(NE))
      return fail("N_E(Q) is not saturated for Q = " + d(U, Q));
    auto rep = normality(NF, NE);
    if (!rep.normal())
      return fail("N_E(Q) is not normal in N_F(Q) for Q = " + d(U, Q) + ": " + rep.counterexample);
  }
  return ConditionResult{};
}

Outcome check_easy_centralizer(PairCtx &c)
{
  const auto &U = c.ec.U;
  const auto &F = c.ec.F;
  std::vector<Morphism> betas;
  for (auto P : U.below(c.T))
    betas.insert(betas.end(), c.E.isos(P).begin(), c.E.isos(P).end());
  for (auto X : U.below(c.CT)) {
    SubId XT = U.join(X, c.T);
    const auto &CX = c.ec.centralizer(X);
    for (auto &phi : F.isos(XT)) {
      SubId Xp = image_of(U, phi, X);
      if (!U.le(Xp, c.CT))
        return fail("(a) " + d(U, X) + " maps outside C_S(T) under " + format_morphism(U, phi));
      if (c.in_x(X) && !c.in_x(Xp))
        return fail("(b) " + d(U, X) + " in X but its image " + d(U, Xp) + " is not");
      if (c.ec.centralized_by(c.ne(), X) && !c.ec.centralized_by(c.ne(), Xp))
        return fail("(c) N_E(T) centralizes " + d(U, X) + " but not its image " + d(U, Xp));
      const auto &CXp = c.ec.centralizer(Xp);
      for (auto &beta : betas) {
        auto bp = conjugate_morphism(U, beta, phi);
        if (!c.E.contains(bp))
          return fail("(a) conjugate of " + format_morphism(U, beta) + " is not in E");
        if (CX.contains(beta) != CXp.contains(bp))
          return fail("(a) " + format_morphism(U, beta) + " and its conjugate under " + format_morphism(U, phi) +
                      " differ on centralizing " + d(U, X));
      }
    }
  }
  return ConditionResult{};
}

Outcome check_frattini_cons(PairCtx &c)
{
  const auto &U = c.ec.U;
  const auto &F = c.ec.F;
  for (auto P : F.objects()) {
    if (!c.ec.cls()[P].fully_normalized)
      continue;
    auto A = normalized(a_circle(F, c.E, P));
    auto H = normalized(h_group(F, c.E, P));
    auto aut = normalized(F.automorphisms(P));
    for (auto &a : A)
      for (auto &b : A)
        if (!std::binary_search(A.begin(), A.end(), compose(U, a, b)))
          return fail("A(P) is not closed for P = " + d(U, P));
    if (!normal_in(U, A, aut))
      return fail("A(P) is not normal in Aut_F(P) for P = " + d(U, P));
    if (normalized(product_set(U, H, A)) != aut)
      return fail("Aut_F(P) != H(P) A(P) for P = " + d(U, P));
  }
  return ConditionResult{};
}

Outcome check_x_invariant(PairCtx &c)
{
  const auto &U = c.ec.U;
  for (auto X : c.xset())
    for (auto &phi : c.ec.F.isos(X))
      if (!c.in_x(phi.img))
        return fail(d(U, X) + " in X has F-conjugate " + d(U, phi.img) + " outside X");
  return ConditionResult{};
}

Outcome check_weakly_closed_centralized(PairCtx &c)
{
  const auto &U = c.ec.U;
  auto autT = c.E.automorphisms(c.T);
  for (auto R : U.below(c.CT)) {
    if (!is_weakly_closed(c.ec.F, R))
      continue;
    const auto &CR = c.ec.centralizer(R);
    bool hyp = std::all_of(autT.begin(), autT.end(), [&](const Morphism &a) { return CR.contains(a); });
    if (hyp && !c.in_x(R))
      return fail("weakly closed " + d(U, R) + " centralized by Aut_E(T) is not in X");
  }
  return ConditionResult{};
}

Outcome check_gn(PairCtx &c)
{
  const auto &G = c.script();
  if (G.support() != c.ec.F.support())
    return fail("G is not a system over S");
  if (!is_constrained(G))
    return fail("G is not constrained");
  auto rep = normality(G, c.ne());
  if (!rep.normal())
    return fail("N_E(T) is not normal in G: " + rep.counterexample);
  if (c.ec.realized()) {
    try {
      auto m = model_of(G);
      normal_model(m, c.ne());
    } catch (const Error &e) {
      return fail(e.what());
    }
  }
  return ConditionResult{};
}

Outcome check_cfcg0(PairCtx &c)
{
  const auto &U = c.ec.U;
  SubId TC = U.join(c.T, c.CT);
  std::vector<Morphism> good; // automorphisms of TC_S(T) with [TC_S(T), psi] <= T
  for (auto &psi : c.ec.F.automorphisms(TC))
    if (commutator_within(U, psi, TC, c.T))
      good.push_back(psi);
  auto autT = c.E.automorphisms(c.T);
  for (auto X : U.below(c.CT)) {
    if (!c.ec.centralized_by(c.ne(), X))
      continue;
    for (auto &alpha : autT) {
      bool found = std::any_of(good.begin(), good.end(), [&](const Morphism &psi) {
        return extends(U, psi, alpha) && fixes_pointwise(U, psi, X);
      });
      if (!found)
        return fail(format_morphism(U, alpha) + " has no extension to TC_S(T) fixing " + d(U, X));
    }
  }
  return ConditionResult{};
}

Outcome check_prop_help(PairCtx &c)
{
  const auto &U = c.ec.U;
  const auto &F = c.ec.F;
  bool applicable = false;
  for (auto X : F.objects()) {
    if (!c.ec.cls()[X].fully_normalized)
      continue;
    SubId Q = U.meet(X, c.T);
    if (!c.ec.cls()[Q].fully_normalized || !c.clsE()[Q].centric)
      continue;
    if (!U.le(X, U.join(Q, c.CT)))
      continue;
    applicable = true;
    auto FX = normalizer_subsystem(normalizer_subsystem(F, X), U.join(X, U.centralizer(X)));
    if (!is_saturated(FX))
      return fail("N_N_F(X)(XC_S(X)) is not saturated for X = " + d(U, X));
    if (!is_constrained(FX))
      return fail("N_N_F(X)(XC_S(X)) is not constrained for X = " + d(U, X));
    auto rep = normality(FX, normalizer_subsystem(c.E, Q));
    if (!rep.normal())
      return fail("N_E(X n T) is not normal for X = " + d(U, X) + ": " + rep.counterexample);
  }
  if (!applicable)
    return std::nullopt;
  return ConditionResult{};
}

Outcome check_model1_c(PairCtx &c)
{
  if (!c.ec.realized() || !is_constrained(c.ec.F))
    return std::nullopt;
  try {
    auto m = model_of(c.ec.F);
    normal_model(m, c.E);
  } catch (const Error &e) {
    return fail(e.what());
  }
  return ConditionResult{};
}

Outcome check_oracle_cse(PairCtx &c)
{
  const auto &U = c.ec.U;
  const auto &F = c.ec.F;
  auto by_gens = centralized_set_by_generators(F, c.E);
  std::sort(by_gens.begin(), by_gens.end());
  if (by_gens != c.xset())
    return fail("X on generators differs from X on full hom-sets");
  SubId J = c.cse();
  if (c_s_of(F, c.E, by_gens) != J)
    return fail("C_S(E) from the generator set differs");
  if (auto R = c.rstar_model()) {
    std::vector<SubId> closed;
    for (auto Y : U.below(*R))
      if (is_strongly_closed(F, Y))
        closed.push_back(Y);
    std::sort(closed.begin(), closed.end());
    SubId L = join_all(U, closed);
    if (!contains_sorted(closed, L))
      return fail("R* has no largest strongly closed subgroup");
    if (L != J)
      return fail("largest strongly closed subgroup of R* is " + d(U, L) + ", brute force gives " + d(U, J));
  }
  return ConditionResult{};
}

Outcome check_finvariant(PairCtx &c)
{
  auto rep = normality(c.ec.F, c.E, true);
  if (!rep.strongly_closed)
    return std::nullopt;
  if (!rep.conditions_agree()) {
    std::string flags;
    for (std::size_t i = 0; i < rep.invariant.size(); ++i)
      flags += std::string(1, char('a' + i)) + "=" + (rep.invariant[i] ? "1 " : "0 ");
    return fail("invariance conditions disagree: " + flags);
  }
  return ConditionResult{};
}

// ---- product checks ----

Outcome check_normal_centralize_each_other(ProdCtx &c)
{
  bool ce = c.centralizing();
  bool z = in_center(c.E1, c.I) && in_center(c.E2, c.I);
  if (ce != z)
    return fail(ce ? "factors centralize each other but S1 n S2 is not in both centers"
                   : "S1 n S2 is in both centers but the factors do not centralize each other");
  return ConditionResult{};
}

Outcome check_l_f1f2(ProdCtx &c)
{
  bool applicable = false;
  for (int i = 0; i < 2; ++i) {
    if (!c.ec.centralized_by(c.factor(i), c.support(1 - i)))
      continue;
    applicable = true;
    if (!in_center(c.factor(i), c.I))
      return fail("F" + std::to_string(i + 1) + " is centralized by S" + std::to_string(2 - i) +
                  " but S1 n S2 is not in Z(F" + std::to_string(i + 1) + ")");
  }
  if (!applicable)
    return std::nullopt;
  return ConditionResult{};
}

Outcome check_z_centralize(ProdCtx &c)
{
  const auto &U = c.ec.U;
  bool applicable = false;
  for (int i = 0; i < 2; ++i) {
    const auto &Fi = c.factor(i);
    SubId Si = c.support(i), Sj = c.support(1 - i);
    if (!in_center(Fi, c.I))
      continue;
    applicable = true;
    SubId Ci = U.centralizer(Si);
    SubId SiC = U.join(Si, Ci);
    auto autF = c.ec.F.automorphisms(SiC);
    for (auto &beta : Fi.automorphisms(Si)) {
      bool found = std::any_of(autF.begin(), autF.end(), [&](const Morphism &psi) {
        return extends(U, psi, beta) && commutator_within(U, psi, Ci, Si) && fixes_pointwise(U, psi, Sj);
      });
      if (!found)
        return fail("(a) " + format_morphism(U, beta) + " has no admissible extension to S" +
                    std::to_string(i + 1) + "C_S(S" + std::to_string(i + 1) + ")");
    }
    if (!c.ec.centralized_by(Fi, Sj))
      return fail("(b) F" + std::to_string(i + 1) + " is not in C_F(S" + std::to_string(2 - i) + ")");
  }
  if (!applicable)
    return std::nullopt;
  return ConditionResult{};
}

Outcome check_p_f1f2(ProdCtx &c)
{
  bool ce = c.centralizing();
  auto cp = is_central_product(c.candidate(), c.E1, c.E2);
  if (ce != cp.holds)
    return fail(ce ? "factors centralize each other but F1*F2 is not a central product: " + cp.counterexample
                   : "F1*F2 is a central product but the factors do not centralize each other");
  if (ce) {
    auto sat = check_saturation(c.candidate());
    if (!sat)
      return fail("F1*F2 is not saturated: " + sat.reason);
  }
  return ConditionResult{};
}

Outcome check_main_central_product(ProdCtx &c)
{
  if (!c.centralizing())
    return std::nullopt;
  const auto &D = c.candidate();
  auto rep = normality(c.ec.F, D);
  if (!rep.normal())
    return fail("F1*F2 is not normal: " + rep.counterexample);
  if (auto cp = is_central_product(D, c.E1, c.E2); !cp)
    return fail("F1*F2 is not a central product: " + cp.counterexample);
  return ConditionResult{};
}

Outcome check_radical_intersect(ProdCtx &c)
{
  const auto &U = c.ec.U;
  for (auto R : c.ec.F.objects()) {
    if (!c.ec.cls()[R].centric_radical)
      continue;
    if (U.meet(R, c.T) != U.join(U.meet(R, c.S1), U.meet(R, c.S2)))
      return fail("R n S1S2 != (R n S1)(R n S2) for R = " + d(U, R));
  }
  return ConditionResult{};
}

struct CheckDef {
  const char *id;
  CheckScope scope;
  std::function<Outcome(EntryCtx &)> entry;
  std::function<Outcome(PairCtx &)> pair;
  std::function<Outcome(ProdCtx &)> product;
};

const std::vector<CheckDef> &registry()
{
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    auto E = [&](const char *id, Outcome (*f)(EntryCtx &)) { v.push_back({id, CheckScope::entry, f, {}, {}}); };
    auto P = [&](const char *id, Outcome (*f)(PairCtx &)) { v.push_back({id, CheckScope::pair, {}, f, {}}); };
    auto I = [&](const char *id, Outcome (*f)(PairCtx &)) { v.push_back({id, CheckScope::invariance, {}, f, {}}); };
    auto X = [&](const char *id, Outcome (*f)(ProdCtx &)) { v.push_back({id, CheckScope::product, {}, {}, f}); };
    E("Saturation", check_saturation_entry);
    E("Oracle.focal", check_oracle_focal);
    E("Model1.a", check_model1_a);
    E("Model1.b", check_model1_b);
    P("Model1.c", check_model1_c);
    I("Finvariant.equiv", check_finvariant);
    P("FfEf", check_ffef);
    P("Wellknown", check_wellknown);
    P("LocalNormalSubsystems", check_local_normal);
    P("PropHelp", check_prop_help);
    X("L:F1F2Centralize", check_l_f1f2);
    X("P:F1F2Centralize", check_p_f1f2);
    P("EasyCentralizer", check_easy_centralizer);
    P("FrattiniCons", check_frattini_cons);
    P("XInvariant", check_x_invariant);
    P("WeaklyClosedCentralized", check_weakly_closed_centralized);
    P("GN", check_gn);
    P("CFCG0", check_cfcg0);
    P("FirstCharacterization", check_first_characterization);
    P("MainCSE.a", check_cse_a);
    P("MainCSE.b", check_cse_b);
    P("MainCSE.c", check_cse_c);
    P("Oracle.CSE", check_oracle_cse);
    P("FocProp", check_focprop);
    P("ShowWeaklyNormal", check_show_weakly_normal);
    P("CFENormal", check_cfe_normal);
    P("MainCFE", check_main_cfe);
    P("Coincide", check_coincide);
    X("RadicalIntersect", check_radical_intersect);
    X("MainCentralProduct", check_main_central_product);
    X("ZCentralize", check_z_centralize);
    X("NormalCentralizeEachOther", check_normal_centralize_each_other);
    return v;
  }();
  return defs;
}

const CheckDef &lookup(const std::string &id)
{
  for (auto &d : registry())
    if (id == d.id)
      return d;
  throw Error(ErrorCode::InvalidArgument, "unknown check id " + id);
}

/// Runs f, turning exceptions into failures.
template <class F>
ConditionResult guarded(F &&f, bool &applicable)
{
  try {
    auto r = f();
    applicable = r.has_value();
    return r ? *r : ConditionResult{};
  } catch (const std::exception &e) {
    applicable = true;
    return fail(std::string("error: ") + e.what());
  }
}

struct Instances {
  std::vector<std::pair<std::string, FusionSystem>> normal;     // deduplicated
  std::vector<std::pair<std::string, std::string>> broken;      // subject, error
  std::vector<std::pair<std::string, FusionSystem>> invariance; // normal plus F_T(T)
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> products;
};

Instances build_instances(const FusionSystem &F, const FiniteGroup &G)
{
  const auto &U = F.universe();
  Instances in;
  std::map<std::size_t, std::size_t> seen_order;
  for (auto &N : normal_subgroups(G)) {
    std::string subject = "N=order:" + std::to_string(N.order()) + "#" + std::to_string(seen_order[N.order()]++);
    try {
      auto E = normal_subsystem_from_group(F, N);
      bool dup = std::any_of(in.normal.begin(), in.normal.end(),
                             [&](const auto &x) { return subsystem_equal(x.second, E); });
      if (!dup)
        in.normal.emplace_back(subject, E);
    } catch (const std::exception &e) {
      in.broken.emplace_back(subject, e.what());
    }
  }
  in.invariance = in.normal;
  for (auto T : U.below(F.support())) {
    if (!is_strongly_closed(F, T))
      continue;
    auto E = inner_system(F.universe_ptr(), T);
    bool dup = std::any_of(in.invariance.begin(), in.invariance.end(),
                           [&](const auto &x) { return subsystem_equal(x.second, E); });
    if (!dup)
      in.invariance.emplace_back("inner:T=#" + std::to_string(T), E);
  }
  for (std::size_t i = 0; i < in.normal.size(); ++i)
    for (std::size_t j = i + 1; j < in.normal.size(); ++j) {
      SubId S1 = in.normal[i].second.support(), S2 = in.normal[j].second.support();
      if (U.commutator(S1, S2) == U.bottom())
        in.products.emplace_back(in.normal[i].first + "," + in.normal[j].first, i, j);
    }
  return in;
}

} // namespace

const std::vector<std::string> &check_ids()
{
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (auto &d : registry())
      v.push_back(d.id);
    return v;
  }();
  return ids;
}

CheckScope check_scope(const std::string &id) { return lookup(id).scope; }

const std::vector<std::string> &result_labels()
{
  static const std::vector<std::string> labels = {
      "CFCG0", "CFENormal", "Coincide", "EasyCentralizer", "FfEf", "Finvariant", "FirstCharacterization",
      "FocProp", "FrattiniCons", "GN", "L:F1F2Centralize", "LocalNormalSubsystems", "MainCFE", "MainCSE",
      "MainCentralProduct", "Model1", "NormalCentralizeEachOther", "P:F1F2Centralize", "PropHelp",
      "RadicalIntersect", "ShowWeaklyNormal", "WeaklyClosedCentralized", "Wellknown", "XInvariant",
      "ZCentralize"};
  return labels;
}

bool EntryReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &r) { return r.passed; });
}

EntryReport run_suite(const GroupFile &g, std::size_t p, const SuiteOptions &options)
{
  return run_suite(g, fusion_of_group(Universe::create(g.group, p, options.limits)), options);
}

EntryReport run_suite(const GroupFile &g, const FusionSystem &F, const SuiteOptions &options)
{
  EntryReport report;
  report.entry = g.name + "@" + std::to_string(F.prime());
  report.prime = F.prime();
  EntryCtx ec(F);
  auto in = build_instances(ec.F, ec.U.group());
  for (auto &n : in.normal)
    ec.normal_systems.push_back(n.second);

  std::vector<PairCtx> pairs, inv;
  for (auto &n : in.normal)
    pairs.emplace_back(ec, n.second);
  for (auto &n : in.invariance)
    inv.emplace_back(ec, n.second);
  std::vector<ProdCtx> prods;
  for (auto &[name, i, j] : in.products)
    prods.emplace_back(ec, in.normal[i].second, in.normal[j].second);

  auto record = [&](const std::string &id, const std::string &subject, auto &&fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool applicable = false;
    auto r = guarded(fn, applicable);
    auto t1 = std::chrono::steady_clock::now();
    if (!applicable)
      return;
    CheckResult cr{id, subject, r.holds, r.counterexample, 0};
    if (options.timings)
      cr.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.checks.push_back(std::move(cr));
  };

  for (auto &def : registry()) {
    std::string id = def.id;
    if (!options.checks.empty() && !options.checks.count(id))
      continue;
    switch (def.scope) {
    case CheckScope::entry:
      record(id, "F", [&] { return def.entry(ec); });
      break;
    case CheckScope::pair:
      for (std::size_t i = 0; i < pairs.size(); ++i)
        record(id, in.normal[i].first, [&] { return def.pair(pairs[i]); });
      for (auto &[subject, err] : in.broken)
        report.checks.push_back({id, subject, false, "error: " + err, 0});
      break;
    case CheckScope::invariance:
      for (std::size_t i = 0; i < inv.size(); ++i)
        record(id, in.invariance[i].first, [&] { return def.pair(inv[i]); });
      break;
    case CheckScope::product:
      for (std::size_t i = 0; i < prods.size(); ++i)
        record(id, std::get<0>(in.products[i]), [&] { return def.product(prods[i]); });
      break;
    }
  }
  return report;
}

nlohmann::json to_json(const EntryReport &report)
{
  nlohmann::json checks = nlohmann::json::array();
  for (auto &c : report.checks) {
    nlohmann::json j{{"id", c.id}, {"subject", c.subject}, {"status", c.passed ? "pass" : "fail"},
                     {"millis", c.millis}};
    if (!c.passed)
      j["counterexample"] = c.counterexample;
    checks.push_back(std::move(j));
  }
  return {{"entry", report.entry}, {"prime", report.prime}, {"checks", std::move(checks)}};
}

std::optional<ConditionResult> evaluate_entry_check(const std::string &id, const FusionSystem &F)
{
  auto &def = lookup(id);
  if (def.scope != CheckScope::entry)
    throw Error(ErrorCode::InvalidArgument, id + " is not an entry check");
  EntryCtx ec(F);
  return def.entry(ec);
}

std::optional<ConditionResult> evaluate_pair_check(const std::string &id, const FusionSystem &F,
                                                   const FusionSystem &E)
{
  auto &def = lookup(id);
  if (def.scope != CheckScope::pair && def.scope != CheckScope::invariance)
    throw Error(ErrorCode::InvalidArgument, id + " is not a pair check");
  EntryCtx ec(F);
  PairCtx pc(ec, E);
  return def.pair(pc);
}

std::optional<ConditionResult> evaluate_product_check(const std::string &id, const FusionSystem &F,
                                                      const FusionSystem &E1, const FusionSystem &E2)
{
  auto &def = lookup(id);
  if (def.scope != CheckScope::product)
    throw Error(ErrorCode::InvalidArgument, id + " is not a product check");
  EntryCtx ec(F);
  ProdCtx pc(ec, E1, E2);
  return def.product(pc);
}

std::vector<Mutant> mutants(const FusionSystem &X, std::size_t limit, unsigned kinds)
{
  const auto &U = X.universe();
  const SubId T = X.support();
  std::vector<Mutant> out;
  auto tables = [&] {
    std::vector<std::vector<Morphism>> isos(U.size());
    for (auto P : X.objects())
      isos[P] = X.isos(P);
    return isos;
  };
  auto emit = [&](MutationKind kind, std::string what, std::vector<std::vector<Morphism>> isos) {
    out.push_back({kind, std::move(what), make_system(X.universe_ptr(), T, std::move(isos))});
  };
  auto strided = [&](std::size_t total, auto &&visit) {
    std::size_t stride = std::max<std::size_t>(1, (total + limit - 1) / std::max<std::size_t>(limit, 1));
    for (std::size_t k = 0; k < total; k += stride)
      visit(k);
  };

  if (kinds & kInnerSystem) {
    auto inner = inner_system(X.universe_ptr(), T);
    if (!subsystem_equal(inner, X))
      out.push_back({kInnerSystem, "replaced by the inner system", inner});
  }

  // one isomorphism and its inverse
  std::vector<Morphism> all;
  for (auto P : (kinds & kDeleteOne) ? X.objects() : std::vector<SubId>{})
    for (auto &m : X.isos(P))
      if (!is_identity(m, U))
        all.push_back(m);
  strided(all.size(), [&](std::size_t k) {
    const auto &m = all[k];
    auto inv = inverse(U, m);
    auto isos = tables();
    std::erase(isos[m.dom], m);
    std::erase(isos[inv.dom], inv);
    emit(kDeleteOne, "deleted " + format_morphism(U, m) + " and its inverse", std::move(isos));
  });

  // every isomorphism between two distinct subgroups
  std::vector<std::pair<SubId, SubId>> links;
  for (auto P : (kinds & kDeleteLink) ? X.objects() : std::vector<SubId>{})
    for (auto Q : X.conjugacy_class(P))
      if (P < Q)
        links.emplace_back(P, Q);
  strided(links.size(), [&](std::size_t k) {
    auto [P, Q] = links[k];
    auto isos = tables();
    std::erase_if(isos[P], [&](const Morphism &m) { return m.img == Q; });
    std::erase_if(isos[Q], [&](const Morphism &m) { return m.img == P; });
    emit(kDeleteLink, "deleted all isomorphisms between " + U.describe(P) + " and " + U.describe(Q), std::move(isos));
  });

  // automorphisms of one subgroup cut down to those induced by the support
  std::vector<SubId> rich;
  for (auto P : (kinds & kStripAut) ? X.objects() : std::vector<SubId>{})
    if (X.automorphism_count(P) > automorphisms_from(U, P, T).size())
      rich.push_back(P);
  strided(rich.size(), [&](std::size_t k) {
    SubId P = rich[k];
    auto isos = tables();
    auto keep = normalized(automorphisms_from(U, P, T));
    std::erase_if(isos[P], [&](const Morphism &m) {
      return m.img == P && !std::binary_search(keep.begin(), keep.end(), m);
    });
    emit(kStripAut, "cut Aut(" + U.describe(P) + ") down to Aut_T", std::move(isos));
  });
  return out;
}

std::optional<MutationWitness> find_failing_mutation(const std::string &id,
                                                     const std::vector<std::pair<GroupFile, std::size_t>> &entries,
                                                     std::size_t limit, unsigned kinds)
{
  auto scope = check_scope(id);
  auto genuine = [](auto &&fn) -> std::optional<std::string> {
    try {
      auto r = fn();
      if (r && !r->holds)
        return r->counterexample;
    } catch (const std::exception &) {
    }
    return std::nullopt;
  };
  for (auto &[g, p] : entries) {
    auto U = Universe::create(g.group, p);
    auto F = fusion_of_group(U);
    auto in = build_instances(F, *g.group);
    std::string entry = g.name + "@" + std::to_string(p);
    auto found = [&](const std::string &subject, const std::string &role, const Mutant &m,
                     const std::string &why) {
      return MutationWitness{entry, subject, role + ": " + m.description, why};
    };
    if (scope == CheckScope::entry) {
      for (auto &m : mutants(F, limit, kinds))
        if (auto why = genuine([&] { return evaluate_entry_check(id, m.system); }))
          return found("F", "F", m, *why);
      continue;
    }
    if (scope == CheckScope::product) {
      for (auto &[subject, i, j] : in.products) {
        const auto &E1 = in.normal[i].second;
        const auto &E2 = in.normal[j].second;
        for (auto &m : mutants(F, limit, kinds))
          if (auto why = genuine([&] { return evaluate_product_check(id, m.system, E1, E2); }))
            return found(subject, "F", m, *why);
        for (auto &m : mutants(E1, limit, kinds))
          if (auto why = genuine([&] { return evaluate_product_check(id, F, m.system, E2); }))
            return found(subject, "F1", m, *why);
        for (auto &m : mutants(E2, limit, kinds))
          if (auto why = genuine([&] { return evaluate_product_check(id, F, E1, m.system); }))
            return found(subject, "F2", m, *why);
      }
      continue;
    }
    const auto &list = scope == CheckScope::pair ? in.normal : in.invariance;
    for (auto &[subject, E] : list) {
      for (auto &m : mutants(E, limit, kinds))
        if (auto why = genuine([&] { return evaluate_pair_check(id, F, m.system); }))
          return found(subject, "E", m, *why);
      for (auto &m : mutants(F, limit, kinds))
        if (auto why = genuine([&] { return evaluate_pair_check(id, m.system, E); }))
          return found(subject, "F", m, *why);
    }
  }
  return std::nullopt;
}

} // namespace fusion
