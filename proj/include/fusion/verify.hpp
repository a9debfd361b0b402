#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusion/io.hpp"
#include "fusion/products.hpp"

namespace fusion {

/// What a check is evaluated on.
///   entry      F = F_S(G) for one corpus group and prime
///   pair       (F, E) with E = F_{S n N}(N) for N normal in G
///   invariance (F, E) with the support of E strongly closed, E not
///              necessarily normal (normal pairs plus F_T(T))
///   product    (F, E1, E2) for two distinct normal pairs with [S1,S2] = 1
enum class CheckScope { entry, pair, invariance, product };

/// Check ids in canonical report order.
const std::vector<std::string> &check_ids();
CheckScope check_scope(const std::string &id);
/// Labelled results that the suite covers; every label is the prefix of at
/// least one check id.
const std::vector<std::string> &result_labels();

struct CheckResult {
  std::string id;
  std::string subject;
  bool passed = false;
  std::string counterexample;
  double millis = 0;
};

struct EntryReport {
  std::string entry; // "<group>@<prime>"
  std::size_t prime = 0;
  std::vector<CheckResult> checks; // sorted by (id order, subject order)
  bool passed() const;
};

struct SuiteOptions {
  std::set<std::string> checks; // empty: all
  bool timings = false;         // millis stay 0 otherwise, keeping reports reproducible
  Limits limits;
};

/// Runs the selected checks on F_S(G) at prime p. Exceptions raised inside a
/// check are recorded as failures with the message as counterexample.
EntryReport run_suite(const GroupFile &g, std::size_t p, const SuiteOptions &options = {});
/// Same on a given system F_S(G) (for instance one loaded from a saved file).
EntryReport run_suite(const GroupFile &g, const FusionSystem &F, const SuiteOptions &options = {});

nlohmann::json to_json(const EntryReport &report);

/// Single evaluations without any hypothesis screening of the inputs. nullopt
/// means the check does not apply to the instance. These back the mutation
/// self-tests: a corrupted system fed in here must be able to make a check
/// fail.
std::optional<ConditionResult> evaluate_entry_check(const std::string &id, const FusionSystem &F);
std::optional<ConditionResult> evaluate_pair_check(const std::string &id, const FusionSystem &F,
                                                   const FusionSystem &E);
std::optional<ConditionResult> evaluate_product_check(const std::string &id, const FusionSystem &F,
                                                      const FusionSystem &E1, const FusionSystem &E2);

/// Systems obtained from X by deleting morphisms: one isomorphism together
/// with its inverse, every isomorphism between two subgroups, or every
/// non-inner automorphism of one subgroup. At most `limit` of each kind, in
/// canonical order. The results carry no realizer and are usually not
/// fusion systems any more.
enum MutationKind : unsigned {
  kInnerSystem = 1,   // replaced by the inner system of its support
  kDeleteOne = 2,     // one isomorphism and its inverse deleted
  kDeleteLink = 4,    // all isomorphisms between two subgroups deleted
  kStripAut = 8,      // Aut(P) cut down to the automorphisms induced by the support
  kAllMutations = 15,
};
struct Mutant {
  MutationKind kind;
  std::string description;
  FusionSystem system;
};
std::vector<Mutant> mutants(const FusionSystem &X, std::size_t limit, unsigned kinds = kAllMutations);

struct MutationWitness {
  std::string entry;
  std::string subject;  // which pair / product the inputs came from
  std::string mutation; // "<role>: <description>"
  std::string counterexample;
};
/// First mutated instance (over the given corpus entries, in order) on which
/// the check evaluates to a genuine failure; exceptions do not count.
std::optional<MutationWitness> find_failing_mutation(const std::string &id,
                                                     const std::vector<std::pair<GroupFile, std::size_t>> &entries,
                                                     std::size_t limit = 64,
                                                     unsigned kinds = kAllMutations);

} // namespace fusion
