#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusion/fusion_system.hpp"

namespace fusion {

/// A group as read from a group file.
///
///   {"name": "S4", "kind": "permutation", "degree": 4,
///    "generators": [[2,1,3,4], "(1,2,3,4)"],
///    "primes": [2, 3], "subgroups": {"A4": "gens:(1,2,3);(1,2)(3,4)"}}
///
/// Permutation generators are 1-based image arrays or cycle strings. With
/// "kind": "table" the field "table" holds a 0-based Cayley table whose row
/// and column 0 belong to the identity; "generators" is then an optional list
/// of element indices. Generators are also named a, b, c, ... in file order.
struct GroupFile {
  std::string name;
  std::string kind;
  nlohmann::json source; // the parsed file, kept for persistence
  GroupPtr group;
  std::vector<std::size_t> primes;
  std::map<std::string, std::string> subgroups;
};

/// Throws ParseError, NotAGroup or CapExceeded.
GroupFile parse_group(const nlohmann::json &j, const Limits &limits = {});
GroupFile load_group(const std::filesystem::path &path, const Limits &limits = {});

/// Group files of a directory (*.json), sorted by name.
std::vector<GroupFile> load_corpus(const std::filesystem::path &dir, const Limits &limits = {});

/// An element: cycle notation "(1,2)(3,4)" for permutation groups, "#k" for
/// the element with index k, or a word in the generator letters such as
/// "ab^2A" (capital letter = inverse, "e" = identity).
Elem parse_element(const GroupFile &g, const std::string &text);

/// A subgroup of the whole group:
///   gens:<el>;<el>;...   subgroup generated by the listed elements
///   order:<k>[#i]        i-th normal subgroup of order k (canonical order)
///   whole | trivial | derived | O_p | O^p | O_p' | O^p'   (p from the prime)
///   <name>               entry of the file's "subgroups" table
/// Throws ParseError, NotFound (no such normal subgroup) or NotUnique
/// (order:k with several candidates and no #i).
Subgroup parse_subgroup(const GroupFile &g, const std::string &spec, std::size_t prime);

/// <subgroup-spec>^<element>: conjugation by the element restricted to the
/// subgroup, which must lie in S together with its image.
Morphism parse_morphism(const GroupFile &g, const Universe &U, const std::string &spec);

/// Versioned container for a fusion system F_S(H) together with its group.
nlohmann::json save_system(const GroupFile &g, const FusionSystem &F);
struct LoadedSystem {
  GroupFile group;
  FusionSystem system;
};
/// Rebuilds the universe from the stored group, then F from the stored
/// generator record; checks the stored morphism count. Throws ParseError.
LoadedSystem load_system(const nlohmann::json &j, const Limits &limits = {});

/// Either a group file (builds F_S(G) at the given prime) or a saved system.
LoadedSystem load_any(const std::filesystem::path &path, std::size_t prime, const Limits &limits = {});

} // namespace fusion
