#include "fusion/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "fusion/group_ops.hpp"

namespace fusion {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string &what) { throw Error(ErrorCode::ParseError, what); }

json read_json(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
    parse_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    parse_error(path.string() + ": " + e.what());
  }
}

Permutation parse_permutation(const json &j, std::size_t degree)
{
  if (j.is_string())
    return parse_cycles(j.get<std::string>(), degree);
  if (!j.is_array() || j.size() != degree)
    parse_error("permutation must be a cycle string or an image array of length " +
                std::to_string(degree));
  Permutation p;
  for (auto &v : j) {
    if (!v.is_number_integer() || v.get<long>() < 1 || v.get<std::size_t>() > degree)
      parse_error("image out of range in permutation");
    p.push_back(std::uint16_t(v.get<std::size_t>() - 1));
  }
  return p;
}

std::vector<Morphism> morphisms_from_json(const Universe &U, const json &list)
{
  std::vector<Morphism> out;
  for (auto &m : list) {
    auto dom = m.at("dom").get<std::vector<Elem>>();
    auto map = m.at("map").get<std::vector<Elem>>();
    auto id = U.find(Subgroup(dom, U.group().order()).mask());
    if (!id)
      parse_error("stored morphism domain is not a subgroup of S");
    out.push_back(make_morphism(U, *id, std::move(map)));
  }
  return out;
}

json morphisms_to_json(const Universe &U, std::span<const Morphism> list)
{
  json out = json::array();
  for (auto &m : list)
    out.push_back({{"dom", U.at(m.dom).members()}, {"map", m.map}});
  return out;
}

} // namespace

GroupFile parse_group(const json &j, const Limits &limits)
{
  GroupFile g;
  try {
    g.source = j;
    g.name = j.value("name", "");
    g.kind = j.value("kind", "permutation");
    if (g.kind == "permutation") {
      std::size_t degree = j.at("degree").get<std::size_t>();
      std::vector<Permutation> gens;
      for (auto &p : j.at("generators"))
        gens.push_back(parse_permutation(p, degree));
      if (gens.empty())
        gens.push_back(parse_cycles("", degree));
      g.group = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(gens, limits));
    } else if (g.kind == "table") {
      auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
      auto G = FiniteGroup::from_table(table, limits);
      if (j.contains("generators")) {
        auto gens = j.at("generators").get<std::vector<std::size_t>>();
        std::vector<Elem> es;
        for (auto x : gens) {
          if (x >= G.order())
            parse_error("generator index out of range");
          es.push_back(Elem(x));
        }
        G.set_generators(std::move(es));
      }
      g.group = std::make_shared<FiniteGroup>(std::move(G));
    } else {
      parse_error("unknown group kind '" + g.kind + "'");
    }
    if (j.contains("primes"))
      g.primes = j.at("primes").get<std::vector<std::size_t>>();
    for (auto p : g.primes)
      if (!is_prime(p))
        parse_error(std::to_string(p) + " is not a prime");
    if (j.contains("subgroups"))
      g.subgroups = j.at("subgroups").get<std::map<std::string, std::string>>();
  } catch (const json::exception &e) {
    parse_error(std::string("group file: ") + e.what());
  }
  return g;
}

GroupFile load_group(const std::filesystem::path &path, const Limits &limits)
{
  auto g = parse_group(read_json(path), limits);
  if (g.name.empty())
    g.name = path.stem().string();
  return g;
}

std::vector<GroupFile> load_corpus(const std::filesystem::path &dir, const Limits &limits)
{
  std::vector<std::filesystem::path> files;
  for (auto &e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<GroupFile> out;
  for (auto &f : files)
    out.push_back(load_group(f, limits));
  return out;
}

Elem parse_element(const GroupFile &g, const std::string &text)
{
  const auto &G = *g.group;
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t += c;
  if (t.empty())
    parse_error("empty element");
  if (t[0] == '(') {
    if (!G.has_permutations())
      parse_error("cycle notation needs a permutation group");
    auto e = G.find_permutation(parse_cycles(t, G.degree()));
    if (!e)
      parse_error("permutation " + t + " is not in the group");
    return *e;
  }
  if (t[0] == '#') {
    std::size_t k = 0;
    try {
      k = std::stoul(t.substr(1));
    } catch (const std::exception &) {
      parse_error("bad element index " + t);
    }
    if (k >= G.order())
      parse_error("element index out of range: " + t);
    return Elem(k);
  }
  if (t == "e" || t == "1")
    return G.identity();
  const auto &gens = G.generators();
  Elem acc = G.identity();
  std::size_t i = 0;
  while (i < t.size()) {
    char c = t[i++];
    if (!std::isalpha(static_cast<unsigned char>(c)))
      parse_error("unexpected '" + std::string(1, c) + "' in word " + t);
    bool inv = std::isupper(static_cast<unsigned char>(c));
    std::size_t k = std::size_t(std::tolower(static_cast<unsigned char>(c)) - 'a');
    if (k >= gens.size())
      parse_error("no generator named " + std::string(1, c));
    long long e = 1;
    if (i < t.size() && t[i] == '^') {
      std::size_t j = ++i;
      if (j < t.size() && t[j] == '-')
        ++j;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j])))
        ++j;
      try {
        e = std::stoll(t.substr(i, j - i));
      } catch (const std::exception &) {
        parse_error("bad exponent in word " + t);
      }
      i = j;
    }
    acc = G.mul(acc, G.pow(gens[k], inv ? -e : e));
  }
  return acc;
}

Subgroup parse_subgroup(const GroupFile &g, const std::string &spec, std::size_t prime)
{
  const auto &G = *g.group;
  if (spec.rfind("gens:", 0) == 0) {
    std::vector<Elem> gens;
    std::string rest = spec.substr(5);
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto end = rest.find(';', start);
      if (end == std::string::npos)
        end = rest.size();
      auto part = rest.substr(start, end - start);
      if (part.find_first_not_of(" \t") != std::string::npos)
        gens.push_back(parse_element(g, part));
      start = end + 1;
    }
    return generate(G, gens);
  }
  if (spec.rfind("order:", 0) == 0) {
    std::string rest = spec.substr(6);
    std::size_t k = 0, idx = 0;
    bool indexed = false;
    try {
      auto hash = rest.find('#');
      k = std::stoul(rest.substr(0, hash));
      if (hash != std::string::npos) {
        idx = std::stoul(rest.substr(hash + 1));
        indexed = true;
      }
    } catch (const std::exception &) {
      parse_error("bad subgroup spec " + spec);
    }
    std::vector<Subgroup> hits;
    for (auto &N : normal_subgroups(G))
      if (N.order() == k)
        hits.push_back(N);
    if (hits.empty() || idx >= hits.size())
      throw Error(ErrorCode::NotFound, "no normal subgroup for " + spec);
    if (!indexed && hits.size() > 1)
      throw Error(ErrorCode::NotUnique, std::to_string(hits.size()) + " normal subgroups of order " +
                                            std::to_string(k) + "; add #i");
    return hits[idx];
  }
  if (spec == "whole" || spec == "G")
    return whole_group(G);
  if (spec == "trivial" || spec == "1")
    return trivial_subgroup(G);
  if (spec == "derived")
    return commutator_subgroup(G, whole_group(G), whole_group(G));
  if (spec == "O_p")
    return o_p(G, prime);
  if (spec == "O^p")
    return o_upper_p(G, prime);
  if (spec == "O_p'")
    return o_p_prime(G, prime);
  if (spec == "O^p'") {
    // generated by the p-elements
    std::vector<Elem> gens;
    for (std::size_t x = 0; x < G.order(); ++x)
      if (is_p_power(G.element_order(Elem(x)), prime))
        gens.push_back(Elem(x));
    return generate(G, gens);
  }
  auto it = g.subgroups.find(spec);
  if (it != g.subgroups.end() && it->second != spec)
    return parse_subgroup(g, it->second, prime);
  parse_error("unknown subgroup spec '" + spec + "'");
}

Morphism parse_morphism(const GroupFile &g, const Universe &U, const std::string &spec)
{
  auto caret = spec.rfind('^');
  // a '^' inside a word exponent is followed by a digit or '-'
  while (caret != std::string::npos && caret + 1 < spec.size() &&
         (std::isdigit(static_cast<unsigned char>(spec[caret + 1])) || spec[caret + 1] == '-'))
    caret = caret == 0 ? std::string::npos : spec.rfind('^', caret - 1);
  if (caret == std::string::npos)
    parse_error("morphism spec must be <subgroup>^<element>");
  auto P = parse_subgroup(g, spec.substr(0, caret), U.prime());
  Elem x = parse_element(g, spec.substr(caret + 1));
  auto id = U.find(P.mask());
  if (!id)
    parse_error("subgroup " + spec.substr(0, caret) + " is not contained in S");
  auto m = conjugation(U, *id, x);
  if (!m)
    parse_error("conjugate of the subgroup leaves S");
  return *m;
}

json save_system(const GroupFile &g, const FusionSystem &F)
{
  const auto &U = F.universe();
  json j;
  j["format"] = "fusion-system";
  j["version"] = 1;
  j["group"] = g.source;
  j["prime"] = U.prime();
  j["sylow"] = U.sylow().members();
  j["support"] = U.at(F.support()).members();
  if (F.realizer())
    j["realizer"] = F.realizer()->members();
  j["morphism_count"] = F.morphism_count();
  auto rec = generator_record(F);
  json classes = json::array();
  for (auto &c : rec.classes)
    classes.push_back({{"representative", U.at(c.representative).members()},
                       {"aut_generators", morphisms_to_json(U, c.aut_generators)},
                       {"bridges", morphisms_to_json(U, c.bridges)}});
  j["classes"] = classes;
  return j;
}

LoadedSystem load_system(const json &j, const Limits &limits)
{
  LoadedSystem out;
  try {
    if (j.value("format", "") != "fusion-system")
      parse_error("not a saved fusion system");
    if (j.at("version").get<int>() != 1)
      parse_error("unsupported version " + j.at("version").dump());
    out.group = parse_group(j.at("group"), limits);
    const auto &G = *out.group.group;
    auto p = j.at("prime").get<std::size_t>();
    auto U = Universe::create(out.group.group, p, Subgroup(j.at("sylow").get<std::vector<Elem>>(), G.order()),
                              limits);
    auto sub = [&](const json &members) {
      auto id = U->find(Subgroup(members.get<std::vector<Elem>>(), G.order()).mask());
      if (!id)
        parse_error("stored subgroup is not a subgroup of S");
      return *id;
    };
    GeneratorRecord rec;
    rec.support = sub(j.at("support"));
    for (auto &c : j.at("classes")) {
      GeneratorRecord::ClassEntry e;
      e.representative = sub(c.at("representative"));
      e.aut_generators = morphisms_from_json(*U, c.at("aut_generators"));
      e.bridges = morphisms_from_json(*U, c.at("bridges"));
      rec.classes.push_back(std::move(e));
    }
    auto F = from_generator_record(U, rec);
    if (F.morphism_count() != j.at("morphism_count").get<std::size_t>())
      parse_error("stored morphism count does not match the rebuilt system");
    if (j.contains("realizer")) {
      auto H = Subgroup(j.at("realizer").get<std::vector<Elem>>(), G.order());
      F = attach_realizer_if_equal(F, H);
      if (!F.realizer())
        parse_error("stored realizer does not realize the system");
    }
    out.system = F;
  } catch (const json::exception &e) {
    parse_error(std::string("saved system: ") + e.what());
  }
  return out;
}

LoadedSystem load_any(const std::filesystem::path &path, std::size_t prime, const Limits &limits)
{
  auto j = read_json(path);
  if (j.is_object() && j.value("format", "") == "fusion-system")
    return load_system(j, limits);
  LoadedSystem out;
  out.group = parse_group(j, limits);
  if (out.group.name.empty())
    out.group.name = path.stem().string();
  if (prime == 0) {
    if (out.group.primes.empty())
      parse_error("no prime given and the group file lists none");
    prime = out.group.primes.front();
  }
  out.system = fusion_of_group(Universe::create(out.group.group, prime, limits));
  return out;
}

} // namespace fusion
