#include "cyclo/specfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cyclo/signs.hpp"
#include "json.hpp"

namespace cyclo {

using json = nlohmann::json;

AinfCategory SpecFile::category() const { return cyclic ? derive_structure(cyc) : direct; }

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

int gen_of(const Quiver& q, const std::string& name) {
  int g = q.gen_index(name);
  if (g < 0) throw ResolutionError("unknown generator '" + name + "'");
  return g;
}

Word word_of(const Quiver& q, const json& arr) {
  Word w;
  for (auto& x : arr) w.push_back(gen_of(q, x.get<std::string>()));
  return w;
}

Quiver parse_quiver(const json& j) {
  Quiver q;
  for (auto& o : j.value("objects", json::array())) q.objects.push_back(o.get<std::string>());
  for (auto& g : j.value("generators", json::array())) {
    Generator gen;
    gen.name = g.at("name").get<std::string>();
    if (q.gen_index(gen.name) >= 0) throw ParseError("duplicate generator '" + gen.name + "'");
    for (auto [field, slot] : {std::pair{"src", &gen.src}, std::pair{"dst", &gen.dst}}) {
      std::string o = g.at(field).get<std::string>();
      *slot = q.obj_index(o);
      if (*slot < 0) throw ResolutionError("unknown object '" + o + "'");
    }
    gen.degree = g.at("degree").get<int>();
    q.gens.push_back(gen);
  }
  q.finalize();
  return q;
}

int orbit_of(const ContactData& c, const std::string& name, const std::set<std::string>& bad) {
  if (bad.count(name)) throw ResolutionError("bad orbit '" + name + "' used in counts");
  int o = c.orbit_index(name);
  if (o < 0) throw ResolutionError("unknown orbit '" + name + "'");
  return o;
}

ContactData parse_contact(const json& j, const Quiver& q, Field field) {
  ContactData c;
  c.field = field;
  c.half_dim = j.at("half_dim").get<int>();
  std::set<std::string> bad;
  for (auto& o : j.value("orbits", json::array())) {
    Orbit orb{o.at("name").get<std::string>(), o.at("mu_cz").get<int>(), get_or(o, "kappa", 1),
              get_or(o, "good", true)};
    if (orb.kappa < 1) throw ParseError("multiplicity of '" + orb.name + "' must be >= 1");
    if (!orb.good) {
      bad.insert(orb.name);
      continue;
    }
    c.orbits.push_back(orb);
  }
  auto orbits = [&](const json& arr) {
    std::vector<int> out;
    for (auto& x : arr) out.push_back(orbit_of(c, x.get<std::string>(), bad));
    return out;
  };
  for (auto& e : j.value("diff_counts", json::array()))
    c.diff_counts.push_back(
        {orbit_of(c, e.at("plus").get<std::string>(), bad), orbits(e.at("minus")),
         e.at("value").get<long>()});
  for (auto& e : j.value("pair_counts", json::array())) {
    auto plus = orbits(e.at("plus"));
    if (plus.size() != 2) throw ParseError("pair count needs two positive orbits");
    c.pair_counts.push_back({plus[0], plus[1], orbits(e.at("minus")), e.at("value").get<long>()});
  }
  json aug = j.value("aug", json::object());
  for (auto& [k, v] : aug.items()) c.aug[orbit_of(c, k, bad)] = v;
  for (auto& e : j.value("aug2", json::array())) {
    auto p = orbits(e.at("pair"));
    if (p.size() != 2) throw ParseError("aug2 entry needs two orbits");
    c.aug2[{p[0], p[1]}] = e.at("value").get<long>();
  }
  std::vector<RelateCount> rel;
  for (auto& e : j.value("relate_counts", json::array())) {
    RelateCount r{orbits(e.at("orbits")), word_of(q, e.at("word")), e.at("value").get<long>()};
    if (r.orbits.empty() || r.orbits.size() > 2) throw ParseError("relate count needs 1 or 2 orbits");
    if (!q.cyclic(r.word)) throw ParseError("relate word " + q.word_name(r.word) + " not cyclic");
    rel.push_back(r);
  }
  if (get_or<std::string>(j, "relate_closure", "rotations") == "rotations") {
    std::vector<RelateCount> closed = rel;
    for (auto& r : rel)
      for (auto& [sign, u] : rotations(q, r.word)) {
        bool have = false;
        for (auto& x : closed) have = have || (x.orbits == r.orbits && x.word == u);
        if (!have) closed.push_back({r.orbits, u, sign * r.value});
      }
    rel = closed;
  }
  c.relate_counts = rel;
  return c;
}

GenSum gensum(const json& out, const std::vector<BasisElement>& basis, Field f) {
  GenSum g;
  for (auto& [k, v] : out.items()) {
    int idx = -1;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == k) idx = i;
    if (idx < 0) throw ResolutionError("unknown basis element '" + k + "'");
    accumulate(g, idx, Scalar(v.get<long>(), f));
  }
  return g;
}

int basis_of(const std::vector<BasisElement>& basis, const std::string& name) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].name == name) return i;
  throw ResolutionError("unknown basis element '" + name + "'");
}

}  // namespace

SpecFile parse_spec(const std::string& text, std::optional<Field> field_override) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("offset ") + std::to_string(e.byte) + ": " + e.what());
  }
  SpecFile s;
  try {
    s.field = field_override ? *field_override : parse_field(get_or<std::string>(j, "field", "rational"));
    Quiver q = parse_quiver(j);
    if (j.contains("options")) {
      auto& o = j["options"];
      s.options.N = get_or(o, "N", s.options.N);
      s.options.W = get_or(o, "W", s.options.W);
      s.options.max_arity = get_or(o, "max_arity", s.options.max_arity);
      s.options.normalize_kappa = get_or(o, "normalize_kappa", false);
    }
    if (j.contains("cy_dim") || j.contains("star") || j.contains("counts")) {
      s.cyclic = true;
      CyclicStructure& c = s.cyc;
      c.quiver = q;
      c.field = s.field;
      c.cy_dim = j.at("cy_dim").get<int>();
      c.star.assign(q.gens.size(), -1);
      for (auto& pr : j.value("star", json::array())) {
        int a = gen_of(q, pr.at(0).get<std::string>()), b = gen_of(q, pr.at(1).get<std::string>());
        c.star[a] = b;
        c.star[b] = a;
      }
      for (std::size_t g = 0; g < q.gens.size(); ++g)
        if (c.star[g] < 0) throw ResolutionError("generator '" + q.gens[g].name + "' has no dual");
      if (j.contains("copairing")) {
        auto& cp = j["copairing"];
        std::string mode = get_or<std::string>(cp, "mode", "default");
        if (mode == "symmetric") c.copairing_mode = 1;
        else if (mode == "antisymmetric") c.copairing_mode = -1;
        else if (mode != "default") throw ParseError("unknown copairing mode '" + mode + "'");
        json weights = cp.value("weights", json::object());
        for (auto& [k, v] : weights.items())
          c.weight_override[gen_of(q, k)] = v.get<int>();
      }
      for (auto& e : j.value("counts", json::array())) {
        Word w = word_of(q, e.at("tuple"));
        if (w.size() < 2) throw ParseError("count tuple " + q.word_name(w) + " shorter than 2");
        if (!q.cyclic(w)) throw ParseError("count tuple " + q.word_name(w) + " not cyclic");
        c.counts[w] += e.at("value").get<long>();
      }
      if (get_or<std::string>(j, "count_closure", "rotations") == "rotations")
        c = close_under_rotation(c);
    } else {
      s.direct.quiver = q;
      s.direct.field = s.field;
      for (auto& e : j.value("structure", json::array())) {
        Word in = word_of(q, e.at("in"));
        int out = gen_of(q, e.at("out").get<std::string>());
        if (in.empty()) throw ParseError("structure entry with no inputs");
        s.direct.set_m(out, in, e.at("value").get<long>());
      }
    }
    if (j.contains("contact")) {
      s.contact = parse_contact(j["contact"], q, s.field);
      s.contact->normalize_kappa = s.options.normalize_kappa;
    }
    if (j.contains("linfty")) {
      auto& l = j["linfty"];
      std::vector<BasisElement> basis;
      for (auto& b : l.at("basis")) basis.push_back({b.at("name"), b.at("degree")});
      if (l.contains("bracket")) {
        BracketTable t;
        t.basis = basis;
        t.field = s.field;
        for (auto& e : l["bracket"]) {
          int a = basis_of(basis, e.at("in").at(0)), b = basis_of(basis, e.at("in").at(1));
          t.table[{a, b}] = gensum(e.at("out"), basis, s.field);
        }
        // a pair listed in one order only is completed by graded antisymmetry
        auto listed = t.table;
        for (auto& [ab, v] : listed) {
          std::pair<int, int> ba{ab.second, ab.first};
          if (listed.count(ba)) continue;
          int sign = -parity_sign(static_cast<long>(basis[ab.first].degree) * basis[ab.second].degree);
          GenSum w;
          for (auto& [o, c] : v) accumulate(w, o, c.signed_by(sign));
          t.table[ba] = w;
        }
        s.lie_bracket = t;
      }
      if (l.contains("taylor")) {
        LinftyAlgebra alg;
        alg.basis = basis;
        alg.field = s.field;
        for (auto& e : l["taylor"]) {
          Wedge w;
          for (auto& x : e.at("in")) w.push_back(basis_of(basis, x));
          auto [sign, cw] = canonicalize(alg, w);
          if (!sign) throw ParseError("taylor entry on a vanishing wedge word");
          GenSum g = gensum(e.at("out"), basis, s.field);
          for (auto& [o, c] : g) accumulate(alg.taylor[cw], o, c.signed_by(sign));
        }
        s.linfty = alg;
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return s;
}

SpecFile load_spec(const std::string& path, std::optional<Field> field_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), field_override);
}

}  // namespace cyclo
