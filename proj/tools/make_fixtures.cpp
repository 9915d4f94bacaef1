// Back-solves the coupled contact/category fixture and writes it with its mutants.
//
// Relating cochains are built from indicator cochains on cycpair with the
// library's bracket and coboundary, so the chain map and the arity-2 identity
// hold by construction; the tool re-checks both before writing anything.

#include <fstream>
#include <iostream>
#include <set>

#include "cyclo/contact.hpp"
#include "cyclo/liebi.hpp"
#include "cyclo/specfile.hpp"
#include "json.hpp"

using namespace cyclo;
using ojson = nlohmann::ordered_json;

namespace {

CyclicCochain combine(const CyclicCochain& f, const CyclicCochain& g, long cg, int N) {
  CyclicCochain out = f;
  out.N = N;
  for (auto& [w, v] : g.values) {
    Scalar t = v * Scalar(cg, v.field());
    auto it = out.values.find(w);
    if (it == out.values.end()) out.values.emplace(w, t);
    else if ((it->second += t).is_zero()) out.values.erase(it);
  }
  return out;
}

long as_long(const Scalar& s) {
  if (!s.is_integer()) throw std::runtime_error("non-integer relating value " + s.str());
  return s.value().get_num().get_si();
}

const Quiver* g_quiver = nullptr;
const Quiver& data_quiver() { return *g_quiver; }

void add_relate(ContactData& data, std::vector<int> os, const CyclicCochain& f) {
  for (auto& [w, v] : f.values) {
    std::set<Word> seen;
    for (auto& [sign, u] : rotations(data_quiver(), w))
      if (seen.insert(u).second) data.relate_counts.push_back({os, u, sign * as_long(v)});
  }
}

ojson orbit_json(const Orbit& o) {
  return ojson{{"name", o.name}, {"mu_cz", o.mu_cz}, {"kappa", o.kappa}};
}

ojson contact_json(const ContactData& d, const Quiver& q) {
  ojson c;
  c["half_dim"] = d.half_dim;
  c["orbits"] = ojson::array();
  for (auto& o : d.orbits) c["orbits"].push_back(orbit_json(o));
  c["diff_counts"] = ojson::array();
  for (auto& e : d.diff_counts) {
    ojson minus = ojson::array();
    for (int m : e.minus) minus.push_back(d.orbits[m].name);
    c["diff_counts"].push_back({{"plus", d.orbits[e.plus].name}, {"minus", minus}, {"value", e.value}});
  }
  c["pair_counts"] = ojson::array();
  for (auto& e : d.pair_counts) {
    ojson minus = ojson::array();
    for (int m : e.minus) minus.push_back(d.orbits[m].name);
    c["pair_counts"].push_back({{"plus", {d.orbits[e.plus1].name, d.orbits[e.plus2].name}},
                                {"minus", minus},
                                {"value", e.value}});
  }
  c["relate_counts"] = ojson::array();
  for (auto& r : d.relate_counts) {
    if (canonical(q, r.word).rep != r.word) continue;
    ojson os = ojson::array(), word = ojson::array();
    for (int o : r.orbits) os.push_back(d.orbits[o].name);
    for (int g : r.word) word.push_back(q.gens[g].name);
    c["relate_counts"].push_back({{"orbits", os}, {"word", word}, {"value", r.value}});
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make-fixtures FIXTURE_DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::ifstream in(dir + "/cycpair.json");
  ojson base = ojson::parse(in);
  base.erase("hand_tables");
  SpecFile spec = load_spec(dir + "/cycpair.json");
  const CyclicStructure& cyc = spec.cyc;
  const Quiver& q = cyc.quiver;
  AinfCategory cat = derive_structure(cyc);
  g_quiver = &q;
  const int N = 5;

  auto word = [&](std::initializer_list<const char*> names) {
    Word w;
    for (auto* n : names) w.push_back(q.gen_index(n));
    return canonical(q, w).rep;
  };
  CyclicCochain phi = basis_cochain(q, word({"p*", "r*"}), N);
  CyclicCochain chi = basis_cochain(q, word({"p", "r"}), N);
  CyclicCochain bphi = coboundary(cat, cyc, phi);
  CyclicCochain f_c = combine(bracket(cyc, phi, chi), bphi, 1, N);

  ContactData d;
  d.half_dim = 2;
  d.orbits = {{"ga", 2, 1, true}, {"gb", 1, 1, true}, {"ge", 0, 1, true}, {"gc", 1, 1, true}};
  enum { A, B, E, C };
  d.diff_counts = {{A, {B}, 1}};
  d.pair_counts = {{A, E, {C}, 1}, {E, A, {C}, 1}};
  add_relate(d, {A}, phi);
  add_relate(d, {B}, bphi);
  add_relate(d, {E}, chi);
  add_relate(d, {C}, f_c);
  add_relate(d, {A, E}, phi);
  add_relate(d, {E, A}, phi);

  bool ok = true;
  for (auto& r : {check_d_squared(d), check_cl_skew(d), check_chain_map(d, cyc, N),
                  linfty_morphism_residual(d, cyc, 2, N)}) {
    if (r.pass) continue;
    ok = false;
    std::cerr << r.check << " fails";
    for (auto& w : r.witnesses) std::cerr << "\n  " << w;
    std::cerr << "\n";
  }
  if (!ok) return 1;

  ojson tables;
  for (auto [name, f] : {std::pair{"ga", &phi}, std::pair{"gb", &bphi}, std::pair{"ge", &chi},
                         std::pair{"gc", &f_c}}) {
    ojson t = ojson::object();
    for (auto& [w, v] : f->values) t[q.word_name(w)] = as_long(v);
    tables[name] = t;
  }

  auto write = [&](const std::string& name, const ContactData& data) {
    ojson out = base;
    out["contact"] = contact_json(data, q);
    out["relating_table"] = tables;
    out["options"] = {{"N", N}};
    std::ofstream(dir + "/" + name) << out.dump(2) << "\n";
  };
  write("cl-fuk-toy.json", d);

  ContactData perturbed = d;
  for (auto& r : perturbed.relate_counts)
    if (r.orbits == std::vector<int>{B} && r.word == word({"p", "p*"})) r.value += 1;
  write("cl-fuk-toy-perturbed.json", perturbed);

  ContactData r2zero = d;
  std::erase_if(r2zero.relate_counts, [](const RelateCount& r) { return r.orbits.size() == 2; });
  write("cl-fuk-toy-r2zero.json", r2zero);
  return 0;
}
