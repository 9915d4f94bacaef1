#include "cyclo/contact.hpp"

#include "cyclo/hoch.hpp"
#include "cyclo/signs.hpp"

namespace cyclo {

long ContactData::epsilon(int o) const {
  auto it = aug.find(o);
  return it == aug.end() ? 0 : it->second;
}

long ContactData::epsilon2(int a, int b) const {
  auto it = aug2.find({a, b});
  if (it != aug2.end()) return it->second;
  it = aug2.find({b, a});
  return it == aug2.end() ? 0 : it->second;
}

int ContactData::orbit_index(const std::string& name) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].name == name) return static_cast<int>(i);
  return -1;
}

SpacePtr ContactData::space() const {
  auto s = std::make_shared<GradedSpace>();
  for (std::size_t i = 0; i < orbits.size(); ++i) s->add(orbits[i].name, grading(i));
  return s;
}

namespace {

Scalar ratio(const ContactData& data, const mpz_class& num, const mpz_class& den) {
  return Scalar(mpq_class(num, den), data.field);
}

int total_grading(const ContactData& data, const std::vector<int>& os) {
  int t = 0;
  for (int o : os) t += data.grading(o);
  return t;
}

bool differential_entry(const ContactData& data, const DiffCount& c) {
  return !c.minus.empty() && total_grading(data, c.minus) == data.grading(c.plus) - 1 &&
         data.grading(c.minus[0]) == data.grading(c.plus) - 1;
}

}  // namespace

SparseMap contact_differential(const ContactData& data) {
  auto sp = data.space();
  SparseMap d(sp, sp, -1, data.field);
  for (auto& c : data.diff_counts) {
    if (!differential_entry(data, c)) continue;
    mpz_class num = c.value, den = 1;
    for (std::size_t i = 0; i < c.minus.size(); ++i) {
      den *= data.orbits[c.minus[i]].kappa;
      if (i > 0) num *= data.epsilon(c.minus[i]);
    }
    d.add(c.minus[0], c.plus, ratio(data, num, den));
  }
  return d;
}

ValidationReport check_d_squared(const ContactData& data) {
  ValidationReport rep{"contact-d2"};
  SparseMap d = contact_differential(data);
  SparseMap sq = compose(d, d);
  for (auto& [k, v] : sq.entries())
    rep.fail("d^2(" + data.orbits[k.second].name + ") has " + v.str() + "*" +
             data.orbits[k.first].name);
  return rep;
}

ValidationReport check_contact_data(const ContactData& data, const Quiver* q) {
  ValidationReport rep{"contact-data"};
  for (auto& o : data.orbits) {
    if (!o.good) rep.fail("bad orbit " + o.name + " listed");
    if (o.kappa < 1) rep.fail("multiplicity of " + o.name + " below 1");
  }
  for (auto& c : data.diff_counts) {
    if (c.minus.empty()) {
      rep.fail("differential count of " + data.orbits[c.plus].name + " without negative end");
      continue;
    }
    if (c.value == 0) continue;
    if (total_grading(data, c.minus) != data.grading(c.plus) - 1 && c.minus.size() < 2)
      rep.fail("grading of count at " + data.orbits[c.plus].name);
  }
  if (q)
    for (auto& r : data.relate_counts)
      if (!q->cyclic(r.word)) rep.fail("relate word " + q->word_name(r.word) + " not cyclic");
  return rep;
}

OrbitSum cl_bracket(const ContactData& data, int g1, int g2) {
  OrbitSum out;
  auto add = [&](int o, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = out.find(o);
    if (it == out.end()) {
      out.emplace(o, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) out.erase(it);
  };
  for (auto& c : data.pair_counts) {
    if (c.plus1 != g1 || c.plus2 != g2 || c.minus.empty()) continue;
    mpz_class num = c.value, den = 1;
    for (std::size_t i = 0; i < c.minus.size(); ++i) {
      den *= data.orbits[c.minus[i]].kappa;
      if (i > 0) num *= data.epsilon(c.minus[i]);
    }
    add(c.minus[0], ratio(data, num, den));
  }
  for (auto& c : data.diff_counts) {
    if (c.minus.size() < 2) continue;
    for (int side = 0; side < 2; ++side) {
      const int plus = side == 0 ? g1 : g2;
      const int other = side == 0 ? g2 : g1;
      if (c.plus != plus) continue;
      mpz_class num = c.value, den = 1;
      for (std::size_t i = 0; i < c.minus.size(); ++i) {
        den *= data.orbits[c.minus[i]].kappa;
        if (i > 0 && i + 1 < c.minus.size()) num *= data.epsilon(c.minus[i]);
      }
      num *= data.epsilon2(other, c.minus.back());
      add(c.minus[0], ratio(data, num, den));
    }
  }
  return out;
}

ValidationReport check_cl_skew(const ContactData& data) {
  ValidationReport rep{"cl-skew"};
  const int n = static_cast<int>(data.orbits.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      OrbitSum r = cl_bracket(data, a, b);
      int sign = parity_sign(static_cast<long>(data.grading(a)) * data.grading(b));
      for (auto& [o, v] : cl_bracket(data, b, a)) {
        auto it = r.find(o);
        Scalar t = v.signed_by(sign);
        if (it == r.end()) r.emplace(o, t);
        else if ((it->second += t).is_zero()) r.erase(it);
      }
      for (auto& [o, v] : r)
        rep.fail("[" + data.orbits[a].name + "," + data.orbits[b].name + "] skew residual " +
                 v.str() + "*" + data.orbits[o].name);
    }
  return rep;
}

std::map<std::pair<int, int>, Scalar> cl_cobracket(const ContactData& data, int g) {
  std::map<std::pair<int, int>, Scalar> out;
  for (auto& c : data.diff_counts) {
    if (c.plus != g || c.minus.size() < 2) continue;
    mpz_class num = c.value, den = 1;
    for (std::size_t i = 0; i < c.minus.size(); ++i) {
      den *= data.orbits[c.minus[i]].kappa;
      if (i > 1) num *= data.epsilon(c.minus[i]);
    }
    int a = c.minus[0], b = c.minus[1], sign = 1;
    if (a > b) {
      std::swap(a, b);
      sign = -parity_sign(static_cast<long>(data.grading(a)) * data.grading(b));
    } else if (a == b && data.grading(a) % 2 == 0) {
      continue;
    }
    Scalar v = ratio(data, num, den).signed_by(sign);
    if (v.is_zero()) continue;
    auto it = out.find({a, b});
    if (it == out.end()) out.emplace(std::make_pair(a, b), v);
    else if ((it->second += v).is_zero()) out.erase(it);
  }
  return out;
}

namespace {

const RelateCount* find_relate(const ContactData& data, const std::vector<int>& os, const Word& w) {
  for (auto& r : data.relate_counts)
    if (r.orbits == os && r.word == w) return &r;
  return nullptr;
}

CyclicCochain build(const ContactData& data, const CyclicStructure& cyc,
                    const std::vector<int>& os, int N) {
  CyclicCochain f;
  f.N = N;
  mpz_class den = 1;
  if (data.normalize_kappa)
    for (int o : os) den *= data.orbits[o].kappa;
  bool have_degree = false;
  for (auto& r : data.relate_counts) {
    if (r.orbits != os || r.value == 0) continue;
    Canon c = canonical(cyc.quiver, r.word);
    if (c.sign == 0) throw NotCyclicInvariant("relate count on killed orbit " +
                                              cyc.quiver.word_name(r.word));
    if (static_cast<int>(r.word.size()) > N) continue;
    if (f.values.count(c.rep)) continue;
    f.values.emplace(c.rep, Scalar(mpq_class(r.value * c.sign, den), data.field));
    if (!have_degree) f.degree = -cyc.quiver.edeg(r.word), have_degree = true;
  }
  return f;
}

std::string orbit_names(const ContactData& data, const std::vector<int>& os) {
  std::string out;
  for (int o : os) out += (out.empty() ? "" : ",") + data.orbits[o].name;
  return out;
}

}  // namespace

ValidationReport check_relate_invariance(const ContactData& data, const CyclicStructure& cyc) {
  ValidationReport rep{"relate-cyclic"};
  for (auto& r : data.relate_counts) {
    if (!cyc.quiver.cyclic(r.word)) {
      rep.fail("relate word " + cyc.quiver.word_name(r.word) + " not cyclically composable");
      continue;
    }
    auto [rs, u] = rotate_once(cyc.quiver, r.word);
    const RelateCount* o = find_relate(data, r.orbits, u);
    long ov = o ? o->value : 0;
    bool ok = data.field == Field::Mod2 ? (r.value - rs * ov) % 2 == 0 : r.value == rs * ov;
    if (!ok)
      rep.fail("R(" + orbit_names(data, r.orbits) + ";" + cyc.quiver.word_name(r.word) + ")=" +
               std::to_string(r.value) + " but rotation gives " + std::to_string(rs * ov));
  }
  return rep;
}

CyclicCochain relating_map(const ContactData& data, const CyclicStructure& cyc, int g, int N) {
  auto rep = check_relate_invariance(data, cyc);
  for (auto& w : rep.witnesses)
    if (w.rfind("R(" + data.orbits[g].name + ";", 0) == 0) throw NotCyclicInvariant(w);
  return build(data, cyc, {g}, N);
}

CyclicCochain relating_map2(const ContactData& data, const CyclicStructure& cyc, int g1, int g2,
                            int N) {
  return build(data, cyc, {g1, g2}, N);
}

namespace {

void require(const ContactData& data, const CyclicStructure& cyc) {
  std::vector<ValidationReport> gates{check_contact_data(data, &cyc.quiver), check_d_squared(data),
                                      check_relate_invariance(data, cyc), check_cyclic(cyc),
                                      check_star(cyc)};
  gates.push_back(check_ainf(derive_structure(cyc), cyc.max_length()));
  for (auto& g : gates)
    if (!g.pass) throw PreconditionFailed(g.check + ": " + g.witnesses.front());
}

Scalar sum_eval(const CyclicStructure& cyc, const CyclicCochain& f, const WordSum& x) {
  Scalar acc = Scalar::zero(cyc.field);
  for (auto& [w, v] : x) acc += v * evaluate(cyc, f, w);
  return acc;
}

}  // namespace

ValidationReport check_chain_map(const ContactData& data, const CyclicStructure& cyc, int N,
                                 bool checked) {
  if (checked) require(data, cyc);
  ValidationReport rep{"chain-map"};
  AinfCategory cat = derive_structure(cyc);
  SparseMap d = contact_differential(data);
  const int n = static_cast<int>(data.orbits.size());
  std::vector<CyclicCochain> f;
  for (int g = 0; g < n; ++g) f.push_back(build(data, cyc, {g}, N));
  for (int g = 0; g < n; ++g)
    for (auto& w : orbit_representatives(cyc.quiver, N - 2)) {
      Scalar r = -sum_eval(cyc, f[g], cyclic_b(cat, w));
      for (auto& [k, v] : d.entries())
        if (k.second == g) r += v * evaluate(cyc, f[k.first], w);
      if (!r.is_zero())
        rep.fail("orbit " + data.orbits[g].name + " on " + cyc.quiver.word_name(w) + ": " +
                 r.str());
    }
  return rep;
}

ValidationReport linfty_morphism_residual(const ContactData& data, const CyclicStructure& cyc,
                                          int k, int N, bool checked) {
  if (k == 1) {
    auto r = check_chain_map(data, cyc, N, checked);
    r.check = "linfty-1";
    return r;
  }
  if (k != 2) throw std::invalid_argument("relating counts are supplied up to arity 2 only");
  if (checked) {
    require(data, cyc);
    auto cm = check_chain_map(data, cyc, N, false);
    if (!cm.pass) throw PreconditionFailed("chain-map: " + cm.witnesses.front());
  }
  ValidationReport rep{"linfty-2"};
  AinfCategory cat = derive_structure(cyc);
  SparseMap d = contact_differential(data);
  const int n = static_cast<int>(data.orbits.size());
  std::vector<CyclicCochain> f1;
  for (int g = 0; g < n; ++g) f1.push_back(build(data, cyc, {g}, N));
  std::map<std::pair<int, int>, CyclicCochain> f2;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f2[{a, b}] = build(data, cyc, {a, b}, N);
  auto words = orbit_representatives(cyc.quiver, N - 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      OrbitSum br = cl_bracket(data, a, b);
      for (auto& w : words) {
        Scalar r = bracket_at(cyc, f1[a], f1[b], w);
        for (auto& [o, c] : br) r -= c * evaluate(cyc, f1[o], w);
        for (auto& [kk, v] : d.entries()) {
          if (kk.second == a) r -= v * evaluate(cyc, f2[{kk.first, b}], w);
          if (kk.second == b)
            r -= (v * evaluate(cyc, f2[{a, kk.first}], w)).signed_by(parity_sign(data.grading(a)));
        }
        r += sum_eval(cyc, f2[{a, b}], cyclic_b(cat, w));
        if (!r.is_zero())
          rep.fail("(" + data.orbits[a].name + "," + data.orbits[b].name + ") on " +
                   cyc.quiver.word_name(w) + ": " + r.str());
      }
    }
  return rep;
}

}  // namespace cyclo
