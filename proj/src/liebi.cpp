#include "cyclo/liebi.hpp"

#include <algorithm>

#include "cyclo/signs.hpp"

namespace cyclo {

void accumulate(PairSum& into, const std::pair<Word, Word>& k, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = into.find(k);
  if (it == into.end()) {
    into.emplace(k, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) into.erase(it);
}

void accumulate(TripleSum& into, const std::tuple<Word, Word, Word>& k, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = into.find(k);
  if (it == into.end()) {
    into.emplace(k, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) into.erase(it);
}

PairSum cut(const CyclicStructure& cyc, const Word& w) {
  const Quiver& q = cyc.quiver;
  const int s = cyc.s();
  PairSum out;
  for (auto& [sr, u] : rotations(q, w)) {
    const int L = static_cast<int>(u.size());
    const int x = q.gens[u[0]].src;
    int degA = 0;
    for (int j = 0; j <= L; ++j) {
      if (j > 0) degA += q.e(u[j - 1]);
      const int y = j > 0 ? q.gens[u[j - 1]].dst : x;
      for (int p : q.hom(y, x)) {
        Word a(u.begin(), u.begin() + j), b{cyc.star[p]};
        a.push_back(p);
        b.insert(b.end(), u.begin() + j, u.end());
        Canon ca = canonical(q, a), cb = canonical(q, b);
        if (ca.sign == 0 || cb.sign == 0) continue;
        int sign = sr * cyc.weight(p) * parity_sign(static_cast<long>(s) * degA) * ca.sign * cb.sign;
        accumulate(out, {ca.rep, cb.rep}, Scalar(sign, cyc.field));
      }
    }
  }
  return out;
}

WordSum glue(const CyclicStructure& cyc, const Word& x, const Word& y) {
  const Quiver& q = cyc.quiver;
  const int s = cyc.s();
  WordSum out;
  auto rx = rotations(q, x), ry = rotations(q, y);
  for (auto& [sx, xp] : rx) {
    const int dx = q.edeg(xp);
    for (auto& [sy, yp] : ry) {
      const int dy = q.edeg(yp);
      for (int p : q.hom(q.gens[xp[0]].src, q.gens[yp[0]].src)) {
        const int ps = cyc.star[p];
        Word w = xp;
        w.push_back(p);
        w.insert(w.end(), yp.begin(), yp.end());
        w.push_back(ps);
        Canon c = canonical(q, w);
        if (c.sign == 0) continue;
        int sign = sx * sy * cyc.weight(p) * parity_sign(static_cast<long>(s) * dx) *
                   parity_sign(static_cast<long>(q.e(ps)) * dy) * c.sign;
        accumulate(out, c.rep, Scalar(sign, cyc.field));
      }
    }
  }
  return out;
}

CyclicCochain basis_cochain(const Quiver& q, const Word& rep, int N) {
  CyclicCochain f;
  f.values.emplace(rep, Scalar(1, Field::Rational));
  f.degree = -q.edeg(rep);
  f.N = N;
  return f;
}

namespace {

Scalar in_field(const Scalar& v, Field f) {
  return v.field() == f ? v : (f == Field::Mod2 ? to_mod2(v) : Scalar(v.value(), f));
}

}  // namespace

Scalar evaluate(const CyclicStructure& cyc, const CyclicCochain& f, const Word& w) {
  if (static_cast<int>(w.size()) > f.N)
    throw SupportOverflow("evaluation on " + cyc.quiver.word_name(w) + " exceeds support bound " +
                          std::to_string(f.N));
  Canon c = canonical(cyc.quiver, w);
  if (c.sign == 0) return Scalar::zero(cyc.field);
  auto it = f.values.find(c.rep);
  if (it == f.values.end()) return Scalar::zero(cyc.field);
  return in_field(it->second, cyc.field).signed_by(c.sign);
}

namespace {

Scalar evaluate_sum(const CyclicStructure& cyc, const CyclicCochain& f, const WordSum& x) {
  Scalar acc = Scalar::zero(cyc.field);
  for (auto& [w, v] : x) acc += v * evaluate(cyc, f, w);
  return acc;
}

}  // namespace

Scalar bracket_at(const CyclicStructure& cyc, const CyclicCochain& f, const CyclicCochain& g,
                  const Word& w) {
  if (static_cast<int>(w.size()) > std::min(f.N, g.N) - 2)
    throw SupportOverflow("bracket evaluation on " + cyc.quiver.word_name(w) +
                          " needs words beyond the support bound");
  Scalar acc = Scalar::zero(cyc.field);
  for (auto& [ab, c] : cut(cyc, w)) {
    Scalar fa = evaluate(cyc, f, ab.first);
    if (fa.is_zero()) continue;
    Scalar gb = evaluate(cyc, g, ab.second);
    long e = static_cast<long>(cyc.quiver.edeg(ab.second)) * cyc.quiver.edeg(ab.first);
    acc += (c * fa * gb).signed_by(parity_sign(e));
  }
  return acc;
}

CyclicCochain bracket(const CyclicStructure& cyc, const CyclicCochain& f, const CyclicCochain& g) {
  CyclicCochain out;
  out.N = std::min(f.N, g.N) - 2;
  out.degree = f.degree + g.degree + cyc.s();
  for (auto& w : orbit_representatives(cyc.quiver, out.N)) {
    if (-cyc.quiver.edeg(w) != out.degree) continue;
    Scalar v = bracket_at(cyc, f, g, w);
    if (!v.is_zero()) out.values.emplace(w, v);
  }
  return out;
}

Scalar cobracket_at(const CyclicStructure& cyc, const CyclicCochain& f, const Word& x,
                    const Word& y) {
  if (static_cast<int>(x.size() + y.size()) + 2 > f.N)
    throw SupportOverflow("cobracket evaluation on " + cyc.quiver.word_name(x) + "," +
                          cyc.quiver.word_name(y) + " exceeds the support bound");
  return evaluate_sum(cyc, f, glue(cyc, x, y));
}

PairCochain cobracket(const CyclicStructure& cyc, const CyclicCochain& f) {
  PairCochain out;
  out.N = f.N - 2;
  out.degree = f.degree + cyc.s();
  auto reps = orbit_representatives(cyc.quiver, out.N);
  for (auto& x : reps)
    for (auto& y : reps) {
      if (static_cast<int>(x.size() + y.size()) > out.N) continue;
      Scalar v = cobracket_at(cyc, f, x, y);
      if (!v.is_zero()) out.values.emplace(std::make_pair(x, y), v);
    }
  return out;
}

CyclicCochain coboundary(const AinfCategory& cat, const CyclicStructure& cyc,
                         const CyclicCochain& f) {
  CyclicCochain out;
  out.N = f.N;
  out.degree = f.degree - 1;  // b lowers word degree by one
  for (auto& w : orbit_representatives(cyc.quiver, f.N)) {
    Scalar v = evaluate_sum(cyc, f, cyclic_b(cat, w));
    if (!v.is_zero()) out.values.emplace(w, v);
  }
  return out;
}

bool AxiomReport::pass() const {
  return std::all_of(families.begin(), families.end(), [](auto& f) { return f.pass; });
}

const ValidationReport& AxiomReport::family(const std::string& name) const {
  for (auto& f : families)
    if (f.check == name) return f;
  throw std::out_of_range("no axiom family " + name);
}

std::vector<std::string> AxiomReport::failing() const {
  std::vector<std::string> out;
  for (auto& f : families)
    if (!f.pass) out.push_back(f.check);
  return out;
}

const std::vector<std::string>& axiom_families() {
  static const std::vector<std::string> names{
      "skew",        "jacobi",   "chain-compat", "co-jacobi", "coboundary-compat",
      "drinfeld",    "involutivity", "degree"};
  return names;
}

namespace {

constexpr std::size_t kMaxWitnesses = 20;

void note(ValidationReport& r, const std::string& w) {
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(w);
  r.pass = false;
}

std::string names(const Quiver& q, std::initializer_list<const Word*> ws) {
  std::string out;
  for (auto* w : ws) out += (out.empty() ? "" : " | ") + q.word_name(*w);
  return out;
}

int sgnp(long e) { return parity_sign(e); }

}  // namespace

ValidationReport degree_ledger(const CyclicStructure& cyc, int N) {
  const Quiver& q = cyc.quiver;
  ValidationReport rep{"degree-ledger"};
  const int expect = cyc.cy_dim - 2;
  for (int L = 1; L + 2 <= N; ++L)
    for (auto& w : q.cyclic_words(L)) {
      const int dw = q.edeg(w);
      for (int r = 0; r < L; ++r)
        for (int j = 0; j <= L; ++j) {
          Word u(w.begin() + r, w.end());
          u.insert(u.end(), w.begin(), w.begin() + r);
          const int x = q.gens[u[0]].src;
          const int y = j > 0 ? q.gens[u[j - 1]].dst : x;
          for (int p : q.hom(y, x)) {
            Word a(u.begin(), u.begin() + j), b{cyc.star[p]};
            a.push_back(p);
            b.insert(b.end(), u.begin() + j, u.end());
            // cochain degree is minus the word degree
            int diff = -(q.edeg(a) + q.edeg(b)) - (-dw);
            if (diff != expect)
              note(rep, "split of " + q.word_name(w) + " at " + std::to_string(j) + " with " +
                            q.gens[p].name + ": degree change " + std::to_string(diff));
          }
        }
    }
  return rep;
}

AxiomReport verify_bialgebra(const CyclicStructure& cyc, int N, int W, bool checked) {
  if (W < 1 || W > N - 4) throw std::invalid_argument("window W must satisfy 1 <= W <= N-4");
  const Quiver& q = cyc.quiver;
  const int s = cyc.s();
  auto D = [&](const Word& w) { return static_cast<long>(q.edeg(w)); };

  std::optional<AinfCategory> cat;
  std::string cat_error;
  try {
    cat = derive_structure(cyc);
  } catch (const std::exception& e) {
    cat_error = e.what();
  }
  if (checked) {
    if (!cat) throw PreconditionFailed(cat_error);
    for (auto r : {check_ainf(*cat, cyc.max_length()), check_cyclic(cyc), check_star(cyc)})
      if (!r.pass) throw PreconditionFailed(r.check + ": " + r.witnesses.front());
  }

  auto reps = orbit_representatives(q, W);
  std::vector<std::pair<Word, Word>> pairs;
  std::vector<std::tuple<Word, Word, Word>> triples;
  for (auto& x : reps)
    for (auto& y : reps) {
      if (x.size() + y.size() <= static_cast<std::size_t>(W)) pairs.push_back({x, y});
      for (auto& z : reps)
        if (x.size() + y.size() + z.size() <= static_cast<std::size_t>(W))
          triples.push_back({x, y, z});
    }

  AxiomReport out;
  for (auto& n : axiom_families()) out.families.push_back({n});
  auto fam = [&](const std::string& n) -> ValidationReport& {
    for (auto& f : out.families)
      if (f.check == n) return f;
    throw std::logic_error(n);
  };
  auto bsum = [&](const Word& w) { return cyclic_b(*cat, w); };
  const int skew_sign = sgnp(s + 1);

  for (auto& w : reps) {
    PairSum cw = cut(cyc, w);
    // skew
    {
      PairSum r;
      for (auto& [ab, c] : cw) {
        accumulate(r, ab, c);
        accumulate(r, {ab.second, ab.first},
                   -c.signed_by(skew_sign * sgnp(D(ab.first) * D(ab.second))));
      }
      for (auto& [ab, c] : r)
        note(fam("skew"), "bracket on " + names(q, {&ab.first, &ab.second}) + " at " +
                              q.word_name(w) + ": " + c.str());
    }
    // Jacobi
    {
      TripleSum t, r;
      for (auto& [ab, c] : cw)
        for (auto& [xy, c2] : cut(cyc, ab.first))
          accumulate(t, {xy.first, xy.second, ab.second}, c * c2);
      for (auto& [k, v] : t) {
        auto& [x, y, z] = k;
        accumulate(r, {x, y, z}, v);
        accumulate(r, {z, x, y}, v.signed_by(sgnp(D(z) * (D(x) + D(y)))));
        accumulate(r, {y, z, x}, v.signed_by(sgnp(D(x) * (D(y) + D(z)))));
      }
      for (auto& [k, v] : r)
        note(fam("jacobi"), "cochains " +
                                names(q, {&std::get<0>(k), &std::get<1>(k), &std::get<2>(k)}) +
                                " at " + q.word_name(w) + ": " + v.str());
    }
    // involutivity
    {
      WordSum r;
      for (auto& [ab, c] : cw)
        for (auto& [u, c2] : glue(cyc, ab.first, ab.second)) accumulate(r, u, c * c2);
      for (auto& [u, v] : r)
        note(fam("involutivity"), "cochain " + q.word_name(u) + " at " + q.word_name(w) + ": " +
                                      v.str());
    }
    // degree
    for (auto& [ab, c] : cw)
      if (D(ab.first) + D(ab.second) != D(w) + s)
        note(fam("degree"), "bracket term " + names(q, {&ab.first, &ab.second}) + " at " +
                                q.word_name(w));
    // chain compatibility
    if (!cat) {
      note(fam("chain-compat"), "structure maps unavailable: " + cat_error);
    } else {
      PairSum r;
      for (auto& [x, c] : bsum(w))
        for (auto& [ab, c2] : cut(cyc, x)) accumulate(r, ab, c * c2);
      for (auto& [ab, c] : cw) {
        for (auto& [x, c2] : bsum(ab.first))
          accumulate(r, {x, ab.second}, -(c * c2).signed_by(sgnp(s)));
        for (auto& [x, c2] : bsum(ab.second))
          accumulate(r, {ab.first, x}, -(c * c2).signed_by(sgnp(s + D(ab.first))));
      }
      for (auto& [ab, v] : r)
        note(fam("chain-compat"), "cochains " + names(q, {&ab.first, &ab.second}) + " at " +
                                      q.word_name(w) + ": " + v.str());
    }
  }

  for (auto& [x, y] : pairs) {
    WordSum g = glue(cyc, x, y);
    // cobracket skew
    {
      WordSum r = g;
      for (auto& [u, c] : glue(cyc, y, x))
        accumulate(r, u, -c.signed_by(skew_sign * sgnp(D(x) * D(y))));
      for (auto& [u, v] : r)
        note(fam("skew"), "cobracket of " + q.word_name(u) + " at " + names(q, {&x, &y}) + ": " +
                              v.str());
    }
    for (auto& [u, c] : g)
      if (D(u) != D(x) + D(y) + s)
        note(fam("degree"), "cobracket term " + q.word_name(u) + " at " + names(q, {&x, &y}));
    // coboundary compatibility
    if (!cat) {
      note(fam("coboundary-compat"), "structure maps unavailable: " + cat_error);
    } else {
      WordSum r;
      for (auto& [u, c] : g)
        for (auto& [v, c2] : bsum(u)) accumulate(r, v, c * c2);
      for (auto& [u, c] : bsum(x))
        for (auto& [v, c2] : glue(cyc, u, y)) accumulate(r, v, -(c * c2).signed_by(sgnp(s)));
      for (auto& [u, c] : bsum(y))
        for (auto& [v, c2] : glue(cyc, x, u))
          accumulate(r, v, -(c * c2).signed_by(sgnp(s + D(x))));
      for (auto& [u, v] : r)
        note(fam("coboundary-compat"), "cochain " + q.word_name(u) + " at " + names(q, {&x, &y}) +
                                           ": " + v.str());
    }
    // Drinfeld
    {
      PairSum r;
      for (auto& [u, c] : g)
        for (auto& [ab, c2] : cut(cyc, u)) accumulate(r, ab, c * c2);
      for (auto& [yy, c] : cut(cyc, y)) {
        auto& [y1, y2] = yy;
        for (auto& [u, c2] : glue(cyc, x, y1))
          accumulate(r, {u, y2}, -(c * c2).signed_by(sgnp(s * (1 + D(x)))));
        for (auto& [u, c2] : glue(cyc, x, y2))
          accumulate(r, {y1, u},
                     -(c * c2).signed_by(sgnp(D(x) * D(y1) + s * (1 + D(x) + D(y1)))));
      }
      for (auto& [xx, c] : cut(cyc, x)) {
        auto& [x1, x2] = xx;
        for (auto& [u, c2] : glue(cyc, x1, y))
          accumulate(r, {u, x2}, -(c * c2).signed_by(sgnp(D(y) * D(x2) + s)));
        for (auto& [u, c2] : glue(cyc, x2, y))
          accumulate(r, {x1, u}, -(c * c2).signed_by(sgnp(s * (1 + D(x1)))));
      }
      for (auto& [ab, v] : r)
        note(fam("drinfeld"), "cochains " + names(q, {&ab.first, &ab.second}) + " at " +
                                  names(q, {&x, &y}) + ": " + v.str());
    }
  }

  for (auto& [x, y, z] : triples) {
    WordSum r;
    auto term = [&](const Word& a, const Word& b, const Word& c, int sign) {
      for (auto& [u, c1] : glue(cyc, a, b))
        for (auto& [v, c2] : glue(cyc, u, c)) accumulate(r, v, (c1 * c2).signed_by(sign));
    };
    term(x, y, z, 1);
    term(z, x, y, sgnp(D(z) * (D(x) + D(y))));
    term(y, z, x, sgnp(D(x) * (D(y) + D(z))));
    for (auto& [u, v] : r)
      note(fam("co-jacobi"), "cochain " + q.word_name(u) + " at " + names(q, {&x, &y, &z}) +
                                 ": " + v.str());
  }

  ValidationReport ledger = degree_ledger(cyc, N);
  for (auto& w : ledger.witnesses) note(fam("degree"), w);
  return out;
}

ValidationReport check_star(const CyclicStructure& cyc) {
  ValidationReport rep{"star"};
  const Quiver& q = cyc.quiver;
  if (cyc.star.size() != q.gens.size()) {
    rep.fail("star map does not cover every generator");
    return rep;
  }
  for (std::size_t g = 0; g < q.gens.size(); ++g) {
    int p = cyc.star[g];
    const auto& a = q.gens[g];
    const auto& b = q.gens[p];
    if (cyc.star[p] != static_cast<int>(g)) rep.fail("star not an involution at " + a.name);
    if (a.src != b.dst || a.dst != b.src) rep.fail("star reverses direction wrongly at " + a.name);
    if (a.degree + b.degree != -cyc.cy_dim)
      rep.fail("|" + a.name + "|+|" + b.name + "| = " + std::to_string(a.degree + b.degree) +
               " != -" + std::to_string(cyc.cy_dim));
    if (cyc.field == Field::Rational &&
        cyc.weight(p) != (cyc.cy_dim % 2 == 0 ? -1 : 1) * parity_sign(static_cast<long>(a.e()) * b.e()) *
                             cyc.weight(g))
      rep.fail("copairing weights of " + a.name + "," + b.name + " have the wrong symmetry");
  }
  if (!rep.pass) return rep;
  // A dual pair inside one count must not split it into two closed loops.
  const int maxlen = cyc.max_length();
  auto reps = orbit_representatives(q, std::max(0, maxlen - 3));
  for (auto& x : reps)
    for (auto& y : reps) {
      if (static_cast<int>(x.size() + y.size()) + 2 > maxlen) continue;
      Scalar acc = Scalar::zero(cyc.field);
      for (auto& [u, c] : glue(cyc, x, y)) acc += c * Scalar(cyc.count(u), cyc.field);
      if (!acc.is_zero())
        rep.fail("self-contraction through " + q.word_name(x) + "," + q.word_name(y) + " = " +
                 acc.str());
    }
  return rep;
}

}  // namespace cyclo
