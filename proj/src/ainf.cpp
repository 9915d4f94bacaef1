#include "cyclo/ainf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cyclo/signs.hpp"

namespace cyclo {

int Quiver::gen_index(const std::string& name) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

int Quiver::obj_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return static_cast<int>(i);
  return -1;
}

int Quiver::edeg(const Word& w) const {
  int d = 0;
  for (int g : w) d += e(g);
  return d;
}

std::vector<int> Quiver::edegrees(const Word& w) const {
  std::vector<int> out;
  for (int g : w) out.push_back(e(g));
  return out;
}

void Quiver::finalize() {
  homs_.clear();
  for (std::size_t i = 0; i < gens.size(); ++i) homs_[{gens[i].src, gens[i].dst}].push_back(i);
}

const std::vector<int>& Quiver::hom(int src, int dst) const {
  auto it = homs_.find({src, dst});
  return it == homs_.end() ? empty_ : it->second;
}

bool Quiver::composable(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (gens[w[i]].dst != gens[w[i + 1]].src) return false;
  return true;
}

bool Quiver::cyclic(const Word& w) const {
  return !w.empty() && composable(w) && gens[w.back()].dst == gens[w.front()].src;
}

std::string Quiver::word_name(const Word& w) const {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += gens[w[i]].name;
  }
  return out + ")";
}

std::vector<Word> Quiver::linear_words(int length) const {
  std::vector<Word> out;
  Word cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!cur.empty() && gens[cur.back()].dst != gens[g].src) continue;
      cur.push_back(g);
      rec();
      cur.pop_back();
    }
  };
  if (length > 0) rec();
  return out;
}

std::vector<Word> Quiver::cyclic_words(int length) const {
  std::vector<Word> out;
  for (auto& w : linear_words(length))
    if (gens[w.back()].dst == gens[w.front()].src) out.push_back(w);
  return out;
}

void accumulate(WordSum& into, const Word& w, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = into.find(w);
  if (it == into.end()) {
    into.emplace(w, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) into.erase(it);
}

void accumulate(GenSum& into, int g, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = into.find(g);
  if (it == into.end()) {
    into.emplace(g, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) into.erase(it);
}

const GenSum* AinfCategory::apply(const Word& inputs) const {
  auto it = mbar.find(inputs);
  return it == mbar.end() ? nullptr : &it->second;
}

int AinfCategory::max_arity() const {
  int m = 0;
  for (auto& [k, v] : mbar)
    if (!v.empty()) m = std::max(m, static_cast<int>(k.size()));
  return m;
}

void AinfCategory::set_m(int out, const Word& in, long value) {
  std::vector<int> degs;
  for (int g : in) degs.push_back(quiver.gens[g].degree);
  accumulate(mbar[in], out, Scalar(value, field).signed_by(suspension_sign(degs)));
}

int CyclicStructure::mode() const {
  if (copairing_mode != 0) return copairing_mode;
  return (cy_dim % 2 == 0) ? -1 : 1;
}

int CyclicStructure::weight(int g) const {
  auto it = weight_override.find(g);
  if (it != weight_override.end()) return it->second;
  int p = star[g];
  if (g <= p) return 1;
  return mode() * parity_sign(static_cast<long>(quiver.e(g)) * quiver.e(p));
}

Scalar CyclicStructure::weight_scalar(int g) const { return Scalar(weight(g), field); }

long CyclicStructure::count(const Word& w) const {
  auto it = counts.find(w);
  return it == counts.end() ? 0 : it->second;
}

int CyclicStructure::max_length() const {
  int m = 0;
  for (auto& [k, v] : counts)
    if (v != 0) m = std::max(m, static_cast<int>(k.size()));
  return m;
}

std::pair<int, Word> rotate_once(const Quiver& q, const Word& w) {
  if (w.size() < 2) return {1, w};
  Word out;
  out.push_back(w.back());
  out.insert(out.end(), w.begin(), w.end() - 1);
  return {rotation_sign(q.edegrees(w)), out};
}

std::vector<std::pair<int, Word>> rotations(const Quiver& q, const Word& w) {
  std::vector<std::pair<int, Word>> out;
  int sign = 1;
  Word cur = w;
  for (std::size_t r = 0; r < w.size(); ++r) {
    out.push_back({sign, cur});
    auto [rs, next] = rotate_once(q, cur);
    sign *= rs;
    cur = std::move(next);
  }
  return out;
}

Canon canonical(const Quiver& q, const Word& w) {
  Canon best{1, w};
  int sign = 1;
  bool killed = false;
  Word cur = w;
  for (std::size_t k = 1; k <= w.size(); ++k) {
    auto [rs, next] = rotate_once(q, cur);
    sign *= rs;
    cur = std::move(next);
    if (k < w.size() && cur == w && sign == -1) killed = true;
    if (cur < best.rep) best = {sign, cur};
  }
  if (killed) best.sign = 0;
  return best;
}

AinfCategory derive_structure(const CyclicStructure& cyc) {
  AinfCategory cat;
  cat.quiver = cyc.quiver;
  cat.field = cyc.field;
  const int target = cyc.s() + 1;
  for (auto& [w, v] : cyc.counts) {
    if (v == 0) continue;
    if (cyc.quiver.edeg(w) != target)
      throw DegreeViolation("count on " + cyc.quiver.word_name(w) + " has desuspended degree " +
                            std::to_string(cyc.quiver.edeg(w)) + ", expected " +
                            std::to_string(target));
    Word in(w.begin() + 1, w.end());
    int p = w.front();
    accumulate(cat.mbar[in], cyc.star[p], Scalar(v, cyc.field) * cyc.weight_scalar(p));
  }
  for (auto it = cat.mbar.begin(); it != cat.mbar.end();)
    it = it->second.empty() ? cat.mbar.erase(it) : std::next(it);
  return cat;
}

ValidationReport check_ainf(const AinfCategory& cat, int max_arity) {
  ValidationReport rep{"ainf"};
  const Quiver& q = cat.quiver;
  for (auto& [in, outs] : cat.mbar) {
    for (auto& [o, v] : outs) {
      bool composable = q.composable(in) && q.gens[o].src == q.gens[in.front()].src &&
                        q.gens[o].dst == q.gens[in.back()].dst;
      if (!composable) rep.fail("non-composable entry mbar" + q.word_name(in));
      if (q.e(o) != q.edeg(in) - 1)
        rep.fail("degree: mbar" + q.word_name(in) + " -> " + q.gens[o].name);
    }
  }
  for (int n = 1; n <= max_arity; ++n) {
    for (auto& w : q.linear_words(n)) {
      GenSum res;
      for (int k = 1; k <= n; ++k) {
        for (int p = 0; p + k <= n; ++p) {
          Word blk(w.begin() + p, w.begin() + p + k);
          const GenSum* inner = cat.apply(blk);
          if (!inner) continue;
          int pre = 0;
          for (int r = 0; r < p; ++r) pre += q.e(w[r]);
          for (auto& [o, c] : *inner) {
            Word outer(w.begin(), w.begin() + p);
            outer.push_back(o);
            outer.insert(outer.end(), w.begin() + p + k, w.end());
            const GenSum* top = cat.apply(outer);
            if (!top) continue;
            for (auto& [t, c2] : *top) accumulate(res, t, (c * c2).signed_by(parity_sign(pre)));
          }
        }
      }
      for (auto& [t, c] : res)
        rep.fail("relation on " + q.word_name(w) + ": " + c.str() + "*" + q.gens[t].name);
    }
  }
  return rep;
}

ValidationReport check_cyclic(const CyclicStructure& cyc) {
  ValidationReport rep{"cyclic"};
  for (auto& [w, v] : cyc.counts) {
    if (!cyc.quiver.cyclic(w)) {
      rep.fail("not cyclically composable " + cyc.quiver.word_name(w));
      continue;
    }
    auto [rs, r] = rotate_once(cyc.quiver, w);
    long rv = cyc.count(r);
    bool ok = (cyc.field == Field::Mod2) ? ((v - rs * rv) % 2 == 0) : (v == rs * rv);
    if (!ok)
      rep.fail("M" + cyc.quiver.word_name(w) + "=" + std::to_string(v) + " but rotation sign " +
               std::to_string(rs) + " and M" + cyc.quiver.word_name(r) + "=" + std::to_string(rv));
  }
  return rep;
}

CyclicStructure close_under_rotation(const CyclicStructure& cyc) {
  CyclicStructure out = cyc;
  for (auto& [w, v] : cyc.counts) {
    for (auto& [sign, u] : rotations(cyc.quiver, w)) {
      // [u] = sign [w] and M is t-invariant, so M(u) = sign M(w).
      if (!cyc.counts.count(u)) out.counts[u] = sign * v;
    }
  }
  return out;
}

}  // namespace cyclo
