#include "cyclo/hoch.hpp"

#include "cyclo/signs.hpp"

namespace cyclo {

namespace {

void apply_front(const AinfCategory& cat, const Word& u, int k, const Scalar& coeff, WordSum& out) {
  Word blk(u.begin(), u.begin() + k);
  const GenSum* m = cat.apply(blk);
  if (!m) return;
  for (auto& [o, c] : *m) {
    Word x{o};
    x.insert(x.end(), u.begin() + k, u.end());
    accumulate(out, x, c * coeff);
  }
}

}  // namespace

WordSum hochschild_b(const AinfCategory& cat, const Word& w) {
  const Quiver& q = cat.quiver;
  const int L = static_cast<int>(w.size());
  WordSum out;
  // Blocks away from the first letter act in place.
  int pre = 0;
  for (int s = 1; s < L; ++s) {
    pre += q.e(w[s - 1]);
    for (int k = 1; s + k <= L; ++k) {
      Word blk(w.begin() + s, w.begin() + s + k);
      const GenSum* m = cat.apply(blk);
      if (!m) continue;
      for (auto& [o, c] : *m) {
        Word x(w.begin(), w.begin() + s);
        x.push_back(o);
        x.insert(x.end(), w.begin() + s + k, w.end());
        accumulate(out, x, c.signed_by(parity_sign(pre)));
      }
    }
  }
  // Blocks through the first letter are rotated to the front.
  auto rots = rotations(q, w);
  for (int r = 0; r < L; ++r) {
    const auto& [sign, u] = rots[r];
    const int start = (L - r) % L;
    for (int k = 1; k <= L; ++k) {
      if (start != 0 && start + k <= L) continue;
      apply_front(cat, u, k, Scalar(sign, cat.field), out);
    }
  }
  return out;
}

WordSum cyclic_b(const AinfCategory& cat, const Word& w) {
  WordSum out;
  for (auto& [x, v] : hochschild_b(cat, w)) {
    Canon c = canonical(cat.quiver, x);
    if (c.sign) accumulate(out, c.rep, v.signed_by(c.sign));
  }
  return out;
}

std::pair<Scalar, Word> cyclic_t(const AinfCategory& cat, const Word& w) {
  auto [s, u] = rotate_once(cat.quiver, w);
  return {Scalar(s, cat.field), u};
}

std::vector<Word> orbit_representatives(const Quiver& q, int N) {
  std::vector<Word> out;
  for (int L = 1; L <= N; ++L)
    for (auto& w : q.cyclic_words(L)) {
      Canon c = canonical(q, w);
      if (c.sign != 0 && c.rep == w) out.push_back(w);
    }
  return out;
}

namespace {

template <class Cx>
void assemble(const AinfCategory& cat, Cx& cx, bool canon, bool verify) {
  auto space = std::make_shared<GradedSpace>();
  const auto& ws = cx.index;
  std::vector<const Word*> order(ws.size());
  for (auto& [w, i] : ws) order[i] = &w;
  for (auto* w : order) space->add(cat.quiver.word_name(*w), cat.quiver.edeg(*w));
  cx.space = space;
  cx.d = std::make_shared<SparseMap>(space, space, -1, cat.field);
  for (auto* w : order) {
    int col = ws.at(*w);
    WordSum img = canon ? cyclic_b(cat, *w) : hochschild_b(cat, *w);
    for (auto& [x, v] : img) {
      auto it = ws.find(x);
      if (it == ws.end())
        throw std::logic_error("b left the truncation at " + cat.quiver.word_name(*w));
      cx.d->add(it->second, col, v);
    }
  }
  if (verify) {
    SparseMap sq = compose(*cx.d, *cx.d);
    if (!sq.is_zero()) {
      auto& [k, v] = *sq.entries().begin();
      const std::string& w = space->at(k.second).name;
      throw NotAComplex(w, "b^2 != 0 on " + w);
    }
  }
}

}  // namespace

TruncatedComplex build_truncated(const AinfCategory& cat, int N, bool verify) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  TruncatedComplex cx;
  cx.N = N;
  for (int L = 1; L <= N; ++L)
    for (auto& w : cat.quiver.cyclic_words(L)) {
      cx.index.emplace(w, static_cast<int>(cx.words.size()));
      cx.words.push_back(w);
    }
  assemble(cat, cx, false, verify);
  return cx;
}

CyclicComplex build_cyclic(const AinfCategory& cat, int N, bool verify) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  CyclicComplex cx;
  cx.N = N;
  cx.orbits = orbit_representatives(cat.quiver, N);
  for (std::size_t i = 0; i < cx.orbits.size(); ++i) cx.index.emplace(cx.orbits[i], i);
  assemble(cat, cx, true, verify);
  return cx;
}

namespace {

CochainComplex dual_of(int N, const SpacePtr& space, const SparseMap& d) {
  std::vector<BasisElement> b;
  for (auto& e : space->basis()) b.push_back({e.name + "^", e.degree});
  auto ds = std::make_shared<GradedSpace>(b);
  auto t = std::make_shared<SparseMap>(ds, ds, 1, d.field());
  for (auto& [k, v] : d.entries()) t->add(k.second, k.first, v);
  return {N, ds, t};
}

}  // namespace

CochainComplex dualize(const TruncatedComplex& cx) { return dual_of(cx.N, cx.space, *cx.d); }
CochainComplex dualize(const CyclicComplex& cx) { return dual_of(cx.N, cx.space, *cx.d); }

BettiTable betti(const TruncatedComplex& cx) { return homology_dims(*cx.d, *cx.d); }
BettiTable betti(const CyclicComplex& cx) { return homology_dims(*cx.d, *cx.d); }
BettiTable betti(const CochainComplex& cx) { return homology_dims(*cx.d, *cx.d); }

}  // namespace cyclo
