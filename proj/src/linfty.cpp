#include "cyclo/linfty.hpp"

#include <functional>

#include "cyclo/signs.hpp"

namespace cyclo {

int LinftyAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].name == name) return static_cast<int>(i);
  return -1;
}

std::pair<int, Wedge> canonicalize(const LinftyAlgebra& alg, const Wedge& w) {
  Wedge v = w;
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      sign *= parity_sign(static_cast<long>(alg.shifted(v[j - 1])) * alg.shifted(v[j]));
      std::swap(v[j - 1], v[j]);
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1] && alg.shifted(v[i]) % 2 != 0) return {0, v};
  return {sign, v};
}

namespace {

std::string wedge_name(const std::vector<BasisElement>& basis, const Wedge& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "^" : "") + basis[w[i]].name;
  return out.empty() ? "1" : out;
}

void add_to(WedgeSum& into, const Wedge& w, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = into.find(w);
  if (it == into.end()) {
    into.emplace(w, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) into.erase(it);
}

std::vector<int> shifted_degrees(const LinftyAlgebra& alg, const Wedge& w) {
  std::vector<int> out;
  for (int g : w) out.push_back(alg.shifted(g));
  return out;
}

}  // namespace

WedgeSum coderivation(const LinftyAlgebra& alg, const Wedge& w) {
  WedgeSum out;
  const int m = static_cast<int>(w.size());
  auto degs = shifted_degrees(alg, w);
  for (int n = 1; n <= m; ++n) {
    std::vector<int> parts{n};
    if (m > n) parts.push_back(m - n);
    unshuffles(parts, degs, [&](const Unshuffle& u) {
      Wedge head, rest;
      for (int i = 0; i < n; ++i) head.push_back(w[u.perm[i]]);
      for (int i = n; i < m; ++i) rest.push_back(w[u.perm[i]]);
      auto it = alg.taylor.find(head);
      if (it == alg.taylor.end()) return;
      for (auto& [o, c] : it->second) {
        Wedge x{o};
        x.insert(x.end(), rest.begin(), rest.end());
        auto [sign, cw] = canonicalize(alg, x);
        if (sign) add_to(out, cw, c.signed_by(sign * u.sign));
      }
    });
  }
  return out;
}

std::vector<Wedge> wedge_words(const LinftyAlgebra& alg, int n) {
  std::vector<Wedge> out;
  Wedge cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int g = start; g < alg.dim(); ++g) {
      if (!cur.empty() && cur.back() == g && alg.shifted(g) % 2 != 0) continue;
      cur.push_back(g);
      rec(g);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

GenSum project(const LinftyAlgebra& alg, const WedgeSum& x) {
  GenSum out;
  for (auto& [u, c] : x) {
    auto it = alg.taylor.find(u);
    if (it == alg.taylor.end()) continue;
    for (auto& [o, c2] : it->second) accumulate(out, o, c * c2);
  }
  return out;
}

std::string gensum_str(const std::vector<BasisElement>& basis, const GenSum& s) {
  std::string out;
  for (auto& [g, c] : s) out += (out.empty() ? "" : " + ") + c.str() + "*" + basis[g].name;
  return out;
}

}  // namespace

ValidationReport check_linfty(const LinftyAlgebra& alg, int max_arity) {
  ValidationReport rep{"linfty"};
  for (auto& [w, out] : alg.taylor) {
    int in = 0;
    for (int x : w) in += alg.shifted(x);
    for (auto& [o, c] : out)
      if (alg.shifted(o) != in - 1)
        rep.fail("degree: " + wedge_name(alg.basis, w) + " -> " + alg.basis[o].name);
  }
  for (int n = 1; n <= max_arity; ++n)
    for (auto& w : wedge_words(alg, n)) {
      GenSum r = project(alg, coderivation(alg, w));
      if (!r.empty())
        rep.fail("arity " + std::to_string(n) + ": " + wedge_name(alg.basis, w) + " -> " +
                 gensum_str(alg.basis, r));
    }
  return rep;
}

LinftyAlgebra chevalley_eilenberg(const BracketTable& t) {
  LinftyAlgebra alg;
  alg.basis = t.basis;
  alg.field = t.field;
  const int n = static_cast<int>(t.basis.size());
  auto get = [&](int i, int j) {
    auto it = t.table.find({i, j});
    return it == t.table.end() ? GenSum{} : it->second;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GenSum sum = get(i, j);
      int sign = parity_sign(static_cast<long>(t.basis[i].degree) * t.basis[j].degree);
      for (auto& [o, c] : get(j, i)) accumulate(sum, o, c.signed_by(sign));
      if (!sum.empty())
        throw NotAntisymmetric("[" + t.basis[i].name + "," + t.basis[j].name + "]");
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == j && alg.shifted(i) % 2 != 0) continue;
      GenSum v;
      for (auto& [o, c] : get(i, j)) accumulate(v, o, c.signed_by(parity_sign(t.basis[i].degree)));
      if (!v.empty()) alg.taylor[{i, j}] = v;
    }
  return alg;
}

ValidationReport jacobi_residual(const LinftyAlgebra& alg) {
  LinftyAlgebra two = alg;
  for (auto it = two.taylor.begin(); it != two.taylor.end();)
    it = (it->first.size() == 2) ? std::next(it) : two.taylor.erase(it);
  ValidationReport rep = check_linfty(two, 3);
  rep.check = "jacobi";
  // arity-1 and arity-2 relations are empty for a pure delta_2 algebra
  return rep;
}

namespace {

using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;  // row-major

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m, int ncols) {
  std::vector<int> piv;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

/// Null space basis of the dense matrix restricted to the given columns.
std::vector<Vec> nullspace(const Mat& a, const std::vector<int>& cols, int dim) {
  Mat m;
  for (auto& row : a) {
    Vec r;
    for (int c : cols) r.push_back(row[c]);
    m.push_back(r);
  }
  const int nc = static_cast<int>(cols.size());
  auto piv = rref(m, nc);
  std::vector<bool> is_piv(nc, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<Vec> out;
  for (int f = 0; f < nc; ++f) {
    if (is_piv[f]) continue;
    Vec v(dim, 0);
    v[cols[f]] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[cols[piv[r]]] = -m[r][f];
    out.push_back(v);
  }
  return out;
}

std::size_t span_rank(const std::vector<Vec>& vs, int dim) {
  Mat m(vs.begin(), vs.end());
  return rref(m, dim).size();
}

/// Coefficients of v in the basis (basis vectors first, then extra), or empty if v not in span.
std::optional<Vec> solve(const std::vector<Vec>& basis, const Vec& v, int dim) {
  const int k = static_cast<int>(basis.size());
  Mat m(dim, Vec(k + 1, 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) m[i][j] = basis[j][i];
  for (int i = 0; i < dim; ++i) m[i][k] = v[i];
  auto piv = rref(m, k + 1);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  Vec x(k, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][k];
  return x;
}

}  // namespace

InducedBracket induced_bracket(const LinftyAlgebra& alg) {
  if (alg.field != Field::Rational) throw PreconditionFailed("induced bracket needs rational field");
  auto pre = check_linfty(alg, 3);
  if (!pre.pass) throw PreconditionFailed("linfty relations fail: " + pre.witnesses.front());
  const int n = alg.dim();
  Mat d1(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) {
    auto it = alg.taylor.find({i});
    if (it == alg.taylor.end()) continue;
    for (auto& [o, c] : it->second) d1[o][i] = c.value();
  }
  std::map<int, std::vector<int>> by_deg;
  for (int i = 0; i < n; ++i) by_deg[alg.basis[i].degree].push_back(i);

  InducedBracket out;
  out.homology.field = Field::Rational;
  std::vector<int> rep_deg;
  std::map<int, std::vector<Vec>> boundaries;
  for (auto& [deg, cols] : by_deg) {
    // images of degree deg+1 columns land in degree deg
    std::vector<Vec> bd;
    auto up = by_deg.find(deg + 1);
    if (up != by_deg.end())
      for (int c : up->second) {
        Vec v(n, 0);
        bool nz = false;
        for (int r = 0; r < n; ++r)
          if (d1[r][c] != 0) v[r] = d1[r][c], nz = true;
        if (nz && span_rank([&] { auto t = bd; t.push_back(v); return t; }(), n) > bd.size())
          bd.push_back(v);
      }
    boundaries[deg] = bd;
    auto span = bd;
    for (auto& z : nullspace(d1, cols, n)) {
      auto t = span;
      t.push_back(z);
      if (span_rank(t, n) > span.size()) {
        span.push_back(z);
        out.representatives.push_back(z);
        rep_deg.push_back(deg);
      }
    }
  }
  const int h = static_cast<int>(out.representatives.size());
  for (int i = 0; i < h; ++i) {
    std::string name = "h" + std::to_string(i);
    out.homology.basis.push_back({name, rep_deg[i]});
  }
  auto delta2 = [&](const Vec& a, const Vec& b) {
    Vec r(n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (a[x] == 0 || b[y] == 0) continue;
        auto [sign, w] = canonicalize(alg, Wedge{x, y});
        if (!sign) continue;
        auto it = alg.taylor.find(w);
        if (it == alg.taylor.end()) continue;
        for (auto& [o, c] : it->second) r[o] += a[x] * b[y] * c.value() * sign;
      }
    return r;
  };
  for (int i = 0; i < h; ++i)
    for (int j = i; j < h; ++j) {
      if (i == j && out.homology.shifted(i) % 2 != 0) continue;
      Vec v = delta2(out.representatives[i], out.representatives[j]);
      const int deg = rep_deg[i] + rep_deg[j];
      std::vector<Vec> basis;
      std::vector<int> which;
      for (int k = 0; k < h; ++k)
        if (rep_deg[k] == deg) basis.push_back(out.representatives[k]), which.push_back(k);
      const std::size_t nreps = basis.size();
      for (auto& b : boundaries[deg]) basis.push_back(b);
      bool zero = true;
      for (auto& x : v) zero = zero && x == 0;
      if (zero) continue;
      auto coef = solve(basis, v, n);
      if (!coef) throw PreconditionFailed("delta_2 of cycles is not a cycle");
      GenSum g;
      for (std::size_t k = 0; k < nreps; ++k)
        accumulate(g, which[k], Scalar((*coef)[k], Field::Rational));
      if (!g.empty()) out.homology.taylor[{i, j}] = g;
    }
  out.bracket.basis = out.homology.basis;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      auto [sign, w] = canonicalize(out.homology, Wedge{i, j});
      if (!sign) continue;
      auto it = out.homology.taylor.find(w);
      if (it == out.homology.taylor.end()) continue;
      GenSum g;
      for (auto& [o, c] : it->second)
        accumulate(g, o, c.signed_by(sign * parity_sign(rep_deg[i])));
      out.bracket.table[{i, j}] = g;
    }
  return out;
}

ValidationReport check_linfty_morphism(const Morphism& F, const LinftyAlgebra& src,
                                       const LinftyAlgebra& dst, int max_arity) {
  ValidationReport rep{"linfty-morphism"};
  for (int k = 1; k <= max_arity; ++k)
    for (auto& a : wedge_words(src, k)) {
      GenSum res;
      // dst differential after the coalgebra map
      auto degs = shifted_degrees(src, a);
      std::vector<int> owner(k, -1);
      std::function<void(int, int)> part = [&](int i, int nb) {
        if (i == k) {
          std::vector<Wedge> blocks(nb);
          std::vector<int> perm;
          for (int b = 0; b < nb; ++b)
            for (int x = 0; x < k; ++x)
              if (owner[x] == b) blocks[b].push_back(a[x]), perm.push_back(x);
          int sign = koszul_sign(perm, degs);
          std::vector<const GenSum*> imgs;
          for (auto& blk : blocks) {
            auto it = F.find(blk);
            if (it == F.end()) return;
            imgs.push_back(&it->second);
          }
          Wedge cur;
          std::function<void(int, Scalar)> prod = [&](int b, Scalar c) {
            if (b == nb) {
              auto [s2, w] = canonicalize(dst, cur);
              if (!s2) return;
              auto it = dst.taylor.find(w);
              if (it == dst.taylor.end()) return;
              for (auto& [o, c2] : it->second) accumulate(res, o, (c * c2).signed_by(s2 * sign));
              return;
            }
            for (auto& [o, c2] : *imgs[b]) {
              cur.push_back(o);
              prod(b + 1, c * c2);
              cur.pop_back();
            }
          };
          prod(0, Scalar::one(dst.field));
          return;
        }
        for (int b = 0; b <= nb; ++b) {
          owner[i] = b;
          part(i + 1, b == nb ? nb + 1 : nb);
        }
        owner[i] = -1;
      };
      part(0, 0);
      for (auto& [u, c] : coderivation(src, a)) {
        auto it = F.find(u);
        if (it == F.end()) continue;
        for (auto& [o, c2] : it->second) accumulate(res, o, -(c * c2));
      }
      if (!res.empty())
        rep.fail("arity " + std::to_string(k) + ": " + wedge_name(src.basis, a) + " -> " +
                 gensum_str(dst.basis, res));
    }
  return rep;
}

}  // namespace cyclo
