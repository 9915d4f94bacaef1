#include "cyclo/linalg.hpp"

#include <algorithm>
#include <set>

namespace cyclo {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) {
  for (auto& b : basis) add(b.name, b.degree);
}

int GradedSpace::add(const std::string& name, int degree) {
  if (index_.count(name)) throw std::invalid_argument("duplicate basis name '" + name + "'");
  int i = static_cast<int>(basis_.size());
  basis_.push_back({name, degree});
  index_[name] = i;
  by_degree_[degree].push_back(i);
  return i;
}

int GradedSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> GradedSpace::in_degree(int deg) const {
  auto it = by_degree_.find(deg);
  return it == by_degree_.end() ? std::vector<int>{} : it->second;
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> out;
  for (auto& [k, v] : by_degree_) out.push_back(k);
  return out;
}

bool GradedSpace::operator==(const GradedSpace& o) const {
  if (basis_.size() != o.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name != o.basis_[i].name || basis_[i].degree != o.basis_[i].degree) return false;
  return true;
}

SparseMap::SparseMap(SpacePtr source, SpacePtr target, int degree, Field field)
    : src_(std::move(source)), tgt_(std::move(target)), degree_(degree), field_(field) {}

SparseMap SparseMap::identity(SpacePtr space, Field field) {
  SparseMap m(space, space, 0, field);
  for (std::size_t i = 0; i < space->dim(); ++i) m.add(i, i, Scalar::one(field));
  return m;
}

Scalar SparseMap::get(int row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

void SparseMap::add(int row, int col, const Scalar& v) {
  if (v.is_zero()) return;
  if (tgt_->at(row).degree - src_->at(col).degree != degree_)
    throw DegreeMismatch("entry " + tgt_->at(row).name + " <- " + src_->at(col).name +
                         " violates map degree " + std::to_string(degree_));
  auto key = std::make_pair(row, col);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) entries_.erase(it);
}

SparseMap SparseMap::transpose() const {
  SparseMap t(tgt_, src_, -degree_, field_);
  for (auto& [k, v] : entries_) t.entries_.emplace(std::make_pair(k.second, k.first), v);
  return t;
}

bool SparseMap::operator==(const SparseMap& o) const {
  return degree_ == o.degree_ && field_ == o.field_ && *src_ == *o.src_ && *tgt_ == *o.tgt_ &&
         entries_ == o.entries_;
}

SparseMap compose(const SparseMap& f, const SparseMap& g) {
  if (!(*g.target() == *f.source()))
    throw DimensionMismatch("compose: target of g differs from source of f");
  if (f.field() != g.field()) throw FieldMismatch();
  std::map<int, std::vector<std::pair<int, const Scalar*>>> f_by_col;
  for (auto& [k, v] : f.entries()) f_by_col[k.second].push_back({k.first, &v});
  SparseMap out(g.source(), f.target(), f.degree() + g.degree(), f.field());
  for (auto& [k, v] : g.entries()) {
    auto it = f_by_col.find(k.first);
    if (it == f_by_col.end()) continue;
    for (auto& [row, fv] : it->second) out.add(row, k.second, *fv * v);
  }
  return out;
}

std::size_t integer_rank(std::vector<std::map<int, mpz_class>> rows) {
  std::map<int, std::map<int, mpz_class>> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        break;
      }
      if (abs(row.begin()->second) < abs(it->second.begin()->second)) std::swap(row, it->second);
      mpz_class a = it->second.begin()->second;
      mpz_class b = row.begin()->second;
      mpz_class g = gcd(a, b);
      a /= g;
      b /= g;
      std::map<int, mpz_class> next;
      auto r = row.begin(), p = it->second.begin();
      while (r != row.end() || p != it->second.end()) {
        mpz_class v;
        int c;
        if (p == it->second.end() || (r != row.end() && r->first < p->first)) {
          c = r->first;
          v = a * r->second;
          ++r;
        } else if (r == row.end() || p->first < r->first) {
          c = p->first;
          v = -b * p->second;
          ++p;
        } else {
          c = r->first;
          v = a * r->second - b * p->second;
          ++r;
          ++p;
        }
        if (v != 0) next.emplace_hint(next.end(), c, v);
      }
      mpz_class content = 0;
      for (auto& [c, v] : next) content = gcd(content, v);
      if (content > 1)
        for (auto& [c, v] : next) v /= content;
      row = std::move(next);
    }
  }
  return pivots.size();
}

std::size_t mod2_rank(std::vector<std::vector<int>> rows) {
  std::map<int, std::vector<int>> pivots;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end());
    while (!row.empty()) {
      auto it = pivots.find(row.front());
      if (it == pivots.end()) {
        pivots.emplace(row.front(), std::move(row));
        break;
      }
      std::vector<int> x;
      std::set_symmetric_difference(row.begin(), row.end(), it->second.begin(), it->second.end(),
                                    std::back_inserter(x));
      row = std::move(x);
    }
  }
  return pivots.size();
}

std::size_t rank(const SparseMap& f, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::map<int, int> rpos, cpos;
  for (std::size_t i = 0; i < rows.size(); ++i) rpos[rows[i]] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cpos[cols[j]] = j;
  if (f.field() == Field::Mod2) {
    std::vector<std::vector<int>> rs(rows.size());
    for (auto& [k, v] : f.entries()) {
      auto ri = rpos.find(k.first), ci = cpos.find(k.second);
      if (ri != rpos.end() && ci != cpos.end()) rs[ri->second].push_back(ci->second);
    }
    return mod2_rank(std::move(rs));
  }
  std::vector<std::map<int, mpq_class>> q(rows.size());
  for (auto& [k, v] : f.entries()) {
    auto ri = rpos.find(k.first), ci = cpos.find(k.second);
    if (ri != rpos.end() && ci != cpos.end()) q[ri->second][ci->second] = v.value();
  }
  std::vector<std::map<int, mpz_class>> rs(rows.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpz_class l = 1;
    for (auto& [c, v] : q[i]) l = lcm(l, v.get_den());
    for (auto& [c, v] : q[i]) rs[i][c] = mpz_class(v * l);
  }
  return integer_rank(std::move(rs));
}

std::size_t rank(const SparseMap& f) {
  std::vector<int> rows(f.target()->dim()), cols(f.source()->dim());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return rank(f, rows, cols);
}

BettiTable homology_dims(const SparseMap& d_in, const SparseMap& d_out) {
  SparseMap sq = compose(d_out, d_in);
  if (!sq.is_zero()) {
    auto& [k, v] = *sq.entries().begin();
    const std::string& w = d_in.source()->at(k.second).name;
    throw NotAComplex(w, "differential does not square to zero; witness " + w + " -> " +
                             v.str() + "*" + d_out.target()->at(k.first).name);
  }
  const GradedSpace& mid = *d_out.source();
  BettiTable out;
  for (int deg : mid.degrees()) {
    auto cols = mid.in_degree(deg);
    std::vector<int> out_rows = d_out.target()->in_degree(deg + d_out.degree());
    std::vector<int> in_cols = d_in.source()->in_degree(deg - d_in.degree());
    long ker = static_cast<long>(cols.size()) - static_cast<long>(rank(d_out, out_rows, cols));
    long im = static_cast<long>(rank(d_in, cols, in_cols));
    out[deg] = ker - im;
  }
  return out;
}

SparseMap reduce_mod2(const SparseMap& f) {
  SparseMap out(f.source(), f.target(), f.degree(), Field::Mod2);
  for (auto& [k, v] : f.entries()) {
    if (!v.is_integer())
      throw NonIntegerEntry(f.target()->at(k.first).name + " <- " + f.source()->at(k.second).name);
    out.add(k.first, k.second, to_mod2(v));
  }
  return out;
}

}  // namespace cyclo
