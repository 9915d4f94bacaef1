#pragma once

#include <gmpxx.h>

#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyclo/specfile.hpp"
#include "json.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name + ".json";
}

inline cyclo::SpecFile load(const std::string& name,
                            std::optional<cyclo::Field> field = std::nullopt) {
  return cyclo::load_spec(fixture(name), field);
}

inline nlohmann::json raw(const std::string& name) {
  std::ifstream in(fixture(name));
  return nlohmann::json::parse(in);
}

inline cyclo::Word word(const cyclo::Quiver& q, const std::vector<std::string>& names) {
  cyclo::Word w;
  for (auto& n : names) w.push_back(q.gen_index(n));
  return w;
}

inline cyclo::Word word_of(const cyclo::Quiver& q, const nlohmann::json& arr) {
  return word(q, arr.get<std::vector<std::string>>());
}

using DenseQ = std::vector<std::vector<mpq_class>>;

/// Plain Gauss-Jordan over Q.
inline std::size_t dense_rank(DenseQ m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Gaussian elimination over GF(2) on 0/1 rows.
inline std::size_t dense_rank_mod2(std::vector<std::vector<int>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && (m[p][c] & 1) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && (m[i][c] & 1))
        for (std::size_t k = c; k < cols; ++k) m[i][k] ^= m[r][k];
    ++r;
  }
  return r;
}

inline DenseQ to_dense(const cyclo::SparseMap& f) {
  DenseQ m(f.target()->dim(), std::vector<mpq_class>(f.source()->dim(), 0));
  for (auto& [k, v] : f.entries()) m[k.first][k.second] = v.value();
  return m;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int uniform(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

/// Fixtures that carry a category and satisfy every validator.
inline const std::vector<std::string>& valid_category_fixtures() {
  static const std::vector<std::string> names{"lambda-eps", "cycpair", "cycodd", "cl-fuk-toy"};
  return names;
}

struct MutantExpectation {
  std::string fixture;
  std::set<std::string> validators;  ///< failing ainf/cyclic/star checks
  std::set<std::string> families;    ///< failing axiom families
};

/// Failing sets of the seven bialgebra mutants, evaluated with their own N and W.
inline const std::vector<MutantExpectation>& bialgebra_mutants() {
  static const std::vector<MutantExpectation> m{
      {"cycpair-flip", {"cyclic"}, {"chain-compat", "coboundary-compat"}},
      {"cycpair-drop", {"cyclic"}, {"chain-compat", "coboundary-compat"}},
      {"cycpair-selfloop", {"ainf", "star"}, {"coboundary-compat"}},
      {"cycpair-degshift", {"ainf", "star"}, {"degree"}},
      {"cycpair-parity",
       {"ainf", "star"},
       {"skew", "jacobi", "chain-compat", "co-jacobi", "coboundary-compat", "drinfeld",
        "involutivity", "degree"}},
      {"cycpair-weight",
       {"star"},
       {"skew", "jacobi", "chain-compat", "co-jacobi", "coboundary-compat", "drinfeld",
        "involutivity"}},
      {"cycpair-mode",
       {"star"},
       {"skew", "jacobi", "chain-compat", "co-jacobi", "coboundary-compat", "drinfeld",
        "involutivity"}},
  };
  return m;
}

}  // namespace testing_support
