#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclo/ainf.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

/// Sorted multiset of generator indices; a basis word of the symmetric coalgebra.
using Wedge = std::vector<int>;
using WedgeSum = std::map<Wedge, Scalar>;

struct LinftyAlgebra {
  std::vector<BasisElement> basis;  ///< degrees |a| in L
  Field field = Field::Rational;
  /// taylor[w] = delta_{|w|}(w) on canonical wedge words.
  std::map<Wedge, GenSum> taylor;

  int shifted(int g) const { return basis[g].degree + 1; }
  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const std::string& name) const;
};

/// Canonical order with Koszul sign on shifted degrees; sign 0 when a repeated odd factor kills it.
std::pair<int, Wedge> canonicalize(const LinftyAlgebra& alg, const Wedge& w);

/// The coderivation extending all Taylor coefficients.
WedgeSum coderivation(const LinftyAlgebra& alg, const Wedge& w);

/// Projection of delta^2 onto L-bar, on every canonical word of <= max_arity factors.
ValidationReport check_linfty(const LinftyAlgebra& alg, int max_arity);

/// All canonical nonzero wedge words with exactly n factors.
std::vector<Wedge> wedge_words(const LinftyAlgebra& alg, int n);

struct BracketTable {
  std::vector<BasisElement> basis;
  /// table[{i,j}] = [e_i, e_j]
  std::map<std::pair<int, int>, GenSum> table;
  Field field = Field::Rational;
};

struct NotAntisymmetric : std::invalid_argument {
  explicit NotAntisymmetric(const std::string& w) : std::invalid_argument(w) {}
};

LinftyAlgebra chevalley_eilenberg(const BracketTable& t);

/// Jacobiator of the delta_2 part alone, per triple of generators.
ValidationReport jacobi_residual(const LinftyAlgebra& alg);

struct InducedBracket {
  /// Homology classes with representative cycles in L.
  std::vector<std::vector<mpq_class>> representatives;
  /// Lie-infinity algebra on H with only delta_2.
  LinftyAlgebra homology;
  /// Bracket [h_i, h_j] = susp of (-1)^{|h_i|} delta_2(h_i, h_j).
  BracketTable bracket;
};

InducedBracket induced_bracket(const LinftyAlgebra& alg);

/// F[w] = F_{|w|}(w), canonical source wedge word to target generators.
using Morphism = std::map<Wedge, GenSum>;

ValidationReport check_linfty_morphism(const Morphism& F, const LinftyAlgebra& src,
                                       const LinftyAlgebra& dst, int max_arity);

}  // namespace cyclo
