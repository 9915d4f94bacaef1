#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/scalar.hpp"

namespace cyclo {

struct BasisElement {
  std::string name;
  int degree = 0;
};

/// Ordered, named, graded basis. Order is insertion order.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisElement> basis);

  int add(const std::string& name, int degree);
  std::size_t dim() const { return basis_.size(); }
  const BasisElement& at(int i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  /// -1 when absent.
  int index_of(const std::string& name) const;
  std::vector<int> in_degree(int deg) const;
  std::vector<int> degrees() const;

  bool operator==(const GradedSpace& o) const;

 private:
  std::vector<BasisElement> basis_;
  std::map<std::string, int> index_;
  std::map<int, std::vector<int>> by_degree_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& w) : std::invalid_argument(w) {}
};

struct DegreeMismatch : std::invalid_argument {
  explicit DegreeMismatch(const std::string& w) : std::invalid_argument(w) {}
};

/// Linear map between graded spaces; entries keyed (target index, source index).
class SparseMap {
 public:
  SparseMap(SpacePtr source, SpacePtr target, int degree, Field field);

  static SparseMap identity(SpacePtr space, Field field);

  const SpacePtr& source() const { return src_; }
  const SpacePtr& target() const { return tgt_; }
  int degree() const { return degree_; }
  Field field() const { return field_; }
  const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }

  Scalar get(int row, int col) const;
  /// Adds to an entry; zero results are erased. Throws DegreeMismatch on a bad entry.
  void add(int row, int col, const Scalar& v);
  bool is_zero() const { return entries_.empty(); }

  SparseMap transpose() const;
  bool operator==(const SparseMap& o) const;

 private:
  SpacePtr src_, tgt_;
  int degree_;
  Field field_;
  std::map<std::pair<int, int>, Scalar> entries_;
};

SparseMap compose(const SparseMap& f, const SparseMap& g);

/// Rank over the map's field. Rational maps use fraction-free integer elimination.
std::size_t rank(const SparseMap& f);

/// Rank of the submatrix on the given rows and columns.
std::size_t rank(const SparseMap& f, const std::vector<int>& rows, const std::vector<int>& cols);

struct NotAComplex : std::runtime_error {
  NotAComplex(const std::string& witness, const std::string& what)
      : std::runtime_error(what), witness(witness) {}
  std::string witness;
};

using BettiTable = std::map<int, long>;

/// Betti numbers of the middle space of d_in : A -> B, d_out : B -> C.
BettiTable homology_dims(const SparseMap& d_in, const SparseMap& d_out);

SparseMap reduce_mod2(const SparseMap& f);

/// Integer fraction-free rank of integer rows, each a sorted (column, value) list.
std::size_t integer_rank(std::vector<std::map<int, mpz_class>> rows);
std::size_t mod2_rank(std::vector<std::vector<int>> rows);

}  // namespace cyclo
