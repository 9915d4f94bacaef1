#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/scalar.hpp"

namespace cyclo {

/// Generator indices; a word is a tuple of generators.
using Word = std::vector<int>;

struct Generator {
  std::string name;
  int src = 0;
  int dst = 0;
  int degree = 0;  ///< |a|, negative grading
  int e() const { return degree + 1; }  ///< |abar|
};

/// Objects and generators; everything about words that does not involve structure maps.
class Quiver {
 public:
  std::vector<std::string> objects;
  std::vector<Generator> gens;

  int gen_index(const std::string& name) const;
  int obj_index(const std::string& name) const;
  int e(int g) const { return gens[g].e(); }
  int edeg(const Word& w) const;
  /// Generators in Hom(src, dst).
  const std::vector<int>& hom(int src, int dst) const;
  bool composable(const Word& w) const;
  bool cyclic(const Word& w) const;
  std::string word_name(const Word& w) const;
  std::vector<int> edegrees(const Word& w) const;

  /// All composable (linear) words of the given length.
  std::vector<Word> linear_words(int length) const;
  /// All cyclically composable words of the given length, lexicographic.
  std::vector<Word> cyclic_words(int length) const;

  void finalize();

 private:
  std::map<std::pair<int, int>, std::vector<int>> homs_;
  std::vector<int> empty_;
};

/// Formal linear combinations keyed by words or generators.
using WordSum = std::map<Word, Scalar>;
using GenSum = std::map<int, Scalar>;

void accumulate(WordSum& into, const Word& w, const Scalar& v);
void accumulate(GenSum& into, int g, const Scalar& v);

/// Structure maps stored in desuspended form: mbar[inputs] = sum of outputs.
class AinfCategory {
 public:
  Quiver quiver;
  Field field = Field::Rational;
  std::map<Word, GenSum> mbar;

  const GenSum* apply(const Word& inputs) const;
  int max_arity() const;
  /// Sets mbar from an un-desuspended coefficient C(out; in...) = value.
  void set_m(int out, const Word& in, long value);
};

/// Count tensor with a star involution and the cy dimension.
class CyclicStructure {
 public:
  Quiver quiver;
  Field field = Field::Rational;
  int cy_dim = 0;
  std::vector<int> star;
  std::map<Word, long> counts;
  /// Optional per-generator copairing weight overrides.
  std::map<int, int> weight_override;
  /// +1 / -1 symmetry of the copairing; 0 means the default for cy_dim parity.
  int copairing_mode = 0;

  int s() const { return 2 - cy_dim; }
  int mode() const;
  /// Weight c(p) of p (x) p* in the copairing.
  int weight(int g) const;
  Scalar weight_scalar(int g) const;
  /// M on any word via the stored tuple, zero when absent.
  long count(const Word& w) const;
  int max_length() const;
};

struct ValidationReport {
  ValidationReport() = default;
  ValidationReport(std::string name) : check(std::move(name)) {}

  std::string check;
  bool pass = true;
  std::vector<std::string> witnesses;
  void fail(const std::string& w) {
    pass = false;
    witnesses.push_back(w);
  }
};

struct DegreeViolation : std::invalid_argument {
  explicit DegreeViolation(const std::string& w) : std::invalid_argument(w) {}
};

struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& w) : std::runtime_error(w) {}
};

/// Structure maps from counts: mbar(x)[q] = c(q*) * M(q*, x).
AinfCategory derive_structure(const CyclicStructure& cyc);

ValidationReport check_ainf(const AinfCategory& cat, int max_arity);
ValidationReport check_cyclic(const CyclicStructure& cyc);
ValidationReport check_star(const CyclicStructure& cyc);

/// Copy with every stored count expanded over its rotation orbit.
CyclicStructure close_under_rotation(const CyclicStructure& cyc);

/// Canonical form of a cyclic word in the coinvariants of t.
struct Canon {
  int sign = 1;  ///< 0 when the orbit is killed
  Word rep;
};
Canon canonical(const Quiver& q, const Word& w);

/// One signed step of t: last letter moves to the front.
std::pair<int, Word> rotate_once(const Quiver& q, const Word& w);

/// Rotations u_r with [u_r] = sign_r [w], r = 0..L-1.
std::vector<std::pair<int, Word>> rotations(const Quiver& q, const Word& w);

}  // namespace cyclo
