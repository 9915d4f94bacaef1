#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cyclo/ainf.hpp"
#include "cyclo/hoch.hpp"

namespace cyclo {

using PairSum = std::map<std::pair<Word, Word>, Scalar>;
using TripleSum = std::map<std::tuple<Word, Word, Word>, Scalar>;

void accumulate(PairSum& into, const std::pair<Word, Word>& k, const Scalar& v);
void accumulate(TripleSum& into, const std::tuple<Word, Word, Word>& k, const Scalar& v);

/// Splits a cyclic word into two by inserting a dual pair; both pieces canonical.
PairSum cut(const CyclicStructure& cyc, const Word& w);

/// Joins two cyclic words through a dual pair; canonical output.
WordSum glue(const CyclicStructure& cyc, const Word& x, const Word& y);

/// t-invariant functional, stored on canonical orbit representatives.
struct CyclicCochain {
  std::map<Word, Scalar> values;
  int degree = 0;  ///< minus the desuspended degree of the supporting words
  int N = 0;       ///< support bound
};

/// Functional on pairs of cyclic words (target of the cobracket).
struct PairCochain {
  std::map<std::pair<Word, Word>, Scalar> values;
  int degree = 0;
  int N = 0;
};

struct SupportOverflow : std::out_of_range {
  explicit SupportOverflow(const std::string& w) : std::out_of_range(w) {}
};

/// Indicator cochain of an orbit.
CyclicCochain basis_cochain(const Quiver& q, const Word& rep, int N);

Scalar evaluate(const CyclicStructure& cyc, const CyclicCochain& f, const Word& w);

/// [f,g] on every orbit of length <= N-2.
CyclicCochain bracket(const CyclicStructure& cyc, const CyclicCochain& f, const CyclicCochain& g);
Scalar bracket_at(const CyclicStructure& cyc, const CyclicCochain& f, const CyclicCochain& g,
                  const Word& w);

/// delta f on every pair of orbits of total length <= N-2.
PairCochain cobracket(const CyclicStructure& cyc, const CyclicCochain& f);
Scalar cobracket_at(const CyclicStructure& cyc, const CyclicCochain& f, const Word& x,
                    const Word& y);

/// (b f)(w) = f(b w), on orbits of length <= N.
CyclicCochain coboundary(const AinfCategory& cat, const CyclicStructure& cyc,
                         const CyclicCochain& f);

struct AxiomReport {
  std::vector<ValidationReport> families;
  bool pass() const;
  const ValidationReport& family(const std::string& name) const;
  std::vector<std::string> failing() const;
};

/// Names of the eight residual families, in report order.
const std::vector<std::string>& axiom_families();

/// Evaluates the bialgebra axioms on all basis cochains against evaluation words
/// of total length <= W. With `checked`, validators must pass first.
AxiomReport verify_bialgebra(const CyclicStructure& cyc, int N, int W, bool checked = true);

/// Every (word, split, dual pair) of length <= N changes cochain degree by d-2.
ValidationReport degree_ledger(const CyclicStructure& cyc, int N);

}  // namespace cyclo
