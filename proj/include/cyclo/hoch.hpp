#pragma once

#include <memory>
#include <vector>

#include "cyclo/ainf.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

/// Hochschild differential on one cyclically composable word.
WordSum hochschild_b(const AinfCategory& cat, const Word& w);

/// b followed by canonicalization: the induced differential on t-coinvariants.
WordSum cyclic_b(const AinfCategory& cat, const Word& w);

/// One step of t with its sign.
std::pair<Scalar, Word> cyclic_t(const AinfCategory& cat, const Word& w);

struct TruncatedComplex {
  int N = 0;
  std::vector<Word> words;
  std::map<Word, int> index;
  SpacePtr space;
  std::shared_ptr<SparseMap> d;
};

struct CyclicComplex {
  int N = 0;
  std::vector<Word> orbits;  ///< canonical representatives
  std::map<Word, int> index;
  SpacePtr space;
  std::shared_ptr<SparseMap> d;
};

struct CochainComplex {
  int N = 0;
  SpacePtr space;
  std::shared_ptr<SparseMap> d;  ///< degree +1
};

/// Words of length <= N; throws NotAComplex when b^2 != 0.
TruncatedComplex build_truncated(const AinfCategory& cat, int N, bool verify = true);
CyclicComplex build_cyclic(const AinfCategory& cat, int N, bool verify = true);

CochainComplex dualize(const TruncatedComplex& cx);
CochainComplex dualize(const CyclicComplex& cx);

BettiTable betti(const TruncatedComplex& cx);
BettiTable betti(const CyclicComplex& cx);
BettiTable betti(const CochainComplex& cx);

/// Canonical orbit representatives of length <= N, in (length, lexicographic) order.
std::vector<Word> orbit_representatives(const Quiver& q, int N);

}  // namespace cyclo
