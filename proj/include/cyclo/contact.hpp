#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclo/ainf.hpp"
#include "cyclo/linalg.hpp"
#include "cyclo/liebi.hpp"

namespace cyclo {

struct Orbit {
  std::string name;
  int mu_cz = 0;
  int kappa = 1;
  bool good = true;
};

struct DiffCount {
  int plus;
  std::vector<int> minus;  ///< first entry unaugmented, the rest capped
  long value;
};

struct PairCount {
  int plus1, plus2;
  std::vector<int> minus;
  long value;
};

struct RelateCount {
  std::vector<int> orbits;  ///< one orbit for R, two for R2
  Word word;
  long value;
};

struct ContactData {
  int half_dim = 0;
  std::vector<Orbit> orbits;
  std::vector<DiffCount> diff_counts;
  std::vector<PairCount> pair_counts;
  std::map<int, long> aug;
  std::map<std::pair<int, int>, long> aug2;
  std::vector<RelateCount> relate_counts;
  bool normalize_kappa = false;
  Field field = Field::Rational;

  int grading(int o) const { return orbits[o].mu_cz + half_dim - 3; }
  long epsilon(int o) const;
  long epsilon2(int a, int b) const;
  int orbit_index(const std::string& name) const;
  SpacePtr space() const;
};

using OrbitSum = std::map<int, Scalar>;

SparseMap contact_differential(const ContactData& data);
ValidationReport check_d_squared(const ContactData& data);
/// Well-formedness: good orbits only, kappa >= 1, gradings of count entries.
ValidationReport check_contact_data(const ContactData& data, const Quiver* q);

OrbitSum cl_bracket(const ContactData& data, int g1, int g2);
/// [g1,g2] + (-1)^{|g1||g2|} [g2,g1] on all ordered pairs.
ValidationReport check_cl_skew(const ContactData& data);

/// Wedge pairs in canonical order (first index <= second).
std::map<std::pair<int, int>, Scalar> cl_cobracket(const ContactData& data, int g);

struct NotCyclicInvariant : std::invalid_argument {
  explicit NotCyclicInvariant(const std::string& w) : std::invalid_argument(w) {}
};

/// f(g)(y1..ym) = R(g; y1..ym) as a cyclic cochain with support bound N.
CyclicCochain relating_map(const ContactData& data, const CyclicStructure& cyc, int g, int N);
/// f_2(g1,g2) from the R2 counts.
CyclicCochain relating_map2(const ContactData& data, const CyclicStructure& cyc, int g1, int g2,
                            int N);
ValidationReport check_relate_invariance(const ContactData& data, const CyclicStructure& cyc);

ValidationReport check_chain_map(const ContactData& data, const CyclicStructure& cyc, int N,
                                 bool checked = true);
ValidationReport linfty_morphism_residual(const ContactData& data, const CyclicStructure& cyc,
                                          int k, int N, bool checked = true);

}  // namespace cyclo
