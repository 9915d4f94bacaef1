#pragma once

#include <optional>
#include <string>

#include "cyclo/ainf.hpp"
#include "cyclo/contact.hpp"
#include "cyclo/linfty.hpp"

namespace cyclo {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& w) : std::runtime_error(w) {}
};

struct ResolutionError : std::runtime_error {
  explicit ResolutionError(const std::string& w) : std::runtime_error(w) {}
};

struct Options {
  int N = 4;
  int W = 0;  ///< 0 means N-4
  int max_arity = 0;  ///< 0 means the longest stored tuple
  bool normalize_kappa = false;
};

struct SpecFile {
  Field field = Field::Rational;
  bool cyclic = false;
  CyclicStructure cyc;
  AinfCategory direct;
  std::optional<ContactData> contact;
  std::optional<LinftyAlgebra> linfty;
  std::optional<BracketTable> lie_bracket;
  Options options;

  /// Structure maps: derived from counts, or given directly.
  AinfCategory category() const;
  const Quiver& quiver() const { return cyclic ? cyc.quiver : direct.quiver; }
  bool has_category() const { return !quiver().gens.empty() || !quiver().objects.empty(); }
};

SpecFile parse_spec(const std::string& text, std::optional<Field> field_override = std::nullopt);
SpecFile load_spec(const std::string& path, std::optional<Field> field_override = std::nullopt);

}  // namespace cyclo
