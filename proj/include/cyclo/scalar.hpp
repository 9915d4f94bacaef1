#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cyclo {

enum class Field { Rational, Mod2 };

/// Exact field element: an arbitrary-precision rational, or a bit in MOD2 mode.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field f) : field_(f) {}
  Scalar(long v, Field f);
  Scalar(const mpq_class& v, Field f);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(1, f); }

  Field field() const { return field_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  /// Multiply by a sign; signs collapse to +1 in MOD2 mode.
  Scalar signed_by(int sign) const;

  bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void normalize();
  void check(const Scalar& o) const;

  mpq_class v_{0};
  Field field_ = Field::Rational;
};

struct FieldMismatch : std::logic_error {
  FieldMismatch() : std::logic_error("scalars from different fields") {}
};

struct NonIntegerEntry : std::domain_error {
  explicit NonIntegerEntry(const std::string& w) : std::domain_error("non-integer entry: " + w) {}
};

/// Reduce a rational with denominator 1 to a MOD2 scalar.
Scalar to_mod2(const Scalar& s);

std::string field_name(Field f);
Field parse_field(const std::string& s);

}  // namespace cyclo
