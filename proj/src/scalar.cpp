#include "cyclo/scalar.hpp"

namespace cyclo {

Scalar::Scalar(long v, Field f) : v_(v), field_(f) { normalize(); }

Scalar::Scalar(const mpq_class& v, Field f) : v_(v), field_(f) {
  v_.canonicalize();
  normalize();
}

void Scalar::normalize() {
  if (field_ != Field::Mod2) return;
  if (v_.get_den() != 1) throw NonIntegerEntry(v_.get_str());
  mpz_class r = v_.get_num() % 2;
  v_ = (r == 0) ? 0 : 1;
}

void Scalar::check(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch();
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar r(field_);
  r.v_ = v_ + o.v_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar r(field_);
  r.v_ = v_ - o.v_;
  r.normalize();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar r(field_);
  r.v_ = v_ * o.v_;
  r.normalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  Scalar r(field_);
  r.v_ = v_ / o.v_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  r.v_ = -v_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::signed_by(int sign) const {
  if (sign >= 0 || field_ == Field::Mod2) return *this;
  return -*this;
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar to_mod2(const Scalar& s) {
  if (!s.is_integer()) throw NonIntegerEntry(s.str());
  return Scalar(s.value(), Field::Mod2);
}

std::string field_name(Field f) { return f == Field::Mod2 ? "mod2" : "rational"; }

Field parse_field(const std::string& s) {
  if (s == "rational") return Field::Rational;
  if (s == "mod2") return Field::Mod2;
  throw std::invalid_argument("unknown field '" + s + "'");
}

}  // namespace cyclo
