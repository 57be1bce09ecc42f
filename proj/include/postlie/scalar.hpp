#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "postlie/errors.hpp"

namespace postlie {

enum class FieldKind { rational, prime };

// The coefficient field: either Q (arbitrary-precision rationals) or F_p
// for an odd prime p. Characteristic 2 is rejected everywhere because the
// toolkit divides by 2 (symmetrized products, half-bracket structures).
class Field {
 public:
  static Field rationals() { return Field(FieldKind::rational, 0); }
  static Field prime(long p);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::rational; }
  bool is_prime() const { return kind_ == FieldKind::prime; }
  long characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string name() const;

 private:
  Field(FieldKind k, long p) : kind_(k), p_(p) {}
  FieldKind kind_;
  long p_;
};

// An element of Q or of F_p, tagged with its field. Rationals are kept
// canonical (lowest terms, positive denominator); F_p values are residues
// in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), rat_(0), res_(0) {}

  static Scalar zero(const Field& f) { return of_long(f, 0); }
  static Scalar one(const Field& f) { return of_long(f, 1); }
  static Scalar of_long(const Field& f, long v);
  static Scalar of_fraction(const Field& f, long num, long den);
  static Scalar of_rational(mpq_class q);
  // Parses "p/q" or "p" over Q, a plain integer over F_p.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Total order on values of one field, used for deterministic sorting.
  // Rationals compare numerically, residues by value.
  bool operator<(const Scalar& o) const;

  // Defined for rationals only.
  const mpq_class& rational() const;
  // Defined for prime fields only.
  long residue() const;

  // Reduces a rational mod p; throws if p divides the denominator.
  Scalar reduce_mod(const Field& fp) const;

  std::string str() const;

 private:
  Scalar(const Field& f, mpq_class q, long r)
      : field_(f), rat_(std::move(q)), res_(r) {}

  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_;
  long res_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace postlie
