#include "postlie/scalar.hpp"

#include <cctype>
#include <ostream>

namespace postlie {

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

long mod_norm(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; p prime, a in [1, p).
long mod_inverse(long a, long p) {
  long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_norm(t, p);
}

}  // namespace

Field Field::prime(long p) {
  if (!is_odd_prime(p))
    throw constraint_error("field characteristic must be an odd prime, got " +
                           std::to_string(p));
  return Field(FieldKind::prime, p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Scalar::of_long(const Field& f, long v) {
  if (f.is_rational()) return Scalar(f, mpq_class(v), 0);
  return Scalar(f, mpq_class(0), mod_norm(v, f.characteristic()));
}

Scalar Scalar::of_fraction(const Field& f, long num, long den) {
  if (den == 0) throw constraint_error("zero denominator");
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, std::move(q), 0);
  }
  long p = f.characteristic();
  long d = mod_norm(den, p);
  if (d == 0) throw constraint_error("denominator divisible by " + f.name());
  return Scalar(f, mpq_class(0),
                mod_norm(mod_norm(num, p) * mod_inverse(d, p), p));
}

Scalar Scalar::of_rational(mpq_class q) {
  q.canonicalize();
  return Scalar(Field::rationals(), std::move(q), 0);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw parse_error("empty scalar literal");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  std::size_t slash = std::string::npos;
  for (std::size_t i = pos; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (slash != std::string::npos || f.is_prime())
        throw parse_error("bad scalar literal '" + text + "'");
      slash = i;
      if (i + 1 >= text.size()) throw parse_error("bad scalar literal '" + text + "'");
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("bad scalar literal '" + text + "'");
  }
  if (f.is_prime()) {
    long v;
    try {
      v = std::stol(text);
    } catch (const std::exception&) {
      throw parse_error("bad scalar literal '" + text + "'");
    }
    if (v < 0 || v >= f.characteristic())
      throw parse_error("residue " + text + " out of range for " + f.name());
    return of_long(f, v);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw parse_error("bad scalar literal '" + text + "'");
  if (q.get_den() == 0) throw parse_error("zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(f, std::move(q), 0);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw field_mismatch_error("mixed fields: " + field_.name() + " vs " +
                               o.field_.name());
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, -rat_, 0);
  return Scalar(field_, mpq_class(0),
                mod_norm(-res_, field_.characteristic()));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, rat_ + o.rat_, 0);
  return Scalar(field_, mpq_class(0),
                mod_norm(res_ + o.res_, field_.characteristic()));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, rat_ - o.rat_, 0);
  return Scalar(field_, mpq_class(0),
                mod_norm(res_ - o.res_, field_.characteristic()));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, rat_ * o.rat_, 0);
  return Scalar(field_, mpq_class(0),
                mod_norm(res_ * o.res_, field_.characteristic()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw constraint_error("division by zero");
  if (field_.is_rational()) return Scalar(field_, 1 / rat_, 0);
  return Scalar(field_, mpq_class(0),
                mod_inverse(res_, field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

bool Scalar::operator<(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? rat_ < o.rat_ : res_ < o.res_;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational())
    throw field_mismatch_error("rational() on an F_p scalar");
  return rat_;
}

long Scalar::residue() const {
  if (!field_.is_prime())
    throw field_mismatch_error("residue() on a rational scalar");
  return res_;
}

Scalar Scalar::reduce_mod(const Field& fp) const {
  if (!field_.is_rational() || !fp.is_prime())
    throw field_mismatch_error("reduce_mod expects a rational value and a prime field");
  long p = fp.characteristic();
  mpz_class num = rat_.get_num(), den = rat_.get_den();
  mpz_class pz(p);
  mpz_class dm = den % pz;
  long d = dm.get_si();
  d = mod_norm(d, p);
  if (d == 0)
    throw constraint_error("denominator divisible by " + fp.name() +
                           " in reduction of " + str());
  mpz_class nm = num % pz;
  long nv = mod_norm(nm.get_si(), p);
  return of_long(fp, nv * mod_inverse(d, p));
}

std::string Scalar::str() const {
  if (field_.is_prime()) return std::to_string(res_);
  return rat_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace postlie
