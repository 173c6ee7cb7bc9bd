#ifndef CORINGS_FIELD_HPP
#define CORINGS_FIELD_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace corings {

/// Ground field of every computation: the rationals, or a prime field F_p.
/// p == 0 encodes the rationals.
struct Field {
  unsigned long p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(unsigned long p);

  bool is_rationals() const { return p == 0; }
  bool operator==(const Field&) const = default;

  std::string to_string() const;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq_class canonical form); F_p elements are residues in
/// [0, p) with denominator 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, mpq_class v);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  static Scalar from_int(Field f, long n) { return Scalar(f, n); }

  /// Parses "7", "-3/4", or (for F_p) any integer string; reduces into the
  /// field. Throws std::invalid_argument on malformed input or on a
  /// denominator divisible by p.
  static Scalar parse(Field f, const std::string& text);

  const Field& field() const { return field_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;

  Scalar inverse() const;

  std::string to_string() const;

 private:
  Field field_;
  mpq_class v_;

  void reduce();
};

bool is_prime(unsigned long n);

}  // namespace corings

#endif
