#include "corings/field.hpp"

namespace corings {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime");
  return Field{p};
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p);
}

Scalar::Scalar(Field f, mpq_class v) : field_(f), v_(std::move(v)) { reduce(); }

void Scalar::reduce() {
  v_.canonicalize();
  if (field_.is_rationals()) return;
  mpz_class p(static_cast<unsigned long>(field_.p));
  mpz_class num = v_.get_num(), den = v_.get_den();
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::invalid_argument("denominator not invertible mod p");
    num *= dinv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  v_ = mpq_class(r);
}

Scalar Scalar::parse(Field f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed scalar: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  return Scalar(f, q);
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(field_, v_ + o.v_);
}
Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(field_, v_ - o.v_);
}
Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(field_, v_ * o.v_);
}
Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }
Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

bool Scalar::operator==(const Scalar& o) const { return v_ == o.v_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (field_.is_rationals()) return Scalar(field_, 1 / v_);
  mpz_class p(static_cast<unsigned long>(field_.p)), inv;
  mpz_class num = v_.get_num();
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("non-invertible residue");
  return Scalar(field_, mpq_class(inv));
}

std::string Scalar::to_string() const { return v_.get_str(); }

}  // namespace corings
