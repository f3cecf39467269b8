#include "paracyc/scalar.hpp"

namespace paracyc {

void Scalar::normalize() {
  v_.canonicalize();
  if (fld_.rational()) return;
  // Reduce to a residue: clear the denominator by its inverse mod p, then
  // take the least nonnegative representative.
  mpz_class p(fld_.p);
  mpz_class num = v_.get_num(), den = v_.get_den();
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw SingularMap("denominator not invertible mod " + std::to_string(fld_.p));
    num *= dinv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  v_ = mpq_class(r);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw SingularMap("inverse of zero");
  if (fld_.rational()) return Scalar(fld_, 1 / v_);
  mpz_class p(fld_.p), a = v_.get_num(), r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw SingularMap("non-invertible residue mod " + std::to_string(fld_.p));
  return Scalar(fld_, mpq_class(r));
}

Scalar Scalar::parse(Field f, const std::string& s) {
  try {
    mpq_class v(s);  // accepts "n" and "n/d"
    return Scalar(f, v);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar literal: " + s);
  }
}

}  // namespace paracyc
