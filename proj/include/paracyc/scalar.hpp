#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace paracyc {

// Library-wide error taxonomy. Everything thrown on a law/shape violation
// derives from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct SingularMap : Error {
  using Error::Error;
};
struct DoesNotDescend : Error {
  using Error::Error;
};
struct DimensionGuard : Error {
  using Error::Error;
};
struct KindMismatch : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Coefficient field: the rationals (p == 0) or the prime field of order p.
struct Field {
  std::uint32_t p = 0;

  bool rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string str() const { return rational() ? "Q" : "gf(" + std::to_string(p) + ")"; }
};

inline const Field QQ{0};
inline Field gf(std::uint32_t p) { return Field{p}; }

// One exact scalar. Over gf(p) the value is the least nonnegative residue
// (denominator 1); over Q it is a canonical mpq. All arithmetic is exact and
// mixing fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : fld_{0}, v_(0) {}
  Scalar(Field f, const mpq_class& v) : fld_(f), v_(v) { normalize(); }
  Scalar(Field f, long num, long den = 1) : fld_(f), v_(num, den) { normalize(); }

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const { return fld_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const { return bin(o, v_ + o.v_); }
  Scalar operator-(const Scalar& o) const { return bin(o, v_ - o.v_); }
  Scalar operator*(const Scalar& o) const { return bin(o, v_ * o.v_); }
  Scalar operator-() const { return Scalar(fld_, -v_); }
  Scalar inv() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

  bool operator==(const Scalar& o) const {
    if (fld_ != o.fld_) throw FieldMismatch("scalar comparison across fields");
    return v_ == o.v_;
  }

  // "n" or "n/d" over Q; the residue "r" over gf(p).
  std::string str() const { return v_.get_str(); }
  static Scalar parse(Field f, const std::string& s);

 private:
  Scalar bin(const Scalar& o, mpq_class r) const {
    if (fld_ != o.fld_) throw FieldMismatch("scalar arithmetic across fields");
    return Scalar(fld_, std::move(r));
  }
  void normalize();

  Field fld_;
  mpq_class v_;
};

}  // namespace paracyc
