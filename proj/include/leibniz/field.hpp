#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace leibniz {

using Rational = boost::multiprecision::cpp_rational;

/// Base field of an algebra: the rationals, or a prime field GF(p) with
/// p <= 257. Extension fields are deliberately unsupported.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec gf(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }

  /// 0 for the rationals, p for GF(p).
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t modulus() const;

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

  std::string to_string() const;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (cpp_rational canonicalizes); prime-field values
/// are residues in [0, p). There is no floating point anywhere.
class Scalar {
 public:
  Scalar() : f_(FieldSpec::rationals()) {}

  static Scalar zero(FieldSpec f);
  static Scalar one(FieldSpec f);
  static Scalar of_int(FieldSpec f, long long v);
  static Scalar of_rational(const Rational& v);
  static Scalar of_residue(FieldSpec f, long long v);

  FieldSpec field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order used only to make iteration and reports deterministic.
  bool less(const Scalar& o) const;

  /// Residue value for finite fields.
  std::uint32_t residue() const;
  const Rational& rational() const;

  /// Canonical text form, `-?digits(/digits)?`.
  std::string str() const;

 private:
  explicit Scalar(FieldSpec f) : f_(f) {}
  FieldSpec f_;
  std::uint32_t r_ = 0;  // finite fields
  Rational q_;           // rationals
};

/// Parses `-?digits(/digits)?`. Over GF(p), a/b means a * b^-1 mod p;
/// a denominator divisible by p is an error.
Scalar parse_scalar(std::string_view text, FieldSpec f);

bool is_prime(std::uint32_t n);

}  // namespace leibniz
