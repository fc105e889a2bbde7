#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace modfun {

/// Exact field element: an arbitrary precision rational or a residue modulo
/// a prime p < 2^32.
///
/// Rationals are kept in lowest terms with a positive denominator (gmp does
/// this for us); residues live in [0, p). A rational with denominator prime
/// to p is silently coerced when it meets a residue, so integer literals can
/// be mixed with prime-field values. Two residues with different moduli
/// never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT: integer literals are scalars
  explicit Scalar(mpq_class value);

  static Scalar residue(std::int64_t value, std::uint64_t p);

  /// 0 for rationals, p for residues.
  std::uint64_t modulus() const { return modulus_; }
  bool is_rational() const { return modulus_ == 0; }
  bool is_zero() const;
  bool is_one() const;

  /// Requires is_rational().
  const mpq_class& rational() const;
  /// Requires !is_rational().
  std::uint64_t residue_value() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Decimal integer "n" or "num/den"; residues print their representative.
  std::string to_string() const;

 private:
  // Bring *this and other to a common field; returns the shared modulus.
  std::uint64_t unify(const Scalar& other);
  static std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p);

  std::uint64_t modulus_ = 0;
  std::uint64_t residue_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The base field: the rationals or F_p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InputError unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return kind == Kind::Rationals; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "n", "-n" or "num/den". Throws InputError on bad syntax or a
  /// denominator divisible by the characteristic.
  Scalar parse(std::string_view text) const;
  /// Maps a scalar into this field (identity for matching fields).
  Scalar coerce(const Scalar& s) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

}  // namespace modfun
