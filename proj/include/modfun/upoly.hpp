#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modfun/scalar.hpp"

namespace modfun {

/// Dense univariate polynomial; coeffs()[i] multiplies x^i, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);

  static UPoly constant(const Scalar& c);
  static UPoly monomial(std::size_t k, const Scalar& c = Scalar(1));

  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Scalar lead() const;
  UPoly monic() const;
  UPoly derivative() const;
  Scalar evaluate(const Scalar& x) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Scalar& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Scalar> c_;
};

/// Quotient and remainder; throws DomainError when b is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<UPoly> inverse_mod(const UPoly& a, const UPoly& m);

struct Factor {
  UPoly factor;  // monic irreducible
  int multiplicity = 1;
};

/// Factorization into monic irreducibles, sorted by (degree, coefficients).
/// Over Q the degree is limited to 12 (GuardError beyond).
std::vector<Factor> factor_univariate(const UPoly& p, const FieldSpec& field,
                                      std::uint64_t seed = 0x6d6f6466756eULL);

inline constexpr int kRationalFactorDegreeGuard = 12;

}  // namespace modfun
