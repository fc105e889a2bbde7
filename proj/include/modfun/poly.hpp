#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "modfun/scalar.hpp"

namespace modfun {

/// Upper bound on ring variables; monomials are stored inline.
inline constexpr std::size_t kMaxVars = 32;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  std::vector<unsigned> exponents() const;

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& rhs) const;
  /// Exact quotient; requires rhs.divides(*this).
  Monomial operator/(const Monomial& rhs) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }
  /// Storage order: degree, then exponents lexicographically with x_0 most
  /// significant (i.e. DegLex with the identity priority).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// Monomial order on k[x_0..x_{n-1}]. priority[0] is the greatest variable.
class RingOrder {
 public:
  enum class Kind { Lex, DegLex };

  RingOrder() = default;
  RingOrder(Kind kind, std::vector<std::uint32_t> priority);

  static RingOrder deglex(std::size_t nvars);
  static RingOrder lex(std::size_t nvars);
  /// Priority x_{n-1} > ... > x_0.
  static RingOrder deglex_reversed(std::size_t nvars);

  Kind kind() const { return kind_; }
  const std::vector<std::uint32_t>& priority() const { return priority_; }
  std::size_t nvars() const { return priority_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const RingOrder&, const RingOrder&) = default;

 private:
  Kind kind_ = Kind::DegLex;
  std::vector<std::uint32_t> priority_;
};

/// Checked comparison; throws InputError on mismatched variable counts.
std::strong_ordering mono_cmp(const RingOrder& order, const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Multivariate polynomial. Terms are kept sorted descending in storage order
/// with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t index, const Scalar& c = Scalar(1));
  static Polynomial monomial(const Monomial& m, const Scalar& c = Scalar(1));
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Coefficient of the constant monomial.
  Scalar constant_term() const;
  bool is_constant() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;

  /// The order-maximal term; throws DomainError for the zero polynomial.
  Term leading_term(const RingOrder& order) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Replace x_i by images[i].
  Polynomial substitute(std::span<const Polynomial> images) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_ring(const Polynomial& other);

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);
Term leading_term(const Polynomial& p, const RingOrder& order);

/// Default variable names x0, x1, ...
std::vector<std::string> default_var_names(std::size_t nvars);

}  // namespace modfun
